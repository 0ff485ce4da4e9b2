#include "clarke/robot.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace clarke {

void RobotDescription::validate() const {
    if (segments.empty()) throw std::invalid_argument("robot description needs at least one segment");
    for (std::size_t i = 0; i < segments.size(); ++i)
        segments[i].validate("segment " + std::to_string(i + 1));
}

const ClarkeMatrixd& clarke_matrix_for(Eigen::Index tendon_count) {
    static std::mutex mutex;
    static std::map<Eigen::Index, ClarkeMatrixd> cache;  // node-based, references stay valid
    const std::scoped_lock lock(mutex);
    auto it = cache.find(tendon_count);
    if (it == cache.end()) it = cache.emplace(tendon_count, ClarkeMatrixd(tendon_count)).first;
    return it->second;
}

namespace {

std::string segment_label(std::size_t index) { return "segment " + std::to_string(index + 1); }

void require_entry_count(const RobotDescription& robot, std::size_t entries) {
    if (entries != robot.segments.size())
        throw std::invalid_argument("configuration has " + std::to_string(entries) +
                                    " entries, robot has " + std::to_string(robot.segments.size()) +
                                    " segments");
}

/// Normalize one segment entry to joint + Clarke + arc. Does not fill the
/// cumulative frame.
SegmentState normalize_entry(const SegmentGeometryd& geometry, const SegmentConfig& entry,
                             const KinematicsOptions& options, std::size_t index) {
    const ClarkeMatrixd& matrix = clarke_matrix_for(geometry.tendon_count);
    SegmentState state;

    if (const auto* rho = std::get_if<JointVectord>(&entry)) {
        if (rho->size() != geometry.tendon_count)
            throw std::invalid_argument(segment_label(index) + ": joint vector has " +
                                        std::to_string(rho->size()) + " entries, segment has " +
                                        std::to_string(geometry.tendon_count) + " tendons");
        if (!rho->allFinite())
            throw std::invalid_argument(segment_label(index) + ": joint vector must be finite");
        const auto report = check_feasibility(matrix, *rho, options.tolerance);
        if (!report.feasible && !options.project_infeasible) {
            std::ostringstream msg;
            msg << segment_label(index) << ": joint vector off the feasible manifold (manifold residual "
                << report.manifold_residual << " m, sum residual " << report.sum_residual
                << " m, tolerance " << options.tolerance << " m); project it first to proceed";
            throw std::domain_error(msg.str());
        }
        state.joints = report.feasible ? *rho : project_to_manifold(matrix, *rho);
        state.clarke = clarke_transform(matrix, state.joints);
    } else if (const auto* coords = std::get_if<ClarkeCoordinatesd>(&entry)) {
        if (!coords->allFinite())
            throw std::invalid_argument(segment_label(index) + ": Clarke coordinates must be finite");
        state.clarke = *coords;
        state.joints = inverse_clarke_transform(matrix, state.clarke);
    } else {
        const auto& raw = std::get<ArcParametersd>(entry);
        try {
            const auto arc = canonical_arc(raw.curvature, raw.plane_angle, raw.length);
            state.arc = arc;
            state.clarke = arc_to_clarke(arc, geometry);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(segment_label(index) + ": " + e.what());
        }
        state.joints = inverse_clarke_transform(matrix, state.clarke);
        state.within_model = within_curvature_limit(state.arc, geometry);
        return state;
    }

    const auto recovery = arc_from_clarke(state.clarke, geometry);
    state.arc = recovery.arc;
    state.within_model = recovery.within_model;
    return state;
}

}  // namespace

ForwardKinematicsResult forward_kinematics(const RobotDescription& robot, const ConfigurationSet& config,
                                           const KinematicsOptions& options) {
    robot.validate();
    require_entry_count(robot, config.entries.size());

    ForwardKinematicsResult result;
    result.segments.reserve(robot.segments.size());
    SegmentPosed running = SegmentPosed::Identity();
    for (std::size_t i = 0; i < robot.segments.size(); ++i) {
        SegmentState state = normalize_entry(robot.segments[i], config.entries[i], options, i);
        running = compose(running, pose_from_arc(state.arc));
        state.frame = running;
        result.segments.push_back(std::move(state));
    }
    return result;
}

InverseKinematicsResult inverse_kinematics_arcwise(const RobotDescription& robot,
                                                   std::span<const ArcParametersd> arcs) {
    robot.validate();
    require_entry_count(robot, arcs.size());

    InverseKinematicsResult result;
    result.joints.entries.reserve(arcs.size());
    result.within_model.reserve(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto& geometry = robot.segments[i];
        try {
            const auto arc = canonical_arc(arcs[i].curvature, arcs[i].plane_angle, arcs[i].length);
            const ClarkeMatrixd& matrix = clarke_matrix_for(geometry.tendon_count);
            result.joints.entries.emplace_back(inverse_clarke_transform(matrix, arc_to_clarke(arc, geometry)));
            result.within_model.push_back(within_curvature_limit(arc, geometry));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(segment_label(i) + ": " + e.what());
        }
    }
    return result;
}

ConfigurationSet disentangle_apply(const RobotDescription& robot, const ConfigurationSet& joint_config,
                                   const ClarkeOperator& op) {
    robot.validate();
    require_entry_count(robot, joint_config.entries.size());
    if (!op) throw std::invalid_argument("disentangle_apply needs a Clarke-space operator");

    ConfigurationSet result;
    result.entries.reserve(joint_config.entries.size());
    for (std::size_t i = 0; i < joint_config.entries.size(); ++i) {
        const auto* rho = std::get_if<JointVectord>(&joint_config.entries[i]);
        if (!rho)
            throw std::invalid_argument(segment_label(i) + ": disentangle_apply expects joint-space entries");
        if (rho->size() != robot.segments[i].tendon_count)
            throw std::invalid_argument(segment_label(i) + ": joint vector has " +
                                        std::to_string(rho->size()) + " entries, segment has " +
                                        std::to_string(robot.segments[i].tendon_count) + " tendons");
        if (!rho->allFinite())
            throw std::invalid_argument(segment_label(i) + ": joint vector must be finite");
        const ClarkeMatrixd& matrix = clarke_matrix_for(robot.segments[i].tendon_count);
        const ClarkeCoordinatesd mapped = op(i, clarke_transform(matrix, *rho));
        if (!mapped.allFinite())
            throw std::domain_error(segment_label(i) + ": Clarke operator returned a non-finite value");
        result.entries.emplace_back(inverse_clarke_transform(matrix, mapped));
    }
    return result;
}

}  // namespace clarke
