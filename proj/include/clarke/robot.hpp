#pragma once

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "clarke/arc.hpp"
#include "clarke/clarke_matrix.hpp"
#include "clarke/geometry.hpp"
#include "clarke/pose.hpp"
#include "clarke/types.hpp"

namespace clarke {

/// Ordered chain of segments; segments may differ in tendon count, pitch
/// radius, and length. Immutable in use and safe to share across threads.
struct RobotDescription {
    std::string name;
    std::vector<SegmentGeometryd> segments;

    /// Throws std::invalid_argument naming the offending segment (1-based).
    void validate() const;
};

/// One segment's configuration in whichever space it was given.
using SegmentConfig = std::variant<JointVectord, ClarkeCoordinatesd, ArcParametersd>;

/// Per-segment configurations for one robot state; entry i belongs to
/// segment i and may live in joint, Clarke, or arc space independently.
struct ConfigurationSet {
    std::vector<SegmentConfig> entries;
};

/// Process-wide cache of Clarke matrices keyed by tendon count. Thread-safe;
/// returned references stay valid for the process lifetime.
const ClarkeMatrixd& clarke_matrix_for(Eigen::Index tendon_count);

struct KinematicsOptions {
    /// Feasibility tolerance for joint-space entries, meters.
    double tolerance = default_feasibility_tolerance;
    /// Opt in to projecting an infeasible joint vector onto the manifold and
    /// continuing; the default rejects it with both residuals so command
    /// errors do not pass silently.
    bool project_infeasible = false;
};

/// One segment's state normalized to all three spaces, plus its cumulative
/// frame in the robot base.
struct SegmentState {
    JointVectord joints;
    ClarkeCoordinatesd clarke;
    ArcParametersd arc;
    SegmentPosed frame;
    bool within_model{};  // curvature * pitch_radius < 1
};

struct ForwardKinematicsResult {
    std::vector<SegmentState> segments;  // one per robot segment, in order
    const SegmentPosed& tip() const { return segments.back().frame; }
};

/// Normalize every entry to arc parameters (joint -> Clarke -> arc as
/// needed), map each segment to its pose, and compose cumulatively.
/// Joint-space entries are checked against the feasibility tolerance first.
ForwardKinematicsResult forward_kinematics(const RobotDescription& robot, const ConfigurationSet& config,
                                           const KinematicsOptions& options = {});

struct InverseKinematicsResult {
    ConfigurationSet joints;          // one joint-space entry per segment
    std::vector<bool> within_model;   // per-segment curvature guard
};

/// Closed-form joint displacements for the given per-segment arcs; every
/// output vector is feasible by construction.
InverseKinematicsResult inverse_kinematics_arcwise(const RobotDescription& robot,
                                                   std::span<const ArcParametersd> arcs);

/// Map applied per segment in Clarke space; receives the 0-based segment
/// index and the segment's Clarke coordinates.
using ClarkeOperator = std::function<ClarkeCoordinatesd(std::size_t, const ClarkeCoordinatesd&)>;

/// Joint-space disentanglement workflow: transform each segment's joint
/// vector to Clarke coordinates (implicitly projecting it onto the feasible
/// manifold), apply the caller's operator there, and map back with the right
/// inverse. The output is feasible regardless of what the operator returns,
/// as long as it is finite.
ConfigurationSet disentangle_apply(const RobotDescription& robot, const ConfigurationSet& joint_config,
                                   const ClarkeOperator& op);

}  // namespace clarke
