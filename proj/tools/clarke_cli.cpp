// Command-line frontend for the Clarke-transform kinematics library.
//
// Subcommands map one-to-one onto library operations; all numeric output is
// printed with 17 significant digits so binary64 values round-trip exactly
// through text. Exit codes: 0 success, 1 validation error, 2 usage error.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clarke/clarke.hpp"

namespace {

using clarke::ArcParametersd;
using clarke::ClarkeCoordinatesd;
using clarke::ConfigurationSet;
using clarke::JointVectord;
using clarke::RecordTable;
using clarke::RobotDescription;
using clarke::SegmentConfig;

struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- common option bundle --------------------------------------------------

struct CommandIo {
    std::string robot_path;
    std::string in_path;
    std::string inline_values;
    std::size_t segment = 1;  // 1-based, inline mode only
    std::string out_path;
    std::string format = "csv";
    double tolerance = clarke::default_feasibility_tolerance;
    bool project_first = false;
};

void add_robot_option(CLI::App& cmd, CommandIo& io) {
    cmd.add_option("--robot", io.robot_path, "robot description JSON file")->required();
}

void add_output_options(CLI::App& cmd, CommandIo& io) {
    cmd.add_option("--out", io.out_path, "write output to this file instead of stdout");
    cmd.add_option("--format", io.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

void add_input_options(CLI::App& cmd, CommandIo& io, const char* values_help) {
    auto* in = cmd.add_option("--in", io.in_path, "trajectory CSV file");
    auto* values = cmd.add_option("--values", io.inline_values, values_help);
    cmd.add_option("--segment", io.segment, "1-based segment index for --values")
        ->capture_default_str()
        ->needs(values);
    in->excludes(values);
    values->excludes(in);
}

void require_input(const CLI::App& cmd) {
    if (cmd.count("--in") == 0 && cmd.count("--values") == 0)
        throw CLI::RequiredError("--in or --values");
}

std::vector<double> parse_inline_values(const std::string& text) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string_view field(text.data() + start, comma - start);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
            throw std::invalid_argument("--values: '" + std::string(field) + "' is not a number");
        values.push_back(value);
        start = comma + 1;
    }
    return values;
}

void check_segment_index(const RobotDescription& robot, std::size_t segment) {
    if (segment < 1 || segment > robot.segments.size())
        throw std::invalid_argument("--segment " + std::to_string(segment) +
                                    " out of range (robot has " + std::to_string(robot.segments.size()) +
                                    " segments)");
}

// ---- output ----------------------------------------------------------------

void with_output_stream(const CommandIo& io, const std::function<void(std::ostream&)>& body) {
    if (io.out_path.empty()) {
        body(std::cout);
        return;
    }
    std::ofstream file(io.out_path, std::ios::binary);
    if (!file) throw OutputError("cannot open output file '" + io.out_path + "'");
    body(file);
}

void emit_table(const CommandIo& io, const RecordTable& table) {
    with_output_stream(io, [&](std::ostream& out) {
        if (io.format == "json")
            clarke::write_json(out, table);
        else
            clarke::write_csv(out, table);
    });
}

// ---- column helpers ----------------------------------------------------------

void add_joint_columns(RecordTable& table, std::size_t segment, Eigen::Index tendon_count) {
    for (Eigen::Index i = 1; i <= tendon_count; ++i)
        table.columns.push_back("joint:" + std::to_string(segment) + ":" + std::to_string(i));
}

void add_clarke_columns(RecordTable& table, std::size_t segment) {
    table.columns.push_back("clarke:" + std::to_string(segment) + ":re");
    table.columns.push_back("clarke:" + std::to_string(segment) + ":im");
}

void add_arc_columns(RecordTable& table, std::size_t segment) {
    table.columns.push_back("arc:" + std::to_string(segment) + ":kappa");
    table.columns.push_back("arc:" + std::to_string(segment) + ":theta");
    table.columns.push_back("arc:" + std::to_string(segment) + ":l");
}

void add_pose_columns(RecordTable& table, std::size_t segment) {
    for (const char* c : {"px", "py", "pz", "qw", "qx", "qy", "qz"})
        table.columns.push_back("pose:" + std::to_string(segment) + ":" + c);
}

void push_pose(std::vector<double>& row, const clarke::SegmentPosed& pose) {
    row.push_back(pose.position.x());
    row.push_back(pose.position.y());
    row.push_back(pose.position.z());
    row.push_back(pose.orientation.w());
    row.push_back(pose.orientation.x());
    row.push_back(pose.orientation.y());
    row.push_back(pose.orientation.z());
}

// ---- per-space input views ---------------------------------------------------

// (segment 1-based index, entry) pairs selected for processing
struct SelectedRow {
    std::size_t row;  // 1-based data row, 0 for inline input
    std::vector<std::pair<std::size_t, SegmentConfig>> entries;
};

const char* space_of(const SegmentConfig& entry) {
    if (std::holds_alternative<JointVectord>(entry)) return "joint";
    if (std::holds_alternative<ClarkeCoordinatesd>(entry)) return "clarke";
    return "arc";
}

/// Load the trajectory file and keep all segments, or build a single
/// one-segment row from --values using `make_entry`.
std::vector<SelectedRow> gather_input(
    const CLI::App& cmd, const CommandIo& io, const RobotDescription& robot,
    const std::function<SegmentConfig(const std::vector<double>&, const clarke::SegmentGeometryd&)>&
        make_entry) {
    std::vector<SelectedRow> rows;
    if (cmd.count("--values")) {
        check_segment_index(robot, io.segment);
        const auto values = parse_inline_values(io.inline_values);
        SelectedRow row{0, {}};
        row.entries.emplace_back(io.segment, make_entry(values, robot.segments[io.segment - 1]));
        rows.push_back(std::move(row));
        return rows;
    }
    const auto configs = clarke::load_trajectory_file(io.in_path, robot);
    rows.reserve(configs.size());
    for (std::size_t r = 0; r < configs.size(); ++r) {
        SelectedRow row{r + 1, {}};
        for (std::size_t s = 0; s < configs[r].entries.size(); ++s)
            row.entries.emplace_back(s + 1, configs[r].entries[s]);
        rows.push_back(std::move(row));
    }
    return rows;
}

void require_space(const std::vector<SelectedRow>& rows, const char* space, const char* command) {
    if (rows.empty()) return;
    for (const auto& [segment, entry] : rows.front().entries)
        if (std::string_view(space_of(entry)) != space)
            throw std::invalid_argument(std::string(command) + " requires " + space +
                                        "-space input; segment " + std::to_string(segment) +
                                        " is given as " + space_of(entry) + " columns");
}

SegmentConfig joint_entry(const std::vector<double>& values, const clarke::SegmentGeometryd& geometry) {
    if (static_cast<Eigen::Index>(values.size()) != geometry.tendon_count)
        throw std::invalid_argument("--values: expected " + std::to_string(geometry.tendon_count) +
                                    " joint displacements, got " + std::to_string(values.size()));
    return JointVectord(
        Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size())));
}

SegmentConfig clarke_entry(const std::vector<double>& values, const clarke::SegmentGeometryd&) {
    if (values.size() != 2)
        throw std::invalid_argument("--values: expected re,im, got " + std::to_string(values.size()) +
                                    " values");
    return ClarkeCoordinatesd(values[0], values[1]);
}

SegmentConfig arc_entry(const std::vector<double>& values, const clarke::SegmentGeometryd& geometry) {
    if (values.size() == 2) return ArcParametersd{values[0], values[1], geometry.length};
    if (values.size() == 3) return ArcParametersd{values[0], values[1], values[2]};
    throw std::invalid_argument("--values: expected kappa,theta[,l], got " + std::to_string(values.size()) +
                                " values");
}

void warn_model_validity(std::size_t row, std::size_t segment, double curvature, double pitch_radius) {
    const std::string where = row == 0 ? "inline input" : "row " + std::to_string(row);
    std::fprintf(stderr,
                 "warning: arc_kinematics: %s segment %zu: curvature %s exceeds model validity "
                 "(curvature*pitch_radius = %s >= 1)\n",
                 where.c_str(), segment, clarke::format17(curvature).c_str(),
                 clarke::format17(curvature * pitch_radius).c_str());
}

// ---- subcommands -------------------------------------------------------------

int run_matrix(const CommandIo& io, Eigen::Index n) {
    const clarke::ClarkeMatrixd matrix(n);
    with_output_stream(io, [&](std::ostream& out) {
        const auto& entries = matrix.entries();
        if (io.format == "json") {
            out << "[\n";
            for (Eigen::Index r = 0; r < 2; ++r) {
                out << "  [";
                for (Eigen::Index c = 0; c < entries.cols(); ++c)
                    out << (c ? "," : "") << clarke::format17(entries(r, c));
                out << (r == 0 ? "],\n" : "]\n");
            }
            out << "]\n";
        } else {
            for (Eigen::Index r = 0; r < 2; ++r) {
                for (Eigen::Index c = 0; c < entries.cols(); ++c)
                    out << (c ? "," : "") << clarke::format17(entries(r, c));
                out << '\n';
            }
        }
    });
    return 0;
}

int run_transform(const CLI::App& cmd, const CommandIo& io) {
    const auto robot = clarke::load_robot_file(io.robot_path);
    robot.validate();
    const auto rows = gather_input(cmd, io, robot, joint_entry);
    require_space(rows, "joint", "transform");

    RecordTable table;
    if (!rows.empty())
        for (const auto& [segment, entry] : rows.front().entries) add_clarke_columns(table, segment);
    for (const auto& row : rows) {
        std::vector<double> record;
        for (const auto& [segment, entry] : row.entries) {
            const auto& matrix = clarke::clarke_matrix_for(robot.segments[segment - 1].tendon_count);
            const ClarkeCoordinatesd coords =
                clarke::clarke_transform(matrix, std::get<JointVectord>(entry));
            record.push_back(coords[0]);
            record.push_back(coords[1]);
        }
        table.rows.push_back(std::move(record));
    }
    emit_table(io, table);
    return 0;
}

int run_inverse(const CLI::App& cmd, const CommandIo& io) {
    const auto robot = clarke::load_robot_file(io.robot_path);
    robot.validate();
    const auto rows = gather_input(cmd, io, robot, clarke_entry);
    require_space(rows, "clarke", "inverse");

    RecordTable table;
    if (!rows.empty())
        for (const auto& [segment, entry] : rows.front().entries)
            add_joint_columns(table, segment, robot.segments[segment - 1].tendon_count);
    for (const auto& row : rows) {
        std::vector<double> record;
        for (const auto& [segment, entry] : row.entries) {
            const auto& matrix = clarke::clarke_matrix_for(robot.segments[segment - 1].tendon_count);
            const JointVectord rho =
                clarke::inverse_clarke_transform(matrix, std::get<ClarkeCoordinatesd>(entry));
            record.insert(record.end(), rho.begin(), rho.end());
        }
        table.rows.push_back(std::move(record));
    }
    emit_table(io, table);
    return 0;
}

int run_project(const CLI::App& cmd, const CommandIo& io) {
    const auto robot = clarke::load_robot_file(io.robot_path);
    robot.validate();
    const auto rows = gather_input(cmd, io, robot, joint_entry);
    require_space(rows, "joint", "project");

    RecordTable table;
    if (!rows.empty())
        for (const auto& [segment, entry] : rows.front().entries)
            add_joint_columns(table, segment, robot.segments[segment - 1].tendon_count);
    for (const auto& row : rows) {
        std::vector<double> record;
        for (const auto& [segment, entry] : row.entries) {
            const auto& matrix = clarke::clarke_matrix_for(robot.segments[segment - 1].tendon_count);
            const JointVectord projected =
                clarke::project_to_manifold(matrix, std::get<JointVectord>(entry));
            record.insert(record.end(), projected.begin(), projected.end());
        }
        table.rows.push_back(std::move(record));
    }
    emit_table(io, table);
    return 0;
}

int run_check(const CLI::App& cmd, const CommandIo& io) {
    const auto robot = clarke::load_robot_file(io.robot_path);
    robot.validate();
    const auto rows = gather_input(cmd, io, robot, joint_entry);
    require_space(rows, "joint", "check");

    RecordTable table;
    if (!rows.empty())
        for (const auto& [segment, entry] : rows.front().entries) {
            const std::string s = std::to_string(segment);
            table.columns.push_back("check:" + s + ":manifold_residual");
            table.columns.push_back("check:" + s + ":sum_residual");
            table.columns.push_back("check:" + s + ":feasible");
        }
    std::size_t failures = 0;
    for (const auto& row : rows) {
        std::vector<double> record;
        for (const auto& [segment, entry] : row.entries) {
            const auto& matrix = clarke::clarke_matrix_for(robot.segments[segment - 1].tendon_count);
            const auto report =
                clarke::check_feasibility(matrix, std::get<JointVectord>(entry), io.tolerance);
            record.push_back(report.manifold_residual);
            record.push_back(report.sum_residual);
            record.push_back(report.feasible ? 1.0 : 0.0);
            if (!report.feasible) ++failures;
        }
        table.rows.push_back(std::move(record));
    }
    emit_table(io, table);
    if (failures > 0) {
        std::fprintf(stderr, "error: clarke_core: %zu segment entr%s infeasible at tolerance %s m\n",
                     failures, failures == 1 ? "y is" : "ies are",
                     clarke::format17(io.tolerance).c_str());
        return 1;
    }
    return 0;
}

int run_fdep(const CLI::App& cmd, const CommandIo& io) {
    const auto robot = clarke::load_robot_file(io.robot_path);
    robot.validate();
    const auto rows = gather_input(cmd, io, robot, arc_entry);
    require_space(rows, "arc", "fdep");

    RecordTable table;
    if (!rows.empty())
        for (const auto& [segment, entry] : rows.front().entries) add_clarke_columns(table, segment);
    for (const auto& row : rows) {
        std::vector<double> record;
        for (const auto& [segment, entry] : row.entries) {
            const auto& geometry = robot.segments[segment - 1];
            const auto& raw = std::get<ArcParametersd>(entry);
            const auto arc = clarke::canonical_arc(raw.curvature, raw.plane_angle, raw.length);
            if (!clarke::within_curvature_limit(arc, geometry))
                warn_model_validity(row.row, segment, arc.curvature, geometry.pitch_radius);
            const ClarkeCoordinatesd coords = clarke::arc_to_clarke(arc, geometry);
            record.push_back(coords[0]);
            record.push_back(coords[1]);
        }
        table.rows.push_back(std::move(record));
    }
    emit_table(io, table);
    return 0;
}

int run_fdep_inv(const CLI::App& cmd, const CommandIo& io) {
    const auto robot = clarke::load_robot_file(io.robot_path);
    robot.validate();
    const auto rows = gather_input(cmd, io, robot, clarke_entry);
    require_space(rows, "clarke", "fdep-inv");

    RecordTable table;
    if (!rows.empty())
        for (const auto& [segment, entry] : rows.front().entries) add_arc_columns(table, segment);
    for (const auto& row : rows) {
        std::vector<double> record;
        for (const auto& [segment, entry] : row.entries) {
            const auto& geometry = robot.segments[segment - 1];
            const auto recovery =
                clarke::arc_from_clarke(std::get<ClarkeCoordinatesd>(entry), geometry);
            if (!recovery.within_model)
                warn_model_validity(row.row, segment, recovery.arc.curvature, geometry.pitch_radius);
            record.push_back(recovery.arc.curvature);
            record.push_back(recovery.arc.plane_angle);
            record.push_back(recovery.arc.length);
        }
        table.rows.push_back(std::move(record));
    }
    emit_table(io, table);
    return 0;
}

int run_fk(const CommandIo& io) {
    const auto robot = clarke::load_robot_file(io.robot_path);
    robot.validate();
    const auto configs = clarke::load_trajectory_file(io.in_path, robot);

    clarke::KinematicsOptions options;
    options.tolerance = io.tolerance;
    options.project_infeasible = io.project_first;

    RecordTable table;
    for (std::size_t s = 1; s <= robot.segments.size(); ++s) {
        add_joint_columns(table, s, robot.segments[s - 1].tendon_count);
        add_clarke_columns(table, s);
        add_arc_columns(table, s);
        add_pose_columns(table, s);
    }
    for (std::size_t r = 0; r < configs.size(); ++r) {
        const auto result = clarke::forward_kinematics(robot, configs[r], options);
        std::vector<double> record;
        for (std::size_t s = 0; s < result.segments.size(); ++s) {
            const auto& state = result.segments[s];
            if (!state.within_model)
                warn_model_validity(r + 1, s + 1, state.arc.curvature, robot.segments[s].pitch_radius);
            record.insert(record.end(), state.joints.begin(), state.joints.end());
            record.push_back(state.clarke[0]);
            record.push_back(state.clarke[1]);
            record.push_back(state.arc.curvature);
            record.push_back(state.arc.plane_angle);
            record.push_back(state.arc.length);
            push_pose(record, state.frame);
        }
        table.rows.push_back(std::move(record));
    }
    emit_table(io, table);
    return 0;
}

int run_ik(const CLI::App& cmd, const CommandIo& io) {
    const auto robot = clarke::load_robot_file(io.robot_path);
    robot.validate();
    const auto rows = gather_input(cmd, io, robot, arc_entry);
    require_space(rows, "arc", "ik");

    RecordTable table;
    if (!rows.empty())
        for (const auto& [segment, entry] : rows.front().entries)
            add_joint_columns(table, segment, robot.segments[segment - 1].tendon_count);
    for (const auto& row : rows) {
        std::vector<double> record;
        for (const auto& [segment, entry] : row.entries) {
            const auto& geometry = robot.segments[segment - 1];
            const auto& raw = std::get<ArcParametersd>(entry);
            const auto arc = clarke::canonical_arc(raw.curvature, raw.plane_angle, raw.length);
            if (!clarke::within_curvature_limit(arc, geometry))
                warn_model_validity(row.row, segment, arc.curvature, geometry.pitch_radius);
            const auto& matrix = clarke::clarke_matrix_for(geometry.tendon_count);
            const JointVectord rho =
                clarke::inverse_clarke_transform(matrix, clarke::arc_to_clarke(arc, geometry));
            record.insert(record.end(), rho.begin(), rho.end());
        }
        table.rows.push_back(std::move(record));
    }
    emit_table(io, table);
    return 0;
}

struct SampleGrid {
    double kappa_min = 0.0;
    double kappa_max = 10.0;
    std::size_t kappa_steps = 11;
    std::size_t theta_steps = 16;
};

int run_sample(const CommandIo& io, const SampleGrid& grid) {
    const auto robot = clarke::load_robot_file(io.robot_path);
    robot.validate();
    if (grid.kappa_max < grid.kappa_min)
        throw std::invalid_argument("--kappa-max must be at least --kappa-min");

    RecordTable table;
    table.columns = {"kappa", "theta", "px", "py", "pz"};
    std::size_t invalid_samples = 0;
    for (std::size_t ik = 0; ik < grid.kappa_steps; ++ik) {
        const double kappa =
            grid.kappa_steps == 1
                ? grid.kappa_min
                : grid.kappa_min + (grid.kappa_max - grid.kappa_min) *
                                       (static_cast<double>(ik) / static_cast<double>(grid.kappa_steps - 1));
        for (std::size_t it = 0; it < grid.theta_steps; ++it) {
            const double theta =
                2.0 * std::numbers::pi * static_cast<double>(it) / static_cast<double>(grid.theta_steps);
            clarke::SegmentPosed running = clarke::SegmentPosed::Identity();
            for (const auto& geometry : robot.segments) {
                const auto arc = clarke::canonical_arc(kappa, theta, geometry.length);
                if (!clarke::within_curvature_limit(arc, geometry)) ++invalid_samples;
                running = clarke::compose(running, clarke::pose_from_arc(arc));
            }
            table.rows.push_back({kappa, theta, running.position.x(), running.position.y(),
                                  running.position.z()});
        }
    }
    emit_table(io, table);
    if (invalid_samples > 0)
        std::fprintf(stderr,
                     "warning: arc_kinematics: %zu segment sample%s exceed%s model validity "
                     "(curvature*pitch_radius >= 1)\n",
                     invalid_samples, invalid_samples == 1 ? "" : "s", invalid_samples == 1 ? "s" : "");
    return 0;
}

int run_with_diagnostics(const char* module, const std::function<int()>& body) {
    try {
        return body();
    } catch (const clarke::ParseError& e) {
        std::fprintf(stderr, "error: robot_model: %s\n", e.what());
    } catch (const OutputError& e) {
        std::fprintf(stderr, "error: cli: %s\n", e.what());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s: %s\n", module, e.what());
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clarke-transform kinematics for displacement-actuated constant-curvature segments"};
    app.require_subcommand(1);

    CommandIo io;
    Eigen::Index matrix_n = 0;
    SampleGrid grid;

    auto* matrix = app.add_subcommand("matrix", "print the 2 x n generalized Clarke matrix");
    matrix->add_option("--n", matrix_n, "tendon count (>= 3)")->required();
    add_output_options(*matrix, io);

    auto* transform = app.add_subcommand("transform", "joint displacements -> Clarke coordinates");
    add_robot_option(*transform, io);
    add_input_options(*transform, io, "inline joint displacements rho1,rho2,...");
    add_output_options(*transform, io);

    auto* inverse = app.add_subcommand("inverse", "Clarke coordinates -> joint displacements");
    add_robot_option(*inverse, io);
    add_input_options(*inverse, io, "inline Clarke coordinates re,im");
    add_output_options(*inverse, io);

    auto* project = app.add_subcommand("project", "project joint vectors onto the feasible manifold");
    add_robot_option(*project, io);
    add_input_options(*project, io, "inline joint displacements rho1,rho2,...");
    add_output_options(*project, io);

    auto* check = app.add_subcommand("check", "report feasibility residuals of joint vectors");
    add_robot_option(*check, io);
    add_input_options(*check, io, "inline joint displacements rho1,rho2,...");
    add_output_options(*check, io);
    check->add_option("--tol", io.tolerance, "feasibility tolerance in meters")->capture_default_str();

    auto* fdep = app.add_subcommand("fdep", "arc parameters -> Clarke coordinates");
    add_robot_option(*fdep, io);
    add_input_options(*fdep, io, "inline arc parameters kappa,theta[,l]");
    add_output_options(*fdep, io);

    auto* fdep_inv = app.add_subcommand("fdep-inv", "Clarke coordinates -> arc parameters");
    add_robot_option(*fdep_inv, io);
    add_input_options(*fdep_inv, io, "inline Clarke coordinates re,im");
    add_output_options(*fdep_inv, io);

    auto* fk = app.add_subcommand("fk", "forward kinematics over a trajectory (any input space)");
    add_robot_option(*fk, io);
    fk->add_option("--in", io.in_path, "trajectory CSV file")->required();
    add_output_options(*fk, io);
    fk->add_option("--tol", io.tolerance, "feasibility tolerance in meters")->capture_default_str();
    fk->add_flag("--project-first", io.project_first,
                 "project infeasible joint vectors onto the manifold instead of rejecting them");

    auto* ik = app.add_subcommand("ik", "inverse kinematics from arc parameters to joint space");
    add_robot_option(*ik, io);
    add_input_options(*ik, io, "inline arc parameters kappa,theta[,l]");
    add_output_options(*ik, io);

    auto* sample = app.add_subcommand("sample", "sweep a kappa x theta grid and emit tip positions");
    add_robot_option(*sample, io);
    sample->add_option("--kappa-min", grid.kappa_min, "lowest curvature (1/m)")->capture_default_str();
    sample->add_option("--kappa-max", grid.kappa_max, "highest curvature (1/m)")->capture_default_str();
    sample->add_option("--kappa-steps", grid.kappa_steps, "curvature samples, endpoints included")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sample->add_option("--theta-steps", grid.theta_steps, "plane angles, evenly spaced in [0, 2*pi)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(*sample, io);

    try {
        app.parse(argc, argv);
        for (CLI::App* cmd : {transform, inverse, project, check, fdep, fdep_inv, ik})
            if (cmd->parsed()) require_input(*cmd);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: cli: %s\n", e.what());
        return 2;
    }

    if (matrix->parsed()) return run_with_diagnostics("clarke_core", [&] { return run_matrix(io, matrix_n); });
    if (transform->parsed())
        return run_with_diagnostics("clarke_core", [&] { return run_transform(*transform, io); });
    if (inverse->parsed())
        return run_with_diagnostics("clarke_core", [&] { return run_inverse(*inverse, io); });
    if (project->parsed())
        return run_with_diagnostics("clarke_core", [&] { return run_project(*project, io); });
    if (check->parsed()) return run_with_diagnostics("clarke_core", [&] { return run_check(*check, io); });
    if (fdep->parsed()) return run_with_diagnostics("arc_kinematics", [&] { return run_fdep(*fdep, io); });
    if (fdep_inv->parsed())
        return run_with_diagnostics("arc_kinematics", [&] { return run_fdep_inv(*fdep_inv, io); });
    if (fk->parsed()) return run_with_diagnostics("robot_model", [&] { return run_fk(io); });
    if (ik->parsed()) return run_with_diagnostics("robot_model", [&] { return run_ik(*ik, io); });
    if (sample->parsed())
        return run_with_diagnostics("robot_model", [&] { return run_sample(io, grid); });
    return 2;
}
