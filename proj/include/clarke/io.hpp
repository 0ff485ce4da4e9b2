#pragma once

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clarke/robot.hpp"

namespace clarke {

/// Malformed robot description or trajectory input; the message carries the
/// offending line, column, or segment.
class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decimal text with 17 significant digits ("%.17g", C locale), enough for
/// binary64 values to round-trip exactly. Negative zero is normalized to "0".
std::string format17(double value);

/// Robot description document: a strict JSON object
///   {"name": <string>, "segments": [{"n": <int>, "d_m": <number>, "l_m": <number>}, ...]}
/// Unknown fields are rejected to catch typos; segment invariants (n >= 3,
/// d > 0, l > 0) are enforced at load time with the segment named in the
/// error.
RobotDescription load_robot(std::string_view json_text);
RobotDescription load_robot_file(const std::filesystem::path& path);
std::string serialize_robot(const RobotDescription& robot);

/// Trajectory CSV: a header row naming each column as
///   joint:<seg>:<i> | clarke:<seg>:re | clarke:<seg>:im |
///   arc:<seg>:kappa | arc:<seg>:theta | arc:<seg>:l
/// (<seg> and <i> 1-based), then one configuration per row. Every robot
/// segment must be covered by exactly one space with a complete column set;
/// column order is free. Values use '.' as decimal point, no locale
/// dependence. Errors carry the file line number.
std::vector<ConfigurationSet> load_trajectory(std::string_view csv_text, const RobotDescription& robot);
std::vector<ConfigurationSet> load_trajectory_file(const std::filesystem::path& path,
                                                   const RobotDescription& robot);

/// Flat table of named numeric columns, the common shape of all streamed
/// outputs.
struct RecordTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// CSV with a header row; one line per record, format17 values.
void write_csv(std::ostream& out, const RecordTable& table);

/// JSON array of flat objects, numbers printed with the same format17 rule.
void write_json(std::ostream& out, const RecordTable& table);

}  // namespace clarke
