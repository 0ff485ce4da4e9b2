#include "clarke/io.hpp"

#include <array>
#include <cassert>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace clarke {

std::string format17(double value) {
    if (value == 0.0) value = 0.0;  // normalize -0
    std::array<char, 32> buffer{};
    const int written = std::snprintf(buffer.data(), buffer.size(), "%.17g", value);
    return std::string(buffer.data(), static_cast<std::size_t>(written));
}

namespace {

std::string read_file(const std::filesystem::path& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(std::string(what) + ": cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

// ---- robot description -----------------------------------------------------

using json = nlohmann::json;

void reject_unknown_fields(const json& object, std::initializer_list<const char*> allowed,
                           const std::string& where) {
    for (const auto& item : object.items()) {
        bool known = false;
        for (const char* field : allowed)
            if (item.key() == field) known = true;
        if (!known)
            throw ParseError("robot description: " + where + ": unknown field '" + item.key() + "'");
    }
}

const json& require_field(const json& object, const char* field, const std::string& where) {
    const auto it = object.find(field);
    if (it == object.end())
        throw ParseError("robot description: " + where + ": missing field '" + std::string(field) + "'");
    return *it;
}

}  // namespace

RobotDescription load_robot(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("robot description: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("robot description: top level must be an object");
    reject_unknown_fields(doc, {"name", "segments"}, "top level");

    const json& name = require_field(doc, "name", "top level");
    if (!name.is_string()) throw ParseError("robot description: 'name' must be a string");
    const json& segments = require_field(doc, "segments", "top level");
    if (!segments.is_array() || segments.empty())
        throw ParseError("robot description: 'segments' must be a non-empty array");

    RobotDescription robot;
    robot.name = name.get<std::string>();
    robot.segments.reserve(segments.size());
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const std::string label = "segment " + std::to_string(i + 1);
        const json& seg = segments[i];
        if (!seg.is_object()) throw ParseError("robot description: " + label + ": must be an object");
        reject_unknown_fields(seg, {"n", "d_m", "l_m"}, label);
        const json& n = require_field(seg, "n", label);
        const json& d = require_field(seg, "d_m", label);
        const json& l = require_field(seg, "l_m", label);
        if (!n.is_number_integer())
            throw ParseError("robot description: " + label + ": 'n' must be an integer");
        if (!d.is_number() || !l.is_number())
            throw ParseError("robot description: " + label + ": 'd_m' and 'l_m' must be numbers");
        SegmentGeometryd geometry{n.get<Eigen::Index>(), d.get<double>(), l.get<double>()};
        try {
            geometry.validate(label);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("robot description: ") + e.what());
        }
        robot.segments.push_back(geometry);
    }
    return robot;
}

RobotDescription load_robot_file(const std::filesystem::path& path) {
    return load_robot(read_file(path, "robot description"));
}

std::string serialize_robot(const RobotDescription& robot) {
    json doc;
    doc["name"] = robot.name;
    doc["segments"] = json::array();
    for (const auto& segment : robot.segments) {
        doc["segments"].push_back({{"n", static_cast<std::int64_t>(segment.tendon_count)},
                                   {"d_m", segment.pitch_radius},
                                   {"l_m", segment.length}});
    }
    return doc.dump(2) + "\n";
}

// ---- trajectory ------------------------------------------------------------

namespace {

enum class Space { joint, clarke, arc };

constexpr std::size_t slot_count(Space space, const SegmentGeometryd& geometry) {
    switch (space) {
        case Space::joint: return static_cast<std::size_t>(geometry.tendon_count);
        case Space::clarke: return 2;
        default: return 3;
    }
}

const char* space_name(Space space) {
    switch (space) {
        case Space::joint: return "joint";
        case Space::clarke: return "clarke";
        default: return "arc";
    }
}

std::string column_name(Space space, std::size_t segment, std::size_t slot) {
    std::string name = std::string(space_name(space)) + ":" + std::to_string(segment + 1) + ":";
    switch (space) {
        case Space::joint: return name + std::to_string(slot + 1);
        case Space::clarke: return name + (slot == 0 ? "re" : "im");
        default: return name + (slot == 0 ? "kappa" : slot == 1 ? "theta" : "l");
    }
}

struct ColumnRef {
    Space space;
    std::size_t segment;  // 0-based
    std::size_t slot;
};

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    return text;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            return fields;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::optional<std::size_t> parse_index(std::string_view token) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

ColumnRef parse_column(std::string_view token, const RobotDescription& robot) {
    const auto fail = [&](const std::string& reason) -> ParseError {
        return ParseError("trajectory header: column '" + std::string(token) + "': " + reason);
    };
    const std::size_t first = token.find(':');
    const std::size_t second = first == std::string_view::npos ? first : token.find(':', first + 1);
    if (first == std::string_view::npos || second == std::string_view::npos)
        throw fail("expected <space>:<segment>:<component>");
    const std::string_view space_token = token.substr(0, first);
    const std::string_view segment_token = token.substr(first + 1, second - first - 1);
    const std::string_view component = token.substr(second + 1);

    ColumnRef ref{};
    if (space_token == "joint")
        ref.space = Space::joint;
    else if (space_token == "clarke")
        ref.space = Space::clarke;
    else if (space_token == "arc")
        ref.space = Space::arc;
    else
        throw fail("unknown space '" + std::string(space_token) + "' (expected joint, clarke, or arc)");

    const auto segment = parse_index(segment_token);
    if (!segment || *segment < 1) throw fail("malformed segment index '" + std::string(segment_token) + "'");
    if (*segment > robot.segments.size())
        throw fail("segment index " + std::to_string(*segment) + " out of range (robot has " +
                   std::to_string(robot.segments.size()) + " segments)");
    ref.segment = *segment - 1;

    switch (ref.space) {
        case Space::joint: {
            const auto tendon = parse_index(component);
            if (!tendon || *tendon < 1) throw fail("malformed tendon index '" + std::string(component) + "'");
            const auto n = static_cast<std::size_t>(robot.segments[ref.segment].tendon_count);
            if (*tendon > n)
                throw fail("tendon index " + std::to_string(*tendon) + " out of range (segment " +
                           std::to_string(*segment) + " has " + std::to_string(n) + " tendons)");
            ref.slot = *tendon - 1;
            break;
        }
        case Space::clarke:
            if (component == "re")
                ref.slot = 0;
            else if (component == "im")
                ref.slot = 1;
            else
                throw fail("unknown component '" + std::string(component) + "' (expected re or im)");
            break;
        case Space::arc:
            if (component == "kappa")
                ref.slot = 0;
            else if (component == "theta")
                ref.slot = 1;
            else if (component == "l")
                ref.slot = 2;
            else
                throw fail("unknown component '" + std::string(component) + "' (expected kappa, theta, or l)");
            break;
    }
    return ref;
}

}  // namespace

std::vector<ConfigurationSet> load_trajectory(std::string_view csv_text, const RobotDescription& robot) {
    robot.validate();
    const auto lines = split_lines(csv_text);
    if (lines.empty()) throw ParseError("trajectory: empty input");

    const auto header = split_fields(lines[0]);
    const std::size_t segment_count = robot.segments.size();

    std::vector<ColumnRef> plan;
    plan.reserve(header.size());
    std::vector<std::optional<Space>> segment_space(segment_count);
    std::vector<std::vector<bool>> seen(segment_count);
    for (const std::string_view token : header) {
        if (token.empty()) throw ParseError("trajectory header: empty column name");
        const ColumnRef ref = parse_column(token, robot);
        auto& space = segment_space[ref.segment];
        if (!space) {
            space = ref.space;
            seen[ref.segment].assign(slot_count(ref.space, robot.segments[ref.segment]), false);
        } else if (*space != ref.space) {
            throw ParseError("trajectory header: segment " + std::to_string(ref.segment + 1) +
                             " appears in both " + space_name(*space) + " and " + space_name(ref.space) +
                             " columns");
        }
        if (seen[ref.segment][ref.slot])
            throw ParseError("trajectory header: duplicate column '" + std::string(token) + "'");
        seen[ref.segment][ref.slot] = true;
        plan.push_back(ref);
    }
    for (std::size_t s = 0; s < segment_count; ++s) {
        if (!segment_space[s])
            throw ParseError("trajectory header: segment " + std::to_string(s + 1) + " has no columns");
        for (std::size_t slot = 0; slot < seen[s].size(); ++slot)
            if (!seen[s][slot])
                throw ParseError("trajectory header: missing column '" +
                                 column_name(*segment_space[s], s, slot) + "'");
    }

    std::vector<ConfigurationSet> rows;
    for (std::size_t line_no = 1; line_no < lines.size(); ++line_no) {
        const std::string_view line = lines[line_no];
        const std::string where = "trajectory line " + std::to_string(line_no + 1);
        if (trim(line).empty()) {
            if (line_no + 1 == lines.size()) continue;  // trailing newline
            throw ParseError(where + ": empty row");
        }
        const auto fields = split_fields(line);
        if (fields.size() != plan.size())
            throw ParseError(where + ": expected " + std::to_string(plan.size()) + " fields, got " +
                             std::to_string(fields.size()));

        // per-segment scratch in slot order
        std::vector<std::vector<double>> values(segment_count);
        for (std::size_t s = 0; s < segment_count; ++s)
            values[s].assign(slot_count(*segment_space[s], robot.segments[s]), 0.0);
        for (std::size_t f = 0; f < fields.size(); ++f) {
            const std::string_view field = fields[f];
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
                throw ParseError(where + ": field " + std::to_string(f + 1) + " ('" + std::string(field) +
                                 "') is not a number");
            values[plan[f].segment][plan[f].slot] = value;
        }

        ConfigurationSet config;
        config.entries.reserve(segment_count);
        for (std::size_t s = 0; s < segment_count; ++s) {
            const auto& v = values[s];
            switch (*segment_space[s]) {
                case Space::joint:
                    config.entries.emplace_back(
                        Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()))
                            .eval());
                    break;
                case Space::clarke:
                    config.entries.emplace_back(ClarkeCoordinatesd(v[0], v[1]));
                    break;
                case Space::arc:
                    config.entries.emplace_back(ArcParametersd{v[0], v[1], v[2]});
                    break;
            }
        }
        rows.push_back(std::move(config));
    }
    return rows;
}

std::vector<ConfigurationSet> load_trajectory_file(const std::filesystem::path& path,
                                                   const RobotDescription& robot) {
    return load_trajectory(read_file(path, "trajectory"), robot);
}

// ---- record output ---------------------------------------------------------

void write_csv(std::ostream& out, const RecordTable& table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out << ',';
        out << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        assert(row.size() == table.columns.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << format17(row[c]);
        }
        out << '\n';
    }
}

namespace {
std::string json_escape(const std::string& text) {
    std::string escaped;
    escaped.reserve(text.size());
    for (const char ch : text) {
        switch (ch) {
            case '"': escaped += "\\\""; break;
            case '\\': escaped += "\\\\"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    escaped += buf;
                } else {
                    escaped += ch;
                }
        }
    }
    return escaped;
}
}  // namespace

void write_json(std::ostream& out, const RecordTable& table) {
    out << "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        assert(row.size() == table.columns.size());
        out << "  {";
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ", ";
            out << '"' << json_escape(table.columns[c]) << "\": " << format17(row[c]);
        }
        out << '}' << (r + 1 < table.rows.size() ? "," : "") << '\n';
    }
    out << "]\n";
}

}  // namespace clarke
