#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "clarke/io.hpp"

using clarke::ArcParametersd;
using clarke::ClarkeCoordinatesd;
using clarke::ConfigurationSet;
using clarke::format17;
using clarke::JointVectord;
using clarke::load_robot;
using clarke::load_trajectory;
using clarke::ParseError;
using clarke::RecordTable;
using clarke::RobotDescription;
using clarke::serialize_robot;

namespace {

RobotDescription two_segment_robot() {
    return {"rig", {clarke::SegmentGeometryd{3, 0.01, 0.1}, clarke::SegmentGeometryd{4, 0.008, 0.15}}};
}

std::string error_message(const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("a minimal robot description loads with the expected tendon angles") {
    const RobotDescription robot =
        load_robot(R"({"name": "probe", "segments": [{"n": 4, "d_m": 0.008, "l_m": 0.15}]})");
    CHECK(robot.name == "probe");
    REQUIRE(robot.segments.size() == 1);
    const auto& segment = robot.segments[0];
    CHECK(segment.tendon_count == 4);
    CHECK(segment.pitch_radius == 0.008);
    CHECK(segment.length == 0.15);
    CHECK(segment.tendon_angle(1) == 0.0);
    CHECK(segment.tendon_angle(2) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(segment.tendon_angle(3) == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    CHECK(segment.tendon_angle(4) == doctest::Approx(3 * std::numbers::pi / 2).epsilon(1e-15));
    CHECK_THROWS_AS(segment.tendon_angle(0), std::out_of_range);
    CHECK_THROWS_AS(segment.tendon_angle(5), std::out_of_range);
}

TEST_CASE("a two-tendon segment is rejected with the segment named") {
    const std::string message = error_message([] {
        load_robot(R"({"name": "bad", "segments": [{"n": 4, "d_m": 0.01, "l_m": 0.1},
                                                   {"n": 2, "d_m": 0.01, "l_m": 0.1}]})");
    });
    CHECK(message.find("segment 2") != std::string::npos);
    CHECK(message.find("at least 3") != std::string::npos);
}

TEST_CASE("strict mode rejects unknown fields at both levels") {
    CHECK_THROWS_AS(load_robot(R"({"name": "x", "segments": [], "speed": 3})"), ParseError);
    const std::string top = error_message(
        [] { load_robot(R"({"name": "x", "segments": [{"n": 3, "d_m": 1, "l_m": 1}], "naem": "y"})"); });
    CHECK(top.find("naem") != std::string::npos);
    const std::string seg = error_message(
        [] { load_robot(R"({"name": "x", "segments": [{"n": 3, "d_m": 1, "l_m": 1, "dm": 2}]})"); });
    CHECK(seg.find("segment 1") != std::string::npos);
    CHECK(seg.find("dm") != std::string::npos);
}

TEST_CASE("malformed robot documents are rejected") {
    CHECK_THROWS_AS(load_robot("not json"), ParseError);
    CHECK_THROWS_AS(load_robot("[1, 2]"), ParseError);
    CHECK_THROWS_AS(load_robot(R"({"segments": [{"n": 3, "d_m": 1, "l_m": 1}]})"), ParseError);
    CHECK_THROWS_AS(load_robot(R"({"name": 7, "segments": [{"n": 3, "d_m": 1, "l_m": 1}]})"), ParseError);
    CHECK_THROWS_AS(load_robot(R"({"name": "x"})"), ParseError);
    CHECK_THROWS_AS(load_robot(R"({"name": "x", "segments": []})"), ParseError);
    CHECK_THROWS_AS(load_robot(R"({"name": "x", "segments": [{"n": 3.5, "d_m": 1, "l_m": 1}]})"),
                    ParseError);
    CHECK_THROWS_AS(load_robot(R"({"name": "x", "segments": [{"n": 3, "d_m": "a", "l_m": 1}]})"),
                    ParseError);
    CHECK_THROWS_AS(load_robot(R"({"name": "x", "segments": [{"n": 3, "d_m": 1}]})"), ParseError);
    CHECK_THROWS_AS(load_robot(R"({"name": "x", "segments": [{"n": 3, "d_m": 0, "l_m": 1}]})"),
                    ParseError);
    CHECK_THROWS_AS(load_robot(R"({"name": "x", "segments": [{"n": 3, "d_m": 1, "l_m": -2}]})"),
                    ParseError);
}

TEST_CASE("serialize and load round-trip the data model") {
    const RobotDescription robot{"round trip \"quoted\"",
                                 {clarke::SegmentGeometryd{5, 0.0123456789012345678, 0.1},
                                  clarke::SegmentGeometryd{11, 0.002, 0.45}}};
    const RobotDescription back = load_robot(serialize_robot(robot));
    CHECK(back.name == robot.name);
    REQUIRE(back.segments.size() == robot.segments.size());
    for (std::size_t i = 0; i < robot.segments.size(); ++i) {
        CHECK(back.segments[i].tendon_count == robot.segments[i].tendon_count);
        CHECK(back.segments[i].pitch_radius == robot.segments[i].pitch_radius);
        CHECK(back.segments[i].length == robot.segments[i].length);
    }
}

TEST_CASE("a joint trajectory parses into joint-space configurations") {
    const RobotDescription robot{"one", {clarke::SegmentGeometryd{4, 0.008, 0.15}}};
    const auto rows = load_trajectory(
        "joint:1:1,joint:1:2,joint:1:3,joint:1:4\n"
        "0.001,0,-0.001,0\n"
        "0,0.002,0,-0.002\n"
        "1e-3,1e-3,-1e-3,-1e-3\n",
        robot);
    REQUIRE(rows.size() == 3);
    const auto& rho = std::get<JointVectord>(rows[2].entries[0]);
    CHECK(rho[0] == 1e-3);
    CHECK(rho[3] == -1e-3);
}

TEST_CASE("mixed spaces and shuffled columns are accepted") {
    const RobotDescription robot = two_segment_robot();
    const auto rows = load_trajectory(
        "arc:2:l,clarke:1:im,arc:2:kappa,clarke:1:re,arc:2:theta\n"
        "0.15,-0.002,3,0.001,1.5\n",
        robot);
    REQUIRE(rows.size() == 1);
    const auto& coords = std::get<ClarkeCoordinatesd>(rows[0].entries[0]);
    CHECK(coords[0] == 0.001);
    CHECK(coords[1] == -0.002);
    const auto& arc = std::get<ArcParametersd>(rows[0].entries[1]);
    CHECK(arc.curvature == 3.0);
    CHECK(arc.plane_angle == 1.5);
    CHECK(arc.length == 0.15);
}

TEST_CASE("trajectory header errors carry the offending column") {
    const RobotDescription robot = two_segment_robot();
    const auto msg = [&](const char* text) {
        return error_message([&] { load_trajectory(text, robot); });
    };
    CHECK(msg("joint:1:1,joint:1:2,joint:1:3\n").find("segment 2 has no columns") !=
          std::string::npos);
    CHECK(msg("joint:1:1\n").find("missing column 'joint:1:2'") != std::string::npos);
    CHECK(msg("bogus:1:1\n").find("unknown space") != std::string::npos);
    CHECK(msg("joint:9:1\n").find("segment index 9 out of range") != std::string::npos);
    CHECK(msg("joint:1:7\n").find("tendon index 7 out of range") != std::string::npos);
    CHECK(msg("joint:0:1\n").find("malformed segment index") != std::string::npos);
    CHECK(msg("clarke:1:zz\n").find("expected re or im") != std::string::npos);
    CHECK(msg("arc:1:curv\n").find("expected kappa, theta, or l") != std::string::npos);
    CHECK(msg("joint:1\n").find("expected <space>:<segment>:<component>") != std::string::npos);

    const std::string duplicate = msg(
        "joint:1:1,joint:1:2,joint:1:3,joint:1:1,clarke:2:re,clarke:2:im\n");
    CHECK(duplicate.find("duplicate column 'joint:1:1'") != std::string::npos);

    const std::string missing = msg("joint:1:1,joint:1:2,clarke:2:re,clarke:2:im\n");
    CHECK(missing.find("missing column 'joint:1:3'") != std::string::npos);

    const std::string two_spaces = msg(
        "joint:1:1,joint:1:2,joint:1:3,clarke:1:re,clarke:2:re,clarke:2:im\n");
    CHECK(two_spaces.find("segment 1 appears in both joint and clarke") != std::string::npos);
}

TEST_CASE("trajectory data errors carry the line number") {
    const RobotDescription robot{"one", {clarke::SegmentGeometryd{3, 0.01, 0.1}}};
    const char* header = "joint:1:1,joint:1:2,joint:1:3\n";
    const auto msg = [&](const std::string& text) {
        return error_message([&] { load_trajectory(text, robot); });
    };
    CHECK(msg(std::string(header) + "1,2\n").find("line 2: expected 3 fields, got 2") !=
          std::string::npos);
    CHECK(msg(std::string(header) + "1,2,3\n4,cinq,6\n").find("line 3") != std::string::npos);
    CHECK(msg(std::string(header) + "1,2,3\n4,cinq,6\n").find("'cinq'") != std::string::npos);
    CHECK(msg(std::string(header) + "\n1,2,3\n").find("line 2: empty row") != std::string::npos);
    CHECK(msg("").find("empty input") != std::string::npos);
}

TEST_CASE("a trailing newline does not create a phantom row") {
    const RobotDescription robot{"one", {clarke::SegmentGeometryd{3, 0.01, 0.1}}};
    const auto rows = load_trajectory("joint:1:1,joint:1:2,joint:1:3\n0.001,0,-0.001\n", robot);
    CHECK(rows.size() == 1);
    // CRLF input parses identically
    const auto crlf = load_trajectory("joint:1:1,joint:1:2,joint:1:3\r\n0.001,0,-0.001\r\n", robot);
    CHECK(crlf.size() == 1);
}

TEST_CASE("format17 output is canonical and round-trips") {
    CHECK(format17(0.0) == "0");
    CHECK(format17(-0.0) == "0");
    CHECK(format17(0.5) == "0.5");
    CHECK(format17(1.0 / 3.0) == "0.33333333333333331");
    CHECK(format17(2.0 / 3.0) == "0.66666666666666663");

    std::mt19937_64 rng(0x5eed401);
    std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
    std::uniform_int_distribution<int> exponent(-300, 300);
    for (int trial = 0; trial < 1000; ++trial) {
        const double value = std::ldexp(mantissa(rng), exponent(rng));
        const std::string text = format17(value);
        double parsed = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
        REQUIRE(ec == std::errc{});
        REQUIRE(ptr == text.data() + text.size());
        CHECK(parsed == value);
    }
}

TEST_CASE("record tables serialize to CSV and JSON") {
    RecordTable table;
    table.columns = {"a", "b"};
    table.rows = {{0.5, -0.0}, {1.0 / 3.0, 2.0}};

    std::ostringstream csv;
    clarke::write_csv(csv, table);
    CHECK(csv.str() == "a,b\n0.5,0\n0.33333333333333331,2\n");

    std::ostringstream json;
    clarke::write_json(json, table);
    CHECK(json.str() ==
          "[\n  {\"a\": 0.5, \"b\": 0},\n  {\"a\": 0.33333333333333331, \"b\": 2}\n]\n");
}
