#include <doctest.h>

#include <random>
#include <string>

#include "ehrhart/counting.hpp"
#include "ehrhart/io.hpp"

using namespace ehrhart;

namespace {

std::string parse_error_where(const std::string& spec) {
    try {
        parse_family_spec(spec);
    } catch (const ParseError& e) {
        return e.where();
    }
    return "no error";
}

std::string json_error_where(const char* text) {
    try {
        polytope_from_json(Json::parse(text));
    } catch (const ParseError& e) {
        return e.where();
    }
    return "no error";
}

} // namespace

TEST_CASE("family spec grammar") {
    CHECK(parse_family_spec("cube:3") == cube(3));
    CHECK(parse_family_spec("cross:4") == crosspolytope(4));
    CHECK(parse_family_spec("pn:7") == pn_family(7));
    CHECK(parse_family_spec("qn:13") == qn_family(13));
    CHECK(parse_family_spec("product(pn:7,cube:2)") == product(pn_family(7), cube(2)));
    CHECK(parse_family_spec("product(pn:7,cube:2)").dimension() == 9);
    CHECK(parse_family_spec("dilate(cube:2,2)") == dilate(cube(2), 2));
    CHECK(parse_family_spec("bipyramid(cross:2)") == bipyramid(crosspolytope(2)));
    CHECK(parse_family_spec(" product( cube:1 , dilate(qn:3, 3) ) ") == product(cube(1), dilate(qn_family(3), 3)));
}

TEST_CASE("family spec errors carry a position") {
    CHECK(parse_error_where("cube:") == "position 5");
    CHECK(parse_error_where("sphere:3") == "position 0");
    CHECK(parse_error_where("product(cube:2 cube:3)") == "position 15");
    CHECK(parse_error_where("cube:3 extra") == "position 7");
    CHECK(parse_error_where("dilate(cube:2,0)") != "no error");
    CHECK(parse_error_where("pn:1") != "no error");
    CHECK(parse_error_where("") == "position 0");
}

TEST_CASE("polytope JSON round-trips") {
    const std::vector<std::string> specs{"cube:3",         "cross:2",          "pn:5",
                                         "qn:4",           "product(pn:3,cube:2)", "dilate(cube:2,2)",
                                         "bipyramid(cube:2)", "dilate(product(cross:2,qn:3),3)"};
    for (const auto& spec : specs) {
        CAPTURE(spec);
        const auto p = parse_family_spec(spec);
        const Json doc = polytope_to_json(p);
        CHECK(polytope_from_json(doc) == p);
        CHECK(polytope_from_json(Json::parse(doc.dump())) == p);
        CHECK(polytope_to_json(polytope_from_json(doc)).dump() == doc.dump());
    }
}

TEST_CASE("random generic polygons round-trip") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<IntVector> pts;
        for (int i = 0; i < 6; ++i) pts.push_back({Integer(d(rng)), Integer(d(rng))});
        try {
            const auto p = hull2d(pts);
            CHECK(polytope_from_json(polytope_to_json(p)) == p);
        } catch (const std::invalid_argument&) {
        }
    }
}

TEST_CASE("a family tag alone determines the polytope") {
    const auto p = polytope_from_json(Json::parse(R"({"dimension": 3, "family": {"tag": "pn", "params": {"n": 3}}})"));
    CHECK(p == pn_family(3));
    const auto q = polytope_from_json(Json::parse(R"({"dimension": 2, "family": {"tag": "cube", "params": {"n": 2, "scale": 2}}})"));
    CHECK(q == dilate(cube(2), 2));
}

TEST_CASE("big coordinates may be given as strings") {
    const auto p = polytope_from_json(Json::parse(
        R"({"dimension": 1, "vertices": [["-100000000000000000000"], ["100000000000000000000"]]})"));
    CHECK(p.max_abs_coordinate() == Integer("100000000000000000000"));
    const Json back = polytope_to_json(p);
    CHECK(back["vertices"][0][0] == "-100000000000000000000");
}

TEST_CASE("schema violations name the field") {
    CHECK(json_error_where("[1, 2]") == "/");
    CHECK(json_error_where(R"({"dimension": 2})") == "/");
    CHECK(json_error_where(R"({"vertices": [[1]]})") == "/");
    CHECK(json_error_where(R"({"dimension": 2, "vertices": [[0, 0], [1, 0], [0]]})") == "/vertices/2");
    CHECK(json_error_where(R"({"dimension": 2, "vertices": [[0, 0], [1, "x"], [0, 1]]})") == "/vertices/1/1");
    CHECK(json_error_where(R"({"dimension": 2, "vertices": [[0, 0], [1, 0], [0, 1]],
                               "halfspaces": [{"normal": [1], "rhs": 1}]})") == "/halfspaces/0/normal");
    CHECK(json_error_where(R"({"dimension": 2, "vertices": [[-1, -1], [1, -1], [-1, 1], [1, 1]],
                               "family": {"tag": "cube", "params": {"n": 3}}})") != "no error");
    CHECK(json_error_where(R"({"dimension": 3, "family": {"tag": "torus", "params": {"n": 3}}})") == "/family/tag");
    CHECK(json_error_where(R"({"dimension": 2, "family": {"tag": "cube", "params": {"n": 2, "scale": 0}}})") ==
          "/family/params/scale");
    CHECK(json_error_where(R"({"dimension": 2, "vertices": [[-1, -1], [1, -1], [-1, 1], [1, 1]],
                               "family": {"tag": "cube", "params": {"n": 2}}})") == "no error");
    CHECK(json_error_where(R"({"dimension": 2, "vertices": [[-1, -1], [1, -1], [-1, 1], [2, 1]],
                               "family": {"tag": "cube", "params": {"n": 2}}})") == "/vertices");
}

TEST_CASE("Ehrhart polynomial JSON") {
    const auto ehr = ehrhart_of(pn_family(3), family_counter(pn_family(3)));
    const Json doc = ehrhart_to_json(ehr);
    CHECK(doc.dump() == R"({"dimension":3,"coefficients":["1","10/3","8","20/3"]})");
    CHECK(ehrhart_from_json(doc) == ehr);
    CHECK_THROWS_AS(ehrhart_from_json(Json::parse(R"({"dimension":1,"coefficients":["1", 2]})")), ParseError);
    CHECK_THROWS_AS(ehrhart_from_json(Json::parse(R"({"dimension":2,"coefficients":["1", "2"]})")), ParseError);
}

TEST_CASE("decimal formatting never prints negative zero") {
    CHECK(format_decimal(-0.0) == "0.000000000000");
    CHECK(format_decimal(-1e-15) == "0.000000000000");
    CHECK(format_decimal(-0.5, 3) == "-0.500");
    CHECK(format_decimal(2.0 / 3.0, 4) == "0.6667");
}
