#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "factorlens/io.hpp"

using namespace factorlens;
using nlohmann::json;

TEST_CASE("parse lattice spec") {
    json j = {{"kind", "lattice"},
              {"dim", 1},
              {"atoms", {{2}, {3}}},
              {"grading", {1}}};
    ParsedSpec s = parse_spec(j);
    CHECK(s.kind == ParsedSpec::Kind::lattice);
    CHECK(s.lattice.dim == 1);
    CHECK(s.lattice.atoms == std::vector<Vec>({{2}, {3}}));
    CHECK(s.lattice.grading == Vec({1}));

    json no_grading = {{"kind", "lattice"}, {"dim", 1}, {"atoms", {{2}, {3}}}};
    ParsedSpec sg = parse_spec(no_grading);
    REQUIRE(sg.lattice.grading.size() == 1);
    CHECK(sg.lattice.grading[0] > 0);

    json ungradable = {{"kind", "lattice"}, {"dim", 1}, {"atoms", {{1}, {-1}}}};
    CHECK_THROWS_AS(parse_spec(ungradable), SpecError);
    CHECK_THROWS_AS(parse_spec(json{{"kind", "lattice"}, {"dim", 1}}), SpecError);
}

TEST_CASE("parse zero-sum spec") {
    json j = {{"kind", "zero-sum"}, {"factors", {3}}};
    ParsedSpec s = parse_spec(j);
    CHECK(s.kind == ParsedSpec::Kind::lattice);
    CHECK(s.lattice.atom_count() == 4);

    json sub = {{"kind", "zero-sum"}, {"factors", {3}}, {"subset", {{1}, {2}}}};
    CHECK(parse_spec(sub).lattice.atom_count() == 3);
    CHECK_THROWS_AS(parse_spec(json{{"kind", "zero-sum"}}), SpecError);
}

TEST_CASE("parse power spec") {
    json j = {{"kind", "power"}, {"generators", {{0, 1}, {0, 1, 2, 4}}}};
    ParsedSpec s = parse_spec(j);
    CHECK(s.kind == ParsedSpec::Kind::power);
    REQUIRE(s.power_generators.size() == 2);
    CHECK(s.power_generators[0] == LengthSet::of({0, 1}));
    CHECK(s.power_generators[1] == LengthSet::of({0, 1, 2, 4}));
    CHECK_THROWS_AS(parse_spec(json{{"kind", "power"}, {"generators", json::array()}}),
                    SpecError);
}

TEST_CASE("parse family spec, with and without explicit kind") {
    json j = {{"generators", {{1}, {2, 3}}}, {"depth", 12}};
    ParsedSpec s = parse_spec(j);
    CHECK(s.kind == ParsedSpec::Kind::family);
    CHECK(s.family.closure_depth == 12);
    REQUIRE(s.family.generators.size() == 2);
    CHECK(s.family.generators[1] == LengthSet::of({2, 3}));

    json jk = {{"kind", "family"}, {"generators", {{2, 5}}}, {"depth", 8}};
    CHECK(parse_spec(jk).kind == ParsedSpec::Kind::family);
    CHECK_THROWS_AS(parse_spec(json{{"kind", "family"}, {"depth", 3}}), SpecError);
    CHECK_THROWS_AS(parse_spec(json{{"kind", "frobnicate"}}), SpecError);
    CHECK_THROWS_AS(parse_spec(json::array()), SpecError);
}

TEST_CASE("spec file round trip") {
    const char* path = "io_test_spec.json";
    {
        std::ofstream out(path);
        out << R"({"generators": [[1], [2, 3]], "depth": 6})";
    }
    ParsedSpec s = parse_spec_file(path);
    CHECK(s.kind == ParsedSpec::Kind::family);
    CHECK(s.family.closure_depth == 6);
    std::remove(path);
    CHECK_THROWS_AS(parse_spec_file("does_not_exist.json"), SpecError);
    {
        std::ofstream out(path);
        out << "{not json";
    }
    CHECK_THROWS_AS(parse_spec_file(path), SpecError);
    std::remove(path);
}

TEST_CASE("length set json round trip") {
    LengthSet l = LengthSet::of({2, 3, 5});
    json j = to_json(l);
    CHECK(j == json({2, 3, 5}));
    CHECK(lengthset_from_json(j) == l);
    CHECK_THROWS_AS(lengthset_from_json(json{{"x", 1}}), SpecError);
    CHECK_THROWS_AS(lengthset_from_json(json({1, "y"})), SpecError);
}

TEST_CASE("csv quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
    CHECK(csv_row({"k", "{2, 3}", "x"}) == "k,\"{2, 3}\",x\r\n");
}
