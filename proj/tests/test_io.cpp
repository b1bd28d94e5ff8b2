#include <gtest/gtest.h>

#include "klab/io.hpp"
#include "klab/suites.hpp"

using namespace klab;

TEST(Json, AlgebraRoundTrip) {
    for (const auto& s : constructor_grid()) {
        auto A = table_algebra(s);
        Json j = algebra_to_json(*A);
        auto B = algebra_from_json(parse_json_text(j.dump()));
        EXPECT_TRUE(A->same_tables(*B)) << s.name();
        EXPECT_EQ(algebra_to_json(*B).dump(), j.dump());
    }
}

TEST(Json, AlgebraLiteral) {
    auto j = parse_json_text(R"({"char": 7, "basis": [["1"], ["e"]], "unit": "1", "diff": [],
        "mult": [["1","1","1",1], ["1","e","e",1], ["e","1","e",1]]})");
    auto A = algebra_from_json(j);
    EXPECT_EQ(A->field().characteristic(), 7u);
    EXPECT_EQ(A->dims(), (std::vector<std::size_t>{1, 1}));
}

TEST(Json, MalformedInput) {
    EXPECT_THROW(algebra_from_json(parse_json_text(R"({"basis": [["1"]]})")), MalformedDescription);
    EXPECT_THROW(algebra_from_json(parse_json_text(R"({"char": 7, "basis": [["1"]], "unit": "1", "mult": [["1","1"]]})")), MalformedDescription);
    EXPECT_THROW(algebra_from_json(parse_json_text(R"({"char": "x", "basis": [["1"]], "unit": "1"})")), MalformedDescription);
    EXPECT_THROW(algebra_from_json(parse_json_text(R"({"char": 8, "basis": [["1"]], "unit": "1", "mult": [["1","1","1",1]]})")), NotPrime);
    try {
        parse_json_text("{\"a\": }");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 7u);
    }
}

TEST(Json, Rings) {
    auto j = parse_json_text(R"({"vars": ["x", "y"], "ideal": ["x^2", "x*y", "y^2"]})");
    EXPECT_TRUE(is_ring_json(j));
    auto R = ring_from_json(j);
    EXPECT_EQ(R.field().characteristic(), kDefaultCharacteristic);
    auto back = ring_from_json(ring_to_json(R));
    EXPECT_EQ(back.ideal_strings(), R.ideal_strings());
    EXPECT_THROW(ring_from_json(parse_json_text(R"({"vars": ["x"], "ideal": ["x^"]})")), ParseError);
}

TEST(Json, Reports) {
    auto w = window_json(INT_MIN, 4);
    EXPECT_TRUE(w["lo"].is_null());
    EXPECT_EQ(w["hi"], 4);
    auto R = RingPresentation::parse(PrimeField(), {"x", "y"}, {"x^2", "y^2"});
    auto j = to_json(classify_ring(R), R);
    EXPECT_EQ(j["class"], "C(2)");
    EXPECT_EQ(j["sdc_bound"], 1);
    auto v = to_json(is_semidualizing(residue_module(exterior_algebra(1)), 4));
    EXPECT_EQ(v["verdict"], "Refuted");
}

TEST(Suites, SmallRuns) {
    SuiteConfig cfg;
    cfg.stages = 6;
    cfg.trials = 20;
    cfg.jobs = 2;
    for (const std::string name : {"dualizing", "biduality", "base-change", "euler"}) {
        auto r = run_suite(name, cfg);
        EXPECT_TRUE(r.ok()) << name;
        EXPECT_FALSE(r.cases.empty());
    }
    EXPECT_THROW(run_suite("nope", cfg), ParameterOutOfRange);
}

TEST(Suites, ThreadCountDoesNotChangeResults) {
    SuiteConfig a, b;
    a.stages = b.stages = 6;
    a.jobs = 1;
    b.jobs = 4;
    EXPECT_EQ(to_json(run_suite("prop31", a)).dump(), to_json(run_suite("prop31", b)).dump());
}
