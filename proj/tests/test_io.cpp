#include <gtest/gtest.h>

#include <cmath>

#include "cinfty/io.hpp"
#include "cinfty/parse.hpp"

using namespace cinfty;

namespace {

std::filesystem::path data(const char* name) { return std::filesystem::path(CINFTY_TEST_DATA) / name; }

}  // namespace

TEST(RingFile, LoadsCrossWithOracle) {
  Ring r = load_ring(data("cross.json"));
  EXPECT_EQ(r->n(), 2);
  ASSERT_EQ(r->generators().size(), 1u);
  EXPECT_EQ(to_string(r->generators()[0]), "x1*x2");
  EXPECT_EQ(r->oracle().degree_bound, 6);
  EXPECT_EQ(r->oracle().seed, 7u);
  ASSERT_EQ(r->oracle().box.size(), 2u);
  EXPECT_EQ(r->oracle().box[1].second, 2.0);
}

TEST(RingFile, DefaultsForMissingFields) {
  Ring r = load_ring(data("free3.json"));
  EXPECT_EQ(r->n(), 3);
  EXPECT_TRUE(r->is_free());
  EXPECT_EQ(r->oracle().degree_bound, OracleConfig{}.degree_bound);
  Ring c = load_ring(data("circle.json"));
  EXPECT_EQ(c->oracle().seed, 11u);
  EXPECT_EQ(c->oracle().tolerance, OracleConfig{}.tolerance);
}

TEST(RingFile, RoundTrip) {
  Ring r = load_ring(data("cross.json"));
  Ring back = ring_from_json(ring_to_json(*r));
  EXPECT_EQ(ring_to_json(*back), ring_to_json(*r));
}

TEST(RingFile, Errors) {
  EXPECT_THROW(load_ring(data("malformed.json")), IoError);
  EXPECT_THROW(load_ring(data("does_not_exist.json")), IoError);
  EXPECT_THROW(load_ring(data("bad_expr.json")), ParseError);
  EXPECT_THROW(ring_from_json(json::parse(R"({"generators": []})")), IoError);
  EXPECT_THROW(ring_from_json(json::parse(R"({"n": "two"})")), IoError);
  EXPECT_THROW(ring_from_json(json::parse(R"({"n": 2, "generators": [3]})")), IoError);
  EXPECT_THROW(ring_from_json(json::parse(R"({"n": 2, "oracle": {"box": [[0, 1]]}})")), IoError);
  EXPECT_THROW(ring_from_json(json::parse(R"({"n": 1, "oracle": {"box": [[1, 0]]}})")), IoError);
  EXPECT_THROW(ring_from_json(json::parse(R"({"n": 1, "oracle": {"seed": "x"}})")), IoError);
  EXPECT_THROW(ring_from_json(json::parse(R"({"n": 1, "generators": ["x2"]})")), ParseError);
}

TEST(SpaceFile, LoadsCoverRelativeToFile) {
  SpaceDescription s = load_space(data("circle_cover.json"));
  EXPECT_EQ(s.space->n(), 2);
  EXPECT_EQ(s.space->seed(), 3u);
  ASSERT_EQ(s.opens.size(), 3u);
  EXPECT_EQ(s.opens[1].positivity.size(), 2u);
  // The three opens cover every sample of the circle.
  OpenSet cover;
  for (const BasicOpen& b : s.opens) cover = unite(cover, open_set(b));
  for (const Point& p : s.space->samples()) {
    EXPECT_NEAR(p[0] * p[0] + p[1] * p[1], 1.0, 1e-9);
    EXPECT_TRUE(cover.contains(p));
  }
}

TEST(SpaceFile, InlineRingAndErrors) {
  json j = json::parse(R"({"ring": {"n": 1, "generators": []}, "opens": [{"positivity": ["x1"]}]})");
  SpaceDescription s = space_from_json(j);
  EXPECT_EQ(s.space->n(), 1);
  EXPECT_THROW(space_from_json(json::parse(R"({"opens": []})")), IoError);
  EXPECT_THROW(space_from_json(json::parse(R"({"ring": {"n": 1}, "opens": [{}]})")), IoError);
  EXPECT_THROW(space_from_json(json::parse(R"({"ring": {"n": 1}, "box": [[0, 1], [0, 1]]})")), IoError);
}

TEST(Reports, VerdictJson) {
  Ring cross = load_ring(data("cross.json"));
  Verdict v = equal(element(cross, parse("x1^2*x2", 2)), ring_constant(cross, 0));
  json j = to_json(v);
  EXPECT_EQ(j["kind"], "ProvedEqual");
  EXPECT_TRUE(j.contains("reason"));
  Verdict u = equal(element(cross, parse("x1", 2)), ring_constant(cross, 0));
  json k = to_json(u);
  EXPECT_NE(k["kind"], "ProvedEqual");
  EXPECT_EQ(to_json(u).dump(), k.dump());
}

TEST(Reports, PsiJsonSchema) {
  Ring cross = load_ring(data("cross.json"));
  OneForm w = one_form(cross, {ring_constant(cross, 0), coordinate(cross, 1)});
  json j = to_json(psi_noninjectivity_report(w, 4));
  for (const char* key : {"omega", "in_J", "derivations_checked", "all_contractions_in_I", "degree_bound", "seed"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["omega"], json({"0", "x1"}));
  EXPECT_EQ(j["in_J"]["kind"], "NotMemberUpToDegree");
  EXPECT_EQ(j["all_contractions_in_I"], true);
  EXPECT_EQ(j["witness"], true);
}

TEST(Reports, StokesJson) {
  StokesReport r;
  r.lhs = 0.5;
  r.rhs = 0.5;
  r.pass = true;
  json j = to_json(r);
  EXPECT_EQ(j["lhs"], 0.5);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["residual"], 0.0);
}
