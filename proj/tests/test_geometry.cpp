#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "cinfty/geometry.hpp"
#include "cinfty/parse.hpp"
#include "cinfty/random_gen.hpp"

using namespace cinfty;

namespace {

SmoothExpr x(int i) { return SmoothExpr::var(i); }
SmoothExpr c(double v) { return SmoothExpr::constant(Rational(v)); }
Ring circle_ring() { return present_ring(2, {parse("x1^2 + x2^2 - 1", 2)}); }
Space circle_space() { return make_space(circle_ring()); }

// Arc of half-width w around angle theta: cos(theta) x1 + sin(theta) x2 > cos(w).
BasicOpen arc(double theta, double w) {
  return BasicOpen{{normalize(c(std::cos(theta)) * x(1) + c(std::sin(theta)) * x(2) - c(std::cos(w)))}};
}

std::vector<BasicOpen> three_arcs() {
  const double third = 2.0943951023931953;
  return {arc(0, 1.3), arc(third, 1.3), arc(2 * third, 1.3)};
}

}  // namespace

TEST(Space, SamplesLieOnTheCarrier) {
  Space s = circle_space();
  ASSERT_EQ(s->samples().size(), 200u);
  for (const Point& p : s->samples()) EXPECT_LE(std::abs(p[0] * p[0] + p[1] * p[1] - 1), 1e-10);
  EXPECT_EQ(&s->samples(), &s->samples());
}

TEST(Space, EmptyCarrierIsReported) {
  Space s = make_space(present_ring(1, {parse("x1^2 + 1", 1)}), {}, std::nullopt, 5);
  EXPECT_THROW(s->samples(), SamplingFailed);
}

TEST(Bump, IntervalExample) {
  std::vector<Point> closed;
  for (double y = 2.0; y <= 5.0; y += 0.25) {
    closed.push_back({y});
    closed.push_back({-y});
  }
  SmoothExpr tau = bump(1, closed, {0.0}, 1.0, 2.0);
  EXPECT_EQ(evaluate(tau, Point{0.0}), 1.0);
  EXPECT_EQ(evaluate(tau, Point{3.0}), 0.0);
  EXPECT_EQ(evaluate(tau, Point{-3.0}), 0.0);
  for (const Point& p : closed) EXPECT_EQ(evaluate(tau, p), 0.0);

  gen::Rng rng(51);
  for (int k = 0; k < 1000; ++k) {
    double v = evaluate(tau, Point{rng.uniform(-3, 3)});
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(Bump, RejectsCentersNearTheClosedSet) {
  EXPECT_THROW(bump(1, {{1.5}}, {0.0}, 1.0, 2.0), PreconditionError);
  EXPECT_THROW(bump(1, {}, {0.0}, 2.0, 1.0), PreconditionError);
}

TEST(Bump, SeparatesPointsOfTheCircle) {
  Space s = circle_space();
  const auto& pts = s->samples();
  for (std::size_t k = 0; k < 10; ++k) {
    const Point& center = pts[k * 7];
    std::vector<Point> closed;
    for (const Point& p : pts) {
      if (std::hypot(p[0] - center[0], p[1] - center[1]) >= 0.5) closed.push_back(p);
    }
    SmoothExpr tau = bump(2, closed, center, 0.2, 0.5);
    // tau restricted to the circle is a section of the induced structure
    Section sec = section(s, whole_space(), tau);
    EXPECT_EQ(sec(center), 1.0);
    for (const Point& p : closed) EXPECT_EQ(sec(p), 0.0);
    for (const Point& p : pts) {
      EXPECT_GE(sec(p), 0.0);
      EXPECT_LE(sec(p), 1.0);
    }
  }
}

TEST(Restrict, IdentityTransitivityAndDegenerate) {
  Space s = circle_space();
  Section top = section(s, whole_space(), parse("x1*x2", 2));
  Section same = presheaf_restrict(top, whole_space());
  EXPECT_EQ(same.rep, top.rep);

  OpenSet u = open_set(BasicOpen{{parse("x1 + 1/2", 2)}});
  OpenSet v = intersect(u, open_set(BasicOpen{{parse("x2", 2)}}));
  OpenSet w = intersect(v, open_set(BasicOpen{{parse("x1", 2)}}));
  Section a = presheaf_restrict(presheaf_restrict(presheaf_restrict(top, u), v), w);
  Section b = presheaf_restrict(top, w);
  for (const Point& p : points_in(*s, w)) EXPECT_EQ(a(p), b(p));
  EXPECT_FALSE(a.degenerate);

  Section empty = presheaf_restrict(top, open_set(BasicOpen{{parse("x1^2 + x2^2 - 4", 2)}}));
  EXPECT_TRUE(empty.degenerate);
}

TEST(Restrict, NonInclusionHasWitness) {
  Space s = circle_space();
  Section half = section(s, open_set(BasicOpen{{x(1)}}), x(2));
  try {
    presheaf_restrict(half, whole_space());
    FAIL() << "expected NotSubset";
  } catch (const NotSubset& e) {
    EXPECT_LE(e.witness[0], 0.0);
  }
}

TEST(Glue, HalfCirclesWithTheSameSection) {
  Space s = circle_space();
  Section upper = section(s, open_set(BasicOpen{{parse("x2 + 1/5", 2)}}), x(1));
  Section lower = section(s, open_set(BasicOpen{{parse("1/5 - x2", 2)}}), x(1));
  GlueResult g = glue({upper, lower});
  EXPECT_EQ(g.max_overlap_disagreement, 0.0);
  for (const Point& p : s->samples()) EXPECT_NEAR(g.section(p), p[0], 1e-12);
}

TEST(Glue, InconsistentFamilyIsRejected) {
  Space s = circle_space();
  auto arcs = three_arcs();
  std::vector<Section> family = {section(s, open_set(arcs[0]), x(1)), section(s, open_set(arcs[1]), x(1)),
                                 section(s, open_set(arcs[2]), x(1) + c(0.25))};
  try {
    glue(family);
    FAIL() << "expected IncompatibleFamily";
  } catch (const IncompatibleFamily& e) {
    EXPECT_EQ(e.second, 2);
    EXPECT_TRUE(arcs[static_cast<std::size_t>(e.first)].contains(e.witness));
    EXPECT_TRUE(arcs[2].contains(e.witness));
    EXPECT_NEAR(e.disagreement, 0.25, 1e-12);
  }
}

TEST(Glue, LocallyRepresentedSectionsOnThreeArcs) {
  Space s = circle_space();
  auto arcs = three_arcs();
  // Each representative differs from x1*x2 + x2 only away from its arc.
  const SmoothExpr global = parse("x1*x2 + x2", 2);
  std::vector<Section> family;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    SmoothExpr off = SmoothExpr::rho0(normalize(c(2) + c(4) * arcs[i].positivity[0]));
    family.push_back(section(s, open_set(arcs[i]), global + c(3.0 + i) * off));
  }
  GlueResult g = glue(family);
  EXPECT_LE(g.max_blend_error, 1e-8);
  for (const Point& p : s->samples()) EXPECT_NEAR(g.section(p), evaluate(global, p), 1e-8);
}

TEST(Glue, SheafAxiomOnFiniteCover) {
  Space s = circle_space();
  auto arcs = three_arcs();
  Section top = section(s, whole_space(), parse("exp(x1) - x2^3", 2));
  std::vector<Section> family;
  for (const BasicOpen& a : arcs) family.push_back(presheaf_restrict(top, open_set(a)));
  GlueResult g = glue(family);
  for (const Point& p : s->samples()) EXPECT_NEAR(g.section(p), top(p), 1e-9);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    Section back = presheaf_restrict(g.section, open_set(arcs[i]));
    for (const Point& p : points_in(*s, back.open)) EXPECT_NEAR(back(p), family[i](p), 1e-9);
  }
}

TEST(Germ, InvertExamples) {
  Space line = make_space(free_ring(1));
  GermRep g = germ(section(line, whole_space(), parse("1 + x1^2", 1)), {0.0});
  GermRep inv = germ_invert(g);
  auto pts = neighborhood_points(*line, {0.0}, 0.5, inv.section.open);
  ASSERT_GT(pts.size(), 5u);
  for (const Point& p : pts) EXPECT_NEAR(inv.section(p) * g.section(p), 1.0, 1e-10);

  EXPECT_THROW(germ_invert(germ(section(line, whole_space(), x(1)), {0.0})), DomainError);

  GermRep two = germ(section(line, whole_space(), SmoothExpr::constant(2)), {0.3});
  GermRep half = germ_invert(two);
  for (const Point& p : line->samples()) EXPECT_NEAR(half.section(p), 0.5, 1e-15);
}

TEST(Germ, RandomNonvanishingGermsAreUnits) {
  gen::Rng rng(52);
  Space plane = make_space(free_ring(2));
  Space circle = circle_space();
  for (int trial = 0; trial < 20; ++trial) {
    const Space& s = trial % 2 ? circle : plane;
    SmoothExpr e = gen::random_nonvanishing(rng, 2);
    if (rng.uniform_int(0, 1)) e = -e;
    const Point base = s->samples()[static_cast<std::size_t>(rng.uniform_int(0, 199))];
    GermRep g = germ(section(s, whole_space(), e), base);
    GermRep inv = germ_invert(g);
    auto pts = neighborhood_points(*s, base, 0.25, inv.section.open);
    ASSERT_FALSE(pts.empty());
    for (const Point& p : pts) EXPECT_NEAR(inv.section(p) * g.section(p), 1.0, 1e-10);
  }
}

TEST(Germ, EqualityIsLocal) {
  Space s = circle_space();
  const Point base = {1.0, 0.0};
  std::vector<Point> closed;
  for (const Point& p : s->samples()) {
    if (std::hypot(p[0] - base[0], p[1] - base[1]) >= 0.4) closed.push_back(p);
  }
  // 1 - tau vanishes near base, so x1 and x1 + (1 - tau) have the same germ there
  SmoothExpr tau = bump(2, closed, base, 0.2, 0.4);
  GermRep a = germ(section(s, whole_space(), x(1)), base);
  GermRep b = germ(section(s, whole_space(), x(1) + (SmoothExpr::constant(1) - tau)), base);
  EXPECT_EQ(germ_equal(a, b).kind, Verdict::Kind::NumericallyEqual);
  GermRep shifted = germ(section(s, whole_space(), x(1) + c(1e-3)), base);
  Verdict v = germ_equal(a, shifted);
  EXPECT_EQ(v.kind, Verdict::Kind::NumericallyUnequal);
  EXPECT_FALSE(v.witness.empty());
}

TEST(RingedMap, AxisInclusionIntoCross) {
  Space line = make_space(free_ring(1));
  Space cross = make_space(present_ring(2, {parse("x1*x2", 2)}));
  RingedMap inc = ringed_map({x(1), SmoothExpr::constant(0)}, line, cross);
  Section y = inc.pull(section(cross, whole_space(), x(2)));
  EXPECT_TRUE(y.rep.is_zero());
  EXPECT_THROW(ringed_map({x(1), x(1)}, line, cross), OffZeroSet);
}

TEST(RingedMap, IdentityActsTrivially) {
  Space s = circle_space();
  RingedMap id = identity_map(s);
  Section sec = section(s, whole_space(), parse("sin(x1) + x2", 2));
  Section back = id.pull(sec);
  for (const Point& p : s->samples()) EXPECT_EQ(back(p), sec(p));
}

TEST(RingedMap, CompositionIsFunctorial) {
  gen::Rng rng(53);
  Space line = make_space(free_ring(1), {{-3, 3}});
  Space circle = circle_space();
  RingedMap f = ringed_map({parse("cos(x1)", 1), parse("sin(x1)", 1)}, line, circle);
  RingedMap g = ringed_map({parse("x1^2 - x2^2", 2), parse("2*x1*x2", 2)}, circle, circle);
  RingedMap gf = compose(g, f);
  for (int trial = 0; trial < 20; ++trial) {
    Section h = section(circle, whole_space(), gen::random_smooth(rng, 2, 2));
    Section lhs = gf.pull(h);
    Section rhs = f.pull(g.pull(h));
    for (const Point& q : line->samples()) EXPECT_NEAR(lhs(q), rhs(q), 1e-10 * (1 + std::abs(rhs(q))));
  }
  // associativity on components
  RingedMap h3 = compose(compose(g, g), f);
  RingedMap h3b = compose(g, compose(g, f));
  for (const Point& q : line->samples()) {
    Point a = h3(q), b = h3b(q);
    EXPECT_NEAR(a[0], b[0], 1e-12);
    EXPECT_NEAR(a[1], b[1], 1e-12);
  }
}

TEST(RingedMap, StalkMapsEvaluateByComposition) {
  gen::Rng rng(54);
  Space line = make_space(free_ring(1), {{-3, 3}});
  Space circle = circle_space();
  RingedMap f = ringed_map({parse("cos(x1)", 1), parse("sin(x1)", 1)}, line, circle);
  for (int k = 0; k < 20; ++k) {
    const Point q = {rng.uniform(-3, 3)};
    Section h = section(circle, whole_space(), gen::random_smooth(rng, 2, 2));
    GermRep pulled = f.pull(germ(h, f(q)), q);
    EXPECT_NEAR(pulled.section(q), h(f(q)), 1e-12 * (1 + std::abs(h(f(q)))));
  }
}
