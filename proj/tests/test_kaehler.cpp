#include <gtest/gtest.h>

#include <vector>

#include "cinfty/kaehler.hpp"
#include "cinfty/linalg.hpp"
#include "cinfty/parse.hpp"
#include "cinfty/random_gen.hpp"

using namespace cinfty;
using Kind = Verdict::Kind;

namespace {

SmoothExpr x(int i) { return SmoothExpr::var(i); }
Ring cross_ring() { return present_ring(2, {parse("x1*x2", 2)}); }
Ring circle_ring() { return present_ring(2, {parse("x1^2 + x2^2 - 1", 2)}); }
RingElement el(const Ring& r, const char* text) { return element(r, parse(text, r->n())); }

OneForm form_of(const Ring& r, std::vector<const char*> coeffs) {
  std::vector<RingElement> c;
  for (const char* t : coeffs) c.push_back(el(r, t));
  return one_form(r, std::move(c));
}

OneForm random_poly_form(gen::Rng& rng, const Ring& r, int degree) {
  std::vector<RingElement> c;
  for (int i = 0; i < r->n(); ++i) c.push_back(element(r, gen::random_polynomial(rng, r->n(), degree)));
  return one_form(r, std::move(c));
}

}  // namespace

TEST(KaehlerPresentation, FreeRingHasNoRelations) {
  auto k = kaehler_presentation(free_ring(3));
  EXPECT_EQ(k.module.rank, 3);
  EXPECT_TRUE(k.module.relations.empty());
}

TEST(KaehlerPresentation, CrossRingRelation) {
  auto k = kaehler_presentation(cross_ring());
  ASSERT_EQ(k.module.relations.size(), 1u);
  EXPECT_EQ(k.module.relations[0][0].rep(), x(2));
  EXPECT_EQ(k.module.relations[0][1].rep(), x(1));
}

TEST(KaehlerPresentation, CircleRelation) {
  auto k = kaehler_presentation(circle_ring());
  ASSERT_EQ(k.module.relations.size(), 1u);
  EXPECT_EQ(k.module.relations[0][0].rep(), parse("2*x1", 2));
  EXPECT_EQ(k.module.relations[0][1].rep(), parse("2*x2", 2));
}

TEST(D0, Examples) {
  Ring r = free_ring(2);
  OneForm w = d0(el(r, "x1^2"));
  EXPECT_EQ(w.coeffs[0].rep(), parse("2*x1", 2));
  EXPECT_TRUE(w.coeffs[1].is_zero_rep());
  EXPECT_EQ(to_string(w), "2*x1 * dx1");

  OneForm dc = d0(ring_constant(r, Rational(7, 2)));
  EXPECT_TRUE(dc.coeffs[0].is_zero_rep() && dc.coeffs[1].is_zero_rep());
}

TEST(D0, CrossProductDifferentialIsZero) {
  Ring cross = cross_ring();
  // the ambient differential of x1*x2 is the relation itself
  OneForm ambient = form_of(cross, {"x2", "x1"});
  Verdict v = oneform_member_J(ambient, 6);
  ASSERT_EQ(v.kind, Kind::ProvedEqual);
  ASSERT_EQ(v.cofactors.size(), 1u);
  EXPECT_EQ(v.cofactors[0], SmoothExpr::constant(1));
  EXPECT_EQ(oneform_equal(d0(el(cross, "x1*x2")), ambient).kind, Kind::ProvedEqual);
}

TEST(D0, UniversalDerivationLaw) {
  gen::Rng rng(31);
  for (Ring r : {free_ring(2), cross_ring(), circle_ring()}) {
    for (int trial = 0; trial < 10; ++trial) {
      SmoothExpr g = gen::random_polynomial(rng, 2, 3);
      std::vector<RingElement> elts = {element(r, gen::random_polynomial(rng, 2, 2)),
                                       element(r, gen::random_polynomial(rng, 2, 2))};
      OneForm lhs = d0(apply_op(r, g, elts));
      OneForm rhs = one_form(r, {ring_constant(r, 0), ring_constant(r, 0)});
      for (int j = 1; j <= 2; ++j) rhs = rhs + apply_op(r, partial(g, j, 2), elts) * d0(elts[j - 1]);
      EXPECT_EQ(oneform_equal(lhs, rhs).kind, Kind::ProvedEqual);
    }
  }
}

TEST(MemberJ, Examples) {
  Ring cross = cross_ring();
  Verdict v = oneform_member_J(form_of(cross, {"0", "x1"}), 6);
  EXPECT_EQ(v.kind, Kind::NotMemberUpToDegree);
  EXPECT_EQ(v.degree_bound, 6);

  Ring r = free_ring(2);
  EXPECT_EQ(oneform_member_J(form_of(r, {"x1*x2", "0"})).kind, Kind::ProvedUnequal);
  EXPECT_EQ(oneform_member_J(form_of(r, {"0", "0"})).kind, Kind::ProvedEqual);
}

TEST(MemberJ, MultiplesOfRelations) {
  gen::Rng rng(32);
  Ring circle = circle_ring();
  for (int trial = 0; trial < 10; ++trial) {
    RingElement h = element(circle, gen::random_polynomial(rng, 2, 3));
    OneForm w = h * form_of(circle, {"2*x1", "2*x2"});
    EXPECT_EQ(oneform_member_J(w).kind, Kind::ProvedEqual);
  }
  EXPECT_TRUE(oneform_member_J(dx(circle, 1)).refutes());
}

TEST(Lambda1, IdentityAndAxisInclusion) {
  Ring cross = cross_ring();
  OneForm w = form_of(cross, {"x1^2", "sin(x2)"});
  OneForm same = lambda1(identity_hom(cross))(w);
  EXPECT_EQ(oneform_equal(same, w).kind, Kind::ProvedEqual);

  Ring axis = present_ring(2, {x(2)});
  RingHom inc = hom(cross, axis, {coordinate(axis, 1), ring_constant(axis, 0)});
  KaehlerMap l = lambda1(inc);
  EXPECT_EQ(oneform_equal(l(dx(cross, 1)), dx(axis, 1)).kind, Kind::ProvedEqual);
  OneForm image2 = l(dx(cross, 2));
  EXPECT_TRUE(image2.coeffs[0].is_zero_rep() && image2.coeffs[1].is_zero_rep());
  OneForm dx2 = l(d0(coordinate(cross, 2)));
  EXPECT_TRUE(dx2.coeffs[0].is_zero_rep() && dx2.coeffs[1].is_zero_rep());
}

TEST(Lambda1, Scaling) {
  Ring line = free_ring(1);
  RingHom s = hom(line, line, {el(line, "2*x1")});
  OneForm out = lambda1(s)(dx(line, 1));
  EXPECT_EQ(out.coeffs[0].rep(), SmoothExpr::constant(2));
}

TEST(Lambda1, CommutesWithD) {
  gen::Rng rng(33);
  Ring cross = cross_ring();
  Ring circle = circle_ring();
  // x1 maps to the circle equation, so x1*x2 lands in the ideal
  RingHom phi = hom(cross, circle, {el(circle, "x1^2 + x2^2 - 1"), el(circle, "x1")});
  for (int trial = 0; trial < 10; ++trial) {
    RingElement a = element(cross, gen::random_polynomial(rng, 2, 3));
    EXPECT_EQ(oneform_equal(lambda1(phi)(d0(a)), d0(phi(a))).kind, Kind::ProvedEqual);
  }
}

TEST(Lambda1, Functorial) {
  Ring free2 = free_ring(2);
  Ring cross = cross_ring();
  Ring axis = present_ring(2, {x(2)});
  RingHom f = hom(free2, cross, {el(cross, "x1^2"), el(cross, "x2 + x1")});
  RingHom g = hom(cross, axis, {coordinate(axis, 1), ring_constant(axis, 0)});
  for (int i = 1; i <= 2; ++i) {
    OneForm lhs = lambda1(hom_compose(g, f))(dx(free2, i));
    OneForm rhs = lambda1(g)(lambda1(f)(dx(free2, i)));
    EXPECT_EQ(oneform_equal(lhs, rhs).kind, Kind::ProvedEqual);
  }
}

TEST(Derivation, TangencyChecks) {
  Ring cross = cross_ring();
  Derivation v = derivation(cross, {el(cross, "x1"), el(cross, "-x2")});
  ASSERT_EQ(v.certificates.size(), 1u);
  EXPECT_EQ(v.certificates[0].kind, Kind::ProvedEqual);

  try {
    derivation(cross, {el(cross, "1"), el(cross, "0")});
    FAIL() << "expected NotTangent";
  } catch (const NotTangent& e) {
    EXPECT_EQ(e.generator, 1);
    ASSERT_TRUE(e.verdict.refutes());
    ASSERT_EQ(e.verdict.witness.size(), 2u);
    EXPECT_LE(std::abs(e.verdict.witness[0]), 1e-10);
    EXPECT_GT(std::abs(e.verdict.witness[1]), 1e-9);
  }

  Ring r = free_ring(2);
  EXPECT_NO_THROW(derivation(r, {el(r, "sin(x1)"), el(r, "x1*x2^5")}));
}

TEST(Derivation, ApplyExamples) {
  Ring cross = cross_ring();
  Derivation v = derivation(cross, {el(cross, "x1"), el(cross, "-x2")});
  EXPECT_EQ(derivation_apply(v, el(cross, "x1 + x2")).rep(), parse("x1 - x2", 2));
  EXPECT_TRUE(derivation_apply(v, ring_constant(cross, 3)).is_zero_rep());
}

TEST(Derivation, WellDefinedOnClasses) {
  gen::Rng rng(34);
  Ring cross = cross_ring();
  Derivation v = derivation(cross, {el(cross, "x1 + x1^2"), el(cross, "-x2")});
  for (int trial = 0; trial < 20; ++trial) {
    SmoothExpr a = gen::random_polynomial(rng, 2, 3);
    SmoothExpr h = gen::random_polynomial(rng, 2, 2);
    // build the shifted representative without reducing it first
    RingElement shifted = derivation_apply(v, RingElement(cross, to_genpoly(a + x(1) * x(2) * h)));
    EXPECT_EQ(equal(shifted, derivation_apply(v, element(cross, a))).kind, Kind::ProvedEqual);
  }
}

TEST(Contract, Examples) {
  Ring r = free_ring(2);
  EXPECT_EQ(contract(coordinate_derivation(r, 1), dx(r, 1)).rep(), SmoothExpr::constant(1));
  Ring cross = cross_ring();
  OneForm w = form_of(cross, {"0", "x1"});
  for (const Derivation& v : enumerate_tangent_derivations(cross, 4)) {
    EXPECT_EQ(ideal_member(cross, contract(v, w).rep(), 6).kind, Kind::ProvedEqual);
  }
}

TEST(Contract, OfDifferentialIsDerivation) {
  gen::Rng rng(35);
  for (Ring r : {free_ring(2), cross_ring(), circle_ring()}) {
    auto basis = enumerate_tangent_derivations(r, 2);
    ASSERT_FALSE(basis.empty());
    for (int trial = 0; trial < 10; ++trial) {
      RingElement a = element(r, gen::random_polynomial(rng, 2, 3));
      const Derivation& v = basis[static_cast<std::size_t>(trial) % basis.size()];
      EXPECT_EQ(equal(contract(v, d0(a)), derivation_apply(v, a)).kind, Kind::ProvedEqual);
    }
  }
}

TEST(Contract, IsLinearOverTheRing) {
  gen::Rng rng(36);
  Ring circle = circle_ring();
  auto basis = enumerate_tangent_derivations(circle, 1);
  for (int trial = 0; trial < 10; ++trial) {
    RingElement a = element(circle, gen::random_polynomial(rng, 2, 2));
    OneForm w = random_poly_form(rng, circle, 2);
    for (const Derivation& v : basis) {
      EXPECT_EQ(equal(contract(v, a * w), a * contract(v, w)).kind, Kind::ProvedEqual);
    }
  }
}

TEST(Contract, NaturalUnderHoms) {
  gen::Rng rng(37);
  Ring cross = cross_ring();
  Ring axis = present_ring(2, {x(2)});
  RingHom phi = hom(cross, axis, {coordinate(axis, 1), ring_constant(axis, 0)});
  Derivation v = derivation(cross, {el(cross, "x1"), el(cross, "-x2")});
  Derivation w = derivation(axis, {el(axis, "x1"), ring_constant(axis, 0)});
  // phi(v(x_i)) = w(phi(x_i)) on generators
  for (int i = 1; i <= 2; ++i) {
    ASSERT_EQ(equal(phi(derivation_apply(v, coordinate(cross, i))), derivation_apply(w, phi.images()[i - 1])).kind,
              Kind::ProvedEqual);
  }
  for (int trial = 0; trial < 10; ++trial) {
    OneForm alpha = random_poly_form(rng, cross, 3);
    EXPECT_EQ(equal(phi(contract(v, alpha)), contract(w, lambda1(phi)(alpha))).kind, Kind::ProvedEqual);
  }

  Ring free2 = free_ring(2);
  RingHom shear = hom(free2, free2, {el(free2, "x1 + x2"), coordinate(free2, 2)});
  Derivation d1 = coordinate_derivation(free2, 1);
  for (int trial = 0; trial < 10; ++trial) {
    OneForm alpha = random_poly_form(rng, free2, 3);
    EXPECT_EQ(equal(shear(contract(d1, alpha)), contract(d1, lambda1(shear)(alpha))).kind, Kind::ProvedEqual);
  }
}

TEST(TangentDerivations, CrossRingFieldsAreDivisible) {
  Ring cross = cross_ring();
  auto basis = enumerate_tangent_derivations(cross, 2);
  EXPECT_EQ(basis.size(), 4u);
  for (const Derivation& v : basis) {
    for (int i = 0; i < 2; ++i) {
      Poly p = to_poly(v.coeffs[static_cast<std::size_t>(i)].rep(), 2);
      for (const auto& [e, c] : p.terms()) EXPECT_GE(e[static_cast<std::size_t>(i)], 1);
    }
  }
}

TEST(TangentDerivations, FreeRingConstantFields) {
  auto basis = enumerate_tangent_derivations(free_ring(3), 0);
  ASSERT_EQ(basis.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(basis[k].coeffs[i].rep(), SmoothExpr::constant(i == k ? 1 : 0));
    }
  }
}

TEST(TangentDerivations, CircleContainsRotation) {
  Ring circle = circle_ring();
  auto basis = enumerate_tangent_derivations(circle, 1);
  ASSERT_FALSE(basis.empty());
  // coefficients in the monomials 1, x1, x2 of both components
  const std::vector<Exponents> mons = monomials_up_to(2, 1);
  RationalMatrix a(6, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t i = 0; i < 2; ++i) {
      Poly p = to_poly(basis[k].coeffs[i].rep(), 2);
      for (std::size_t m = 0; m < mons.size(); ++m) {
        auto it = p.terms().find(mons[m]);
        if (it != p.terms().end()) a(i * 3 + m, k) = it->second;
      }
    }
  }
  // (-x2, x1): mons are x1, x2, 1 in grlex order
  std::vector<Rational> rotation = {0, -1, 0, 1, 0, 0};
  EXPECT_TRUE(solve(a, rotation).has_value());
  Derivation rot = derivation(circle, {el(circle, "-x2"), el(circle, "x1")});
  EXPECT_TRUE(derivation_apply(rot, el(circle, "x1^2 + x2^2")).is_zero_rep());
}

TEST(Psi, CrossRingWitness) {
  Ring cross = cross_ring();
  PsiReport r = psi_noninjectivity_report(form_of(cross, {"0", "x1"}), 4);
  EXPECT_EQ(r.in_J.kind, Kind::NotMemberUpToDegree);
  EXPECT_TRUE(r.all_contractions_in_I);
  EXPECT_GT(r.derivations_checked, 0);
  EXPECT_TRUE(r.witness());
  EXPECT_EQ(r.omega, (std::vector<std::string>{"0", "x1"}));
}

TEST(Psi, FreeRingHasNoWitness) {
  Ring r = free_ring(2);
  PsiReport rep = psi_noninjectivity_report(dx(r, 1), 4);
  EXPECT_TRUE(rep.in_J.refutes());
  EXPECT_FALSE(rep.all_contractions_in_I);
  EXPECT_FALSE(rep.witness());
}

TEST(Psi, RelationIsNotAWitness) {
  Ring cross = cross_ring();
  PsiReport r = psi_noninjectivity_report(form_of(cross, {"x2", "x1"}), 4);
  EXPECT_EQ(r.in_J.kind, Kind::ProvedEqual);
  EXPECT_FALSE(r.witness());
}

TEST(Psi, DegreeZeroIsInconclusive) {
  Ring cross = cross_ring();
  PsiReport r = psi_noninjectivity_report(form_of(cross, {"0", "x1"}), 0);
  EXPECT_EQ(r.derivations_checked, 0);
  EXPECT_FALSE(r.witness());
}
