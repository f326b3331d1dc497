#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "cinfty/error.hpp"
#include "cinfty/expr.hpp"
#include "cinfty/parse.hpp"
#include "cinfty/random_gen.hpp"
#include "cinfty/smooth_step.hpp"

using namespace cinfty;

namespace {

SmoothExpr x(int i) { return SmoothExpr::var(i); }

double centered_difference(const SmoothExpr& e, int i, std::vector<double> p, double h) {
  std::vector<double> q = p;
  p[i - 1] += h;
  q[i - 1] -= h;
  return (evaluate(e, p) - evaluate(e, q)) / (2 * h);
}

}  // namespace

TEST(Parse, LiteralProduct) {
  EXPECT_EQ(parse("x1*x2", 2), normalize(x(1) * x(2)));
}

TEST(Parse, SumOfTranscendentals) {
  EXPECT_EQ(parse("sin(x1)+exp(x2)", 2), normalize(SmoothExpr::sin(x(1)) + SmoothExpr::exp(x(2))));
}

TEST(Parse, VariableOutOfRange) {
  try {
    parse("x3", 2);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 0u);
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
}

TEST(Parse, ErrorsCarryPositions) {
  EXPECT_THROW(parse("x1 + foo(x2)", 2), ParseError);
  EXPECT_THROW(parse("x1 +", 2), ParseError);
  EXPECT_THROW(parse("(x1", 1), ParseError);
  EXPECT_THROW(parse("1/0", 1), ParseError);
  EXPECT_THROW(parse("x1^-1", 1), ParseError);
  try {
    parse("x1 * * x2", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 5u);
  }
}

TEST(Parse, RationalsPiAndStepDerivatives) {
  EXPECT_EQ(parse("3/6*x1", 1), normalize(SmoothExpr::constant(Rational(1, 2)) * x(1)));
  EXPECT_EQ(parse("cos(2*pi*t1)", 1, 't'),
            normalize(SmoothExpr::cos(SmoothExpr::constant(2) * SmoothExpr::pi() * x(1))));
  EXPECT_EQ(parse("rho0_2(x1)", 1), normalize(SmoothExpr::rho0(x(1), 2)));
}

TEST(Parse, WhitespaceIsInsignificant) {
  EXPECT_EQ(parse("  x1 *x2+ sin ( x1 )", 2), parse("x1*x2+sin(x1)", 2));
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(x(1) + x(1)), normalize(SmoothExpr::constant(2) * x(1)));
  SmoothExpr e = SmoothExpr::pow(x(1) + x(2), 2) - SmoothExpr::pow(x(1), 2) -
                 SmoothExpr::constant(2) * x(1) * x(2);
  EXPECT_EQ(normalize(e), normalize(SmoothExpr::pow(x(2), 2)));
  EXPECT_EQ(normalize(SmoothExpr::sin(x(1)) + SmoothExpr::constant(0)), normalize(SmoothExpr::sin(x(1))));
  EXPECT_EQ(to_string(normalize(x(1) + x(1))), "2*x1");
}

TEST(Normalize, DoesNotRewriteTrigIdentities) {
  SmoothExpr e = SmoothExpr::pow(SmoothExpr::sin(x(1)), 2) + SmoothExpr::pow(SmoothExpr::cos(x(1)), 2);
  EXPECT_FALSE(normalize(e) == SmoothExpr::constant(1));
}

TEST(Normalize, IdempotentOnRandomExpressions) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    SmoothExpr e = gen::random_smooth(rng, 3, 3);
    SmoothExpr once = normalize(e);
    EXPECT_EQ(normalize(once), once) << to_string(once);
  }
}

TEST(Print, RoundTripOnNormalForms) {
  gen::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    SmoothExpr e = normalize(gen::random_smooth(rng, 3, 3));
    if (trial % 5 == 0) e = normalize(SmoothExpr::recip(gen::random_nonvanishing(rng, 3)) * e);
    if (trial % 7 == 0) e = normalize(SmoothExpr::rho0(e, trial % 3) - SmoothExpr::constant(Rational(-3, 4)));
    std::string text = to_string(e);
    EXPECT_EQ(parse(text, 3), e) << text;
    EXPECT_EQ(to_string(parse(text, 3)), text);
  }
}

TEST(Compose, Substitution) {
  SmoothExpr g = x(1) * x(2);
  EXPECT_EQ(normalize(compose(g, {x(1) + x(2), x(1)})), normalize((x(1) + x(2)) * x(1)));
}

TEST(Compose, NullaryIsConstant) {
  SmoothExpr lambda = SmoothExpr::constant(Rational(7, 3));
  EXPECT_EQ(normalize(compose(lambda, {})), lambda);
}

TEST(Compose, ArityMismatch) {
  EXPECT_THROW(compose(x(1) * x(3), {x(1), x(2)}), ArityError);
}

TEST(Compose, AssociativeAtRandomPoints) {
  gen::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    SmoothExpr g = gen::random_smooth(rng, 2, 2);
    std::vector<SmoothExpr> f = {gen::random_smooth(rng, 3, 2), gen::random_polynomial(rng, 3, 2)};
    std::vector<SmoothExpr> c = {gen::random_polynomial(rng, 2, 2), gen::random_smooth(rng, 2, 1),
                                 gen::random_polynomial(rng, 2, 1)};
    SmoothExpr lhs = compose(compose(g, f), c);
    SmoothExpr rhs = compose(g, {compose(f[0], c), compose(f[1], c)});
    for (int k = 0; k < 10; ++k) {
      auto p = gen::random_point(rng, 2, -1, 1);
      double a = evaluate(lhs, p), b = evaluate(rhs, p);
      EXPECT_LE(std::abs(a - b), 1e-12 * (1 + std::abs(a)));
    }
  }
}

TEST(Compose, EvaluationIsAMorphism) {
  gen::Rng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    SmoothExpr g = gen::random_smooth(rng, 2, 3);
    std::vector<SmoothExpr> args = {gen::random_smooth(rng, 3, 2), gen::random_polynomial(rng, 3, 3)};
    auto p = gen::random_point(rng, 3, -1, 1);
    std::vector<double> inner = {evaluate(args[0], p), evaluate(args[1], p)};
    double a = evaluate(compose(g, args), p);
    double b = evaluate(g, inner);
    EXPECT_LE(std::abs(a - b), 1e-12 * (1 + std::abs(b)));
    // the normal form of the composite agrees as well
    EXPECT_LE(std::abs(evaluate(normalize(compose(g, args)), p) - b), 1e-10 * (1 + std::abs(b)));
  }
}

TEST(Partial, PowerRule) {
  EXPECT_EQ(partial(SmoothExpr::pow(x(1), 2) * x(2), 1, 2), normalize(SmoothExpr::constant(2) * x(1) * x(2)));
}

TEST(Partial, ChainRule) {
  EXPECT_EQ(partial(SmoothExpr::sin(x(1) * x(2)), 2, 2), normalize(SmoothExpr::cos(x(1) * x(2)) * x(1)));
}

TEST(Partial, IndexOutOfRange) {
  EXPECT_THROW(partial(x(1), 0, 2), IndexError);
  EXPECT_THROW(partial(x(1), 3, 2), IndexError);
}

TEST(Partial, RecipAndStep) {
  // d/dx recip(1+x^2) = -2x recip(1+x^2)^2
  SmoothExpr r = SmoothExpr::recip(SmoothExpr::constant(1) + SmoothExpr::pow(x(1), 2));
  EXPECT_EQ(partial(r, 1, 1), normalize(SmoothExpr::constant(-2) * x(1) * SmoothExpr::pow(r, 2)));
  EXPECT_EQ(partial(SmoothExpr::rho0(x(1) * x(1)), 1, 1),
            normalize(SmoothExpr::constant(2) * x(1) * SmoothExpr::rho0(x(1) * x(1), 1)));
}

TEST(Partial, MatchesCenteredDifferences) {
  gen::Rng rng(15);
  const double h = 1e-5;
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 3;
    SmoothExpr e = gen::random_smooth(rng, n, 3);
    if (trial % 4 == 0) e = e * SmoothExpr::recip(gen::random_nonvanishing(rng, n));
    auto p = gen::random_point(rng, n, -1, 1);
    for (int i = 1; i <= n; ++i) {
      double exact = evaluate(partial(e, i, n), p);
      double approx = centered_difference(e, i, p, h);
      EXPECT_LE(std::abs(exact - approx), 1e-6 * (1 + std::abs(exact))) << to_string(e) << " d/dx" << i;
      ++checked;
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(Partial, ChainRuleLaw) {
  gen::Rng rng(16);
  for (int trial = 0; trial < 60; ++trial) {
    const bool poly = trial % 2 == 0;
    SmoothExpr g = poly ? gen::random_polynomial(rng, 2, 3) : gen::random_smooth(rng, 2, 2);
    std::vector<SmoothExpr> args = {poly ? gen::random_polynomial(rng, 2, 2) : gen::random_smooth(rng, 2, 1),
                                    gen::random_polynomial(rng, 2, 2)};
    for (int i = 1; i <= 2; ++i) {
      SmoothExpr lhs = partial(normalize(compose(g, args)), i, 2);
      SmoothExpr rhs;
      for (int j = 1; j <= 2; ++j) rhs = rhs + compose(partial(g, j, 2), args) * partial(args[j - 1], i, 2);
      rhs = normalize(rhs);
      if (poly) {
        EXPECT_EQ(lhs, rhs);
      } else {
        for (int k = 0; k < 10; ++k) {
          auto p = gen::random_point(rng, 2, -1, 1);
          double a = evaluate(lhs, p), b = evaluate(rhs, p);
          EXPECT_LE(std::abs(a - b), 1e-9 * (1 + std::abs(a)));
        }
      }
    }
  }
}

TEST(Partial, MixedPartialsCommute) {
  gen::Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const bool poly = trial % 2 == 0;
    SmoothExpr e = poly ? gen::random_polynomial(rng, 3, 4, 6) : gen::random_smooth(rng, 3, 3);
    int i = 1 + trial % 3, j = 1 + (trial / 3) % 3;
    SmoothExpr ij = normalize(partial(partial(e, i, 3), j, 3));
    SmoothExpr ji = normalize(partial(partial(e, j, 3), i, 3));
    if (poly) {
      EXPECT_EQ(ij, ji);
    } else {
      auto p = gen::random_point(rng, 3, -1, 1);
      double a = evaluate(ij, p), b = evaluate(ji, p);
      EXPECT_LE(std::abs(a - b), 1e-9 * (1 + std::abs(a)));
    }
  }
}

TEST(Evaluate, Examples) {
  std::vector<double> p = {2, 3};
  EXPECT_EQ(evaluate(x(1) * x(2), p), 6.0);
  EXPECT_EQ(evaluate(SmoothExpr::exp(SmoothExpr::constant(0)), std::vector<double>{}), 1.0);
  EXPECT_EQ(evaluate(SmoothExpr::rho0(x(1)), std::vector<double>{0.0}), 1.0);
  EXPECT_EQ(evaluate(SmoothExpr::rho0(x(1)), std::vector<double>{3.0}), 0.0);
}

TEST(Evaluate, Errors) {
  EXPECT_THROW(evaluate(SmoothExpr::recip(x(1)), std::vector<double>{0.0}), DomainError);
  EXPECT_THROW(evaluate(x(2), std::vector<double>{1.0}), DimensionError);
}

TEST(Evaluate, ExactPolynomialValues) {
  SmoothExpr e = parse("x1^3 - 1/3*x1*x2 + 2", 2);
  std::vector<Rational> p = {Rational(1, 2), Rational(3)};
  EXPECT_EQ(evaluate_exact(e, p), Rational(1, 8) - Rational(1, 2) + 2);
  EXPECT_THROW(evaluate_exact(SmoothExpr::sin(x(1)), p), PreconditionError);
}

TEST(SmoothStep, ShapeAndDerivatives) {
  EXPECT_EQ(rho0(1.0), 1.0);
  EXPECT_EQ(rho0(2.0), 0.0);
  EXPECT_NEAR(rho0(1.5), 0.5, 1e-15);
  double prev = 1.0;
  for (double t = 1.0; t <= 2.0; t += 0.01) {
    EXPECT_LE(rho0(t), prev + 1e-15);
    prev = rho0(t);
  }
  const double h = 1e-5;
  for (int k = 0; k < 3; ++k) {
    for (double t : {1.1, 1.37, 1.5, 1.8, 1.95}) {
      double fd = (rho0(t + h, k) - rho0(t - h, k)) / (2 * h);
      EXPECT_NEAR(rho0(t, k + 1), fd, 1e-5 * (1 + std::abs(fd))) << "order " << k << " at " << t;
    }
  }
  EXPECT_EQ(rho0(0.5, 2), 0.0);
  EXPECT_EQ(rho0(2.5, 1), 0.0);
}
