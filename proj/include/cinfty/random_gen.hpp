#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cinfty/expr.hpp"

namespace cinfty::gen {

/// Seeded generator with platform-independent integer and real draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform_int(int lo, int hi);  // inclusive
  double uniform(double lo, double hi);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Polynomial over x1..xn with at most `max_terms` monomials of degree
/// <= max_degree and integer coefficients in [-coef_range, coef_range].
SmoothExpr random_polynomial(Rng& rng, int n, int max_degree, int max_terms = 4, int coef_range = 3);

/// Random expression mixing polynomials with sin, cos and exp.
SmoothExpr random_smooth(Rng& rng, int n, int depth);

/// Random expression that never vanishes on R^n (exp(p), 1 + p^2, 2 + sin(p), ...).
SmoothExpr random_nonvanishing(Rng& rng, int n);

std::vector<double> random_point(Rng& rng, int n, double lo = -1.5, double hi = 1.5);

}  // namespace cinfty::gen
