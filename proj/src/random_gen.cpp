#include "cinfty/random_gen.hpp"

namespace cinfty::gen {

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
}

SmoothExpr random_polynomial(Rng& rng, int n, int max_degree, int max_terms, int coef_range) {
  std::vector<SmoothExpr> terms;
  const int count = rng.uniform_int(1, max_terms);
  for (int t = 0; t < count; ++t) {
    int c = rng.uniform_int(-coef_range, coef_range);
    if (c == 0) c = 1;
    std::vector<SmoothExpr> factors{SmoothExpr::constant(c)};
    const int degree = rng.uniform_int(0, max_degree);
    for (int d = 0; d < degree && n > 0; ++d) factors.push_back(SmoothExpr::var(rng.uniform_int(1, n)));
    terms.push_back(SmoothExpr::mul(std::move(factors)));
  }
  return normalize(SmoothExpr::add(std::move(terms)));
}

// Arguments of the transcendental heads are damped so that values and
// derivatives stay moderate on [-1.5, 1.5]^n.
SmoothExpr random_smooth(Rng& rng, int n, int depth) {
  if (depth <= 0) return random_polynomial(rng, n, 2, 3, 2);
  const SmoothExpr half = SmoothExpr::constant(Rational(1, 2));
  switch (rng.uniform_int(0, 5)) {
    case 0:
      return SmoothExpr::sin(half * random_smooth(rng, n, depth - 1));
    case 1:
      return SmoothExpr::cos(half * random_smooth(rng, n, depth - 1));
    case 2:
      return SmoothExpr::exp(SmoothExpr::constant(Rational(1, 4)) * SmoothExpr::sin(random_smooth(rng, n, depth - 1)));
    case 3:
      return random_smooth(rng, n, depth - 1) * random_smooth(rng, n, depth - 1);
    case 4:
      return random_smooth(rng, n, depth - 1) + random_smooth(rng, n, depth - 1);
    default:
      return SmoothExpr::pow(random_smooth(rng, n, 0), 2);
  }
}

SmoothExpr random_nonvanishing(Rng& rng, int n) {
  const SmoothExpr p = random_polynomial(rng, n, 2, 3, 2);
  switch (rng.uniform_int(0, 3)) {
    case 0:
      return SmoothExpr::exp(p);
    case 1:
      return SmoothExpr::constant(1) + SmoothExpr::pow(p, 2);
    case 2:
      return SmoothExpr::constant(2) + SmoothExpr::sin(p);
    default:
      return SmoothExpr::constant(3) - SmoothExpr::cos(p) * SmoothExpr::exp(SmoothExpr::neg(SmoothExpr::pow(p, 2)));
  }
}

std::vector<double> random_point(Rng& rng, int n, double lo, double hi) {
  std::vector<double> p(static_cast<std::size_t>(n));
  for (double& c : p) c = rng.uniform(lo, hi);
  return p;
}

}  // namespace cinfty::gen
