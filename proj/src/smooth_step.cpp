#include "cinfty/smooth_step.hpp"

#include <cmath>
#include <vector>

namespace cinfty {
namespace {

// Truncated Taylor series: c[j] is the j-th normalized Taylor coefficient.
using Jet = std::vector<double>;

Jet mul(const Jet& a, const Jet& b) {
  Jet out(a.size(), 0.0);
  for (std::size_t m = 0; m < a.size(); ++m) {
    for (std::size_t j = 0; j <= m; ++j) out[m] += a[j] * b[m - j];
  }
  return out;
}

Jet recip(const Jet& a) {
  Jet r(a.size(), 0.0);
  r[0] = 1.0 / a[0];
  for (std::size_t m = 1; m < a.size(); ++m) {
    double s = 0.0;
    for (std::size_t j = 1; j <= m; ++j) s += a[j] * r[m - j];
    r[m] = -s / a[0];
  }
  return r;
}

Jet exp(const Jet& u) {
  Jet e(u.size(), 0.0);
  e[0] = std::exp(u[0]);
  for (std::size_t m = 1; m < u.size(); ++m) {
    double s = 0.0;
    for (std::size_t j = 1; j <= m; ++j) s += static_cast<double>(j) * u[j] * e[m - j];
    e[m] = s / static_cast<double>(m);
  }
  return e;
}

// phi(s) = exp(-1/s) for s > 0. Below 1/700 the value and every derivative
// underflow to zero in double precision.
Jet phi(const Jet& s) {
  if (s[0] <= 1.0 / 700.0) return Jet(s.size(), 0.0);
  Jet u = recip(s);
  for (double& c : u) c = -c;
  return exp(u);
}

}  // namespace

double rho0(double t, int order) {
  if (order == 0) {
    if (t <= 1.0) return 1.0;
    if (t >= 2.0) return 0.0;
  } else if (t <= 1.0 || t >= 2.0) {
    return 0.0;
  }
  const std::size_t len = static_cast<std::size_t>(order) + 1;
  Jet a(len, 0.0), b(len, 0.0);
  a[0] = 2.0 - t;
  b[0] = t - 1.0;
  if (len > 1) {
    a[1] = -1.0;
    b[1] = 1.0;
  }
  Jet pa = phi(a), pb = phi(b);
  Jet sum(len);
  for (std::size_t j = 0; j < len; ++j) sum[j] = pa[j] + pb[j];
  Jet r = mul(pa, recip(sum));
  double fact = 1.0;
  for (int j = 2; j <= order; ++j) fact *= j;
  return r[static_cast<std::size_t>(order)] * fact;
}

}  // namespace cinfty
