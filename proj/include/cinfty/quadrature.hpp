#pragma once

#include <cstdio>
#include <functional>
#include <string>
#include <span>
#include <vector>

#include "cinfty/error.hpp"

namespace cinfty {

/// Refinement ended with the error estimate above the tolerance.
struct NotConverged : Error {
  NotConverged(double estimate, int subdivisions)
      : Error(message(estimate, subdivisions)),
        error_estimate(estimate) {}
  double error_estimate;

 private:
  static std::string message(double estimate, int subdivisions) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "quadrature did not converge: error estimate %.3g at %d cells per edge", estimate,
                  subdivisions);
    return buf;
  }
};

/// Points and weights on the chart simplex {t in R^k : t_i >= 0, sum t_i <= 1}.
/// The weights sum to the volume 1/k!.
struct QuadratureRule {
  int dimension = 0;
  int degree = 0;
  std::vector<std::vector<double>> points;
  std::vector<double> weights;
};

/// Grundmann-Möller rule of odd degree 2s+1, exact for polynomials up to that degree.
QuadratureRule grundmann_moeller(int k, int degree);

struct QuadratureConfig {
  int degree = 7;            // odd
  int max_levels = 6;        // dyadic subdivision levels beyond the unrefined rule
  double tolerance = 1e-10;  // error estimate <= tolerance * (1 + |Q|)
  long max_cells = 1 << 20;  // refinement stops before exceeding this many cells
  int threads = 0;           // 0: CINFTY_THREADS, else hardware concurrency
};

struct QuadratureResult {
  double value = 0.0;
  // |Q(m) - Q(m/2)|, divided by 2^(degree+1) - 1 once successive differences
  // shrink by at least 16 (Richardson).
  double error_estimate = 0.0;
  int subdivisions = 1;         // cells per edge of the final level
  bool converged = false;
};

using Integrand = std::function<double(std::span<const double>)>;

/// Applies `rule` on each of the m^k cells of the Kuhn (Freudenthal)
/// subdivision of the chart simplex. Cells are summed in fixed chunks so the
/// result does not depend on the thread count.
double integrate_subdivided(const Integrand& f, const QuadratureRule& rule, int m, int threads = 0);

/// Vertices (in chart coordinates) of the cells of the m-fold subdivision.
/// Meant for tests and small m; integration enumerates cells lazily.
std::vector<std::vector<std::vector<double>>> subdivision_cells(int k, int m);

/// Doubles m until consecutive levels agree within the tolerance. Does not
/// throw on non-convergence; check `converged`. For k = 0 the value is f().
QuadratureResult integrate_simplex(const Integrand& f, int k, const QuadratureConfig& config = {});

/// Thread count from CINFTY_THREADS, else the hardware concurrency (at least 1).
int default_threads();

}  // namespace cinfty
