#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "cinfty/cring.hpp"

namespace cinfty {
namespace {

constexpr double kResidualTarget = 1e-12;
constexpr double kResidualAccept = 1e-10;
constexpr int kNewtonIterations = 80;

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool inside(const std::vector<double>& p, const Box& box) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < box[i].first || p[i] > box[i].second) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<double>> project_to_zero_set(const RingPresentation& ring, std::vector<double> p) {
  const auto& gens = ring.generators();
  if (gens.empty()) return p;
  const auto k = static_cast<Eigen::Index>(gens.size());
  const auto n = static_cast<Eigen::Index>(ring.n());
  try {
    double r = ring.residual(p);
    for (int it = 0; it < kNewtonIterations && r > kResidualTarget; ++it) {
      Eigen::MatrixXd jac(k, n);
      Eigen::VectorXd g(k);
      for (Eigen::Index j = 0; j < k; ++j) {
        g(j) = evaluate(gens[static_cast<std::size_t>(j)], p);
        for (Eigen::Index i = 0; i < n; ++i) {
          jac(j, i) = evaluate(ring.jacobian()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], p);
        }
      }
      if (jac.norm() == 0.0) return std::nullopt;
      // minimum-norm Gauss-Newton step
      const Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(g);
      double t = 1.0;
      bool improved = false;
      for (int halving = 0; halving < 30; ++halving, t *= 0.5) {
        std::vector<double> q(p);
        for (Eigen::Index i = 0; i < n; ++i) q[static_cast<std::size_t>(i)] -= t * step(i);
        const double rq = ring.residual(q);
        if (rq < r) {
          p = std::move(q);
          r = rq;
          improved = true;
          break;
        }
      }
      if (!improved) break;
    }
    if (r > kResidualAccept) return std::nullopt;
  } catch (const DomainError&) {
    return std::nullopt;
  }
  return p;
}

std::vector<std::vector<double>> sample_zero_set(const RingPresentation& ring, int count, const Box& box,
                                                 std::uint64_t seed) {
  if (box.size() != static_cast<std::size_t>(ring.n())) throw PreconditionError("sampling box has the wrong dimension");
  for (const auto& [lo, hi] : box) {
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw PreconditionError("sampling box must be bounded");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> out;
  const int budget = std::max(50, 50 * count);
  for (int attempt = 0; attempt < budget && static_cast<int>(out.size()) < count; ++attempt) {
    std::vector<double> p(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) p[i] = box[i].first + (box[i].second - box[i].first) * uniform01(rng);
    auto q = project_to_zero_set(ring, std::move(p));
    if (q && inside(*q, box)) out.push_back(std::move(*q));
  }
  if (static_cast<int>(out.size()) < count) {
    throw SamplingFailed("found " + std::to_string(out.size()) + " of " + std::to_string(count) +
                         " zero-set points within the iteration budget");
  }
  return out;
}

}  // namespace cinfty
