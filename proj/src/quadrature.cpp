#include "cinfty/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>

namespace cinfty {

namespace {

double factorial(int n) {
  double out = 1.0;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// All beta in N^parts with |beta| = total.
void compositions(int parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(parts, total - v, cur, out);
    cur.pop_back();
  }
}

long ipow(long base, int e) {
  long out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// Cells of the m-fold subdivision are indexed by a base corner c in
// {0..m-1}^k and a permutation. In the coordinates y_j = t_j + ... + t_k the
// chart simplex is {m >= y_1 >= ... >= y_k >= 0} (scaled by m), and a Kuhn
// cell walks from c along e_{perm[0]}, e_{perm[1]}, ... . It lies in the
// region iff for each j either c_j > c_{j+1}, or c_j == c_{j+1} and j is
// stepped before j+1.
class CellWalker {
 public:
  CellWalker(int k, int m) : k_(k), m_(m) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      perms_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    positions_.reserve(perms_.size());
    for (const auto& p : perms_) {
      std::vector<int> pos(static_cast<std::size_t>(k));
      for (int r = 0; r < k; ++r) pos[static_cast<std::size_t>(p[static_cast<std::size_t>(r)])] = r;
      positions_.push_back(std::move(pos));
    }
  }

  long corner_count() const { return ipow(m_, k_); }

  // Calls visit(vertices) for every cell with base corner number `index`.
  template <class Visit>
  void cells_at(long index, std::vector<int>& c, std::vector<std::vector<double>>& verts, Visit&& visit) const {
    for (int j = 0; j < k_; ++j) {
      c[static_cast<std::size_t>(j)] = static_cast<int>(index % m_);
      index /= m_;
    }
    for (std::size_t p = 0; p < perms_.size(); ++p) {
      if (!inside(c, positions_[p])) continue;
      std::vector<int> y = c;
      to_chart(y, verts[0]);
      for (int r = 0; r < k_; ++r) {
        ++y[static_cast<std::size_t>(perms_[p][static_cast<std::size_t>(r)])];
        to_chart(y, verts[static_cast<std::size_t>(r) + 1]);
      }
      visit(verts);
    }
  }

 private:
  bool inside(const std::vector<int>& c, const std::vector<int>& pos) const {
    for (int j = 0; j + 1 < k_; ++j) {
      const auto a = static_cast<std::size_t>(j), b = a + 1;
      if (c[a] < c[b]) return false;
      if (c[a] == c[b] && pos[a] > pos[b]) return false;
    }
    return true;
  }

  void to_chart(const std::vector<int>& y, std::vector<double>& t) const {
    for (int j = 0; j < k_; ++j) {
      const int next = j + 1 < k_ ? y[static_cast<std::size_t>(j) + 1] : 0;
      t[static_cast<std::size_t>(j)] = static_cast<double>(y[static_cast<std::size_t>(j)] - next) / m_;
    }
  }

  int k_, m_;
  std::vector<std::vector<int>> perms_;
  std::vector<std::vector<int>> positions_;
};

}  // namespace

int default_threads() {
  if (const char* env = std::getenv("CINFTY_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

QuadratureRule grundmann_moeller(int k, int degree) {
  if (k < 1) throw DimensionError("quadrature needs dimension >= 1");
  if (degree < 1 || degree % 2 == 0) throw PreconditionError("Grundmann-Möller degree must be odd and positive");
  const int s = (degree - 1) / 2;
  const int d = degree;
  QuadratureRule rule;
  rule.dimension = k;
  rule.degree = degree;
  for (int i = 0; i <= s; ++i) {
    const double denom = d + k - 2 * i;
    const double w = (i % 2 == 0 ? 1.0 : -1.0) * std::ldexp(1.0, -2 * s) * std::pow(denom, d) /
                     (factorial(i) * factorial(d + k - i));
    std::vector<std::vector<int>> betas;
    std::vector<int> cur;
    compositions(k + 1, s - i, cur, betas);
    for (const auto& beta : betas) {
      std::vector<double> pt;
      for (int j = 1; j <= k; ++j) pt.push_back((2.0 * beta[static_cast<std::size_t>(j)] + 1.0) / denom);
      rule.points.push_back(std::move(pt));
      rule.weights.push_back(w);
    }
  }
  return rule;
}

std::vector<std::vector<std::vector<double>>> subdivision_cells(int k, int m) {
  if (k < 1 || m < 1) throw DimensionError("subdivision needs k >= 1 and m >= 1");
  CellWalker walker(k, m);
  std::vector<std::vector<std::vector<double>>> out;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::vector<std::vector<double>> verts(static_cast<std::size_t>(k) + 1, std::vector<double>(static_cast<std::size_t>(k)));
  for (long i = 0; i < walker.corner_count(); ++i) {
    walker.cells_at(i, c, verts, [&](const auto& v) { out.push_back(v); });
  }
  return out;
}

double integrate_subdivided(const Integrand& f, const QuadratureRule& rule, int m, int threads) {
  const int k = rule.dimension;
  const CellWalker walker(k, m);
  const long corners = walker.corner_count();
  const long chunk_count = std::min<long>(corners, 256);
  std::vector<double> chunk_sums(static_cast<std::size_t>(chunk_count), 0.0);
  std::atomic<long> next{0};

  auto work = [&] {
    std::vector<int> c(static_cast<std::size_t>(k));
    std::vector<std::vector<double>> verts(static_cast<std::size_t>(k) + 1, std::vector<double>(static_cast<std::size_t>(k)));
    std::vector<double> x(static_cast<std::size_t>(k));
    for (long chunk = next++; chunk < chunk_count; chunk = next++) {
      const long begin = corners * chunk / chunk_count, end = corners * (chunk + 1) / chunk_count;
      double sum = 0.0;
      for (long i = begin; i < end; ++i) {
        walker.cells_at(i, c, verts, [&](const std::vector<std::vector<double>>& v) {
          double cell = 0.0;
          for (std::size_t q = 0; q < rule.points.size(); ++q) {
            for (int a = 0; a < k; ++a) {
              double xa = v[0][static_cast<std::size_t>(a)];
              for (int j = 0; j < k; ++j) {
                xa += rule.points[q][static_cast<std::size_t>(j)] *
                      (v[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(a)] - v[0][static_cast<std::size_t>(a)]);
              }
              x[static_cast<std::size_t>(a)] = xa;
            }
            cell += rule.weights[q] * f(x);
          }
          sum += cell;
        });
      }
      chunk_sums[static_cast<std::size_t>(chunk)] = sum;
    }
  };

  const int workers = static_cast<int>(std::min<long>(threads > 0 ? threads : default_threads(), chunk_count));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  double total = 0.0;
  for (double v : chunk_sums) total += v;
  return total / static_cast<double>(corners);
}

QuadratureResult integrate_simplex(const Integrand& f, int k, const QuadratureConfig& config) {
  QuadratureResult out;
  if (k == 0) {
    out.value = f({});
    out.converged = true;
    return out;
  }
  const QuadratureRule rule = grundmann_moeller(k, config.degree);
  double prev = integrate_subdivided(f, rule, 1, config.threads);
  out.value = prev;
  out.error_estimate = std::numeric_limits<double>::infinity();
  // Halving the cell size divides the error of a degree-p rule by about
  // 2^(p+1) once the asymptotic regime is reached.
  const double gain = std::ldexp(1.0, config.degree + 1) - 1.0;
  double prev_diff = -1.0;
  for (int level = 1; level <= config.max_levels; ++level) {
    const int m = 1 << level;
    if (ipow(m, k) > config.max_cells) break;
    const double cur = integrate_subdivided(f, rule, m, config.threads);
    const double diff = std::abs(cur - prev);
    const bool asymptotic = prev_diff >= 0.0 && diff * 16.0 <= prev_diff;
    out.value = cur;
    out.subdivisions = m;
    out.error_estimate = asymptotic ? diff / gain : diff;
    if (out.error_estimate <= config.tolerance * (1.0 + std::abs(cur))) {
      out.converged = true;
      return out;
    }
    prev = cur;
    prev_diff = diff;
  }
  return out;
}

}  // namespace cinfty
