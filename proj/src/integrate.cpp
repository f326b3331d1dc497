#include "cinfty/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>

#include "cinfty/geometry.hpp"

namespace cinfty {

namespace {

std::vector<std::vector<double>> probe_points(int k, std::uint64_t seed) {
  std::vector<std::vector<double>> out;
  out.emplace_back(static_cast<std::size_t>(k), 0.0);
  for (int j = 0; j < k; ++j) {
    std::vector<double> v(static_cast<std::size_t>(k), 0.0);
    v[static_cast<std::size_t>(j)] = 1.0;
    out.push_back(std::move(v));
  }
  out.emplace_back(static_cast<std::size_t>(k), 1.0 / (k + 1));
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  for (int r = 0; r < 20 && k > 0; ++r) {
    // Uniform on the simplex: normalized exponentials, dropping the last.
    std::vector<double> e(static_cast<std::size_t>(k) + 1);
    double sum = 0.0;
    for (double& x : e) sum += (x = expo(rng));
    e.pop_back();
    for (double& x : e) x /= sum;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const Ring& chart_ring(int k) {
  static std::mutex mu;
  static std::map<int, Ring> rings;
  if (k < 0) throw DimensionError("negative simplex dimension");
  std::lock_guard lock(mu);
  auto it = rings.find(k);
  if (it == rings.end()) it = rings.emplace(k, free_ring(k)).first;
  return it->second;
}

SimplexMap::SimplexMap(int k, Ring target, std::vector<SmoothExpr> components)
    : k_(k), target_(std::move(target)), components_(std::move(components)) {
  if (k_ < 0) throw DimensionError("negative simplex dimension");
  if (components_.size() != static_cast<std::size_t>(target_->n())) {
    throw DimensionError("simplex map needs one component per target variable");
  }
  for (SmoothExpr& c : components_) {
    if (max_variable(c) > k_) throw IndexError("simplex map component uses a variable beyond t" + std::to_string(k_));
    c = normalize(c);
  }
}

std::vector<double> SimplexMap::operator()(std::span<const double> t) const {
  if (t.size() != static_cast<std::size_t>(k_)) throw DimensionError("chart point has the wrong dimension");
  std::vector<double> out;
  for (const SmoothExpr& c : components_) out.push_back(evaluate(c, t));
  return out;
}

RingHom SimplexMap::comorphism() const {
  const Ring& chart = chart_ring(k_);
  std::vector<RingElement> images;
  for (const SmoothExpr& c : components_) images.push_back(element(chart, c));
  return RingHom(target_, chart, std::move(images));
}

bool operator==(const SimplexMap& a, const SimplexMap& b) {
  if (a.k_ != b.k_ || a.target_ != b.target_) return false;
  for (std::size_t i = 0; i < a.components_.size(); ++i) {
    if (!(a.components_[i] == b.components_[i])) return false;
  }
  return true;
}

SimplexMap simplex_map(int k, const Ring& target, std::vector<SmoothExpr> components) {
  SimplexMap sigma(k, target, std::move(components));
  const double tol = target->oracle().tolerance;
  for (const auto& t : probe_points(k, target->oracle().seed)) {
    const std::vector<double> x = sigma(t);
    double scale = 1.0;
    for (double v : x) scale = std::max(scale, std::abs(v));
    for (const SmoothExpr& g : target->generators()) {
      if (!(std::abs(evaluate(g, x)) <= tol * scale)) throw OffZeroSet(t);
    }
  }
  return sigma;
}

SimplexMap identity_simplex(int k) {
  std::vector<SmoothExpr> c;
  for (int i = 1; i <= k; ++i) c.push_back(SmoothExpr::var(i));
  return SimplexMap(k, chart_ring(k), std::move(c));
}

SimplexMap face_map(int k, int i) {
  if (k < 1) throw DimensionError("face maps need k >= 1");
  if (i < 0 || i > k) throw IndexError("face index " + std::to_string(i) + " outside 0.." + std::to_string(k));
  std::vector<SmoothExpr> c;
  if (i == 0) {
    SmoothExpr first = SmoothExpr::constant(1);
    for (int j = 1; j < k; ++j) first = first - SmoothExpr::var(j);
    c.push_back(first);
    for (int j = 1; j < k; ++j) c.push_back(SmoothExpr::var(j));
  } else {
    for (int j = 1; j < i; ++j) c.push_back(SmoothExpr::var(j));
    c.push_back(SmoothExpr::constant(0));
    for (int j = i; j < k; ++j) c.push_back(SmoothExpr::var(j));
  }
  return SimplexMap(k - 1, chart_ring(k), std::move(c));
}

SimplexMap precompose(const SimplexMap& sigma, const SimplexMap& tau) {
  if (tau.target() != chart_ring(sigma.dimension())) {
    throw PresentationMismatch("inner simplex map must land in the chart of the outer one");
  }
  std::vector<SmoothExpr> c;
  for (const SmoothExpr& s : sigma.components()) c.push_back(compose(s, tau.components()));
  return SimplexMap(tau.dimension(), sigma.target(), std::move(c));
}

Chain::Chain(const SimplexMap& sigma, double coefficient) : k_(sigma.dimension()) { add(coefficient, sigma); }

void Chain::add(double coefficient, const SimplexMap& sigma) {
  if (sigma.dimension() != k_) throw DimensionError("chain terms must share one dimension");
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->second == sigma) {
      it->first += coefficient;
      if (it->first == 0.0) terms_.erase(it);
      return;
    }
  }
  if (coefficient != 0.0) terms_.emplace_back(coefficient, sigma);
}

Chain operator+(const Chain& a, const Chain& b) {
  if (a.k_ != b.k_) throw DimensionError("adding chains of different dimension");
  Chain out = a;
  for (const auto& [c, s] : b.terms_) out.add(c, s);
  return out;
}

Chain operator*(double c, const Chain& a) {
  Chain out(a.k_);
  for (const auto& [coef, s] : a.terms_) out.add(c * coef, s);
  return out;
}

Chain boundary(const Chain& c) {
  const int k = c.dimension();
  if (k < 1) throw DimensionError("boundary of a 0-chain");
  Chain out(k - 1);
  for (const auto& [coef, sigma] : c.terms()) {
    for (int i = 0; i <= k; ++i) out.add(i % 2 == 0 ? coef : -coef, precompose(sigma, face_map(k, i)));
  }
  return out;
}

Form pullback_to_simplex(const SimplexMap& sigma, const Form& alpha) {
  require_same_ring(alpha.ring(), sigma.target());
  if (alpha.degree() > sigma.dimension()) return zero_form(chart_ring(sigma.dimension()), alpha.degree());
  return pullback(sigma.comorphism(), alpha);
}

IntegralResult integrate(const Chain& c, const Form& alpha, const QuadratureConfig& config) {
  const int k = c.dimension();
  if (alpha.degree() != k) {
    throw DimensionError("integrating a " + std::to_string(alpha.degree()) + "-form over a " + std::to_string(k) +
                         "-chain");
  }
  MultiIndex top;
  for (int i = 1; i <= k; ++i) top.push_back(i);
  IntegralResult out;
  for (const auto& [coef, sigma] : c.terms()) {
    const SmoothExpr density = pullback_to_simplex(sigma, alpha).coefficient(top).rep();
    if (density.is_zero()) continue;
    const QuadratureResult q =
        integrate_simplex([&](std::span<const double> t) { return evaluate(density, t); }, k, config);
    if (!q.converged) throw NotConverged(q.error_estimate, q.subdivisions);
    out.value += coef * q.value;
    out.error_estimate += std::abs(coef) * q.error_estimate;
  }
  return out;
}

StokesReport stokes_check(const SimplexMap& sigma, const Form& gamma, double tol, const QuadratureConfig& config) {
  if (gamma.degree() != sigma.dimension() - 1) {
    throw DimensionError("Stokes check needs a form of degree " + std::to_string(sigma.dimension() - 1));
  }
  QuadratureConfig q = config;
  q.tolerance = std::max(q.tolerance, tol * 1e-3);
  const Chain c(sigma);
  const IntegralResult lhs = integrate(c, d(gamma), q);
  const IntegralResult rhs = integrate(boundary(c), gamma, q);
  StokesReport r;
  r.lhs = lhs.value;
  r.rhs = rhs.value;
  r.lhs_error = lhs.error_estimate;
  r.rhs_error = rhs.error_estimate;
  r.residual = std::abs(lhs.value - rhs.value);
  r.tolerance = tol;
  r.pass = r.residual <= tol;
  return r;
}

std::string to_string(const SimplexMap& sigma) {
  std::string out;
  for (const SmoothExpr& c : sigma.components()) out += (out.empty() ? "" : ",") + to_string(c, 't');
  return out;
}

}  // namespace cinfty
