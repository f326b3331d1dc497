#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cinfty/derham.hpp"
#include "cinfty/geometry.hpp"
#include "cinfty/quadrature.hpp"

namespace cinfty {

/// The free ring C∞(R^k) in the chart coordinates t_1..t_k of the standard
/// simplex {t_i >= 0, sum t_i <= 1}. One shared presentation per k.
const Ring& chart_ring(int k);

/// A smooth map from the k-simplex into the zero set of `target`, given by
/// component expressions in t_1..t_k (normalized).
class SimplexMap {
 public:
  SimplexMap(int k, Ring target, std::vector<SmoothExpr> components);

  int dimension() const { return k_; }
  const Ring& target() const { return target_; }
  const std::vector<SmoothExpr>& components() const { return components_; }

  std::vector<double> operator()(std::span<const double> t) const;
  /// Comorphism C -> C∞(R^k), x_i |-> sigma_i.
  RingHom comorphism() const;

  friend bool operator==(const SimplexMap& a, const SimplexMap& b);

 private:
  int k_;
  Ring target_;
  std::vector<SmoothExpr> components_;
};

/// Builds a simplex map and checks on the vertices, the barycenter and seeded
/// random points of the simplex that the generators vanish along it (within
/// the target's oracle tolerance). Throws OffZeroSet with the chart point.
SimplexMap simplex_map(int k, const Ring& target, std::vector<SmoothExpr> components);

/// t |-> t into C∞(R^k).
SimplexMap identity_simplex(int k);

/// The i-th face Δ^{k-1} -> Δ^k, 0 <= i <= k, in chart coordinates. It
/// omits the i-th vertex, where the vertices are v_0 = 0 and v_j = e_j:
/// d_0(u) = (1 - sum u, u_1, ..., u_{k-1}) and, for i >= 1, d_i inserts 0 at
/// position i.
SimplexMap face_map(int k, int i);

/// sigma after tau, where tau maps into the chart ring of sigma's dimension.
SimplexMap precompose(const SimplexMap& sigma, const SimplexMap& tau);

/// A formal real combination of simplex maps of one dimension. Terms with
/// identical maps are merged and zero coefficients dropped.
class Chain {
 public:
  explicit Chain(int k) : k_(k) {}
  Chain(const SimplexMap& sigma, double coefficient = 1.0);

  int dimension() const { return k_; }
  const std::vector<std::pair<double, SimplexMap>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(double coefficient, const SimplexMap& sigma);

  friend Chain operator+(const Chain& a, const Chain& b);
  friend Chain operator*(double c, const Chain& a);

 private:
  int k_;
  std::vector<std::pair<double, SimplexMap>> terms_;
};

/// sum_i (-1)^i sigma o d_i over the terms. Throws DimensionError for 0-chains.
Chain boundary(const Chain& c);

/// sigma^* alpha as a form over chart_ring(k). A degree above k gives the zero form.
Form pullback_to_simplex(const SimplexMap& sigma, const Form& alpha);

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// sum of coefficient times the quadrature of the dt_1^...^dt_k density of
/// sigma^* alpha. Throws DimensionError when deg alpha differs from the chain
/// dimension and NotConverged when refinement stalls above the tolerance.
IntegralResult integrate(const Chain& c, const Form& alpha, const QuadratureConfig& config = {});

struct StokesReport {
  double lhs = 0.0;  // integral of d(gamma) over sigma
  double rhs = 0.0;  // integral of gamma over the boundary of sigma
  double lhs_error = 0.0;
  double rhs_error = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Throws DimensionError unless deg gamma = dim sigma - 1. Quadrature only has
/// to resolve the residual, so its tolerance is relaxed to at least tol / 1000.
StokesReport stokes_check(const SimplexMap& sigma, const Form& gamma, double tol = 1e-6,
                          const QuadratureConfig& config = {});

std::string to_string(const SimplexMap& sigma);

}  // namespace cinfty
