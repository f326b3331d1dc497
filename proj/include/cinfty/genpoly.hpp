#pragma once

#include <map>
#include <span>
#include <vector>

#include "cinfty/expr.hpp"
#include "cinfty/poly.hpp"

namespace cinfty {

/// A power of an atom. Atoms are variables and transcendental heads
/// (pi, recip, sin, cos, exp, rho0) whose arguments are in normal form.
struct Factor {
  SmoothExpr atom;
  int exponent = 1;
};

/// Product of factors, sorted by atom with no repeated atom.
using Monomial = std::vector<Factor>;

/// Total degree descending, then lexicographic by atom.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Generalized polynomial: a rational linear combination of monomials over
/// atoms. This is the normal-form carrier behind normalize().
class GenPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  GenPoly() = default;
  static GenPoly constant(const Rational& c);
  static GenPoly atom(const SmoothExpr& a);
  static GenPoly from_poly(const Poly& p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // valid when is_constant()
  bool is_polynomial() const;       // every atom is a variable
  int max_variable() const;

  void add_term(const Monomial& m, const Rational& c);

  GenPoly& operator+=(const GenPoly& o);
  GenPoly& operator-=(const GenPoly& o);
  GenPoly& operator*=(const Rational& c);
  friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
  friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator*(GenPoly a, const Rational& c) { return a *= c; }
  GenPoly pow(int k) const;
  friend bool operator==(const GenPoly& a, const GenPoly& b);

  /// Requires is_polynomial() and max_variable() <= n.
  Poly to_poly(int n) const;
  SmoothExpr to_expr() const;

 private:
  Terms terms_;
};

/// Normal form of e as a generalized polynomial.
GenPoly to_genpoly(const SmoothExpr& e);

/// Normal form of e with variable x_i replaced by args[i-1].
GenPoly substitute(const SmoothExpr& e, std::span<const GenPoly> args);

/// Splits a monomial into its variable exponents (over n variables) and its
/// transcendental part.
std::pair<Exponents, Monomial> split_monomial(const Monomial& m, int n);

/// Partial derivative with respect to x_i as a generalized polynomial.
GenPoly partial_genpoly(const SmoothExpr& e, int i);

}  // namespace cinfty
