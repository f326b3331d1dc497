#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace cinfty {

using Rational = mpq_class;

/// Dense exponent vector; entry i is the power of x_{i+1}.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);

/// Graded-lex order, largest monomial first (x1 > x2 > ... within a degree).
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// All exponent vectors in n variables of total degree <= max_degree, in grlex order.
std::vector<Exponents> monomials_up_to(int n, int max_degree);

/// Multivariate polynomial over the rationals. Zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Exponents, Rational, GrlexGreater>;

  explicit Poly(int nvars = 0) : n_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);  // index is 1-based
  static Poly monomial(int nvars, const Exponents& e, const Rational& c);

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial

  const Exponents& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Exponents& e, const Rational& c);
  Poly mul_term(const Exponents& e, const Rational& c) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  std::string to_string() const;

 private:
  int n_;
  Terms terms_;
};

}  // namespace cinfty
