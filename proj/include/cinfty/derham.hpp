#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cinfty/kaehler.hpp"

namespace cinfty {

/// Strictly increasing 1-based indices i_1 < ... < i_k, standing for
/// dx_{i_1} ^ ... ^ dx_{i_k}.
using MultiIndex = std::vector<int>;

/// A homogeneous differential form sum_I f_I dx_I of degree k over a ring.
/// Coefficients are reduced in the ring; the relations coming from the
/// Kähler module are only used by form_equal. Forms of degree k > n are zero.
class Form {
 public:
  using Terms = std::map<MultiIndex, RingElement>;

  Form(Ring ring, int degree) : ring_(std::move(ring)), degree_(degree) {}

  const Ring& ring() const { return ring_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero_rep() const { return terms_.empty(); }
  /// Coefficient of dx_I (zero when absent).
  RingElement coefficient(const MultiIndex& index) const;

  /// Adds c dx_{indices} with indices in any order; repeated indices give zero
  /// and a permutation contributes its sign.
  void add_term(std::vector<int> indices, const RingElement& c);

  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  friend Form operator*(const RingElement& f, const Form& a);
  Form operator-() const;

 private:
  Ring ring_;
  int degree_;
  Terms terms_;
};

Form zero_form(const Ring& ring, int degree);
/// The degree-0 form given by a ring element.
Form function_form(const RingElement& f);
/// dx_{indices} (any order, sign of the sorting permutation applied).
Form basis_form(const Ring& ring, std::vector<int> indices);
Form from_one_form(const OneForm& omega);
OneForm to_one_form(const Form& alpha);

/// Parses a form literal such as "x2 * dx1^dx3 - sin(x1) * dx2^dx3" over the
/// ring's variables. All summands must have the same degree.
Form parse_form(std::string_view text, const Ring& ring);

Form wedge(const Form& a, const Form& b);
/// Exterior derivative: d(sum f_I dx_I) = sum d0(f_I) ^ dx_I.
Form d(const Form& a);
/// Lambda(phi)(sum f_I dx_I) = sum phi(f_I) d0(phi(x_{i_1})) ^ ... ^ d0(phi(x_{i_k})).
Form pullback(const RingHom& phi, const Form& a);
/// Interior product with a derivation, an antiderivation of degree -1.
Form interior(const Derivation& v, const Form& a);

/// Presentation of the degree-k forms as a module: rank C(n, k) on the
/// multi-indices in lexicographic order, relations dg_j ^ dx_K for |K| = k - 1.
ModulePresentation form_module(const Ring& ring, int degree);
std::vector<MultiIndex> multi_indices(int n, int k);

/// Equality modulo the degree-k relation submodule with polynomial cofactors
/// of degree <= degree_bound. When this is not conclusive, a - b is contracted
/// with k-tuples of enumerated tangent derivations; a contraction that is
/// nonzero in the ring refutes equality.
Verdict form_equal(const Form& a, const Form& b, int degree_bound = 6);

/// Canonical text in the form-literal grammar; "0" for the zero form.
std::string to_string(const Form& a);

}  // namespace cinfty
