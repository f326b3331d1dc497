#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cinfty/cring.hpp"

namespace cinfty {

/// The module of Kähler differentials of C = C∞(R^n)/<g_1..g_k>: the free
/// module on dx_1..dx_n modulo the rows dg_j = sum_i (d_i g_j) dx_i.
///
/// Only the generator differentials are needed as relations. The kernel
/// submodule is spanned by C*dI, and for h in C∞(R^n) we have
/// d(h g_j) = h dg_j + g_j dh with g_j dh = 0 modulo I.
struct KaehlerPresentation {
  Ring ring;
  ModulePresentation module;

  int n() const { return ring->n(); }
};

KaehlerPresentation kaehler_presentation(const Ring& ring);

/// sum_i coeffs[i-1] dx_i over a ring.
struct OneForm {
  Ring ring;
  std::vector<RingElement> coeffs;
};

OneForm one_form(const Ring& ring, std::vector<RingElement> coeffs);
OneForm dx(const Ring& ring, int i);
OneForm operator+(const OneForm& a, const OneForm& b);
OneForm operator-(const OneForm& a, const OneForm& b);
OneForm operator*(const RingElement& f, const OneForm& a);

/// The universal derivation: d0(a) = sum_i (d_i a) dx_i.
OneForm d0(const RingElement& a);

/// Decides whether omega lies in the relation submodule J, with polynomial
/// cofactors of degree <= degree_bound. Non-membership is reported as
/// NotMemberUpToDegree (or ProvedUnequal over the free ring).
Verdict oneform_member_J(const OneForm& omega, int degree_bound = 6);
Verdict oneform_equal(const OneForm& a, const OneForm& b, int degree_bound = 6);

/// Lambda^1(phi): dx_i -> d0(phi(x_i)), extended linearly over phi.
class KaehlerMap {
 public:
  explicit KaehlerMap(RingHom phi) : phi_(std::move(phi)) {}
  const RingHom& hom() const { return phi_; }
  OneForm operator()(const OneForm& omega) const;

 private:
  RingHom phi_;
};

KaehlerMap lambda1(const RingHom& phi);

/// A derivation V = sum_i a_i d_i of the ambient ring that is tangent to the
/// ideal: V(g_j) is in I for every generator, with the verdicts kept.
struct Derivation {
  Ring ring;
  std::vector<RingElement> coeffs;
  std::vector<Verdict> certificates;
};

struct NotTangent : Error {
  NotTangent(int generator_index, Verdict v)
      : Error("derivation is not tangent to generator " + std::to_string(generator_index) + " (" +
              to_string(v.kind) + ")"),
        generator(generator_index),
        verdict(std::move(v)) {}
  int generator;  // 1-based
  Verdict verdict;
};

/// Checks tangency of every generator with ideal_member and throws NotTangent
/// unless each verdict holds().
Derivation derivation(const Ring& ring, std::vector<RingElement> coeffs, int degree_bound = 6);

/// The coordinate derivation d_i of the free ring.
Derivation coordinate_derivation(const Ring& ring, int i);

RingElement derivation_apply(const Derivation& v, const RingElement& a);

/// iota_v(sum f_i dx_i) = sum f_i a_i.
RingElement contract(const Derivation& v, const OneForm& omega);

/// Basis of the tangent derivations whose coefficients are combinations of
/// standard monomials (modulo the Gröbner basis) of degree <= degree_bound.
/// Requires a polynomial presentation.
std::vector<Derivation> enumerate_tangent_derivations(const Ring& ring, int degree_bound = 4);

/// Result of probing psi(omega) = (v -> iota_v omega) on enumerated tangent
/// derivations. A witness of non-injectivity is a form outside J whose
/// contractions all land in I; with no derivations checked there is none.
struct PsiReport {
  std::vector<std::string> omega;
  Verdict in_J;
  int derivations_checked = 0;
  bool all_contractions_in_I = true;
  int degree_bound = 0;
  std::uint64_t seed = 0;
  std::vector<Verdict> contractions;

  bool witness() const { return in_J.refutes() && all_contractions_in_I && derivations_checked > 0; }
};

PsiReport psi_noninjectivity_report(const OneForm& omega, int degree_bound = 4);

std::string to_string(const OneForm& omega);

}  // namespace cinfty
