#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cinfty/error.hpp"
#include "cinfty/expr.hpp"
#include "cinfty/genpoly.hpp"
#include "cinfty/poly.hpp"

namespace cinfty {

using Box = std::vector<std::pair<double, double>>;

/// Settings of the equality oracle of a ring presentation.
struct OracleConfig {
  int degree_bound = 8;      // cofactor degree for ideal membership solves
  int samples = 32;          // zero-set points used by sampling verdicts
  double tolerance = 1e-9;   // |a(p) - b(p)| threshold, scaled by 1 + |a(p)| + |b(p)|
  Box box;                   // sampling region; empty means [-2, 2]^n
  std::uint64_t seed = 20240229;
};

/// Three-valued (plus degree-stamped) answer of an equality question.
struct Verdict {
  enum class Kind {
    ProvedEqual,
    ProvedUnequal,
    NumericallyEqual,
    NumericallyUnequal,
    NotMemberUpToDegree,
    Unknown,
  };

  Kind kind = Kind::Unknown;
  std::string reason;
  std::vector<double> witness;        // point where the difference is nonzero
  double max_abs_diff = 0.0;          // over the sampled points
  int samples = 0;
  std::uint64_t seed = 0;
  int degree_bound = -1;              // for degree-bounded solves
  std::vector<SmoothExpr> cofactors;  // membership certificate, when one was found

  /// ProvedEqual or NumericallyEqual.
  bool holds() const { return kind == Kind::ProvedEqual || kind == Kind::NumericallyEqual; }
  /// ProvedUnequal, NumericallyUnequal or NotMemberUpToDegree.
  bool refutes() const {
    return kind == Kind::ProvedUnequal || kind == Kind::NumericallyUnequal || kind == Kind::NotMemberUpToDegree;
  }
};

std::string to_string(Verdict::Kind kind);

/// Combines per-component verdicts: any refutation wins, then Unknown, then
/// numeric, then proved.
Verdict combine(std::span<const Verdict> parts);

class RingPresentation;
using Ring = std::shared_ptr<const RingPresentation>;

/// A finitely generated C∞-ring C∞(R^n)/<g_1..g_k>. Immutable; the Gröbner
/// basis and the Jacobian rows are computed at construction and the zero-set
/// sample cache is filled once on first use.
class RingPresentation {
 public:
  RingPresentation(int n, std::vector<SmoothExpr> gens, OracleConfig oracle);

  int n() const { return n_; }
  const std::vector<SmoothExpr>& generators() const { return gens_; }
  const OracleConfig& oracle() const { return oracle_; }
  Box box() const;

  bool is_free() const { return gens_.empty(); }
  /// Every generator is a polynomial, so reduction by the Gröbner basis is confluent.
  bool is_polynomial() const { return polynomial_; }
  const std::vector<Poly>& groebner() const { return basis_; }

  /// jacobian()[j][i-1] = partial of g_j with respect to x_i.
  const std::vector<std::vector<SmoothExpr>>& jacobian() const { return jacobian_; }

  /// Reduces the variable part of every transcendental group by the Gröbner
  /// basis. Sound for any input; canonical on polynomials.
  GenPoly reduce(const GenPoly& g) const;
  SmoothExpr reduce(const SmoothExpr& e) const { return reduce(to_genpoly(e)).to_expr(); }

  /// max_j |g_j(p)|.
  double residual(std::span<const double> p) const;

  /// Zero-set points for the default oracle settings (computed once).
  /// Throws SamplingFailed.
  const std::vector<std::vector<double>>& samples() const;

 private:
  int n_;
  std::vector<SmoothExpr> gens_;
  OracleConfig oracle_;
  bool polynomial_ = true;
  std::vector<Poly> basis_;
  std::vector<std::vector<SmoothExpr>> jacobian_;

  mutable std::once_flag samples_once_;
  mutable std::vector<std::vector<double>> samples_;
};

/// Validates the generators against n and builds the presentation.
Ring present_ring(int n, std::vector<SmoothExpr> gens, OracleConfig oracle = {});
inline Ring free_ring(int n, OracleConfig oracle = {}) { return present_ring(n, {}, std::move(oracle)); }

/// Element of a presented ring, stored by a reduced representative.
class RingElement {
 public:
  RingElement(Ring ring, const SmoothExpr& representative);
  RingElement(Ring ring, const GenPoly& representative);

  const Ring& ring() const { return ring_; }
  const SmoothExpr& rep() const { return rep_; }
  double evaluate(std::span<const double> p) const { return cinfty::evaluate(rep_, p); }
  bool is_zero_rep() const { return rep_.is_zero(); }

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const Rational& c, const RingElement& a);
  RingElement operator-() const;

 private:
  Ring ring_;
  SmoothExpr rep_;
};

RingElement element(const Ring& ring, const SmoothExpr& e);
RingElement coordinate(const Ring& ring, int i);
RingElement ring_constant(const Ring& ring, const Rational& c);

/// Throws PresentationMismatch unless both elements belong to the same presentation.
void require_same_ring(const Ring& a, const Ring& b);

/// g_R(elts): compose g (over m = elts.size() variables) with the representatives.
RingElement apply_op(const Ring& ring, const SmoothExpr& g, const std::vector<RingElement>& elts);

/// Equality in the ring. ProvedEqual from exact reduction or a cofactor
/// certificate; otherwise decided by evaluating a - b on zero-set samples.
Verdict equal(const RingElement& a, const RingElement& b);

/// Decides e in <g_1..g_k>. ProvedEqual carries cofactors h_j with
/// e = sum h_j g_j (polynomial in x of degree <= degree_bound, possibly times
/// transcendental atoms of e) whenever such cofactors exist.
Verdict ideal_member(const Ring& ring, const SmoothExpr& e, int degree_bound);

/// Points p in `box` with max_j |g_j(p)| <= 1e-10, by seeded random restarts
/// followed by damped Gauss-Newton projection. Throws SamplingFailed.
std::vector<std::vector<double>> sample_zero_set(const RingPresentation& ring, int count, const Box& box,
                                                 std::uint64_t seed);

/// Damped Gauss-Newton projection of `start` onto the zero set. Returns
/// nullopt when the iteration stalls above the residual target.
std::optional<std::vector<double>> project_to_zero_set(const RingPresentation& ring, std::vector<double> start);

/// Ring homomorphism determined by the images of the source coordinates.
class RingHom {
 public:
  RingHom(Ring source, Ring target, std::vector<RingElement> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  const std::vector<RingElement>& images() const { return images_; }

  RingElement operator()(const RingElement& a) const;
  /// Image of an ambient expression over the source variables.
  RingElement apply(const SmoothExpr& e) const;

 private:
  Ring source_, target_;
  std::vector<RingElement> images_;
};

struct IllDefinedHom : Error {
  // generator_index is 1-based.
  IllDefinedHom(int generator_index, Verdict v)
      : Error("generator " + std::to_string(generator_index) + " does not map to zero (" + to_string(v.kind) + ")"),
        generator(generator_index),
        verdict(std::move(v)) {}
  int generator;
  Verdict verdict;
};

/// Builds a hom and checks that every source generator maps to zero in the
/// target. Throws IllDefinedHom unless each check holds().
RingHom hom(Ring source, Ring target, std::vector<RingElement> images);
RingHom identity_hom(const Ring& ring);
/// g after f.
RingHom hom_compose(const RingHom& g, const RingHom& f);

/// Evaluation at an R-point of the zero set.
class RPoint {
 public:
  RPoint(Ring ring, std::vector<double> point) : ring_(std::move(ring)), point_(std::move(point)) {}
  double operator()(const RingElement& a) const;
  const std::vector<double>& point() const { return point_; }

 private:
  Ring ring_;
  std::vector<double> point_;
};

/// Throws DimensionError for a wrong dimension and PreconditionError when
/// some |g_j(p)| exceeds the oracle tolerance.
RPoint r_point(const Ring& ring, std::vector<double> p);

/// A finitely presented module: ring^rank modulo the submodule spanned by the
/// relation rows.
struct ModulePresentation {
  Ring ring;
  int rank = 0;
  std::vector<std::vector<RingElement>> relations;
};

using ModuleElement = std::vector<RingElement>;

ModulePresentation free_module(const Ring& ring, int rank);
ModuleElement zero_element(const ModulePresentation& m);

/// Decides v in the relation submodule (modulo the ideal in each component)
/// with polynomial cofactors of degree <= degree_bound. Infeasibility is
/// reported as NotMemberUpToDegree, or ProvedUnequal over the free ring with
/// no relations. Components with transcendental atoms are split by atom
/// monomial and each part is solved separately; a failure there gives Unknown.
Verdict module_member(const ModulePresentation& m, const ModuleElement& v, int degree_bound);
Verdict module_equal(const ModulePresentation& m, const ModuleElement& a, const ModuleElement& b, int degree_bound);

/// The square-zero extension C x M with operations
/// f((a_1,m_1),...,(a_k,m_k)) = (f(a), sum_i (d_i f)(a) m_i).
class SquareZeroRing {
 public:
  struct Element {
    RingElement a;
    ModuleElement m;
  };

  explicit SquareZeroRing(ModulePresentation module) : module_(std::move(module)) {}

  const ModulePresentation& module() const { return module_; }
  Element make(RingElement a, ModuleElement m) const;
  Element apply_op(const SmoothExpr& g, const std::vector<Element>& elts) const;
  Element multiply(const Element& x, const Element& y) const;
  Element unit() const;
  Verdict equal(const Element& x, const Element& y, int degree_bound = 6) const;

 private:
  ModulePresentation module_;
};

}  // namespace cinfty
