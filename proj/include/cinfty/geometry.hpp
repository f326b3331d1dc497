#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "cinfty/cring.hpp"

namespace cinfty {

using Point = std::vector<double>;

/// The zero set of a ring presentation inside a box, carrying the induced
/// differential structure (restrictions of ambient smooth functions). The set
/// is known through a seeded, write-once sample cache.
class DiffSpace {
 public:
  DiffSpace(Ring ring, Box box, std::uint64_t seed, int sample_count);

  const Ring& ring() const { return ring_; }
  int n() const { return ring_->n(); }
  const Box& box() const { return box_; }
  std::uint64_t seed() const { return seed_; }
  double tolerance() const { return ring_->oracle().tolerance; }
  /// Throws SamplingFailed when the carrier looks empty.
  const std::vector<Point>& samples() const;

 private:
  Ring ring_;
  Box box_;
  std::uint64_t seed_;
  int sample_count_;
  mutable std::once_flag once_;
  mutable std::vector<Point> samples_;
};

using Space = std::shared_ptr<const DiffSpace>;

/// box defaults to the ring's oracle box and seed to the oracle seed.
Space make_space(const Ring& ring, Box box = {}, std::optional<std::uint64_t> seed = std::nullopt,
                 int sample_count = 200);

/// {p : h(p) > 0 for every h}, intersected with the carrier. The empty list
/// is the whole space.
struct BasicOpen {
  std::vector<SmoothExpr> positivity;

  bool contains(const Point& p) const;
};

/// A finite union of basic opens. A default-constructed OpenSet is empty;
/// whole_space() is the union containing the unconstrained basic open.
struct OpenSet {
  std::vector<BasicOpen> parts;

  bool contains(const Point& p) const;
};

OpenSet whole_space();
OpenSet open_set(BasicOpen b);
OpenSet intersect(const OpenSet& a, const OpenSet& b);
OpenSet unite(const OpenSet& a, const OpenSet& b);
/// Sample points of the space lying in u.
std::vector<Point> points_in(const DiffSpace& space, const OpenSet& u);

/// A section of the structure sheaf over an open: the restriction of an
/// ambient smooth function.
struct Section {
  Space space;
  OpenSet open;
  SmoothExpr rep;
  bool degenerate = false;  // the open contains no sample point

  double operator()(const Point& p) const { return evaluate(rep, p); }
};

Section section(const Space& space, OpenSet open, SmoothExpr rep);

struct NotSubset : Error {
  explicit NotSubset(Point p) : Error("open is not contained in the section's domain"), witness(std::move(p)) {}
  Point witness;
};

/// Same representative on a smaller open. Inclusion is checked on samples.
Section presheaf_restrict(const Section& s, const OpenSet& v);

struct IncompatibleFamily : Error {
  IncompatibleFamily(Point p, int a, int b, double gap)
      : Error("sections " + std::to_string(a) + " and " + std::to_string(b) + " disagree by " + std::to_string(gap)),
        witness(std::move(p)),
        first(a),
        second(b),
        disagreement(gap) {}
  Point witness;
  int first, second;  // 0-based positions in the family
  double disagreement;
};

struct GlueResult {
  Section section;
  double max_overlap_disagreement = 0.0;
  double max_blend_error = 0.0;  // max over i and samples of U_i of |glued - s_i|
};

/// Glues sections s_i on basic opens U_i (each s_i.open must be a single
/// basic open) into a section on their union, blending with the partition of
/// unity w_i / sum_j w_j where w_i = prod_l rho0(2 - h_il / delta). Pairwise
/// agreement on overlap samples is checked with tolerance `tol`.
GlueResult glue(const std::vector<Section>& family, double tol = 1e-9);

/// A bump function in n variables: 1 on the ball B(x, r_in), 0 outside
/// B(x, r_out), values in [0, 1]. Every point of `closed` must have distance
/// >= r_out from x (PreconditionError otherwise).
SmoothExpr bump(int n, const std::vector<Point>& closed, const Point& x, double r_in, double r_out);

/// Germ of a section at a point of its open.
struct GermRep {
  Section section;
  Point point;
};

GermRep germ(const Section& s, Point x);

/// Inverse germ zeta(g) on V = {|g - a| < |a|/2}, a = g(x), where zeta is a
/// positive (for a > 0) smooth modification of 1/t that agrees with it on
/// (a/2, 3a/2). Throws DomainError when g(x) = 0.
GermRep germ_invert(const GermRep& g);

/// Points of the space near x: samples and locally projected points within
/// `radius`, restricted to `u`.
std::vector<Point> neighborhood_points(const DiffSpace& space, const Point& x, double radius, const OpenSet& u,
                                       int count = 24);

/// Germ equality by agreement on neighbourhood samples for radii 1/2, 1/4, ..., 1/16.
Verdict germ_equal(const GermRep& a, const GermRep& b, double tol = 1e-9);

/// A morphism of ringed spaces between zero-set spaces given by ambient
/// component expressions (over the source variables). Its comorphism pulls
/// sections back by composition, f_#(h) = h o f.
class RingedMap {
 public:
  RingedMap(Space source, Space target, std::vector<SmoothExpr> components, RingHom comorphism)
      : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)),
        comorphism_(std::move(comorphism)) {}

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  const std::vector<SmoothExpr>& components() const { return components_; }
  const RingHom& comorphism() const { return comorphism_; }

  Point operator()(const Point& p) const;
  OpenSet preimage(const OpenSet& u) const;
  Section pull(const Section& s) const;
  /// The stalk map at q: the germ of s at f(q) goes to the germ of s o f at q.
  GermRep pull(const GermRep& g, const Point& q) const;

 private:
  Space source_, target_;
  std::vector<SmoothExpr> components_;
  RingHom comorphism_;
};

struct OffZeroSet : Error {
  explicit OffZeroSet(Point p) : Error("map sends a sample point off the target zero set"), witness(std::move(p)) {}
  Point witness;  // source point
};

/// Checks that source samples land on the target zero set (OffZeroSet) and
/// that the target generators pull back into the source ideal (IllDefinedHom).
RingedMap ringed_map(std::vector<SmoothExpr> components, const Space& source, const Space& target);

RingedMap identity_map(const Space& space);

/// g after f.
RingedMap compose(const RingedMap& g, const RingedMap& f);

}  // namespace cinfty
