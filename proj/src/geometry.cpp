#include "cinfty/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cinfty/random_gen.hpp"

namespace cinfty {

namespace {

SmoothExpr real(double v) { return SmoothExpr::constant(Rational(v)); }

double distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Largest power of two not above v (v > 0), as an exact rational.
Rational power_of_two_below(double v) {
  int e = 0;
  std::frexp(v, &e);
  Rational r(1);
  if (e - 1 >= 0) {
    mpz_class num(1);
    num <<= static_cast<unsigned>(e - 1);
    r = num;
  } else {
    mpz_class den(1);
    den <<= static_cast<unsigned>(1 - e);
    r = Rational(1) / den;
  }
  return r;
}

// Smallest of the positivity values of a basic open at p (+inf for no constraints).
double margin(const BasicOpen& b, const Point& p) {
  double m = std::numeric_limits<double>::infinity();
  for (const SmoothExpr& h : b.positivity) m = std::min(m, evaluate(h, p));
  return m;
}

}  // namespace

DiffSpace::DiffSpace(Ring ring, Box box, std::uint64_t seed, int sample_count)
    : ring_(std::move(ring)), box_(std::move(box)), seed_(seed), sample_count_(sample_count) {
  if (box_.size() != static_cast<std::size_t>(ring_->n())) throw PreconditionError("space box has the wrong dimension");
}

const std::vector<Point>& DiffSpace::samples() const {
  std::call_once(once_, [this] { samples_ = sample_zero_set(*ring_, sample_count_, box_, seed_); });
  return samples_;
}

Space make_space(const Ring& ring, Box box, std::optional<std::uint64_t> seed, int sample_count) {
  if (box.empty()) box = ring->box();
  return std::make_shared<const DiffSpace>(ring, std::move(box), seed.value_or(ring->oracle().seed), sample_count);
}

bool BasicOpen::contains(const Point& p) const {
  return std::all_of(positivity.begin(), positivity.end(), [&](const SmoothExpr& h) { return evaluate(h, p) > 0.0; });
}

bool OpenSet::contains(const Point& p) const {
  return std::any_of(parts.begin(), parts.end(), [&](const BasicOpen& b) { return b.contains(p); });
}

OpenSet whole_space() { return OpenSet{{BasicOpen{}}}; }

OpenSet open_set(BasicOpen b) { return OpenSet{{std::move(b)}}; }

OpenSet intersect(const OpenSet& a, const OpenSet& b) {
  OpenSet out;
  for (const BasicOpen& x : a.parts) {
    for (const BasicOpen& y : b.parts) {
      BasicOpen both = x;
      both.positivity.insert(both.positivity.end(), y.positivity.begin(), y.positivity.end());
      out.parts.push_back(std::move(both));
    }
  }
  return out;
}

OpenSet unite(const OpenSet& a, const OpenSet& b) {
  OpenSet out = a;
  out.parts.insert(out.parts.end(), b.parts.begin(), b.parts.end());
  return out;
}

std::vector<Point> points_in(const DiffSpace& space, const OpenSet& u) {
  std::vector<Point> out;
  for (const Point& p : space.samples()) {
    if (u.contains(p)) out.push_back(p);
  }
  return out;
}

Section section(const Space& space, OpenSet open, SmoothExpr rep) {
  if (max_variable(rep) > space->n()) throw DimensionError("section uses a variable beyond the ambient dimension");
  for (const BasicOpen& b : open.parts) {
    for (const SmoothExpr& h : b.positivity) {
      if (max_variable(h) > space->n()) throw DimensionError("open uses a variable beyond the ambient dimension");
    }
  }
  Section s{space, std::move(open), std::move(rep)};
  s.degenerate = points_in(*space, s.open).empty();
  return s;
}

Section presheaf_restrict(const Section& s, const OpenSet& v) {
  for (const Point& p : points_in(*s.space, v)) {
    if (!s.open.contains(p)) throw NotSubset(p);
  }
  return section(s.space, v, s.rep);
}

GlueResult glue(const std::vector<Section>& family, double tol) {
  if (family.empty()) throw PreconditionError("cannot glue an empty family");
  const Space& space = family.front().space;
  for (const Section& s : family) {
    if (s.space != space) throw PresentationMismatch("sections live on different spaces");
    if (s.open.parts.size() != 1) throw PreconditionError("each glued section must live on a basic open");
  }
  GlueResult result{family.front()};
  const std::vector<Point>& pts = space->samples();
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      for (const Point& p : pts) {
        if (!family[i].open.contains(p) || !family[j].open.contains(p)) continue;
        const double a = family[i](p), b = family[j](p);
        const double gap = std::abs(a - b);
        if (gap > tol * (1.0 + std::abs(a))) {
          throw IncompatibleFamily(p, static_cast<int>(i), static_cast<int>(j), gap);
        }
        result.max_overlap_disagreement = std::max(result.max_overlap_disagreement, gap);
      }
    }
  }

  // delta is half the smallest best margin over the samples of the union, so
  // at every sample some weight equals 1.
  double worst = std::numeric_limits<double>::infinity();
  OpenSet all;
  for (const Section& s : family) all = unite(all, s.open);
  for (const Point& p : pts) {
    if (!all.contains(p)) continue;
    double best = 0.0;
    for (const Section& s : family) best = std::max(best, margin(s.open.parts[0], p));
    worst = std::min(worst, best);
  }
  const Rational delta =
      std::isfinite(worst) && worst > 0 ? power_of_two_below(0.5 * worst) : Rational(1);
  const SmoothExpr inv_delta = SmoothExpr::constant(1 / delta);

  std::vector<SmoothExpr> weights, weighted;
  for (const Section& s : family) {
    std::vector<SmoothExpr> factors;
    for (const SmoothExpr& h : s.open.parts[0].positivity) {
      factors.push_back(SmoothExpr::rho0(normalize(SmoothExpr::constant(2) - inv_delta * h)));
    }
    SmoothExpr w = factors.empty() ? SmoothExpr::constant(1) : SmoothExpr::mul(std::move(factors));
    weights.push_back(w);
    weighted.push_back(w * s.rep);
  }
  SmoothExpr glued = SmoothExpr::add(std::move(weighted)) * SmoothExpr::recip(SmoothExpr::add(std::move(weights)));
  result.section = section(space, all, glued);
  for (const Section& s : family) {
    for (const Point& p : pts) {
      if (!s.open.contains(p)) continue;
      result.max_blend_error = std::max(result.max_blend_error, std::abs(result.section(p) - s(p)));
    }
  }
  return result;
}

SmoothExpr bump(int n, const std::vector<Point>& closed, const Point& x, double r_in, double r_out) {
  if (x.size() != static_cast<std::size_t>(n)) throw DimensionError("bump center has the wrong dimension");
  if (!(0 < r_in && r_in < r_out)) throw PreconditionError("bump radii must satisfy 0 < r_in < r_out");
  for (const Point& c : closed) {
    if (c.size() != x.size()) throw DimensionError("closed-set point has the wrong dimension");
    if (distance(c, x) < r_out) throw PreconditionError("bump center is closer than r_out to the closed set");
  }
  std::vector<SmoothExpr> squares;
  for (int i = 0; i < n; ++i) {
    squares.push_back(SmoothExpr::pow(SmoothExpr::var(i + 1) - real(x[static_cast<std::size_t>(i)]), 2));
  }
  const Rational rin2 = Rational(r_in) * Rational(r_in);
  const Rational rout2 = Rational(r_out) * Rational(r_out);
  // argument is 1 on the inner sphere and 2 on the outer one
  SmoothExpr arg = SmoothExpr::constant(1) +
                   SmoothExpr::constant(1 / (rout2 - rin2)) * (SmoothExpr::add(std::move(squares)) - SmoothExpr::constant(rin2));
  return SmoothExpr::rho0(normalize(arg));
}

GermRep germ(const Section& s, Point x) {
  if (x.size() != static_cast<std::size_t>(s.space->n())) throw DimensionError("germ point has the wrong dimension");
  if (!s.open.contains(x)) throw PreconditionError("germ point lies outside the section's open");
  if (s.space->ring()->residual(x) > s.space->tolerance()) throw PreconditionError("germ point is off the zero set");
  return GermRep{s, std::move(x)};
}

GermRep germ_invert(const GermRep& g) {
  const double av = g.section(g.point);
  if (av == 0.0 || !std::isfinite(av)) throw DomainError("germ vanishes at its point");
  const Rational a(av);
  const Rational r_in = abs(a) / 2, r_out = 3 * abs(a) / 4;
  const SmoothExpr t = SmoothExpr::var(1);
  const SmoothExpr shift = t - SmoothExpr::constant(a);
  const SmoothExpr beta = SmoothExpr::rho0(normalize(
      SmoothExpr::constant(1) + SmoothExpr::constant(1 / (r_out * r_out - r_in * r_in)) *
                                    (SmoothExpr::pow(shift, 2) - SmoothExpr::constant(r_in * r_in))));
  // eta(t) = t near a and a convex combination of t and a (same sign) elsewhere
  const SmoothExpr eta = beta * t + (SmoothExpr::constant(1) - beta) * SmoothExpr::constant(a);
  const SmoothExpr zeta = SmoothExpr::recip(eta);
  BasicOpen near{{normalize(SmoothExpr::constant(r_in * r_in) -
                            SmoothExpr::pow(g.section.rep - SmoothExpr::constant(a), 2))}};
  Section inv = section(g.section.space, intersect(g.section.open, open_set(near)), compose(zeta, {g.section.rep}));
  return GermRep{std::move(inv), g.point};
}

std::vector<Point> neighborhood_points(const DiffSpace& space, const Point& x, double radius, const OpenSet& u,
                                       int count) {
  std::vector<Point> out;
  if (u.contains(x)) out.push_back(x);
  for (const Point& p : space.samples()) {
    if (distance(p, x) < radius && u.contains(p)) out.push_back(p);
  }
  gen::Rng rng(space.seed() ^ 0x9e3779b97f4a7c15ULL);
  const Ring& ring = space.ring();
  for (int attempt = 0; attempt < 20 * count && static_cast<int>(out.size()) < count; ++attempt) {
    Point start = x;
    for (double& c : start) c += 0.7 * radius * rng.uniform(-1.0, 1.0);
    std::optional<Point> p = ring->is_free() ? std::optional<Point>(start) : project_to_zero_set(*ring, start);
    if (!p || distance(*p, x) >= radius || !u.contains(*p)) continue;
    if (ring->residual(*p) > 1e-10) continue;
    out.push_back(std::move(*p));
  }
  return out;
}

Verdict germ_equal(const GermRep& a, const GermRep& b, double tol) {
  if (a.section.space != b.section.space) throw PresentationMismatch("germs live on different spaces");
  if (distance(a.point, b.point) > 1e-12) throw PreconditionError("germs are based at different points");
  const OpenSet both = intersect(a.section.open, b.section.open);
  Verdict v;
  v.seed = a.section.space->seed();
  for (double radius : {0.5, 0.25, 0.125, 0.0625}) {
    const std::vector<Point> pts = neighborhood_points(*a.section.space, a.point, radius, both);
    double worst = 0.0;
    Point witness;
    for (const Point& p : pts) {
      const double u = a.section(p), w = b.section(p);
      const double gap = std::abs(u - w);
      if (gap > worst) {
        worst = gap;
        witness = p;
      }
      if (gap > tol * (1.0 + std::abs(u))) v.witness = p;
    }
    v.samples = static_cast<int>(pts.size());
    v.max_abs_diff = worst;
    if (v.witness.empty()) {
      v.kind = Verdict::Kind::NumericallyEqual;
      v.reason = "sections agree on samples within radius " + std::to_string(radius);
      return v;
    }
    if (radius > 0.0625) v.witness.clear();
  }
  v.kind = Verdict::Kind::NumericallyUnequal;
  v.reason = "sections disagree arbitrarily close to the point";
  return v;
}

Point RingedMap::operator()(const Point& p) const {
  Point y;
  for (const SmoothExpr& c : components_) y.push_back(evaluate(c, p));
  return y;
}

OpenSet RingedMap::preimage(const OpenSet& u) const {
  OpenSet out;
  for (const BasicOpen& b : u.parts) {
    BasicOpen pb;
    for (const SmoothExpr& h : b.positivity) pb.positivity.push_back(normalize(compose(h, components_)));
    out.parts.push_back(std::move(pb));
  }
  return out;
}

Section RingedMap::pull(const Section& s) const {
  if (s.space != target_) throw PresentationMismatch("section does not live on the map's target");
  return section(source_, preimage(s.open), normalize(compose(s.rep, components_)));
}

GermRep RingedMap::pull(const GermRep& g, const Point& q) const {
  if (distance((*this)(q), g.point) > 1e-9) throw PreconditionError("q does not map to the germ's point");
  return germ(pull(g.section), q);
}

RingedMap ringed_map(std::vector<SmoothExpr> components, const Space& source, const Space& target) {
  if (components.size() != static_cast<std::size_t>(target->n())) {
    throw ArityError("map needs one component per target variable");
  }
  for (const SmoothExpr& c : components) {
    if (max_variable(c) > source->n()) throw DimensionError("map component uses a variable beyond the source dimension");
  }
  for (SmoothExpr& c : components) c = normalize(c);
  for (const Point& p : source->samples()) {
    Point y;
    for (const SmoothExpr& c : components) y.push_back(evaluate(c, p));
    if (target->ring()->residual(y) > target->tolerance()) throw OffZeroSet(p);
  }
  std::vector<RingElement> images;
  for (const SmoothExpr& c : components) images.push_back(element(source->ring(), c));
  RingHom comorphism = hom(target->ring(), source->ring(), std::move(images));
  return RingedMap(source, target, std::move(components), std::move(comorphism));
}

RingedMap identity_map(const Space& space) {
  std::vector<SmoothExpr> components;
  for (int i = 1; i <= space->n(); ++i) components.push_back(SmoothExpr::var(i));
  return RingedMap(space, space, std::move(components), identity_hom(space->ring()));
}

RingedMap compose(const RingedMap& g, const RingedMap& f) {
  if (f.target() != g.source()) throw PresentationMismatch("maps are not composable");
  std::vector<SmoothExpr> components;
  for (const SmoothExpr& c : g.components()) components.push_back(normalize(compose(c, f.components())));
  return RingedMap(f.source(), g.target(), std::move(components), hom_compose(f.comorphism(), g.comorphism()));
}

}  // namespace cinfty
