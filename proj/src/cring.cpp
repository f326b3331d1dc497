#include "cinfty/cring.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cinfty/groebner.hpp"
#include "cinfty/linalg.hpp"

namespace cinfty {

std::string to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::ProvedEqual:
      return "ProvedEqual";
    case Verdict::Kind::ProvedUnequal:
      return "ProvedUnequal";
    case Verdict::Kind::NumericallyEqual:
      return "NumericallyEqual";
    case Verdict::Kind::NumericallyUnequal:
      return "NumericallyUnequal";
    case Verdict::Kind::NotMemberUpToDegree:
      return "NotMemberUpToDegree";
    case Verdict::Kind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

Verdict combine(std::span<const Verdict> parts) {
  if (parts.empty()) {
    Verdict v;
    v.kind = Verdict::Kind::ProvedEqual;
    return v;
  }
  const Verdict* unknown = nullptr;
  const Verdict* numeric = nullptr;
  for (const Verdict& p : parts) {
    if (p.refutes()) return p;
    if (p.kind == Verdict::Kind::Unknown && !unknown) unknown = &p;
    if (p.kind == Verdict::Kind::NumericallyEqual && !numeric) numeric = &p;
  }
  if (unknown) return *unknown;
  if (numeric) {
    Verdict v = *numeric;
    for (const Verdict& p : parts) v.max_abs_diff = std::max(v.max_abs_diff, p.max_abs_diff);
    return v;
  }
  Verdict v;
  v.kind = Verdict::Kind::ProvedEqual;
  for (const Verdict& p : parts) {
    for (const auto& c : p.cofactors) v.cofactors.push_back(c);
  }
  return v;
}

RingPresentation::RingPresentation(int n, std::vector<SmoothExpr> gens, OracleConfig oracle)
    : n_(n), oracle_(std::move(oracle)) {
  for (const SmoothExpr& g : gens) {
    SmoothExpr ng = normalize(g);
    if (ng.is_zero()) continue;
    gens_.push_back(ng);
  }
  std::vector<Poly> polys;
  for (const SmoothExpr& g : gens_) {
    const GenPoly gp = to_genpoly(g);
    if (!gp.is_polynomial()) {
      polynomial_ = false;
      break;
    }
    polys.push_back(gp.to_poly(n_));
  }
  if (polynomial_) basis_ = groebner_basis(polys);
  for (const SmoothExpr& g : gens_) {
    std::vector<SmoothExpr> row;
    for (int i = 1; i <= n_; ++i) row.push_back(partial(g, i, n_));
    jacobian_.push_back(std::move(row));
  }
}

Box RingPresentation::box() const {
  if (!oracle_.box.empty()) return oracle_.box;
  return Box(static_cast<std::size_t>(n_), {-2.0, 2.0});
}

GenPoly RingPresentation::reduce(const GenPoly& g) const {
  if (gens_.empty() || !polynomial_) return g;
  std::map<Monomial, Poly, MonomialLess> groups;
  for (const auto& [m, c] : g.terms()) {
    auto [e, rest] = split_monomial(m, n_);
    auto it = groups.try_emplace(rest, Poly(n_)).first;
    it->second.add_term(e, c);
  }
  GenPoly out;
  for (const auto& [rest, p] : groups) {
    GenPoly reduced = GenPoly::from_poly(cinfty::reduce(p, basis_));
    if (rest.empty()) {
      out += reduced;
    } else {
      GenPoly atoms;
      atoms.add_term(rest, 1);
      out += reduced * atoms;
    }
  }
  return out;
}

double RingPresentation::residual(std::span<const double> p) const {
  double r = 0.0;
  for (const SmoothExpr& g : gens_) r = std::max(r, std::abs(evaluate(g, p)));
  return r;
}

const std::vector<std::vector<double>>& RingPresentation::samples() const {
  std::call_once(samples_once_, [this] { samples_ = sample_zero_set(*this, oracle_.samples, box(), oracle_.seed); });
  return samples_;
}

Ring present_ring(int n, std::vector<SmoothExpr> gens, OracleConfig oracle) {
  if (n < 0) throw PreconditionError("variable count must be nonnegative");
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (max_variable(gens[j]) > n) {
      throw PreconditionError("generator " + std::to_string(j + 1) + " uses a variable beyond x" + std::to_string(n));
    }
  }
  if (!oracle.box.empty() && oracle.box.size() != static_cast<std::size_t>(n)) {
    throw PreconditionError("oracle box must have one interval per variable");
  }
  return std::make_shared<const RingPresentation>(n, std::move(gens), std::move(oracle));
}

RingElement::RingElement(Ring ring, const SmoothExpr& representative)
    : RingElement(std::move(ring), to_genpoly(representative)) {}

RingElement::RingElement(Ring ring, const GenPoly& representative) : ring_(std::move(ring)) {
  if (representative.max_variable() > ring_->n()) {
    throw DimensionError("element uses a variable beyond x" + std::to_string(ring_->n()));
  }
  rep_ = ring_->reduce(representative).to_expr();
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (a.get() != b.get()) throw PresentationMismatch("operands belong to different ring presentations");
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_ring(a.ring_, b.ring_);
  return RingElement(a.ring_, to_genpoly(a.rep_) + to_genpoly(b.rep_));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_ring(a.ring_, b.ring_);
  return RingElement(a.ring_, to_genpoly(a.rep_) - to_genpoly(b.rep_));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a.ring_, b.ring_);
  return RingElement(a.ring_, to_genpoly(a.rep_) * to_genpoly(b.rep_));
}

RingElement operator*(const Rational& c, const RingElement& a) { return RingElement(a.ring_, to_genpoly(a.rep_) * c); }

RingElement RingElement::operator-() const { return RingElement(ring_, to_genpoly(rep_) * Rational(-1)); }

RingElement element(const Ring& ring, const SmoothExpr& e) { return RingElement(ring, e); }
RingElement coordinate(const Ring& ring, int i) {
  if (i < 1 || i > ring->n()) throw IndexError("coordinate index out of range");
  return RingElement(ring, SmoothExpr::var(i));
}
RingElement ring_constant(const Ring& ring, const Rational& c) { return RingElement(ring, SmoothExpr::constant(c)); }

RingElement apply_op(const Ring& ring, const SmoothExpr& g, const std::vector<RingElement>& elts) {
  std::vector<GenPoly> args;
  args.reserve(elts.size());
  for (const RingElement& e : elts) {
    require_same_ring(ring, e.ring());
    args.push_back(to_genpoly(e.rep()));
  }
  if (max_variable(g) > static_cast<int>(elts.size())) {
    throw ArityError("operation uses x" + std::to_string(max_variable(g)) + " but received " +
                     std::to_string(elts.size()) + " elements");
  }
  return RingElement(ring, substitute(g, args));
}

namespace {

// Value of g at p together with the sum of absolute term values, which is the
// scale of the rounding error.
std::pair<double, double> eval_with_scale(const GenPoly& g, std::span<const double> p) {
  double value = 0.0, scale = 0.0;
  for (const auto& [m, c] : g.terms()) {
    double t = c.get_d();
    for (const auto& f : m) {
      const double a = evaluate(f.atom, p);
      for (int k = 0; k < f.exponent; ++k) t *= a;
    }
    value += t;
    scale += std::abs(t);
  }
  return {value, scale};
}

// The witness is exactly on the zero set and the difference is exactly
// nonzero there (polynomial data only; tiny coordinates snap to zero).
bool certify_witness(const RingPresentation& ring, const GenPoly& diff, const std::vector<double>& w) {
  if (!ring.is_polynomial() || !diff.is_polynomial()) return false;
  std::vector<Rational> q;
  for (double c : w) q.emplace_back(std::abs(c) < 1e-8 ? 0.0 : c);
  for (const SmoothExpr& g : ring.generators()) {
    if (to_genpoly(g).to_poly(ring.n()).evaluate(std::span<const Rational>(q)) != 0) return false;
  }
  return diff.to_poly(ring.n()).evaluate(std::span<const Rational>(q)) != 0;
}

Verdict sampling_verdict(const RingPresentation& ring, const GenPoly& diff) {
  Verdict v;
  v.seed = ring.oracle().seed;
  const std::vector<std::vector<double>>* pts = nullptr;
  try {
    pts = &ring.samples();
  } catch (const SamplingFailed& e) {
    v.kind = Verdict::Kind::Unknown;
    v.reason = std::string("zero-set sampling failed: ") + e.what();
    return v;
  }
  const double tol = ring.oracle().tolerance;
  double worst_excess = 0.0;
  for (const auto& p : *pts) {
    double value = 0.0, scale = 0.0;
    try {
      std::tie(value, scale) = eval_with_scale(diff, p);
    } catch (const DomainError&) {
      continue;
    }
    ++v.samples;
    v.max_abs_diff = std::max(v.max_abs_diff, std::abs(value));
    const double excess = std::abs(value) / (tol * (1.0 + scale));
    if (excess > 1.0 && excess > worst_excess) {
      worst_excess = excess;
      v.witness = p;
    }
  }
  if (v.samples == 0) {
    v.kind = Verdict::Kind::Unknown;
    v.reason = "difference could not be evaluated at any sample";
    return v;
  }
  if (!v.witness.empty()) {
    if (certify_witness(ring, diff, v.witness)) {
      v.kind = Verdict::Kind::ProvedUnequal;
      v.reason = "witness lies exactly on the zero set and the difference is exactly nonzero there";
      for (double& c : v.witness) {
        if (std::abs(c) < 1e-8) c = 0.0;
      }
    } else {
      v.kind = Verdict::Kind::NumericallyUnequal;
      v.reason = "difference exceeds tolerance at a zero-set sample";
    }
    return v;
  }
  v.kind = Verdict::Kind::NumericallyEqual;
  v.reason = "difference vanishes on all zero-set samples";
  return v;
}

// Polynomial cofactors h_j (deg <= max_degree) with f = sum h_j g_j, searched
// from the smallest plausible degree upwards.
std::optional<std::vector<Poly>> polynomial_cofactors(int n, const std::vector<Poly>& gens, const Poly& f,
                                                      int max_degree) {
  if (f.is_zero()) return std::vector<Poly>(gens.size(), Poly(n));
  int max_gen_degree = 0;
  for (const Poly& g : gens) max_gen_degree = std::max(max_gen_degree, g.degree());
  const int lower = std::max(0, f.degree() - max_gen_degree);
  for (int d = lower; d <= max_degree; ++d) {
    const std::vector<Exponents> mons = monomials_up_to(n, d);
    std::vector<Poly> columns;
    for (const Poly& g : gens) {
      for (const Exponents& a : mons) columns.push_back(g.mul_term(a, 1));
    }
    std::map<Exponents, std::size_t, GrlexGreater> rows;
    for (const auto& [e, c] : f.terms()) rows.try_emplace(e, rows.size());
    for (const Poly& col : columns) {
      for (const auto& [e, c] : col.terms()) rows.try_emplace(e, rows.size());
    }
    RationalMatrix a(rows.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (const auto& [e, v] : columns[c].terms()) a(rows.at(e), c) = v;
    }
    std::vector<Rational> b(rows.size());
    for (const auto& [e, v] : f.terms()) b[rows.at(e)] = v;
    if (auto x = solve(a, b)) {
      std::vector<Poly> h(gens.size(), Poly(n));
      for (std::size_t j = 0; j < gens.size(); ++j) {
        for (std::size_t k = 0; k < mons.size(); ++k) h[j].add_term(mons[k], (*x)[j * mons.size() + k]);
      }
      return h;
    }
  }
  return std::nullopt;
}

// Cofactor search over transcendental generators: h_j ranges over
// (atom parts of e, and 1) times monomials of degree <= max_degree.
std::optional<std::vector<GenPoly>> general_cofactors(const RingPresentation& ring, const GenPoly& e, int max_degree) {
  const int n = ring.n();
  std::vector<GenPoly> gens;
  for (const SmoothExpr& g : ring.generators()) gens.push_back(to_genpoly(g));
  std::vector<Monomial> atom_parts{Monomial{}};
  for (const auto& [m, c] : e.terms()) {
    auto rest = split_monomial(m, n).second;
    if (std::none_of(atom_parts.begin(), atom_parts.end(), [&](const Monomial& a) {
          return !MonomialLess{}(a, rest) && !MonomialLess{}(rest, a);
        })) {
      atom_parts.push_back(rest);
    }
  }
  const std::vector<Exponents> mons = monomials_up_to(n, max_degree);
  std::vector<GenPoly> basis;  // multiplier functions
  for (const Monomial& a : atom_parts) {
    for (const Exponents& x : mons) {
      GenPoly f = GenPoly::from_poly(Poly::monomial(n, x, 1));
      GenPoly at;
      at.add_term(a, 1);
      basis.push_back(f * at);
    }
  }
  std::vector<GenPoly> columns;
  for (const GenPoly& g : gens) {
    for (const GenPoly& b : basis) columns.push_back(g * b);
  }
  std::map<Monomial, std::size_t, MonomialLess> rows;
  for (const auto& [m, c] : e.terms()) rows.try_emplace(m, rows.size());
  for (const GenPoly& col : columns) {
    for (const auto& [m, c] : col.terms()) rows.try_emplace(m, rows.size());
  }
  RationalMatrix a(rows.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [m, v] : columns[c].terms()) a(rows.at(m), c) = v;
  }
  std::vector<Rational> b(rows.size());
  for (const auto& [m, v] : e.terms()) b[rows.at(m)] = v;
  auto x = solve(a, b);
  if (!x) return std::nullopt;
  std::vector<GenPoly> h(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Rational& coef = (*x)[j * basis.size() + k];
      if (coef != 0) h[j] += basis[k] * coef;
    }
  }
  return h;
}

Verdict proved_member(std::vector<SmoothExpr> cofactors, std::string reason) {
  Verdict v;
  v.kind = Verdict::Kind::ProvedEqual;
  v.cofactors = std::move(cofactors);
  v.reason = std::move(reason);
  return v;
}

}  // namespace

Verdict ideal_member(const Ring& ring, const SmoothExpr& e, int degree_bound) {
  const int n = ring->n();
  const GenPoly gp = to_genpoly(e);
  if (gp.max_variable() > n) throw DimensionError("expression uses a variable beyond x" + std::to_string(n));
  const std::size_t k = ring->generators().size();
  if (gp.is_zero()) {
    Verdict v = proved_member(std::vector<SmoothExpr>(k), "expression is identically zero");
    v.degree_bound = degree_bound;
    return v;
  }
  if (ring->is_free()) {
    if (gp.is_polynomial()) {
      Verdict v = sampling_verdict(*ring, gp);
      v.kind = Verdict::Kind::ProvedUnequal;
      v.reason = "nonzero polynomial in the free ring";
      return v;
    }
    return sampling_verdict(*ring, gp);
  }
  if (ring->is_polynomial()) {
    std::map<Monomial, Poly, MonomialLess> groups;
    for (const auto& [m, c] : gp.terms()) {
      auto [ex, rest] = split_monomial(m, n);
      groups.try_emplace(rest, Poly(n)).first->second.add_term(ex, c);
    }
    bool reduces_to_zero = true;
    for (const auto& [rest, p] : groups) {
      if (!reduce(p, ring->groebner()).is_zero()) {
        reduces_to_zero = false;
        break;
      }
    }
    if (!reduces_to_zero) return sampling_verdict(*ring, gp);
    std::vector<Poly> gens;
    for (const SmoothExpr& g : ring->generators()) gens.push_back(to_genpoly(g).to_poly(n));
    std::vector<GenPoly> h(k);
    for (const auto& [rest, p] : groups) {
      auto part = polynomial_cofactors(n, gens, p, degree_bound);
      if (!part) {
        Verdict v = proved_member({}, "Gröbner normal form is zero; no cofactors within the degree bound");
        v.degree_bound = degree_bound;
        return v;
      }
      GenPoly atoms;
      atoms.add_term(rest, 1);
      for (std::size_t j = 0; j < k; ++j) h[j] += GenPoly::from_poly((*part)[j]) * atoms;
    }
    std::vector<SmoothExpr> cof;
    for (const GenPoly& hj : h) cof.push_back(hj.to_expr());
    Verdict v = proved_member(std::move(cof), "explicit cofactors");
    v.degree_bound = degree_bound;
    return v;
  }
  if (auto h = general_cofactors(*ring, gp, degree_bound)) {
    std::vector<SmoothExpr> cof;
    for (const GenPoly& hj : *h) cof.push_back(hj.to_expr());
    Verdict v = proved_member(std::move(cof), "explicit cofactors");
    v.degree_bound = degree_bound;
    return v;
  }
  return sampling_verdict(*ring, gp);
}

Verdict equal(const RingElement& a, const RingElement& b) {
  require_same_ring(a.ring(), b.ring());
  const Ring& ring = a.ring();
  const GenPoly diff = ring->reduce(to_genpoly(a.rep()) - to_genpoly(b.rep()));
  if (diff.is_zero()) return proved_member({}, "difference reduces to zero");
  return ideal_member(ring, diff.to_expr(), ring->oracle().degree_bound);
}

RingElement RingHom::apply(const SmoothExpr& e) const { return apply_op(target_, e, images_); }

RingElement RingHom::operator()(const RingElement& a) const {
  require_same_ring(a.ring(), source_);
  return apply(a.rep());
}

RingHom hom(Ring source, Ring target, std::vector<RingElement> images) {
  if (images.size() != static_cast<std::size_t>(source->n())) {
    throw ArityError("a hom needs one image per source coordinate");
  }
  for (const RingElement& im : images) require_same_ring(im.ring(), target);
  RingHom h(std::move(source), std::move(target), std::move(images));
  const auto& gens = h.source()->generators();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Verdict v = equal(h.apply(gens[j]), ring_constant(h.target(), 0));
    if (!v.holds()) throw IllDefinedHom(static_cast<int>(j) + 1, std::move(v));
  }
  return h;
}

RingHom identity_hom(const Ring& ring) {
  std::vector<RingElement> images;
  for (int i = 1; i <= ring->n(); ++i) images.push_back(coordinate(ring, i));
  return RingHom(ring, ring, std::move(images));
}

RingHom hom_compose(const RingHom& g, const RingHom& f) {
  require_same_ring(f.target(), g.source());
  std::vector<RingElement> images;
  for (const RingElement& im : f.images()) images.push_back(g(im));
  return RingHom(f.source(), g.target(), std::move(images));
}

double RPoint::operator()(const RingElement& a) const {
  require_same_ring(a.ring(), ring_);
  return a.evaluate(point_);
}

RPoint r_point(const Ring& ring, std::vector<double> p) {
  if (p.size() != static_cast<std::size_t>(ring->n())) throw DimensionError("point has the wrong dimension");
  const double r = ring->residual(p);
  if (r > ring->oracle().tolerance) {
    throw PreconditionError("point is off the zero set (residual " + std::to_string(r) + ")");
  }
  return RPoint(ring, std::move(p));
}

ModulePresentation free_module(const Ring& ring, int rank) { return ModulePresentation{ring, rank, {}}; }

ModuleElement zero_element(const ModulePresentation& m) {
  return ModuleElement(static_cast<std::size_t>(m.rank), ring_constant(m.ring, 0));
}

namespace {

// Solves target = sum_r h_r * rels[r] modulo the Gröbner basis with
// polynomial h_r of degree <= degree_bound, raising the degree gradually.
std::optional<std::vector<Poly>> relation_cofactors(const RingPresentation& ring,
                                                    const std::vector<std::vector<Poly>>& rels,
                                                    const std::vector<Poly>& target, int degree_bound) {
  const int n = ring.n();
  int min_rel_degree = 1 << 20;
  for (const auto& row : rels) {
    for (const Poly& p : row) {
      if (!p.is_zero()) min_rel_degree = std::min(min_rel_degree, p.degree());
    }
  }
  int target_degree = 0;
  for (const Poly& p : target) target_degree = std::max(target_degree, p.degree());
  const int lower = std::clamp(target_degree - min_rel_degree, 0, std::max(degree_bound, 0));
  for (int d = lower; d <= degree_bound; ++d) {
    const std::vector<Exponents> mons = monomials_up_to(n, d);
    std::map<std::pair<int, Exponents>, std::size_t> rows;
    std::vector<std::vector<Poly>> columns;  // columns[c][i]
    for (const auto& rel : rels) {
      for (const Exponents& a : mons) {
        std::vector<Poly> col;
        for (const Poly& entry : rel) col.push_back(reduce(entry.mul_term(a, 1), ring.groebner()));
        columns.push_back(std::move(col));
      }
    }
    for (std::size_t i = 0; i < target.size(); ++i) {
      for (const auto& [e, c] : target[i].terms()) rows.try_emplace({static_cast<int>(i), e}, rows.size());
    }
    for (const auto& col : columns) {
      for (std::size_t i = 0; i < col.size(); ++i) {
        for (const auto& [e, c] : col[i].terms()) rows.try_emplace({static_cast<int>(i), e}, rows.size());
      }
    }
    RationalMatrix a(rows.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (std::size_t i = 0; i < columns[c].size(); ++i) {
        for (const auto& [e, val] : columns[c][i].terms()) a(rows.at({static_cast<int>(i), e}), c) = val;
      }
    }
    std::vector<Rational> b(rows.size());
    for (std::size_t i = 0; i < target.size(); ++i) {
      for (const auto& [e, val] : target[i].terms()) b[rows.at({static_cast<int>(i), e})] = val;
    }
    if (auto x = solve(a, b)) {
      std::vector<Poly> h;
      for (std::size_t r = 0; r < rels.size(); ++r) {
        Poly hr(n);
        for (std::size_t k = 0; k < mons.size(); ++k) hr.add_term(mons[k], (*x)[r * mons.size() + k]);
        h.push_back(std::move(hr));
      }
      return h;
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict module_member(const ModulePresentation& mod, const ModuleElement& v, int degree_bound) {
  const Ring& ring = mod.ring;
  const int n = ring->n();
  if (v.size() != static_cast<std::size_t>(mod.rank)) throw DimensionError("module element has the wrong rank");
  for (const RingElement& c : v) require_same_ring(c.ring(), ring);
  if (std::all_of(v.begin(), v.end(), [](const RingElement& c) { return c.is_zero_rep(); })) {
    return proved_member({}, "all components reduce to zero");
  }
  if (mod.relations.empty()) {
    std::vector<Verdict> parts;
    for (const RingElement& c : v) parts.push_back(ideal_member(ring, c.rep(), degree_bound));
    return combine(parts);
  }
  Verdict unknown;
  unknown.kind = Verdict::Kind::Unknown;
  unknown.degree_bound = degree_bound;
  unknown.reason = "module membership needs polynomial relations";
  if (!ring->is_polynomial()) return unknown;
  std::vector<std::vector<Poly>> rels;
  for (const auto& row : mod.relations) {
    std::vector<Poly> prow;
    for (const RingElement& c : row) {
      GenPoly g = to_genpoly(c.rep());
      if (!g.is_polynomial()) return unknown;
      prow.push_back(g.to_poly(n));
    }
    rels.push_back(std::move(prow));
  }
  // Split every component by its transcendental part; each group must lie in
  // the polynomial relation module on its own. That is sufficient in general
  // and also necessary when the data is polynomial.
  std::map<Monomial, std::vector<Poly>, MonomialLess> groups;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const GenPoly component = to_genpoly(v[i].rep());
    for (const auto& [m, c] : component.terms()) {
      auto [ex, rest] = split_monomial(m, n);
      auto& target = groups.try_emplace(rest, std::vector<Poly>(v.size(), Poly(n))).first->second;
      target[i].add_term(ex, c);
    }
  }
  std::vector<GenPoly> h(rels.size());
  for (auto& [rest, target] : groups) {
    for (Poly& p : target) p = reduce(p, ring->groebner());
    if (std::all_of(target.begin(), target.end(), [](const Poly& p) { return p.is_zero(); })) continue;
    auto part = relation_cofactors(*ring, rels, target, degree_bound);
    if (!part) {
      if (groups.size() == 1 && rest.empty()) {
        Verdict no;
        no.kind = Verdict::Kind::NotMemberUpToDegree;
        no.degree_bound = degree_bound;
        no.reason = "no relation cofactors of degree <= " + std::to_string(degree_bound) + " (inconsistent linear system)";
        return no;
      }
      unknown.reason = "no polynomial relation cofactors for a transcendental component";
      return unknown;
    }
    GenPoly atoms;
    atoms.add_term(rest, 1);
    for (std::size_t r = 0; r < rels.size(); ++r) h[r] += GenPoly::from_poly((*part)[r]) * atoms;
  }
  std::vector<SmoothExpr> cof;
  for (const GenPoly& hr : h) cof.push_back(hr.to_expr());
  Verdict ok = proved_member(std::move(cof), "explicit relation cofactors");
  ok.degree_bound = degree_bound;
  return ok;
}

Verdict module_equal(const ModulePresentation& m, const ModuleElement& a, const ModuleElement& b, int degree_bound) {
  if (a.size() != b.size()) throw DimensionError("module elements of different rank");
  ModuleElement diff;
  for (std::size_t i = 0; i < a.size(); ++i) diff.push_back(a[i] - b[i]);
  return module_member(m, diff, degree_bound);
}

SquareZeroRing::Element SquareZeroRing::make(RingElement a, ModuleElement m) const {
  require_same_ring(a.ring(), module_.ring);
  if (m.size() != static_cast<std::size_t>(module_.rank)) throw DimensionError("module part has the wrong rank");
  for (const RingElement& c : m) require_same_ring(c.ring(), module_.ring);
  return Element{std::move(a), std::move(m)};
}

SquareZeroRing::Element SquareZeroRing::apply_op(const SmoothExpr& g, const std::vector<Element>& elts) const {
  std::vector<RingElement> base;
  for (const Element& e : elts) base.push_back(e.a);
  RingElement a = cinfty::apply_op(module_.ring, g, base);
  ModuleElement m = zero_element(module_);
  const int arity = static_cast<int>(elts.size());
  for (int i = 1; i <= arity; ++i) {
    const RingElement coef = cinfty::apply_op(module_.ring, partial(g, i, arity), base);
    if (coef.is_zero_rep()) continue;
    const ModuleElement& mi = elts[static_cast<std::size_t>(i) - 1].m;
    for (std::size_t r = 0; r < m.size(); ++r) m[r] = m[r] + coef * mi[r];
  }
  return Element{std::move(a), std::move(m)};
}

SquareZeroRing::Element SquareZeroRing::multiply(const Element& x, const Element& y) const {
  return apply_op(SmoothExpr::var(1) * SmoothExpr::var(2), {x, y});
}

SquareZeroRing::Element SquareZeroRing::unit() const {
  return Element{ring_constant(module_.ring, 1), zero_element(module_)};
}

Verdict SquareZeroRing::equal(const Element& x, const Element& y, int degree_bound) const {
  std::vector<Verdict> parts{cinfty::equal(x.a, y.a), module_equal(module_, x.m, y.m, degree_bound)};
  return combine(parts);
}

}  // namespace cinfty
