#include "cinfty/kaehler.hpp"

#include <map>

#include "cinfty/groebner.hpp"
#include "cinfty/linalg.hpp"

namespace cinfty {

namespace {

void require_rank(const OneForm& a, int n) {
  if (a.coeffs.size() != static_cast<std::size_t>(n)) throw DimensionError("one-form has the wrong number of coefficients");
}

Poly as_poly(const SmoothExpr& e, int n) {
  GenPoly g = to_genpoly(e);
  if (!g.is_polynomial()) throw PreconditionError("expected polynomial data");
  return g.to_poly(n);
}

bool is_standard(const Exponents& e, const std::vector<Poly>& basis) {
  for (const Poly& g : basis) {
    if (divides(g.leading_monomial(), e)) return false;
  }
  return true;
}

}  // namespace

KaehlerPresentation kaehler_presentation(const Ring& ring) {
  ModulePresentation m = free_module(ring, ring->n());
  for (const auto& row : ring->jacobian()) {
    std::vector<RingElement> rel;
    for (const SmoothExpr& e : row) rel.push_back(element(ring, e));
    m.relations.push_back(std::move(rel));
  }
  return KaehlerPresentation{ring, std::move(m)};
}

OneForm one_form(const Ring& ring, std::vector<RingElement> coeffs) {
  for (const RingElement& c : coeffs) require_same_ring(c.ring(), ring);
  OneForm out{ring, std::move(coeffs)};
  require_rank(out, ring->n());
  return out;
}

OneForm dx(const Ring& ring, int i) {
  if (i < 1 || i > ring->n()) throw IndexError("dx index out of range");
  std::vector<RingElement> c(static_cast<std::size_t>(ring->n()), ring_constant(ring, 0));
  c[static_cast<std::size_t>(i) - 1] = ring_constant(ring, 1);
  return OneForm{ring, std::move(c)};
}

OneForm operator+(const OneForm& a, const OneForm& b) {
  require_same_ring(a.ring, b.ring);
  OneForm out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
  return out;
}

OneForm operator-(const OneForm& a, const OneForm& b) {
  require_same_ring(a.ring, b.ring);
  OneForm out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = a.coeffs[i] - b.coeffs[i];
  return out;
}

OneForm operator*(const RingElement& f, const OneForm& a) {
  require_same_ring(f.ring(), a.ring);
  OneForm out = a;
  for (RingElement& c : out.coeffs) c = f * c;
  return out;
}

OneForm d0(const RingElement& a) {
  const Ring& ring = a.ring();
  const int n = ring->n();
  std::vector<RingElement> c;
  for (int i = 1; i <= n; ++i) c.push_back(element(ring, partial(a.rep(), i, n)));
  return OneForm{ring, std::move(c)};
}

Verdict oneform_member_J(const OneForm& omega, int degree_bound) {
  return module_member(kaehler_presentation(omega.ring).module, omega.coeffs, degree_bound);
}

Verdict oneform_equal(const OneForm& a, const OneForm& b, int degree_bound) {
  return oneform_member_J(a - b, degree_bound);
}

OneForm KaehlerMap::operator()(const OneForm& omega) const {
  require_same_ring(omega.ring, phi_.source());
  OneForm out{phi_.target(), std::vector<RingElement>(static_cast<std::size_t>(phi_.target()->n()),
                                                      ring_constant(phi_.target(), 0))};
  for (std::size_t i = 0; i < omega.coeffs.size(); ++i) {
    if (omega.coeffs[i].is_zero_rep()) continue;
    out = out + phi_(omega.coeffs[i]) * d0(phi_.images()[i]);
  }
  return out;
}

KaehlerMap lambda1(const RingHom& phi) { return KaehlerMap(phi); }

Derivation derivation(const Ring& ring, std::vector<RingElement> coeffs, int degree_bound) {
  const int n = ring->n();
  if (coeffs.size() != static_cast<std::size_t>(n)) throw DimensionError("derivation needs one coefficient per variable");
  for (const RingElement& c : coeffs) require_same_ring(c.ring(), ring);
  Derivation v{ring, std::move(coeffs), {}};
  const auto& jac = ring->jacobian();
  for (std::size_t j = 0; j < jac.size(); ++j) {
    GenPoly vg;
    for (int i = 0; i < n; ++i) vg += to_genpoly(v.coeffs[static_cast<std::size_t>(i)].rep()) * to_genpoly(jac[j][static_cast<std::size_t>(i)]);
    Verdict cert = ideal_member(ring, vg.to_expr(), degree_bound);
    if (!cert.holds()) throw NotTangent(static_cast<int>(j) + 1, std::move(cert));
    v.certificates.push_back(std::move(cert));
  }
  return v;
}

Derivation coordinate_derivation(const Ring& ring, int i) {
  if (i < 1 || i > ring->n()) throw IndexError("derivation index out of range");
  std::vector<RingElement> c(static_cast<std::size_t>(ring->n()), ring_constant(ring, 0));
  c[static_cast<std::size_t>(i) - 1] = ring_constant(ring, 1);
  return derivation(ring, std::move(c));
}

RingElement derivation_apply(const Derivation& v, const RingElement& a) {
  require_same_ring(v.ring, a.ring());
  const int n = v.ring->n();
  GenPoly out;
  for (int i = 1; i <= n; ++i) {
    const RingElement& ai = v.coeffs[static_cast<std::size_t>(i) - 1];
    if (ai.is_zero_rep()) continue;
    out += to_genpoly(ai.rep()) * partial_genpoly(a.rep(), i);
  }
  return RingElement(v.ring, out);
}

RingElement contract(const Derivation& v, const OneForm& omega) {
  require_same_ring(v.ring, omega.ring);
  RingElement out = ring_constant(v.ring, 0);
  for (std::size_t i = 0; i < omega.coeffs.size(); ++i) out = out + omega.coeffs[i] * v.coeffs[i];
  return out;
}

std::vector<Derivation> enumerate_tangent_derivations(const Ring& ring, int degree_bound) {
  if (!ring->is_polynomial()) throw PreconditionError("tangent derivations are enumerated for polynomial presentations only");
  const int n = ring->n();
  const std::vector<Poly>& basis = ring->groebner();
  std::vector<Exponents> standard;
  for (const Exponents& e : monomials_up_to(n, degree_bound)) {
    if (is_standard(e, basis)) standard.push_back(e);
  }
  const auto& jac = ring->jacobian();
  // Column (i, m) is the normal form of m * d_i g_j for every j.
  std::vector<std::vector<Poly>> columns;
  for (int i = 0; i < n; ++i) {
    for (const Exponents& m : standard) {
      std::vector<Poly> col;
      for (const auto& row : jac) {
        col.push_back(reduce(as_poly(row[static_cast<std::size_t>(i)], n).mul_term(m, 1), basis));
      }
      columns.push_back(std::move(col));
    }
  }
  std::map<std::pair<std::size_t, Exponents>, std::size_t> rows;
  for (const auto& col : columns) {
    for (std::size_t j = 0; j < col.size(); ++j) {
      for (const auto& [e, c] : col[j].terms()) rows.try_emplace({j, e}, rows.size());
    }
  }
  RationalMatrix a(rows.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t j = 0; j < columns[c].size(); ++j) {
      for (const auto& [e, val] : columns[c][j].terms()) a(rows.at({j, e}), c) = val;
    }
  }
  std::vector<Derivation> out;
  for (const auto& vec : nullspace(a)) {
    Derivation v{ring, {}, {}};
    for (int i = 0; i < n; ++i) {
      Poly p(n);
      for (std::size_t k = 0; k < standard.size(); ++k) {
        p.add_term(standard[k], vec[static_cast<std::size_t>(i) * standard.size() + k]);
      }
      v.coeffs.push_back(element(ring, from_poly(p)));
    }
    for (std::size_t j = 0; j < jac.size(); ++j) {
      Verdict cert;
      cert.kind = Verdict::Kind::ProvedEqual;
      cert.reason = "Gröbner normal form of V(g) is zero";
      v.certificates.push_back(std::move(cert));
    }
    out.push_back(std::move(v));
  }
  return out;
}

PsiReport psi_noninjectivity_report(const OneForm& omega, int degree_bound) {
  const Ring& ring = omega.ring;
  PsiReport report;
  for (const RingElement& c : omega.coeffs) report.omega.push_back(to_string(c.rep()));
  report.degree_bound = degree_bound;
  report.seed = ring->oracle().seed;
  report.in_J = oneform_member_J(omega, degree_bound);
  for (const Derivation& v : enumerate_tangent_derivations(ring, degree_bound)) {
    Verdict c = ideal_member(ring, contract(v, omega).rep(), degree_bound);
    if (!c.holds()) report.all_contractions_in_I = false;
    report.contractions.push_back(std::move(c));
    ++report.derivations_checked;
  }
  return report;
}

}  // namespace cinfty
