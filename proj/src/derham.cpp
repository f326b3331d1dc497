#include "cinfty/derham.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "cinfty/parse.hpp"

namespace cinfty {

namespace {

// Sorts in place and returns the sign of the permutation, or 0 when an index repeats.
int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (idx[i - 1] == idx[i]) return 0;
  }
  return sign;
}

void collect(int n, int k, int start, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n; ++i) {
    cur.push_back(i);
    collect(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// iota_{v_k} ... iota_{v_1} of a degree-k form.
RingElement full_contraction(const std::vector<const Derivation*>& vs, Form a) {
  for (const Derivation* v : vs) a = interior(*v, a);
  return a.coefficient({});
}

void for_each_subset(std::size_t count, std::size_t k, std::size_t limit,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::size_t visited = 0;
  while (k <= count && visited < limit) {
    if (visit(idx)) return;
    ++visited;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == count - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string coefficient_text(const SmoothExpr& c, bool& negative) {
  negative = false;
  SmoothExpr shown = c;
  const std::string raw = to_string(c);
  if (c.op() != Op::Add && !raw.empty() && raw[0] == '-') {
    negative = true;
    shown = normalize(-c);
  }
  std::string text = to_string(shown);
  if (shown.op() == Op::Add) text = "(" + text + ")";
  return text;
}

}  // namespace

RingElement Form::coefficient(const MultiIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? ring_constant(ring_, 0) : it->second;
}

void Form::add_term(std::vector<int> indices, const RingElement& c) {
  require_same_ring(ring_, c.ring());
  if (static_cast<int>(indices.size()) != degree_) throw DimensionError("basis word has the wrong degree");
  for (int i : indices) {
    if (i < 1 || i > ring_->n()) throw IndexError("basis index out of range");
  }
  const int sign = sort_with_sign(indices);
  if (sign == 0 || c.is_zero_rep()) return;
  auto it = terms_.find(indices);
  RingElement value = sign > 0 ? c : -c;
  if (it == terms_.end()) {
    terms_.emplace(std::move(indices), std::move(value));
    return;
  }
  it->second = it->second + value;
  if (it->second.is_zero_rep()) terms_.erase(it);
}

Form operator+(const Form& a, const Form& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.degree_ != b.degree_) throw DimensionError("adding forms of different degree");
  Form out = a;
  for (const auto& [idx, c] : b.terms_) out.add_term(idx, c);
  return out;
}

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form operator*(const RingElement& f, const Form& a) {
  Form out(a.ring_, a.degree_);
  for (const auto& [idx, c] : a.terms_) out.add_term(idx, f * c);
  return out;
}

Form Form::operator-() const {
  Form out(ring_, degree_);
  for (const auto& [idx, c] : terms_) out.add_term(idx, -c);
  return out;
}

Form zero_form(const Ring& ring, int degree) { return Form(ring, degree); }

Form function_form(const RingElement& f) {
  Form out(f.ring(), 0);
  out.add_term({}, f);
  return out;
}

Form basis_form(const Ring& ring, std::vector<int> indices) {
  Form out(ring, static_cast<int>(indices.size()));
  out.add_term(std::move(indices), ring_constant(ring, 1));
  return out;
}

Form from_one_form(const OneForm& omega) {
  Form out(omega.ring, 1);
  for (std::size_t i = 0; i < omega.coeffs.size(); ++i) out.add_term({static_cast<int>(i) + 1}, omega.coeffs[i]);
  return out;
}

OneForm to_one_form(const Form& alpha) {
  if (alpha.degree() != 1) throw DimensionError("expected a 1-form");
  std::vector<RingElement> c;
  for (int i = 1; i <= alpha.ring()->n(); ++i) c.push_back(alpha.coefficient({i}));
  return OneForm{alpha.ring(), std::move(c)};
}

Form parse_form(std::string_view text, const Ring& ring) {
  const std::vector<FormTerm> terms = parse_form_terms(text, ring->n());
  const int degree = static_cast<int>(terms.front().basis.size());
  Form out(ring, degree);
  for (const FormTerm& t : terms) {
    if (static_cast<int>(t.basis.size()) != degree) throw ParseError("summands of different degree", 0);
    out.add_term(t.basis, element(ring, t.coefficient));
  }
  return out;
}

Form wedge(const Form& a, const Form& b) {
  require_same_ring(a.ring(), b.ring());
  Form out(a.ring(), a.degree() + b.degree());
  for (const auto& [i, f] : a.terms()) {
    for (const auto& [j, g] : b.terms()) {
      std::vector<int> idx = i;
      idx.insert(idx.end(), j.begin(), j.end());
      out.add_term(std::move(idx), f * g);
    }
  }
  return out;
}

Form d(const Form& a) {
  const Ring& ring = a.ring();
  const int n = ring->n();
  Form out(ring, a.degree() + 1);
  for (const auto& [idx, f] : a.terms()) {
    for (int i = 1; i <= n; ++i) {
      if (std::find(idx.begin(), idx.end(), i) != idx.end()) continue;
      std::vector<int> word{i};
      word.insert(word.end(), idx.begin(), idx.end());
      out.add_term(std::move(word), element(ring, partial(f.rep(), i, n)));
    }
  }
  return out;
}

Form pullback(const RingHom& phi, const Form& a) {
  require_same_ring(a.ring(), phi.source());
  const Ring& target = phi.target();
  std::vector<Form> dphi;
  for (const RingElement& im : phi.images()) dphi.push_back(from_one_form(d0(im)));
  Form out(target, a.degree());
  for (const auto& [idx, f] : a.terms()) {
    Form term = function_form(phi(f));
    for (int i : idx) term = wedge(term, dphi[static_cast<std::size_t>(i) - 1]);
    out = out + term;
  }
  return out;
}

Form interior(const Derivation& v, const Form& a) {
  require_same_ring(v.ring, a.ring());
  Form out(a.ring(), a.degree() - 1);
  for (const auto& [idx, f] : a.terms()) {
    for (std::size_t r = 0; r < idx.size(); ++r) {
      const RingElement& ar = v.coeffs[static_cast<std::size_t>(idx[r]) - 1];
      if (ar.is_zero_rep()) continue;
      std::vector<int> rest = idx;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(r));
      const RingElement c = f * ar;
      out.add_term(std::move(rest), r % 2 == 0 ? c : -c);
    }
  }
  return out;
}

std::vector<MultiIndex> multi_indices(int n, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > n) return out;
  MultiIndex cur;
  collect(n, k, 1, cur, out);
  return out;
}

ModulePresentation form_module(const Ring& ring, int degree) {
  const std::vector<MultiIndex> basis = multi_indices(ring->n(), degree);
  ModulePresentation m = free_module(ring, static_cast<int>(basis.size()));
  if (degree < 1) return m;
  for (const auto& row : ring->jacobian()) {
    Form dg(ring, 1);
    for (std::size_t i = 0; i < row.size(); ++i) dg.add_term({static_cast<int>(i) + 1}, element(ring, row[i]));
    for (const MultiIndex& k : multi_indices(ring->n(), degree - 1)) {
      Form rel = wedge(dg, basis_form(ring, k));
      if (rel.is_zero_rep()) continue;
      std::vector<RingElement> vec;
      for (const MultiIndex& idx : basis) vec.push_back(rel.coefficient(idx));
      m.relations.push_back(std::move(vec));
    }
  }
  return m;
}

Verdict form_equal(const Form& a, const Form& b, int degree_bound) {
  require_same_ring(a.ring(), b.ring());
  if (a.degree() != b.degree()) throw DimensionError("comparing forms of different degree");
  const Ring& ring = a.ring();
  const int k = a.degree();
  if (k < 0 || k > ring->n()) {
    Verdict v;
    v.kind = Verdict::Kind::ProvedEqual;
    v.reason = "no nonzero forms of this degree";
    return v;
  }
  if (k == 0) return equal(a.coefficient({}), b.coefficient({}));
  const Form diff = a - b;
  const ModulePresentation m = form_module(ring, k);
  std::vector<RingElement> vec;
  for (const MultiIndex& idx : multi_indices(ring->n(), k)) vec.push_back(diff.coefficient(idx));
  Verdict v = module_member(m, vec, degree_bound);
  if (v.kind != Verdict::Kind::Unknown && v.kind != Verdict::Kind::NotMemberUpToDegree) return v;
  if (!ring->is_polynomial()) return v;

  // Contractions with tangent derivations vanish on the relation submodule,
  // so a contraction that is nonzero in the ring separates the two forms.
  const std::vector<Derivation> derivs = enumerate_tangent_derivations(ring, std::min(degree_bound, 4));
  std::optional<Verdict> refutation;
  for_each_subset(derivs.size(), static_cast<std::size_t>(k), 500, [&](const std::vector<std::size_t>& pick) {
    std::vector<const Derivation*> vs;
    for (std::size_t i : pick) vs.push_back(&derivs[i]);
    const RingElement c = full_contraction(vs, diff);
    if (c.is_zero_rep()) return false;
    Verdict e = equal(c, ring_constant(ring, 0));
    if (e.kind == Verdict::Kind::ProvedUnequal || e.kind == Verdict::Kind::NumericallyUnequal) {
      e.reason = "contraction with tangent derivations is nonzero: " + e.reason;
      e.degree_bound = degree_bound;
      refutation = std::move(e);
      return true;
    }
    return false;
  });
  return refutation ? *refutation : v;
}

std::string to_string(const Form& a) {
  std::string out;
  for (const auto& [idx, c] : a.terms()) {
    bool negative = false;
    std::string coef = coefficient_text(c.rep(), negative);
    std::string word;
    for (std::size_t r = 0; r < idx.size(); ++r) word += (r ? "^dx" : "dx") + std::to_string(idx[r]);
    std::string term;
    if (idx.empty()) {
      term = to_string(negative ? normalize(-c.rep()) : c.rep());
    } else {
      term = coef == "1" ? word : coef + " * " + word;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const OneForm& omega) { return to_string(from_one_form(omega)); }

}  // namespace cinfty
