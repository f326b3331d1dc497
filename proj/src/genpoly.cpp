#include "cinfty/genpoly.hpp"

#include <algorithm>

#include "cinfty/error.hpp"

namespace cinfty {

namespace {

int degree_of(const Monomial& m) {
  int d = 0;
  for (const auto& f : m) d += f.exponent;
  return d;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = compare(a[i].atom, b[j].atom);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].atom, a[i].exponent + b[j].exponent});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

}  // namespace

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  const std::size_t len = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < len; ++k) {
    if (int c = compare(a[k].atom, b[k].atom); c != 0) return c < 0;
    if (a[k].exponent != b[k].exponent) return a[k].exponent > b[k].exponent;
  }
  return a.size() < b.size();
}

GenPoly GenPoly::constant(const Rational& c) {
  GenPoly g;
  g.add_term({}, c);
  return g;
}

GenPoly GenPoly::atom(const SmoothExpr& a) {
  GenPoly g;
  g.add_term({Factor{a, 1}}, 1);
  return g;
}

GenPoly GenPoly::from_poly(const Poly& p) {
  GenPoly g;
  for (const auto& [e, c] : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) m.push_back({SmoothExpr::var(static_cast<int>(i) + 1), e[i]});
    }
    g.add_term(m, c);
  }
  return g;
}

bool GenPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational GenPoly::constant_value() const { return terms_.empty() ? Rational(0) : terms_.begin()->second; }

bool GenPoly::is_polynomial() const {
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m) {
      if (f.atom.op() != Op::Var) return false;
    }
  }
  return true;
}

int GenPoly::max_variable() const {
  int out = 0;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m) out = std::max(out, cinfty::max_variable(f.atom));
  }
  return out;
}

void GenPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GenPoly& GenPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, a] : terms_) a *= c;
  return *this;
}

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
  GenPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  }
  return out;
}

GenPoly GenPoly::pow(int k) const {
  GenPoly result = constant(1);
  GenPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool operator==(const GenPoly& a, const GenPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (c != it->second || m.size() != it->first.size()) return false;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k].exponent != it->first[k].exponent || !(m[k].atom == it->first[k].atom)) return false;
    }
    ++it;
  }
  return true;
}

Poly GenPoly::to_poly(int n) const {
  Poly p(n);
  for (const auto& [m, c] : terms_) {
    auto [e, rest] = split_monomial(m, n);
    if (!rest.empty()) throw PreconditionError("generalized polynomial has transcendental atoms");
    p.add_term(e, c);
  }
  return p;
}

SmoothExpr GenPoly::to_expr() const {
  std::vector<SmoothExpr> terms;
  for (const auto& [m, c] : terms_) {
    if (m.empty()) {
      terms.push_back(SmoothExpr::constant(c));
      continue;
    }
    std::vector<SmoothExpr> factors;
    if (c != 1) factors.push_back(SmoothExpr::constant(c));
    for (const auto& f : m) factors.push_back(f.exponent == 1 ? f.atom : SmoothExpr::pow(f.atom, f.exponent));
    terms.push_back(SmoothExpr::mul(std::move(factors)));
  }
  return SmoothExpr::add(std::move(terms));
}

std::pair<Exponents, Monomial> split_monomial(const Monomial& m, int n) {
  Exponents e(static_cast<std::size_t>(n), 0);
  Monomial rest;
  for (const auto& f : m) {
    if (f.atom.op() == Op::Var) {
      if (f.atom.index() > n) throw DimensionError("variable x" + std::to_string(f.atom.index()) + " beyond n");
      e[static_cast<std::size_t>(f.atom.index()) - 1] += f.exponent;
    } else {
      rest.push_back(f);
    }
  }
  return {std::move(e), std::move(rest)};
}

namespace {

// Builds the normalized head op(arg), folding the constant cases.
GenPoly head(Op op, int order, const GenPoly& arg) {
  if (arg.is_constant()) {
    const Rational c = arg.constant_value();
    switch (op) {
      case Op::Sin:
        if (c == 0) return GenPoly::constant(0);
        break;
      case Op::Cos:
      case Op::Exp:
        if (c == 0) return GenPoly::constant(1);
        break;
      case Op::Recip:
        if (c != 0) return GenPoly::constant(1 / c);
        break;
      case Op::Rho0:
        if (c <= 1) return GenPoly::constant(order == 0 ? 1 : 0);
        if (c >= 2) return GenPoly::constant(0);
        break;
      default:
        break;
    }
  }
  const SmoothExpr a = arg.to_expr();
  SmoothExpr h;
  switch (op) {
    case Op::Recip:
      h = SmoothExpr::recip(a);
      break;
    case Op::Sin:
      h = SmoothExpr::sin(a);
      break;
    case Op::Cos:
      h = SmoothExpr::cos(a);
      break;
    case Op::Exp:
      h = SmoothExpr::exp(a);
      break;
    case Op::Rho0:
      h = SmoothExpr::rho0(a, order);
      break;
    default:
      throw PreconditionError("not a transcendental head");
  }
  return GenPoly::atom(h);
}

GenPoly normal(const SmoothExpr& e, std::span<const GenPoly> subst, bool substituting) {
  switch (e.op()) {
    case Op::Var:
      if (!substituting) return GenPoly::atom(e);
      if (static_cast<std::size_t>(e.index()) > subst.size()) {
        throw ArityError("x" + std::to_string(e.index()) + " has no substitution (arity " +
                         std::to_string(subst.size()) + ")");
      }
      return subst[static_cast<std::size_t>(e.index()) - 1];
    case Op::Const:
      return GenPoly::constant(e.value());
    case Op::Pi:
      return GenPoly::atom(e);
    case Op::Add: {
      GenPoly s;
      for (const auto& a : e.args()) s += normal(a, subst, substituting);
      return s;
    }
    case Op::Mul: {
      GenPoly s = GenPoly::constant(1);
      for (const auto& a : e.args()) {
        s = s * normal(a, subst, substituting);
        if (s.is_zero()) break;
      }
      return s;
    }
    case Op::Neg:
      return normal(e.args()[0], subst, substituting) * Rational(-1);
    case Op::Pow:
      return normal(e.args()[0], subst, substituting).pow(e.index());
    case Op::Recip:
    case Op::Sin:
    case Op::Cos:
    case Op::Exp:
    case Op::Rho0:
      return head(e.op(), e.index(), normal(e.args()[0], subst, substituting));
    case Op::Compose: {
      std::vector<GenPoly> inner;
      inner.reserve(e.args().size() - 1);
      for (std::size_t j = 1; j < e.args().size(); ++j) inner.push_back(normal(e.args()[j], subst, substituting));
      return normal(e.args()[0], inner, true);
    }
  }
  return {};
}

}  // namespace

GenPoly to_genpoly(const SmoothExpr& e) { return normal(e, {}, false); }

GenPoly substitute(const SmoothExpr& e, std::span<const GenPoly> args) { return normal(e, args, true); }

GenPoly partial_genpoly(const SmoothExpr& e, int i) {
  switch (e.op()) {
    case Op::Var:
      return GenPoly::constant(e.index() == i ? 1 : 0);
    case Op::Const:
    case Op::Pi:
      return {};
    case Op::Add: {
      GenPoly s;
      for (const auto& a : e.args()) s += partial_genpoly(a, i);
      return s;
    }
    case Op::Mul: {
      const auto args = e.args();
      std::vector<GenPoly> parts;
      parts.reserve(args.size());
      for (const auto& a : args) parts.push_back(to_genpoly(a));
      GenPoly s;
      for (std::size_t k = 0; k < args.size(); ++k) {
        GenPoly dk = partial_genpoly(args[k], i);
        if (dk.is_zero()) continue;
        for (std::size_t l = 0; l < args.size(); ++l) {
          if (l != k) dk = dk * parts[l];
        }
        s += dk;
      }
      return s;
    }
    case Op::Neg:
      return partial_genpoly(e.args()[0], i) * Rational(-1);
    case Op::Pow: {
      const int k = e.index();
      if (k == 0) return {};
      GenPoly du = partial_genpoly(e.args()[0], i);
      if (du.is_zero()) return {};
      return to_genpoly(e.args()[0]).pow(k - 1) * du * Rational(k);
    }
    case Op::Recip:
    case Op::Sin:
    case Op::Cos:
    case Op::Exp:
    case Op::Rho0: {
      GenPoly du = partial_genpoly(e.args()[0], i);
      if (du.is_zero()) return {};
      const GenPoly u = to_genpoly(e.args()[0]);
      switch (e.op()) {
        case Op::Recip: {
          const GenPoly r = head(Op::Recip, 0, u);
          return r * r * du * Rational(-1);
        }
        case Op::Sin:
          return head(Op::Cos, 0, u) * du;
        case Op::Cos:
          return head(Op::Sin, 0, u) * du * Rational(-1);
        case Op::Exp:
          return head(Op::Exp, 0, u) * du;
        default:
          return head(Op::Rho0, e.index() + 1, u) * du;
      }
    }
    case Op::Compose: {
      const SmoothExpr& g = e.args()[0];
      const int m = e.index();
      std::vector<GenPoly> inner;
      inner.reserve(static_cast<std::size_t>(m));
      for (int j = 1; j <= m; ++j) inner.push_back(to_genpoly(e.args()[static_cast<std::size_t>(j)]));
      GenPoly s;
      for (int j = 1; j <= m; ++j) {
        GenPoly da = partial_genpoly(e.args()[static_cast<std::size_t>(j)], i);
        if (da.is_zero()) continue;
        const SmoothExpr dg = partial_genpoly(g, j).to_expr();
        s += substitute(dg, inner) * da;
      }
      return s;
    }
  }
  return {};
}

}  // namespace cinfty
