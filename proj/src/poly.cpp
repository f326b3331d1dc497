#include "cinfty/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cinfty {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

std::vector<Exponents> monomials_up_to(int n, int max_degree) {
  std::vector<Exponents> out;
  if (max_degree < 0) return out;
  Exponents cur(n, 0);
  // depth-first enumeration of all exponent vectors with bounded total degree
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      cur[var] = k;
      self(self, var + 1, remaining - k);
    }
    cur[var] = 0;
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  Exponents e(nvars, 0);
  e.at(index - 1) = 1;
  return monomial(nvars, e, 1);
}

Poly Poly::monomial(int nvars, const Exponents& e, const Rational& c) {
  Poly p(nvars);
  p.add_term(e, c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::mul_term(const Exponents& e, const Rational& c) const {
  Poly out(n_);
  if (c == 0) return out;
  for (const auto& [m, a] : terms_) {
    Exponents prod(m);
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += e[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(prod), a * c);
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, a] : terms_) a *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(std::max(a.n_, b.n_));
  for (const auto& [e, c] : b.terms_) out += a.mul_term(e, c);
  return out;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

double Poly::evaluate(std::span<const double> point) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << i + 1;
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

}  // namespace cinfty
