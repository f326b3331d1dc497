#include "cinfty/groebner.hpp"

#include <algorithm>
#include <utility>

namespace cinfty {
namespace {

Poly make_monic(Poly p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading_coefficient();
  return p *= inv;
}

Exponents quotient(const Exponents& num, const Exponents& den) {
  Exponents q(num);
  for (std::size_t i = 0; i < q.size(); ++i) q[i] -= den[i];
  return q;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  const Exponents l = lcm(f.leading_monomial(), g.leading_monomial());
  Poly a = f.mul_term(quotient(l, f.leading_monomial()), 1 / f.leading_coefficient());
  Poly b = g.mul_term(quotient(l, g.leading_monomial()), 1 / g.leading_coefficient());
  return a - b;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

}  // namespace

Poly reduce(const Poly& f, const std::vector<Poly>& basis) {
  Poly p = f;
  Poly remainder(f.nvars());
  while (!p.is_zero()) {
    const Exponents lm = p.leading_monomial();
    const Rational lc = p.leading_coefficient();
    bool divided = false;
    for (const Poly& g : basis) {
      if (divides(g.leading_monomial(), lm)) {
        p -= g.mul_term(quotient(lm, g.leading_monomial()), lc / g.leading_coefficient());
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return remainder;
}

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens) {
  std::vector<Poly> g;
  for (const Poly& p : gens) {
    if (!p.is_zero()) g.push_back(make_monic(p));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    // normal selection: smallest lcm first
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      return GrlexGreater{}(lcm(g[b.first].leading_monomial(), g[b.second].leading_monomial()),
                            lcm(g[a.first].leading_monomial(), g[a.second].leading_monomial()));
    });
    auto [i, j] = *best;
    pairs.erase(best);
    if (coprime(g[i].leading_monomial(), g[j].leading_monomial())) continue;
    Poly r = reduce(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(make_monic(std::move(r)));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // minimalize, then interreduce
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const bool div = divides(g[j].leading_monomial(), g[i].leading_monomial());
      if (div && (g[j].leading_monomial() != g[i].leading_monomial() || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Poly lead = Poly::monomial(minimal[i].nvars(), minimal[i].leading_monomial(), 1);
    reduced.push_back(lead + reduce(minimal[i] - lead, others));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return GrlexGreater{}(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

}  // namespace cinfty
