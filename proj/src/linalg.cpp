#include "cinfty/linalg.hpp"

#include <utility>

namespace cinfty {
namespace {

struct Echelon {
  RationalMatrix m;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form of [A | extra columns]; pivots are searched only in
// the first `pivot_limit` columns.
Echelon rref(RationalMatrix m, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_limit && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (m(row, c) != 0) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  Echelon e = rref(std::move(aug), a.cols());
  // an inconsistent row reads 0 = nonzero
  for (std::size_t r = e.pivot_cols.size(); r < e.m.rows(); ++r) {
    if (e.m(r, a.cols()) != 0) return std::nullopt;
  }
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.m(r, a.cols());
  return x;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
  Echelon e = rref(a, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& a) { return rref(a, a.cols()).pivot_cols.size(); }

}  // namespace cinfty
