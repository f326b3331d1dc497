#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cinfty/poly.hpp"

namespace cinfty {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// A particular solution of A x = b (free variables set to zero), or nullopt
/// when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Basis of {x : A x = 0}, one vector per free column, in column order.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);

}  // namespace cinfty
