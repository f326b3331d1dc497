#pragma once

#include <vector>

#include "cinfty/poly.hpp"

namespace cinfty {

/// Reduced, monic Gröbner basis of the ideal generated by `gens` (grlex order).
/// Zero generators are dropped; the basis of the zero ideal is empty.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens);

/// Full normal form of f with respect to `basis`. When `basis` is a Gröbner
/// basis the result is zero exactly when f lies in the ideal.
Poly reduce(const Poly& f, const std::vector<Poly>& basis);

}  // namespace cinfty
