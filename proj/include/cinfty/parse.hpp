#pragma once

#include <string_view>
#include <vector>

#include "cinfty/expr.hpp"

namespace cinfty {

/// Parses the expression grammar over variables <prefix>1..<prefix>n and
/// returns the normalized expression.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' integer)?
///   primary := integer ('/' integer)? | var | 'pi' | func '(' expr ')' | '(' expr ')'
///   func    := sin | cos | exp | recip | rho0 | rho0_<k>
///
/// Throws ParseError (with the byte offset) on syntax errors, unknown
/// identifiers and out-of-range variables.
SmoothExpr parse(std::string_view text, int n, char var_prefix = 'x');

/// One summand of a form literal: coefficient times dx_{basis[0]} ^ dx_{basis[1]} ^ ...
/// with the basis symbols in the order written.
struct FormTerm {
  std::vector<int> basis;
  SmoothExpr coefficient;
};

/// Parses a form literal such as "f * dx1^dx3 + g * dx2^dx3". Coefficients use
/// the expression grammar; a summand without basis symbols has degree 0.
std::vector<FormTerm> parse_form_terms(std::string_view text, int n);

}  // namespace cinfty
