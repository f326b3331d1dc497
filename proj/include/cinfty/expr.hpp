#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cinfty/poly.hpp"

namespace cinfty {

/// Node kinds of a smooth expression. The order of the enumerators is the
/// canonical order used by compare().
enum class Op {
  Var,
  Const,
  Pi,
  Add,
  Mul,
  Neg,
  Pow,
  Recip,
  Sin,
  Cos,
  Exp,
  Rho0,
  Compose,
};

class SmoothExpr;

struct ExprNode {
  Op op = Op::Const;
  // Var: 1-based variable index. Pow: exponent. Rho0: derivative order.
  // Compose: arity m of the outer function.
  int index = 0;
  Rational value;  // Const only
  // Operands. For Compose, args[0] is the outer function (over m variables)
  // and args[1..m] are the arguments substituted for its variables.
  std::vector<SmoothExpr> args;
};

/// An immutable element of the free ring C∞(R^n): a symbolic expression over
/// variables x1..xn built from rational constants, +, *, unary minus,
/// nonnegative integer powers, recip, sin, cos, exp, the smooth step rho0 and
/// composition. Copies share structure.
///
/// recip carries an assumption that its argument does not vanish; evaluate()
/// reports a DomainError where it does.
class SmoothExpr {
 public:
  SmoothExpr();  // the constant 0

  static SmoothExpr var(int index);
  static SmoothExpr constant(const Rational& c);
  static SmoothExpr constant(long c) { return constant(Rational(c)); }
  static SmoothExpr pi();
  static SmoothExpr add(std::vector<SmoothExpr> terms);
  static SmoothExpr mul(std::vector<SmoothExpr> factors);
  static SmoothExpr neg(const SmoothExpr& e);
  static SmoothExpr pow(const SmoothExpr& base, int exponent);
  static SmoothExpr recip(const SmoothExpr& e);
  static SmoothExpr sin(const SmoothExpr& e);
  static SmoothExpr cos(const SmoothExpr& e);
  static SmoothExpr exp(const SmoothExpr& e);
  static SmoothExpr rho0(const SmoothExpr& e, int derivative_order = 0);

  Op op() const { return node_->op; }
  int index() const { return node_->index; }
  const Rational& value() const { return node_->value; }
  std::span<const SmoothExpr> args() const { return node_->args; }
  const ExprNode* node() const { return node_.get(); }

  bool is_constant() const { return op() == Op::Const; }
  bool is_zero() const { return op() == Op::Const && value() == 0; }

  /// Wraps a node without any simplification.
  static SmoothExpr from_node(ExprNode n);

  friend SmoothExpr operator+(const SmoothExpr& a, const SmoothExpr& b);
  friend SmoothExpr operator-(const SmoothExpr& a, const SmoothExpr& b);
  friend SmoothExpr operator*(const SmoothExpr& a, const SmoothExpr& b);
  SmoothExpr operator-() const { return neg(*this); }

 private:
  explicit SmoothExpr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}

  std::shared_ptr<const ExprNode> node_;
};

/// Total structural order on expressions (negative, zero, positive).
int compare(const SmoothExpr& a, const SmoothExpr& b);
inline bool operator==(const SmoothExpr& a, const SmoothExpr& b) { return compare(a, b) == 0; }
inline bool operator<(const SmoothExpr& a, const SmoothExpr& b) { return compare(a, b) < 0; }

/// Largest variable index occurring free in e (0 when e is constant).
int max_variable(const SmoothExpr& e);

/// True when e contains only variables, constants, +, *, unary minus and powers.
bool is_polynomial(const SmoothExpr& e);

/// Composition g(args[0], ..., args[m-1]); the i-th variable of g is replaced
/// by args[i-1]. Throws ArityError when g uses a variable beyond m.
SmoothExpr compose(const SmoothExpr& g, std::vector<SmoothExpr> args);

/// Exact symbolic partial derivative with respect to x_i, in normal form.
/// Throws IndexError unless 1 <= i <= n.
SmoothExpr partial(const SmoothExpr& e, int i, int n);

/// Canonical form: flattens sums and products, folds rational constants,
/// expands polynomial structure and orders monomials. Transcendental subterms
/// are kept as atoms with normalized arguments. Idempotent.
SmoothExpr normalize(const SmoothExpr& e);

/// IEEE double value of e at p. Throws DimensionError when e uses a variable
/// beyond p.size() and DomainError when a recip argument vanishes.
double evaluate(const SmoothExpr& e, std::span<const double> p);

/// Exact value when e is a polynomial and p rational; throws PreconditionError otherwise.
Rational evaluate_exact(const SmoothExpr& e, std::span<const Rational> p);

/// Polynomial conversion; throws PreconditionError for non-polynomial e.
Poly to_poly(const SmoothExpr& e, int n);
SmoothExpr from_poly(const Poly& p);

/// Prints e in the expression grammar, using `var_prefix` for variable names.
std::string to_string(const SmoothExpr& e, char var_prefix = 'x');

}  // namespace cinfty
