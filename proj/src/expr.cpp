#include "cinfty/expr.hpp"

#include <algorithm>
#include <cmath>

#include "cinfty/error.hpp"
#include "cinfty/genpoly.hpp"
#include "cinfty/smooth_step.hpp"

namespace cinfty {
namespace {

SmoothExpr node_of(Op op, std::vector<SmoothExpr> args, int index = 0) {
  ExprNode n;
  n.op = op;
  n.index = index;
  n.args = std::move(args);
  return SmoothExpr::from_node(std::move(n));
}

}  // namespace

SmoothExpr SmoothExpr::from_node(ExprNode n) { return SmoothExpr(std::make_shared<const ExprNode>(std::move(n))); }

SmoothExpr::SmoothExpr() : SmoothExpr(constant(Rational(0))) {}

SmoothExpr SmoothExpr::var(int index) {
  if (index < 1) throw IndexError("variable index must be >= 1, got " + std::to_string(index));
  return node_of(Op::Var, {}, index);
}

SmoothExpr SmoothExpr::constant(const Rational& c) {
  ExprNode n;
  n.op = Op::Const;
  n.value = c;
  n.value.canonicalize();
  return from_node(std::move(n));
}

SmoothExpr SmoothExpr::pi() { return node_of(Op::Pi, {}); }

SmoothExpr SmoothExpr::add(std::vector<SmoothExpr> terms) {
  if (terms.empty()) return constant(0);
  if (terms.size() == 1) return terms.front();
  return node_of(Op::Add, std::move(terms));
}

SmoothExpr SmoothExpr::mul(std::vector<SmoothExpr> factors) {
  if (factors.empty()) return constant(1);
  if (factors.size() == 1) return factors.front();
  return node_of(Op::Mul, std::move(factors));
}

SmoothExpr SmoothExpr::neg(const SmoothExpr& e) { return node_of(Op::Neg, {e}); }

SmoothExpr SmoothExpr::pow(const SmoothExpr& base, int exponent) {
  if (exponent < 0) throw PreconditionError("exponent must be a nonnegative integer");
  return node_of(Op::Pow, {base}, exponent);
}

SmoothExpr SmoothExpr::recip(const SmoothExpr& e) { return node_of(Op::Recip, {e}); }
SmoothExpr SmoothExpr::sin(const SmoothExpr& e) { return node_of(Op::Sin, {e}); }
SmoothExpr SmoothExpr::cos(const SmoothExpr& e) { return node_of(Op::Cos, {e}); }
SmoothExpr SmoothExpr::exp(const SmoothExpr& e) { return node_of(Op::Exp, {e}); }

SmoothExpr SmoothExpr::rho0(const SmoothExpr& e, int derivative_order) {
  if (derivative_order < 0) throw PreconditionError("derivative order must be >= 0");
  return node_of(Op::Rho0, {e}, derivative_order);
}

SmoothExpr operator+(const SmoothExpr& a, const SmoothExpr& b) { return SmoothExpr::add({a, b}); }
SmoothExpr operator-(const SmoothExpr& a, const SmoothExpr& b) { return SmoothExpr::add({a, SmoothExpr::neg(b)}); }
SmoothExpr operator*(const SmoothExpr& a, const SmoothExpr& b) { return SmoothExpr::mul({a, b}); }

int compare(const SmoothExpr& a, const SmoothExpr& b) {
  if (a.node() == b.node()) return 0;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  if (a.op() == Op::Const) {
    const int c = cmp(a.value(), b.value());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  const auto aa = a.args(), ba = b.args();
  const std::size_t len = std::min(aa.size(), ba.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (int c = compare(aa[i], ba[i]); c != 0) return c;
  }
  if (aa.size() != ba.size()) return aa.size() < ba.size() ? -1 : 1;
  return 0;
}

int max_variable(const SmoothExpr& e) {
  switch (e.op()) {
    case Op::Var:
      return e.index();
    case Op::Const:
    case Op::Pi:
      return 0;
    case Op::Compose: {
      int m = 0;
      for (std::size_t i = 1; i < e.args().size(); ++i) m = std::max(m, max_variable(e.args()[i]));
      return m;
    }
    default: {
      int m = 0;
      for (const auto& a : e.args()) m = std::max(m, max_variable(a));
      return m;
    }
  }
}

bool is_polynomial(const SmoothExpr& e) {
  switch (e.op()) {
    case Op::Var:
    case Op::Const:
      return true;
    case Op::Add:
    case Op::Mul:
    case Op::Neg:
    case Op::Pow:
    case Op::Compose:
      return std::all_of(e.args().begin(), e.args().end(), [](const SmoothExpr& a) { return is_polynomial(a); });
    default:
      return false;
  }
}

SmoothExpr compose(const SmoothExpr& g, std::vector<SmoothExpr> args) {
  const int m = static_cast<int>(args.size());
  if (max_variable(g) > m) {
    throw ArityError("outer function uses x" + std::to_string(max_variable(g)) + " but only " +
                     std::to_string(m) + " arguments were given");
  }
  if (m == 0) return g;
  std::vector<SmoothExpr> all;
  all.reserve(args.size() + 1);
  all.push_back(g);
  for (auto& a : args) all.push_back(std::move(a));
  return node_of(Op::Compose, std::move(all), m);
}

SmoothExpr partial(const SmoothExpr& e, int i, int n) {
  if (i < 1 || i > n) {
    throw IndexError("partial index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
  return partial_genpoly(e, i).to_expr();
}

SmoothExpr normalize(const SmoothExpr& e) { return to_genpoly(e).to_expr(); }

namespace {

double eval_rec(const SmoothExpr& e, std::span<const double> p) {
  switch (e.op()) {
    case Op::Var:
      if (static_cast<std::size_t>(e.index()) > p.size()) {
        throw DimensionError("x" + std::to_string(e.index()) + " evaluated at a point of dimension " +
                             std::to_string(p.size()));
      }
      return p[static_cast<std::size_t>(e.index()) - 1];
    case Op::Const:
      return e.value().get_d();
    case Op::Pi:
      return M_PI;
    case Op::Add: {
      double s = 0.0;
      for (const auto& a : e.args()) s += eval_rec(a, p);
      return s;
    }
    case Op::Mul: {
      double s = 1.0;
      for (const auto& a : e.args()) s *= eval_rec(a, p);
      return s;
    }
    case Op::Neg:
      return -eval_rec(e.args()[0], p);
    case Op::Pow: {
      const double b = eval_rec(e.args()[0], p);
      double r = 1.0;
      for (int k = 0; k < e.index(); ++k) r *= b;
      return r;
    }
    case Op::Recip: {
      const double u = eval_rec(e.args()[0], p);
      if (u == 0.0) throw DomainError("recip argument vanishes at the evaluation point");
      return 1.0 / u;
    }
    case Op::Sin:
      return std::sin(eval_rec(e.args()[0], p));
    case Op::Cos:
      return std::cos(eval_rec(e.args()[0], p));
    case Op::Exp:
      return std::exp(eval_rec(e.args()[0], p));
    case Op::Rho0:
      return rho0(eval_rec(e.args()[0], p), e.index());
    case Op::Compose: {
      std::vector<double> q;
      q.reserve(e.args().size() - 1);
      for (std::size_t j = 1; j < e.args().size(); ++j) q.push_back(eval_rec(e.args()[j], p));
      return eval_rec(e.args()[0], q);
    }
  }
  return 0.0;
}

}  // namespace

double evaluate(const SmoothExpr& e, std::span<const double> p) {
  const double v = eval_rec(e, p);
  if (!std::isfinite(v)) throw DomainError("non-finite value during evaluation");
  return v;
}

Rational evaluate_exact(const SmoothExpr& e, std::span<const Rational> p) {
  const GenPoly g = to_genpoly(e);
  if (!g.is_polynomial()) throw PreconditionError("exact evaluation needs a polynomial expression");
  if (g.max_variable() > static_cast<int>(p.size())) throw DimensionError("point dimension too small");
  return g.to_poly(static_cast<int>(p.size())).evaluate(p);
}

Poly to_poly(const SmoothExpr& e, int n) {
  const GenPoly g = to_genpoly(e);
  if (!g.is_polynomial()) throw PreconditionError("expression is not polynomial: " + to_string(e));
  if (g.max_variable() > n) throw DimensionError("expression uses a variable beyond x" + std::to_string(n));
  return g.to_poly(n);
}

SmoothExpr from_poly(const Poly& p) { return GenPoly::from_poly(p).to_expr(); }

namespace {

bool is_primary(const SmoothExpr& e) {
  switch (e.op()) {
    case Op::Var:
    case Op::Pi:
    case Op::Recip:
    case Op::Sin:
    case Op::Cos:
    case Op::Exp:
    case Op::Rho0:
      return true;
    case Op::Const:
      return e.value() >= 0 && e.value().get_den() == 1;
    default:
      return false;
  }
}

std::string print(const SmoothExpr& e, char prefix);

std::string call(const char* name, const SmoothExpr& arg, char prefix) {
  return std::string(name) + "(" + print(arg, prefix) + ")";
}

std::string print(const SmoothExpr& e, char prefix) {
  switch (e.op()) {
    case Op::Var:
      return std::string(1, prefix) + std::to_string(e.index());
    case Op::Const:
      return e.value().get_str();
    case Op::Pi:
      return "pi";
    case Op::Add: {
      std::string out;
      for (std::size_t k = 0; k < e.args().size(); ++k) {
        const SmoothExpr& a = e.args()[k];
        std::string s = a.op() == Op::Add ? "(" + print(a, prefix) + ")" : print(a, prefix);
        if (k == 0) {
          out = s;
        } else if (s.front() == '-') {
          out += " - " + s.substr(1);
        } else {
          out += " + " + s;
        }
      }
      return out;
    }
    case Op::Mul: {
      std::string out;
      const auto args = e.args();
      std::size_t start = 0;
      if (args[0].op() == Op::Const && args[0].value() == -1 && args.size() > 1) {
        out = "-";
        start = 1;
      }
      for (std::size_t k = start; k < args.size(); ++k) {
        const SmoothExpr& a = args[k];
        std::string s = print(a, prefix);
        const bool leading_const = (k == 0 && a.op() == Op::Const);
        const bool needs_parens = !leading_const && (a.op() == Op::Add || a.op() == Op::Neg ||
                                                     (a.op() == Op::Const && a.value() < 0) ||
                                                     (k > start && a.op() == Op::Mul));
        if (needs_parens) s = "(" + s + ")";
        if (k > start) out += "*";
        out += s;
      }
      return out;
    }
    case Op::Neg: {
      const SmoothExpr& a = e.args()[0];
      const bool parens = a.op() == Op::Add || a.op() == Op::Neg || (a.op() == Op::Const && a.value() < 0);
      return parens ? "-(" + print(a, prefix) + ")" : "-" + print(a, prefix);
    }
    case Op::Pow: {
      const SmoothExpr& a = e.args()[0];
      std::string base = is_primary(a) ? print(a, prefix) : "(" + print(a, prefix) + ")";
      return base + "^" + std::to_string(e.index());
    }
    case Op::Recip:
      return call("recip", e.args()[0], prefix);
    case Op::Sin:
      return call("sin", e.args()[0], prefix);
    case Op::Cos:
      return call("cos", e.args()[0], prefix);
    case Op::Exp:
      return call("exp", e.args()[0], prefix);
    case Op::Rho0:
      if (e.index() == 0) return call("rho0", e.args()[0], prefix);
      return call(("rho0_" + std::to_string(e.index())).c_str(), e.args()[0], prefix);
    case Op::Compose:
      return print(normalize(e), prefix);
  }
  return "";
}

}  // namespace

std::string to_string(const SmoothExpr& e, char var_prefix) {
  return print(e, var_prefix);
}

}  // namespace cinfty
