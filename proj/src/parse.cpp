#include "cinfty/parse.hpp"

#include <cctype>
#include <string>

#include "cinfty/error.hpp"

namespace cinfty {
namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

class Parser {
 public:
  Parser(std::string_view text, int n, char prefix, bool forms) : text_(text), n_(n), prefix_(prefix), forms_(forms) {}

  SmoothExpr parse_expression() {
    SmoothExpr e = expr();
    expect_end();
    return normalize(e);
  }

  std::vector<FormTerm> parse_form() {
    std::vector<FormTerm> out;
    bool negate = false;
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      negate = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      FormTerm t = form_term();
      if (negate) t.coefficient = -t.coefficient;
      t.coefficient = normalize(t.coefficient);
      out.push_back(std::move(t));
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        negate = false;
      } else if (peek() == '-') {
        ++pos_;
        negate = true;
      } else {
        break;
      }
    }
    expect_end();
    return out;
  }

 private:
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void expect_end() {
    if (peek() != '\0') throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
  }

  std::string integer_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  // True when the upcoming identifier is a basis symbol dx<i>.
  bool at_basis_symbol() {
    skip_ws();
    if (!forms_ || text_.substr(pos_, 2) != "dx") return false;
    std::size_t p = pos_ + 2;
    if (p >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[p]))) return false;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    return p == text_.size() || !(std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_');
  }

  int basis_symbol() {
    skip_ws();
    const std::size_t start = pos_;
    pos_ += 2;
    const int i = std::stoi(integer_literal());
    if (i < 1 || i > n_) throw ParseError("basis symbol dx" + std::to_string(i) + " out of range", start);
    return i;
  }

  FormTerm form_term() {
    FormTerm t;
    std::vector<SmoothExpr> factors;
    bool have_basis = false;
    for (;;) {
      if (at_basis_symbol()) {
        if (have_basis) throw ParseError("two wedge words in one summand", pos_);
        have_basis = true;
        t.basis.push_back(basis_symbol());
        while (peek() == '^') {
          ++pos_;
          if (!at_basis_symbol()) throw ParseError("expected a basis symbol after '^'", pos_);
          t.basis.push_back(basis_symbol());
        }
      } else {
        factors.push_back(unary());
      }
      if (peek() != '*') break;
      ++pos_;
    }
    t.coefficient = SmoothExpr::mul(std::move(factors));
    return t;
  }

  SmoothExpr expr() {
    std::vector<SmoothExpr> terms{term()};
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        terms.push_back(term());
      } else if (c == '-') {
        ++pos_;
        terms.push_back(-term());
      } else {
        break;
      }
    }
    return SmoothExpr::add(std::move(terms));
  }

  SmoothExpr term() {
    std::vector<SmoothExpr> factors{unary()};
    while (peek() == '*') {
      ++pos_;
      factors.push_back(unary());
    }
    return SmoothExpr::mul(std::move(factors));
  }

  SmoothExpr unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  SmoothExpr power() {
    SmoothExpr base = primary();
    if (peek() == '^') {
      ++pos_;
      if (peek() == '-') throw ParseError("exponents must be nonnegative integers", pos_);
      const std::size_t at = pos_;
      const std::string digits = integer_literal();
      if (digits.size() > 6) throw ParseError("exponent too large", at);
      return SmoothExpr::pow(base, std::stoi(digits));
    }
    return base;
  }

  SmoothExpr primary() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational v(integer_literal());
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        Rational d(integer_literal());
        if (d == 0) throw ParseError("zero denominator", at);
        v /= d;
      }
      return SmoothExpr::constant(v);
    }
    if (c == '(') {
      ++pos_;
      SmoothExpr e = expr();
      expect(')');
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) throw ParseError(std::string("unexpected '") + c + "'", pos_);
    const std::string id = identifier();
    if (id == "pi") return SmoothExpr::pi();
    if (id.size() > 1 && id[0] == prefix_ && all_digits(id.substr(1))) {
      const long i = std::stol(id.substr(1));
      if (i < 1 || i > n_) {
        throw ParseError("variable " + id + " out of range 1.." + std::to_string(n_), start);
      }
      return SmoothExpr::var(static_cast<int>(i));
    }
    int order = -1;
    Op op = Op::Const;
    if (id == "sin") {
      op = Op::Sin;
    } else if (id == "cos") {
      op = Op::Cos;
    } else if (id == "exp") {
      op = Op::Exp;
    } else if (id == "recip") {
      op = Op::Recip;
    } else if (id == "rho0") {
      op = Op::Rho0;
      order = 0;
    } else if (id.rfind("rho0_", 0) == 0 && id.size() > 5 && all_digits(id.substr(5))) {
      op = Op::Rho0;
      order = std::stoi(id.substr(5));
    } else {
      throw ParseError("unknown identifier '" + id + "'", start);
    }
    expect('(');
    SmoothExpr arg = expr();
    expect(')');
    switch (op) {
      case Op::Sin:
        return SmoothExpr::sin(arg);
      case Op::Cos:
        return SmoothExpr::cos(arg);
      case Op::Exp:
        return SmoothExpr::exp(arg);
      case Op::Recip:
        return SmoothExpr::recip(arg);
      default:
        return SmoothExpr::rho0(arg, order);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int n_;
  char prefix_;
  bool forms_;
};

}  // namespace

SmoothExpr parse(std::string_view text, int n, char var_prefix) {
  return Parser(text, n, var_prefix, false).parse_expression();
}

std::vector<FormTerm> parse_form_terms(std::string_view text, int n) { return Parser(text, n, 'x', true).parse_form(); }

}  // namespace cinfty
