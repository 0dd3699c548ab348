// Recursive-descent parser for polynomial expressions.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | VAR INDEX | '(' expr ')'
//
// Juxtaposition ("2x0", "x0 x1") is rejected.

#include "apolar/errors.hpp"
#include "apolar/poly.hpp"

#include <cctype>

namespace apolar {
namespace {

class Parser {
public:
  Parser(std::string_view text, std::size_t nvars, char var)
      : text_(text), nvars_(nvars), var_(var) {}

  Poly parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Poly p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer_literal() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Poly divisor = unary();
        if (divisor.is_zero()) throw ParseError("division by zero", at);
        if (divisor.max_degree() != 0) throw ParseError("division by a non-constant", at);
        acc *= Rational(1) / divisor.terms().front().coefficient;
      } else {
        check_no_juxtaposition();
        return acc;
      }
    }
  }

  void check_no_juxtaposition() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == var_ || c == '(')
      fail("implicit multiplication is not allowed; use '*'");
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      Integer e = integer_literal();
      if (e > kMaxDegree) throw ParseError("exponent exceeds the degree cap", at);
      return pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Poly primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(nvars_, Rational(integer_literal()));
    }
    if (c == var_) {
      const std::size_t at = pos_;
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail(std::string("expected a variable index after '") + var_ + "'");
      Integer idx = integer_literal();
      if (idx >= nvars_)
        throw ParseError("variable " + std::string(1, var_) + idx.get_str() +
                             " out of range for " + std::to_string(nvars_) + " variables",
                         at);
      return Poly::variable(nvars_, idx.get_ui());
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t nvars_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::size_t nvars, char var) {
  return Parser(text, nvars, var).parse();
}

}  // namespace apolar
