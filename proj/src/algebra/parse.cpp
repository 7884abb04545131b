#include <cctype>

#include "limcyc/exact_poly.hpp"

namespace limcyc {

namespace {

// Recursive descent over: expr = term {(+|-) term}; term = factor {(*|/) factor};
// the right operand of / must be a nonzero constant.
// factor = unary [^ integer]; unary = [-|+] primary.
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExactPoly parse_all() {
    ExactPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExactPoly expr() {
    ExactPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  ExactPoly term() {
    ExactPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        ExactPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= ExactPoly(BigRational(1) / d.leading_coefficient());
      } else {
        return acc;
      }
    }
  }

  ExactPoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    ExactPoly base = primary();
    if (accept('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  ExactPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (accept('(')) {
      ExactPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ExactPoly(BigRational(BigInt(std::string(s_.substr(start, pos_ - start)))));
    }
    if (c == 'u' || c == 'x') {
      ++pos_;
      return ExactPoly::variable(Var::U);
    }
    if (c == 'v') {
      ++pos_;
      return ExactPoly::variable(Var::V);
    }
    if (c == 'g') {
      ++pos_;
      return ExactPoly::variable(Var::G);
    }
    if (s_.substr(pos_, 2) == "γ") {
      pos_ += 2;
      return ExactPoly::variable(Var::G);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

ExactPoly ExactPoly::parse(std::string_view expr) { return Parser(expr).parse_all(); }

}  // namespace limcyc
