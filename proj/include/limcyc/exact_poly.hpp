#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "limcyc/errors.hpp"

namespace limcyc {

using BigInt = mpz_class;
using BigRational = mpq_class;

enum class Var { U = 0, V = 1, G = 2 };

std::string var_name(Var v);

// Sparse polynomial in (u, v, gamma) with rational coefficients.
class ExactPoly {
 public:
  using Exponent = std::array<int, 3>;
  using Terms = std::map<Exponent, BigRational>;

  ExactPoly() = default;
  ExactPoly(long c);
  explicit ExactPoly(const BigRational& c);
  static ExactPoly variable(Var v);
  static ExactPoly monomial(const BigRational& c, Exponent e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree(Var v) const;
  std::vector<Var> variables() const;
  bool is_univariate_in(Var v) const;
  const Exponent& leading_exponent() const;  // lex (u, v, gamma)
  const BigRational& leading_coefficient() const;

  ExactPoly operator-() const;
  ExactPoly& operator+=(const ExactPoly& o);
  ExactPoly& operator-=(const ExactPoly& o);
  ExactPoly& operator*=(const ExactPoly& o);
  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.terms_ == b.terms_; }

  ExactPoly pow(unsigned n) const;
  ExactPoly derivative(Var v) const;
  ExactPoly substitute(Var v, const BigRational& value) const;
  ExactPoly substitute(Var v, const ExactPoly& value) const;
  // Exact division; throws VerificationFailure when the divisor does not divide.
  ExactPoly exact_divide(const ExactPoly& d) const;
  // Coefficients c_k with this = sum c_k var^k.
  std::vector<ExactPoly> coefficients_in(Var v) const;
  BigRational evaluate(const BigRational& u, const BigRational& v, const BigRational& g) const;

  // One term per line, "coeff u^a v^b γ^c", terms in descending lex order.
  std::string to_text() const;
  static ExactPoly from_text(std::string_view text);
  // Infix expressions over u, v, g (or γ) with + - * ^ and parentheses.
  static ExactPoly parse(std::string_view expr);

 private:
  void add_term(const Exponent& e, const BigRational& c);
  Terms terms_;
};

}  // namespace limcyc
