#pragma once

#include <utility>
#include <vector>

#include "limcyc/exact_poly.hpp"

namespace limcyc {

// Dense univariate polynomial with integer coefficients; c[i] multiplies x^i.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  // Clears denominators; p must not involve variables other than x.
  static IntPoly from_exact(const ExactPoly& p, Var x);
  static IntPoly from_rationals(const std::vector<BigRational>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigInt& operator[](int i) const { return c_[i]; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& lead() const { return c_.back(); }

  BigInt content() const;
  IntPoly primitive() const;  // positive leading coefficient
  IntPoly derivative() const;
  size_t max_bits() const;

  int sign_at(const BigRational& x) const;
  int sign_at_infinity(int direction) const;
  BigInt value_at(const BigInt& x) const;
  BigRational value_at(const BigRational& x) const;
  double value_double(double x) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& k, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  ExactPoly to_exact(Var x) const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
// Exact quotient a / b over Z; nullopt-like failure reported through ok.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b, bool& ok);
// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
IntPoly squarefree_part(const IntPoly& p);
// Yun decomposition: p = c * prod f_i^{m_i} with f_i square-free and coprime.
std::vector<std::pair<IntPoly, int>> squarefree_factorization(const IntPoly& p);

}  // namespace limcyc
