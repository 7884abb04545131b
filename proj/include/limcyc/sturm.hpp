#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limcyc/int_poly.hpp"

namespace limcyc {

// Interval endpoint: a rational or ±infinity.
struct Bound {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  BigRational value;

  static Bound neg_inf() { return {Kind::NegInf, 0}; }
  static Bound pos_inf() { return {Kind::PosInf, 0}; }
  static Bound at(const BigRational& v) { return {Kind::Finite, v}; }
  bool finite() const { return kind == Kind::Finite; }
  std::string to_string() const;
};

// Closed interval [lo, hi]; lo == hi marks an exact rational root.
struct RootInterval {
  BigRational lo, hi;
  bool exact() const { return lo == hi; }
  BigRational width() const { return hi - lo; }
  BigRational midpoint() const { return (lo + hi) / 2; }
  double approx() const { return midpoint().get_d(); }
  std::string to_string() const;
};

struct RootIsolation {
  std::vector<RootInterval> intervals;
  bool squarefree = true;  // intervals isolate roots of the square-free part
};

class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);  // p is reduced to its square-free part
  const IntPoly& base() const { return chain_.front(); }
  int variations(const Bound& x) const;
  // Distinct real roots in the half-open interval (lo, hi].
  int count(const Bound& lo, const Bound& hi) const;
  size_t length() const { return chain_.size(); }

 private:
  std::vector<IntPoly> chain_;
};

int sturm_count(const IntPoly& p, const Bound& lo, const Bound& hi);
// p must be univariate; constants have no roots; the zero polynomial throws.
int sturm_count(const ExactPoly& p, const Bound& lo, const Bound& hi);

// Isolating intervals for the distinct roots in (lo, hi], each of width <= max_width.
RootIsolation isolate_roots(const IntPoly& p, const Bound& lo, const Bound& hi,
                            const BigRational& max_width = BigRational(1, 1024));
RootIsolation isolate_roots(const ExactPoly& p, const Bound& lo, const Bound& hi,
                            const BigRational& max_width = BigRational(1, 1024));

// Sign-bisection refinement of an isolating interval of square-free p.
RootInterval refine_root(const IntPoly& squarefree, RootInterval iv, const BigRational& max_width);

// Integer bound on the absolute value of every real root.
BigInt cauchy_bound(const IntPoly& p);

}  // namespace limcyc
