#include "limcyc/sturm.hpp"

#include <sstream>

namespace limcyc {

std::string Bound::to_string() const {
  switch (kind) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: return value.get_str();
  }
  return "?";
}

std::string RootInterval::to_string() const {
  std::ostringstream os;
  os << "[" << lo.get_str() << ", " << hi.get_str() << "]";
  return os.str();
}

namespace {

Var only_variable(const ExactPoly& p) {
  auto vars = p.variables();
  if (vars.size() > 1) throw Error(ErrorKind::DomainError, "polynomial is not univariate");
  return vars.empty() ? Var::U : vars.front();
}

int sign_at(const IntPoly& p, const Bound& x) {
  switch (x.kind) {
    case Bound::Kind::NegInf: return p.sign_at_infinity(-1);
    case Bound::Kind::PosInf: return p.sign_at_infinity(+1);
    case Bound::Kind::Finite: return p.sign_at(x.value);
  }
  return 0;
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm chain of the zero polynomial");
  chain_.push_back(squarefree_part(p));
  if (chain_[0].degree() == 0) return;
  chain_.push_back(chain_[0].derivative().primitive());
  while (chain_.back().degree() > 0) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem scales by lc(b)^k; undo a negative factor, then divide by the positive content.
    if (sgn(b.lead()) < 0 && (a.degree() - b.degree() + 1) % 2 == 1) r = -r;
    BigInt c = r.content();
    std::vector<BigInt> next = r.coeffs();
    for (auto& x : next) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      x = -x;
    }
    chain_.emplace_back(std::move(next));
  }
}

int SturmChain::variations(const Bound& x) const {
  int v = 0, last = 0;
  for (const auto& p : chain_) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmChain::count(const Bound& lo, const Bound& hi) const {
  if (chain_[0].degree() == 0) return 0;
  return variations(lo) - variations(hi);
}

int sturm_count(const IntPoly& p, const Bound& lo, const Bound& hi) { return SturmChain(p).count(lo, hi); }

int sturm_count(const ExactPoly& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "sturm_count of the zero polynomial");
  return sturm_count(IntPoly::from_exact(p, only_variable(p)), lo, hi);
}

BigInt cauchy_bound(const IntPoly& p) {
  BigRational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    BigRational r(abs(p[i]), abs(p.lead()));
    if (r > m) m = r;
  }
  BigInt c;
  mpz_cdiv_q(c.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
  return c + 1;
}

RootInterval refine_root(const IntPoly& sqf, RootInterval iv, const BigRational& max_width) {
  if (iv.exact()) return iv;
  int slo = sqf.sign_at(iv.lo);
  while (iv.width() > max_width) {
    BigRational m = iv.midpoint();
    int sm = sqf.sign_at(m);
    if (sm == 0) return {m, m};
    if (sm == slo) iv.lo = m;
    else iv.hi = m;
  }
  return iv;
}

namespace {

struct Isolator {
  const SturmChain& chain;
  const IntPoly& sqf;
  BigRational max_width;
  std::vector<RootInterval> out;

  int count(const BigRational& a, const BigRational& b) const { return chain.count(Bound::at(a), Bound::at(b)); }

  // Half-width eps around a root m such that [m-eps, m+eps] holds no other root and no root endpoint.
  BigRational clear_radius(const BigRational& m, BigRational eps) const {
    for (;;) {
      if (sqf.sign_at(m - eps) != 0 && sqf.sign_at(m + eps) != 0 && count(m - eps, m + eps) == 1) return eps;
      eps /= 2;
    }
  }

  // (a, b] with p(a), p(b) != 0 and n roots inside.
  void run(const BigRational& a, const BigRational& b, int n) {
    if (n == 0) return;
    if (n == 1) {
      out.push_back(refine_root(sqf, {a, b}, max_width));
      return;
    }
    BigRational m = (a + b) / 2;
    if (sqf.sign_at(m) == 0) {
      BigRational eps = clear_radius(m, (b - a) / 4);
      run(a, m - eps, count(a, m - eps));
      out.push_back({m, m});
      run(m + eps, b, count(m + eps, b));
      return;
    }
    int nl = count(a, m);
    run(a, m, nl);
    run(m, b, n - nl);
  }
};

}  // namespace

RootIsolation isolate_roots(const IntPoly& p, const Bound& lo, const Bound& hi, const BigRational& max_width) {
  SturmChain chain(p);
  const IntPoly& sqf = chain.base();
  RootIsolation result;
  if (sqf.degree() <= 0) return result;
  BigInt cb = cauchy_bound(sqf);
  BigRational a = lo.finite() ? lo.value : BigRational(-cb);
  BigRational b = hi.finite() ? hi.value : BigRational(cb);
  if (lo.kind == Bound::Kind::PosInf || hi.kind == Bound::Kind::NegInf || a >= b) return result;
  Isolator iso{chain, sqf, max_width, {}};
  bool hi_root = sqf.sign_at(b) == 0;
  if (sqf.sign_at(a) == 0) {
    // a is excluded from (a, b]; step right past it.
    BigRational eps = iso.clear_radius(a, (b - a) / 2);
    a += eps;
  }
  if (hi_root) {
    BigRational eps = iso.clear_radius(b, (b - a) / 2);
    b -= eps;
  }
  if (a < b) iso.run(a, b, iso.count(a, b));
  if (hi_root) iso.out.push_back({hi.value, hi.value});
  result.intervals = std::move(iso.out);
  return result;
}

RootIsolation isolate_roots(const ExactPoly& p, const Bound& lo, const Bound& hi, const BigRational& max_width) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "isolate_roots of the zero polynomial");
  return isolate_roots(IntPoly::from_exact(p, only_variable(p)), lo, hi, max_width);
}

}  // namespace limcyc
