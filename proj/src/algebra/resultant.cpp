#include "limcyc/resultant.hpp"

#include <gmp.h>

#include <cmath>
#include <cstdint>

namespace limcyc {

namespace {

template <class T, class Div>
T bareiss_det(std::vector<std::vector<T>> m, Div exact_div) {
  const size_t n = m.size();
  if (n == 0) return T(1);
  int sign = 1;
  T prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == T(0)) {
      size_t i = k + 1;
      while (i < n && m[i][k] == T(0)) ++i;
      if (i == n) return T(0);
      std::swap(m[i], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = T(0);
    }
    prev = m[k][k];
  }
  return sign < 0 ? T(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

template <class T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& p, const std::vector<T>& q) {
  const int m = static_cast<int>(p.size()) - 1, n = static_cast<int>(q.size()) - 1;
  std::vector<std::vector<T>> s(m + n, std::vector<T>(m + n, T(0)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = p[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = q[n - k];
  return s;
}

BigInt int_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Montgomery arithmetic modulo an odd prime below 2^62.
struct Mont {
  using u128 = unsigned __int128;
  uint64_t p, pinv, r2;
  explicit Mont(uint64_t prime) : p(prime) {
    uint64_t inv = 1;
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    pinv = ~inv + 1;  // -p^{-1} mod 2^64
    u128 r = (static_cast<u128>(1) << 64) % p;
    r2 = static_cast<uint64_t>(r * r % p);
  }
  uint64_t reduce(u128 t) const {
    uint64_t m = static_cast<uint64_t>(t) * pinv;
    uint64_t r = static_cast<uint64_t>((t + static_cast<u128>(m) * p) >> 64);
    return r >= p ? r - p : r;
  }
  uint64_t mul(uint64_t a, uint64_t b) const { return reduce(static_cast<u128>(a) * b); }
  uint64_t to(uint64_t a) const { return mul(a % p, r2); }
  uint64_t from(uint64_t a) const { return reduce(a); }
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = to(1);
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
};

uint64_t det_mod(std::vector<std::vector<uint64_t>>& m, const Mont& mo) {
  const size_t n = m.size();
  uint64_t det = mo.to(1);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = mo.sub(0, det);
    }
    det = mo.mul(det, m[k][k]);
    uint64_t inv = mo.inv(m[k][k]);
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      uint64_t f = mo.mul(m[i][k], inv);
      for (size_t j = k + 1; j < n; ++j) m[i][j] = mo.sub(m[i][j], mo.mul(f, m[k][j]));
    }
  }
  return det;
}

double log2_norm1(const std::vector<IntPoly>& coeffs) {
  BigInt s = 0;
  for (const auto& c : coeffs)
    for (const auto& x : c.coeffs()) s += abs(x);
  if (s == 0) return 0;
  long e = 0;
  double d = mpz_get_d_2exp(&e, s.get_mpz_t());
  return std::log2(d) + static_cast<double>(e);
}

}  // namespace

ExactPoly resultant(const ExactPoly& p, const ExactPoly& q, Var x) {
  if (p.degree(x) <= 0 || q.degree(x) <= 0)
    throw Error(ErrorKind::DegreeZero, "resultant needs positive degree in " + var_name(x));
  auto s = sylvester(p.coefficients_in(x), q.coefficients_in(x));
  return bareiss_det(std::move(s), [](const ExactPoly& a, const ExactPoly& b) { return a.exact_divide(b); });
}

BigInt resultant(const std::vector<BigInt>& p, const std::vector<BigInt>& q) {
  return bareiss_det(sylvester(p, q), int_div);
}

BigRational resultant(const std::vector<BigRational>& p, const std::vector<BigRational>& q) {
  // Scale each polynomial to integers; Res(a p, b q) = a^deg(q) b^deg(p) Res(p, q).
  auto scale = [](const std::vector<BigRational>& c, BigInt& l) {
    l = 1;
    for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> out;
    for (const auto& x : c) out.push_back(x.get_num() * (l / x.get_den()));
    return out;
  };
  BigInt lp, lq;
  auto ip = scale(p, lp);
  auto iq = scale(q, lq);
  BigInt den, t;
  mpz_pow_ui(den.get_mpz_t(), lp.get_mpz_t(), q.size() - 1);
  mpz_pow_ui(t.get_mpz_t(), lq.get_mpz_t(), p.size() - 1);
  den *= t;
  BigRational r(resultant(ip, iq), den);
  r.canonicalize();
  return r;
}

BigRational resultant_at(const ExactPoly& p, const ExactPoly& q, Var x, const std::array<BigRational, 3>& point) {
  if (p.degree(x) <= 0 || q.degree(x) <= 0)
    throw Error(ErrorKind::DegreeZero, "resultant needs positive degree in " + var_name(x));
  auto eval = [&](const ExactPoly& f) {
    std::vector<BigRational> out;
    std::array<BigRational, 3> pt = point;
    pt[static_cast<int>(x)] = 0;
    for (const auto& c : f.coefficients_in(x)) out.push_back(c.evaluate(pt[0], pt[1], pt[2]));
    return out;
  };
  return resultant(eval(p), eval(q));
}

std::vector<IntPoly> integer_coefficients(const ExactPoly& p, Var x, Var keep) {
  BigInt l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<IntPoly> out;
  for (const auto& c : p.coefficients_in(x)) {
    std::vector<BigInt> v(std::max(0, c.degree(keep)) + 1);
    for (const auto& [e, k] : c.terms()) {
      if (e[0] + e[1] + e[2] != e[static_cast<int>(keep)])
        throw Error(ErrorKind::DomainError, "polynomial is not bivariate in the given variables");
      v[e[static_cast<int>(keep)]] = k.get_num() * (l / k.get_den());
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

int resultant_degree_bound(const ExactPoly& p, const ExactPoly& q, Var elim, Var keep) {
  return p.degree(keep) * q.degree(elim) + q.degree(keep) * p.degree(elim);
}

IntPoly resultant_bivariate(const ExactPoly& p, const ExactPoly& q, Var elim, Var keep) {
  if (p.degree(elim) <= 0 || q.degree(elim) <= 0)
    throw Error(ErrorKind::DegreeZero, "resultant needs positive degree in " + var_name(elim));
  const auto pc = integer_coefficients(p, elim, keep);
  const auto qc = integer_coefficients(q, elim, keep);
  const int m = static_cast<int>(pc.size()) - 1, n = static_cast<int>(qc.size()) - 1;
  const int D = std::max(0, resultant_degree_bound(p, q, elim, keep));
  // Hadamard-type bound on the coefficients: product of Sylvester row 1-norms.
  const double bits = n * log2_norm1(pc) + m * log2_norm1(qc) + 2;

  std::vector<BigInt> acc(D + 1, 0);
  BigInt modulus = 1;
  mpz_class prime;
  mpz_ui_pow_ui(prime.get_mpz_t(), 2, 61);
  while (mpz_sizeinbase(modulus.get_mpz_t(), 2) < bits + 2) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const uint64_t pr = mpz_get_ui(prime.get_mpz_t());
    Mont mo(pr);
    auto reduce = [&](const std::vector<IntPoly>& cs) {
      std::vector<std::vector<uint64_t>> out;
      for (const auto& c : cs) {
        std::vector<uint64_t> r;
        for (const auto& x : c.coeffs()) r.push_back(mo.to(mpz_fdiv_ui(x.get_mpz_t(), pr)));
        out.push_back(std::move(r));
      }
      return out;
    };
    auto pm = reduce(pc), qm = reduce(qc);
    auto horner = [&](const std::vector<uint64_t>& c, uint64_t x) {
      uint64_t r = 0;
      for (size_t i = c.size(); i-- > 0;) r = mo.add(mo.mul(r, x), c[i]);
      return r;
    };
    std::vector<uint64_t> vals(D + 1);
    std::vector<uint64_t> pv(m + 1), qv(n + 1);
    for (int xi = 0; xi <= D; ++xi) {
      uint64_t x = mo.to(static_cast<uint64_t>(xi));
      for (int k = 0; k <= m; ++k) pv[k] = horner(pm[k], x);
      for (int k = 0; k <= n; ++k) qv[k] = horner(qm[k], x);
      auto s = sylvester(pv, qv);
      vals[xi] = det_mod(s, mo);
    }
    // Newton divided differences on nodes 0..D, then expansion to monomials.
    std::vector<uint64_t> inv(D + 1, 0);
    for (int i = 1; i <= D; ++i) inv[i] = mo.inv(mo.to(static_cast<uint64_t>(i)));
    std::vector<uint64_t> a = vals;
    for (int j = 1; j <= D; ++j)
      for (int i = D; i >= j; --i) a[i] = mo.mul(mo.sub(a[i], a[i - 1]), inv[j]);
    std::vector<uint64_t> poly(D + 1, 0);
    poly[0] = a[D];
    int deg = 0;
    for (int i = D - 1; i >= 0; --i) {
      uint64_t xi = mo.to(static_cast<uint64_t>(i));
      // poly = poly * (x - i) + a[i]
      for (int k = deg + 1; k >= 1; --k) poly[k] = mo.sub(poly[k - 1], mo.mul(poly[k], xi));
      poly[0] = mo.sub(0, mo.mul(poly[0], xi));
      poly[0] = mo.add(poly[0], a[i]);
      ++deg;
    }
    // Garner step: acc += modulus * ((r - acc) / modulus mod pr).
    const uint64_t minv = mo.inv(mo.to(mpz_fdiv_ui(modulus.get_mpz_t(), pr)));
    for (int k = 0; k <= D; ++k) {
      uint64_t r = mo.from(poly[k]);
      uint64_t cur = mpz_fdiv_ui(acc[k].get_mpz_t(), pr);
      uint64_t t = mo.from(mo.mul(mo.to(mo.sub(r, cur)), minv));
      BigInt tt;
      mpz_set_ui(tt.get_mpz_t(), t);
      acc[k] += modulus * tt;
    }
    modulus *= prime;
  }
  BigInt half = modulus / 2;
  for (auto& c : acc)
    if (c > half) c -= modulus;
  IntPoly res(std::move(acc));

  // Exact spot checks away from the interpolation nodes.
  for (long x : {static_cast<long>(D) + 1, -1L}) {
    BigInt bx = x;
    std::vector<BigInt> pv, qv;
    for (const auto& c : pc) pv.push_back(c.value_at(bx));
    for (const auto& c : qc) qv.push_back(c.value_at(bx));
    if (resultant(pv, qv) != res.value_at(bx))
      throw Error(ErrorKind::VerificationFailure, "multimodular resultant failed its exact spot check");
  }
  return res;
}

}  // namespace limcyc
