#include "limcyc/int_poly.hpp"

#include <algorithm>
#include <cmath>

namespace limcyc {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::from_exact(const ExactPoly& p, Var x) {
  if (!p.is_univariate_in(x))
    throw Error(ErrorKind::DomainError, "polynomial is not univariate in " + var_name(x));
  std::vector<BigRational> q(std::max(0, p.degree(x)) + 1);
  for (const auto& [e, c] : p.terms()) q[e[static_cast<int>(x)]] = c;
  return from_rationals(q);
}

IntPoly IntPoly::from_rationals(const std::vector<BigRational>& coeffs) {
  BigInt l = 1;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.get_num() * (l / c.get_den()));
  return IntPoly(std::move(out));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (lead() < 0) g = -g;
  std::vector<BigInt> out = c_;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  std::vector<BigInt> out;
  for (int i = 1; i <= degree(); ++i) out.push_back(c_[i] * i);
  return IntPoly(std::move(out));
}

size_t IntPoly::max_bits() const {
  size_t b = 0;
  for (const auto& c : c_) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b;
}

int IntPoly::sign_at(const BigRational& x) const {
  if (is_zero()) return 0;
  // Homogeneous Horner on num/den; den > 0 so the sign is preserved.
  const BigInt& p = x.get_num();
  const BigInt& q = x.get_den();
  BigInt r = c_.back(), qp = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    qp *= q;
    r = r * p + c_[i] * qp;
  }
  return sgn(r);
}

int IntPoly::sign_at_infinity(int direction) const {
  if (is_zero()) return 0;
  int s = sgn(lead());
  return (direction < 0 && degree() % 2 == 1) ? -s : s;
}

BigInt IntPoly::value_at(const BigInt& x) const {
  BigInt r = 0;
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

BigRational IntPoly::value_at(const BigRational& x) const {
  BigRational r = 0;
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

double IntPoly::value_double(double x) const {
  double r = 0;
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i].get_d();
  return r;
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> out = c_;
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& k, const IntPoly& a) {
  std::vector<BigInt> out = a.c_;
  for (auto& c : out) c *= k;
  return IntPoly(std::move(out));
}

ExactPoly IntPoly::to_exact(Var x) const {
  ExactPoly p;
  for (int i = 0; i <= degree(); ++i) {
    ExactPoly::Exponent e{0, 0, 0};
    e[static_cast<int>(x)] = i;
    p += ExactPoly::monomial(BigRational(c_[i]), e);
  }
  return p;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "pseudo-remainder by zero");
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.lead();
  int steps = a.degree() - db + 1;
  if (steps <= 0) return a;
  for (int k = a.degree(); k >= db; --k) {
    BigInt t = r[k];
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    r.resize(k);
    --steps;
  }
  return IntPoly(std::move(r));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b, bool& ok) {
  ok = true;
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) {
    ok = false;
    return IntPoly();
  }
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(a.degree() - b.degree() + 1);
  const int db = b.degree();
  BigInt rem;
  for (int k = a.degree(); k >= db; --k) {
    mpz_tdiv_qr(q[k - db].get_mpz_t(), rem.get_mpz_t(), r[k].get_mpz_t(), b.lead().get_mpz_t());
    if (rem != 0) {
      ok = false;
      return IntPoly();
    }
    for (int j = 0; j <= db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), q[k - db].get_mpz_t(), b[j].get_mpz_t());
  }
  for (int k = 0; k < db; ++k)
    if (r[k] != 0) {
      ok = false;
      return IntPoly();
    }
  return IntPoly(std::move(q));
}

namespace {

IntPoly gcd_prs(IntPoly a, IntPoly b) {
  a = a.primitive();
  b = b.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive();
}

// Heuristic gcd by evaluation at a large integer; result verified by division.
bool gcd_heuristic(const IntPoly& a, const IntPoly& b, IntPoly& out) {
  BigInt bound = 0;
  for (const auto* p : {&a, &b})
    for (const auto& c : p->coeffs()) bound = std::max(bound, BigInt(abs(c)));
  BigInt xi = 2 * bound + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    BigInt ga = a.value_at(xi), gb = b.value_at(xi), g;
    mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    // Symmetric xi-adic expansion of g.
    std::vector<BigInt> coeffs;
    BigInt half = xi / 2;
    while (g != 0) {
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      coeffs.push_back(r);
      g = (g - r) / xi;
    }
    IntPoly cand = IntPoly(std::move(coeffs)).primitive();
    if (!cand.is_zero()) {
      bool ok1 = false, ok2 = false;
      divide_exact(a, cand, ok1);
      if (ok1) divide_exact(b, cand, ok2);
      if (ok1 && ok2) {
        out = cand;
        return true;
      }
    }
    xi = xi * 73794 / 27011;
  }
  return false;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  IntPoly pa = a.primitive(), pb = b.primitive();
  if (pa.degree() == 0 || pb.degree() == 0) return IntPoly({BigInt(1)});
  IntPoly g;
  if (gcd_heuristic(pa, pb, g)) return g;
  return gcd_prs(pa, pb);
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free part of zero");
  IntPoly pp = p.primitive();
  if (pp.degree() <= 1) return pp;
  IntPoly g = gcd(pp, pp.derivative());
  bool ok = false;
  IntPoly q = divide_exact(pp, g, ok);
  if (!ok) throw Error(ErrorKind::VerificationFailure, "square-free division failed");
  return q.primitive();
}

std::vector<std::pair<IntPoly, int>> squarefree_factorization(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factorization of zero");
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly a = p.primitive();
  if (a.degree() <= 0) return out;
  bool ok = false;
  IntPoly da = a.derivative();
  IntPoly g = gcd(a, da);
  IntPoly b = divide_exact(a, g, ok);
  if (!ok) throw Error(ErrorKind::VerificationFailure, "Yun division failed");
  IntPoly c = divide_exact(da, g, ok);
  if (!ok) throw Error(ErrorKind::VerificationFailure, "Yun division failed");
  IntPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    IntPoly f = gcd(b, d);
    if (f.degree() > 0) out.emplace_back(f, i);
    IntPoly nb = divide_exact(b, f, ok);
    if (!ok) throw Error(ErrorKind::VerificationFailure, "Yun division failed");
    IntPoly nc = divide_exact(d, f, ok);
    if (!ok) throw Error(ErrorKind::VerificationFailure, "Yun division failed");
    b = nb;
    d = nc - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace limcyc
