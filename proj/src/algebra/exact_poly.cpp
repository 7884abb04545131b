#include "limcyc/exact_poly.hpp"

#include <algorithm>
#include <sstream>

namespace limcyc {

std::string var_name(Var v) {
  switch (v) {
    case Var::U: return "u";
    case Var::V: return "v";
    case Var::G: return "γ";
  }
  return "?";
}

ExactPoly::ExactPoly(long c) {
  if (c != 0) terms_[{0, 0, 0}] = BigRational(c);
}

ExactPoly::ExactPoly(const BigRational& c) {
  if (c != 0) terms_[{0, 0, 0}] = c;
}

ExactPoly ExactPoly::variable(Var v) {
  Exponent e{0, 0, 0};
  e[static_cast<int>(v)] = 1;
  return monomial(1, e);
}

ExactPoly ExactPoly::monomial(const BigRational& c, Exponent e) {
  ExactPoly p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool ExactPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0}); }

int ExactPoly::degree(Var v) const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
  return d;
}

std::vector<Var> ExactPoly::variables() const {
  std::vector<Var> out;
  for (Var v : {Var::U, Var::V, Var::G})
    if (degree(v) > 0) out.push_back(v);
  return out;
}

bool ExactPoly::is_univariate_in(Var v) const {
  for (Var w : variables())
    if (w != v) return false;
  return true;
}

const ExactPoly::Exponent& ExactPoly::leading_exponent() const {
  if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading term of the zero polynomial");
  return terms_.rbegin()->first;
}

const BigRational& ExactPoly::leading_coefficient() const {
  if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading term of the zero polynomial");
  return terms_.rbegin()->second;
}

void ExactPoly::add_term(const Exponent& e, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly r;
  BigRational t;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      t = ca * cb;
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, t);
    }
  return r;
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& o) { return *this = *this * o; }

ExactPoly ExactPoly::pow(unsigned n) const {
  ExactPoly result(1), base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

ExactPoly ExactPoly::derivative(Var v) const {
  const int i = static_cast<int>(v);
  ExactPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    f[i] -= 1;
    r.add_term(f, c * e[i]);
  }
  return r;
}

ExactPoly ExactPoly::substitute(Var v, const BigRational& value) const {
  const int i = static_cast<int>(v);
  std::vector<BigRational> powers{1};
  ExactPoly r;
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[i]) powers.push_back(powers.back() * value);
    Exponent f = e;
    f[i] = 0;
    r.add_term(f, c * powers[e[i]]);
  }
  return r;
}

ExactPoly ExactPoly::substitute(Var v, const ExactPoly& value) const {
  std::vector<ExactPoly> coeffs = coefficients_in(v);
  ExactPoly r;
  for (size_t k = coeffs.size(); k-- > 0;) r = r * value + coeffs[k];
  return r;
}

std::vector<ExactPoly> ExactPoly::coefficients_in(Var v) const {
  const int i = static_cast<int>(v);
  std::vector<ExactPoly> out(std::max(0, degree(v)) + 1);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[i] = 0;
    out[e[i]].add_term(f, c);
  }
  return out;
}

ExactPoly ExactPoly::exact_divide(const ExactPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  const Exponent& ld = d.leading_exponent();
  const BigRational& lc = d.leading_coefficient();
  ExactPoly q, rem = *this;
  while (!rem.is_zero()) {
    const Exponent& lr = rem.leading_exponent();
    Exponent f{lr[0] - ld[0], lr[1] - ld[1], lr[2] - ld[2]};
    if (f[0] < 0 || f[1] < 0 || f[2] < 0)
      throw Error(ErrorKind::VerificationFailure, "polynomial division is not exact");
    ExactPoly t = monomial(rem.leading_coefficient() / lc, f);
    q += t;
    rem -= t * d;
  }
  return q;
}

BigRational ExactPoly::evaluate(const BigRational& u, const BigRational& v, const BigRational& g) const {
  std::array<std::vector<BigRational>, 3> pw;
  const BigRational* vals[3] = {&u, &v, &g};
  for (int i = 0; i < 3; ++i) {
    pw[i].push_back(1);
    int dmax = std::max(0, degree(static_cast<Var>(i)));
    for (int k = 1; k <= dmax; ++k) pw[i].push_back(pw[i].back() * *vals[i]);
  }
  BigRational s = 0;
  for (const auto& [e, c] : terms_) s += c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
  return s;
}

std::string ExactPoly::to_text() const {
  std::ostringstream os;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    os << c.get_str() << " u^" << e[0] << " v^" << e[1] << " γ^" << e[2] << "\n";
  }
  return os.str();
}

ExactPoly ExactPoly::from_text(std::string_view text) {
  ExactPoly p;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string coeff, su, sv, sg;
    ls >> coeff >> su >> sv >> sg;
    auto exp_of = [&](const std::string& tok, const std::string& prefix) {
      if (tok.rfind(prefix, 0) != 0) throw Error(ErrorKind::ParseError, "bad term line: " + line);
      return std::stoi(tok.substr(prefix.size()));
    };
    BigRational c;
    if (c.set_str(coeff, 10) != 0) throw Error(ErrorKind::ParseError, "bad coefficient: " + coeff);
    c.canonicalize();
    p.add_term({exp_of(su, "u^"), exp_of(sv, "v^"), exp_of(sg, "γ^")}, c);
  }
  return p;
}

}  // namespace limcyc
