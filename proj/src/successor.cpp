#include "limcyc/successor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace limcyc {

namespace {

// Signed number stored as sign * exp(lg), for products of exponentials
// that overflow binary64 long before their ratios do.
struct LogNum {
  int sign;
  double lg;

  LogNum operator*(const LogNum& o) const { return {sign * o.sign, lg + o.lg}; }
  LogNum operator/(const LogNum& o) const { return {sign * o.sign, lg - o.lg}; }
  double value() const { return sign == 0 ? 0.0 : sign * std::exp(lg); }
};

LogNum from_value(double x) {
  if (x == 0) return {0, -INFINITY};
  return {x > 0 ? 1 : -1, std::log(std::abs(x))};
}

LogNum from_exp(double x) { return {1, x}; }

LogNum log_expm1(double x) {
  if (x > 30) return {1, x + std::log1p(-std::exp(-x))};
  if (x < -30) return {-1, std::log1p(-std::exp(x))};
  return from_value(std::expm1(x));
}

LogNum expsum(std::initializer_list<double> coef, std::initializer_list<double> expo) {
  double K = -INFINITY;
  for (double e : expo) K = std::max(K, e);
  double S = 0;
  auto c = coef.begin();
  for (double e : expo) S += *c++ * std::exp(e - K);
  LogNum r = from_value(S);
  r.lg += K;
  return r;
}

// F_d v/u = (g+1)e^{(3-g)tau} - 2e^{2tau} + (1-g)e^{(1-g)tau}
LogNum fd_reduced(double g, double tau) {
  double e1 = (3 - g) * tau, e2 = 2 * tau, e3 = (1 - g) * tau;
  if (std::max({std::abs(e1), std::abs(e2), std::abs(e3)}) <= 2)
    return from_value((1 - g * g) * tau * tau + (g + 1) * detail::phi3(e1) - 2 * detail::phi3(e2) +
                      (1 - g) * detail::phi3(e3));
  return expsum({g + 1, -2.0, 1 - g}, {e1, e2, e3});
}

LogNum log_G(double g, double tau) {
  const double k = g * g - 1;
  LogNum u = from_exp(g * tau);
  LogNum w = log_expm1(2 * tau);
  LogNum q = expsum({g, -1.0, -g, 1.0}, {(g + 2) * tau, (2 * g + 1) * tau, g * tau, tau});
  LogNum uv1 = log_expm1((g + 1) * tau);
  LogNum umv = from_exp(tau) * log_expm1((g - 1) * tau);
  LogNum fd = fd_reduced(g, tau) * from_exp((g - 1) * tau);
  LogNum num = from_value(2 * k) * u * w * w * q * uv1 * umv;
  LogNum den = from_exp(tau) * fd * fd * fd;
  return num / den;
}

LogNum log_M(double g, double a, double tau) {
  const double k = g * g - 1;
  LogNum uv1 = log_expm1((g + 1) * tau);
  LogNum umv = from_exp(tau) * log_expm1((g - 1) * tau);
  LogNum one_minus_v2 = log_expm1(2 * tau);
  one_minus_v2.sign = -one_minus_v2.sign;
  return from_value(2 * a) * uv1 * umv / (from_exp(g * tau) * from_value(k) * one_minus_v2);
}

void require_inside(const SystemParams& p, double y0) {
  SuccessorDomain dom = domain(p);
  auto near = [](double y, double e) { return std::abs(y - e) <= 1e-12 * std::max(1.0, std::abs(e)); };
  if (dom.empty() || !(y0 > dom.y0_min && y0 < dom.y0_max) || near(y0, dom.y0_min) ||
      (std::isfinite(dom.y0_max) && near(y0, dom.y0_max))) {
    std::ostringstream os;
    os.precision(17);
    os << "y0 = " << y0 << " outside successor domain (" << dom.y0_min << ", " << dom.y0_max << ")";
    throw Error(ErrorKind::OutOfDomain, os.str());
  }
}

}  // namespace

double section_F(double gamma, double tau) {
  if (tau == 0) return -2.0;
  // Y'(-tau)/Y'(tau) = e^{4 tau} F_d(-tau)/F_d(tau) in reduced form
  return -(fd_reduced(gamma, -tau) / fd_reduced(gamma, tau) * from_exp(4 * tau)).value() - 1;
}

double section_G(double gamma, double tau) { return log_G(gamma, tau).value(); }

double section_M(double gamma, double alpha, double tau) { return log_M(gamma, alpha, tau).value(); }

double section_G_over_M(double gamma, double alpha, double tau) {
  return (log_G(gamma, tau) / log_M(gamma, alpha, tau)).value();
}

double section_psi(double gamma, double tau) {
  const double a = gamma - 1, c = gamma + 1;
  if (std::max(std::abs(a * tau), std::abs(c * tau)) <= 2)
    return a * detail::phi2(c * tau) - c * detail::phi2(a * tau);
  return expsum({a, -c, 2.0}, {c * tau, a * tau, 0.0}).value();
}

double psi(double v, double gamma) { return section_psi(gamma, std::log(v)); }

SuccessorPoint evaluate_successor(const SystemParams& p, double y0, std::optional<double> t_hint,
                                  std::optional<double> s_hint) {
  require_inside(p, y0);
  MapValue l = left_map(p, y0, t_hint);
  MapValue r = right_inverse_map(p, y0, s_hint ? std::optional<double>(std::abs(*s_hint)) : std::nullopt);
  return {y0, l.tau, r.tau, l.y1, r.y1, r.y1 - l.y1};
}

double d(const SystemParams& p, double y0) { return evaluate_successor(p, y0).d; }

double d_prime(const SystemParams& p, double y0) {
  SuccessorPoint pt = evaluate_successor(p, y0);
  return section_F(p.gamma_r, pt.s) - section_F(p.gamma_l, pt.t);
}

double d_second(const SystemParams& p, double y0) {
  SuccessorPoint pt = evaluate_successor(p, y0);
  return section_G_over_M(p.gamma_r, p.alpha_r, pt.s) - section_G_over_M(p.gamma_l, p.alpha_l, pt.t);
}

double d_second_at_root(const SystemParams& p, const CycleRoot& root) {
  SuccessorPoint pt = evaluate_successor(p, root.y0_star);
  double dp = section_F(p.gamma_r, pt.s) - section_F(p.gamma_l, pt.t);
  if (!(std::abs(pt.d) <= 1e-9) || !(std::abs(dp) <= 1e-7)) {
    std::ostringstream os;
    os.precision(17);
    os << "|d| = " << std::abs(pt.d) << ", |d'| = " << std::abs(dp) << " at y0 = " << root.y0_star;
    throw Error(ErrorKind::NotADoubleRoot, os.str());
  }
  double ml = section_M(p.gamma_l, p.alpha_l, pt.t), mr = section_M(p.gamma_r, p.alpha_r, pt.s);
  if (!(std::abs(ml - mr) <= 1e-6 * std::max(1.0, std::abs(ml)))) {
    std::ostringstream os;
    os.precision(17);
    os << "section values disagree: M_L = " << ml << ", M_R = " << mr;
    throw Error(ErrorKind::NotADoubleRoot, os.str());
  }
  return section_G_over_M(p.gamma_r, p.alpha_r, pt.s) - section_G_over_M(p.gamma_l, p.alpha_l, pt.t);
}

Discriminants discriminants(const SystemParams& p) {
  return {p.gamma_l / p.alpha_l - p.gamma_r / p.alpha_r,
          p.alpha_r / (p.gamma_r - 1) - p.alpha_l / (p.gamma_l + 1),
          p.alpha_r / (p.gamma_r + 1) - p.alpha_l / (p.gamma_l - 1)};
}

TaylorCoeffs taylor_d0(const SystemParams& p) {
  if (p.b != 0) throw Error(ErrorKind::RequiresRefracting, "Taylor coefficients at the origin need b = 0");
  const double gl = p.gamma_l, gr = p.gamma_r, al = p.alpha_l, ar = p.alpha_r;
  return {4.0 / 3 * (gl / al - gr / ar), 16.0 / 9 * (gl * gl / (al * al) - gr * gr / (ar * ar)),
          4.0 / 135 * (gl * (79 * gl * gl + 9) / (al * al * al) - gr * (79 * gr * gr + 9) / (ar * ar * ar))};
}

SectionCoords section_coords(const SystemParams& p, const CycleRoot& root) {
  SuccessorPoint pt = evaluate_successor(p, root.y0_star);
  SectionCoords c{};
  c.v_l = std::exp(pt.t);
  c.v_r = std::exp(pt.s);
  c.u_l = std::exp(p.gamma_l * pt.t);
  c.u_r = std::exp(p.gamma_r * pt.s);
  c.m_l = section_M(p.gamma_l, p.alpha_l, pt.t);
  c.m_r = section_M(p.gamma_r, p.alpha_r, pt.s);
  c.psi_l = section_psi(p.gamma_l, pt.t);
  c.psi_r = section_psi(p.gamma_r, pt.s);
  std::ostringstream os;
  os.precision(17);
  if (!(std::abs(c.m_l - c.m_r) <= 1e-8)) {
    os << "M_L - M_R = " << c.m_l - c.m_r;
    throw Error(ErrorKind::ResidualTooLarge, os.str());
  }
  if (!(c.psi_l > 0 && c.psi_r > 0)) {
    os << "psi not positive: psi_L = " << c.psi_l << ", psi_R = " << c.psi_r;
    throw Error(ErrorKind::ResidualTooLarge, os.str());
  }
  return c;
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::SemiStableInnerStable: return "semi-stable-inner-stable";
    case Stability::SemiStableInnerUnstable: return "semi-stable-inner-unstable";
  }
  return "?";
}

std::string signature(const std::vector<CycleRoot>& roots) {
  if (roots.empty()) return "0";
  std::string s = std::to_string(roots.size()) + ":";
  for (size_t i = 0; i < roots.size(); ++i) {
    if (i) s += ",";
    switch (roots[i].stability) {
      case Stability::Stable: s += "S"; break;
      case Stability::Unstable: s += "U"; break;
      case Stability::SemiStableInnerStable: s += "SS-in"; break;
      case Stability::SemiStableInnerUnstable: s += "SU-in"; break;
    }
  }
  return s;
}

int CycleSearch::total_multiplicity() const {
  int m = 0;
  for (const auto& r : roots) m += r.multiplicity;
  return m;
}

}  // namespace limcyc
