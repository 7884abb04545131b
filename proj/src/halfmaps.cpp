#include "limcyc/halfmaps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace limcyc {

namespace {

constexpr double kSeriesTau = 1e-6;
constexpr double kEndpointTol = 1e-12;
constexpr double kTauCap = 700.0;

double series_y(double g, double a, double t) {
  double g2 = g * g;
  return a * t *
         (0.5 + t * (-g / 6 + t * ((g2 - 1) / 24 + t * (-g * (3 * g2 - 7) / 360 +
                                                        t * (g2 - 1) * (g2 - 3) / 720))));
}

double series_dy(double g, double a, double t) {
  double g2 = g * g;
  return a * (0.5 + t * (-g / 3 + t * ((g2 - 1) / 8 + t * (-g * (3 * g2 - 7) / 90 +
                                                           t * (g2 - 1) * (g2 - 3) / 144))));
}

bool near(double y, double end) {
  return std::isfinite(end) && std::abs(y - end) <= kEndpointTol * std::max(1.0, std::abs(end));
}

[[noreturn]] void out_of_domain(const char* which, double y0, double lo, double hi) {
  std::ostringstream os;
  os.precision(17);
  os << which << ": y0 = " << y0 << " outside open domain (" << lo << ", " << hi << ")";
  throw Error(ErrorKind::OutOfDomain, os.str());
}

}  // namespace

namespace detail {

// expm1(x) - x without the cancellation near 0
double phi2(double x) {
  if (std::abs(x) >= 0.5) return std::expm1(x) - x;
  double term = x * x / 2, sum = term;
  for (int k = 3; k < 40; ++k) {
    term *= x / k;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// expm1(x) - x - x^2/2
double phi3(double x) {
  if (std::abs(x) >= 0.5) return std::expm1(x) - x - x * x / 2;
  double term = x * x * x / 6, sum = term;
  for (int k = 4; k < 40; ++k) {
    term *= x / k;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}


double half_map_y(double g, double a, double tau) {
  if (tau == 0) return 0;
  if (std::abs(tau) < kSeriesTau) return series_y(g, a, tau);
  const double lo = g - 1, hi = g + 1, k = g * g - 1;
  if (std::max(std::abs(lo * tau), std::abs(hi * tau)) <= 2) {
    double num = hi * phi2(lo * tau) - lo * phi2(hi * tau);
    double den = -k * std::exp(lo * tau) * std::expm1(2 * tau);
    return a * num / den;
  }
  // scaled exponential form
  double el = lo * tau, eh = hi * tau;
  double K = std::max({el, eh, 0.0});
  double xl = std::exp(el - K), xh = std::exp(eh - K), x0 = std::exp(-K);
  double num = hi * xl - lo * xh - 2 * x0;
  double den = k * (xl - xh);
  return a * num / den;
}

double half_map_dy(double g, double a, double tau) {
  if (std::abs(tau) < kSeriesTau) return series_dy(g, a, tau);
  // -2 a v F_d / (u k (v^2-1)^2) with F_d v/u written in exponentials
  const double k = g * g - 1;
  double e1 = (3 - g) * tau, e2 = 2 * tau, e3 = (1 - g) * tau;
  if (std::max({std::abs(e1), std::abs(e2), std::abs(e3)}) <= 2) {
    // the constant and linear parts cancel exactly; keep the quadratic explicit
    double num = (1 - g * g) * tau * tau + (g + 1) * phi3(e1) - 2 * phi3(e2) + (1 - g) * phi3(e3);
    double den = std::expm1(2 * tau);
    return -2 * a * num / (k * den * den);
  }
  // scale by the largest exponential; e^{4 tau} of the squared denominator is folded into the scale
  double K = std::max({e1, e2, e3});
  double num = (g + 1) * std::exp(e1 - K) - 2 * std::exp(e2 - K) + (1 - g) * std::exp(e3 - K);
  double den = tau > 0 ? -std::expm1(-2 * tau) : std::expm1(2 * tau);
  double scale = std::exp(tau > 0 ? K - 4 * tau : K);
  return -2 * a * num / (k * den * den) * scale;
}

double invert_half_map(double g, double a, double sign, double target, std::optional<double> hint) {
  auto Y = [&](double m) { return half_map_y(g, a, sign * m); };
  double lo = 0, hi;
  double start = hint && *hint > 0 && std::isfinite(*hint) ? *hint : 1e-3;
  if (Y(start) < target) {
    lo = start;
    hi = 2 * start;
    while (!(Y(hi) >= target)) {
      lo = hi;
      hi *= 2;
      if (hi > kTauCap) {
        std::ostringstream os;
        os.precision(17);
        os << "bracket expansion passed tau = " << kTauCap << " for target " << target;
        throw Error(ErrorKind::ConvergenceFailure, os.str());
      }
    }
  } else {
    hi = start;
    lo = start / 2;
    while (Y(lo) >= target) {
      hi = lo;
      lo /= 2;
      if (lo < 1e-300) {
        lo = 0;
        break;
      }
    }
  }
  // safeguarded Newton on the magnitude m
  double m = 0.5 * (lo + hi);
  if (hint && *hint > lo && *hint < hi) m = *hint;
  const double tol = 1e-12 * std::max(1.0, std::abs(target));
  for (int it = 0; it < 300; ++it) {
    double f = Y(m) - target;
    if (f == 0) break;
    if (f < 0) lo = m; else hi = m;
    double dm = sign * half_map_dy(g, a, sign * m);
    double next = m - f / dm;
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (next == m || hi - lo <= 2 * std::numeric_limits<double>::epsilon() * hi) {
      m = next;
      break;
    }
    if (std::abs(next - m) <= 1e-15 * m) {
      m = next;
      break;
    }
    m = next;
  }
  double res = std::abs(Y(m) - target);
  if (!(res <= tol)) {
    std::ostringstream os;
    os.precision(17);
    os << "inversion residual " << res << " at tau = " << sign * m;
    throw Error(ErrorKind::ConvergenceFailure, os.str());
  }
  return sign * m;
}

}  // namespace detail

HalfMapSample left_sample(const SystemParams& p, double t) {
  require_node(p.gamma_l);
  if (!(t > 0)) throw Error(ErrorKind::DomainError, "left half-map needs t > 0");
  if (!(p.alpha_l > 0)) throw Error(ErrorKind::DomainError, "left half-map needs alpha_l > 0");
  return {t, detail::half_map_y(p.gamma_l, p.alpha_l, t), detail::half_map_y(p.gamma_l, p.alpha_l, -t)};
}

HalfMapSample right_sample(const SystemParams& p, double s) {
  require_node(p.gamma_r);
  if (!(s < 0)) throw Error(ErrorKind::DomainError, "right half-map needs s < 0");
  if (!(p.alpha_r < 0)) throw Error(ErrorKind::DomainError, "right half-map needs alpha_r < 0");
  return {s, detail::half_map_y(p.gamma_r, p.alpha_r, s) + p.b,
          detail::half_map_y(p.gamma_r, p.alpha_r, -s) + p.b};
}

MapDomain left_map_domain(const SystemParams& p) {
  double hi = p.gamma_l > 0 ? p.alpha_l / (p.gamma_l + 1) : std::numeric_limits<double>::infinity();
  return {0.0, hi};
}

MapDomain right_map_domain(const SystemParams& p) {
  double hi = p.gamma_r < 0 ? p.alpha_r / (p.gamma_r - 1) + p.b : std::numeric_limits<double>::infinity();
  return {p.b, hi};
}

MapValue left_map(const SystemParams& p, double y0, std::optional<double> hint) {
  require_node(p.gamma_l);
  if (!(p.alpha_l > 0)) throw Error(ErrorKind::DomainError, "left half-map needs alpha_l > 0");
  MapDomain dom = left_map_domain(p);
  if (y0 == dom.lo) return {0.0, 0.0};
  if (!(y0 > dom.lo && y0 < dom.hi) || near(y0, dom.lo) || near(y0, dom.hi))
    out_of_domain("left_map", y0, dom.lo, dom.hi);
  double t = detail::invert_half_map(p.gamma_l, p.alpha_l, 1.0, y0, hint);
  return {detail::half_map_y(p.gamma_l, p.alpha_l, -t), t};
}

MapValue right_inverse_map(const SystemParams& p, double y0, std::optional<double> hint) {
  require_node(p.gamma_r);
  if (!(p.alpha_r < 0)) throw Error(ErrorKind::DomainError, "right half-map needs alpha_r < 0");
  MapDomain dom = right_map_domain(p);
  if (y0 == dom.lo) return {p.b, 0.0};
  if (!(y0 > dom.lo && y0 < dom.hi) || near(y0, dom.lo) || near(y0, dom.hi))
    out_of_domain("right_inverse_map", y0, dom.lo, dom.hi);
  double s = detail::invert_half_map(p.gamma_r, p.alpha_r, -1.0, y0 - p.b, hint);
  return {detail::half_map_y(p.gamma_r, p.alpha_r, -s) + p.b, s};
}

MapValue left_map(const SystemParams& p, double y0) { return left_map(p, y0, std::nullopt); }
MapValue right_inverse_map(const SystemParams& p, double y0) { return right_inverse_map(p, y0, std::nullopt); }

SuccessorDomain domain(const SystemParams& p) {
  double lo = std::max(0.0, p.b);
  MapDomain l = left_map_domain(p), r = right_map_domain(p);
  if (std::isinf(l.hi) && std::isinf(r.hi)) return {lo, l.hi, UpperBranch::Infinite};
  if (l.hi <= r.hi) return {lo, l.hi, UpperBranch::LeftAsymptote};
  return {lo, r.hi, UpperBranch::RightAsymptote};
}

OriginSeries origin_series(const SystemParams& p, Side side) {
  double g = side == Side::Left ? p.gamma_l : p.gamma_r;
  double a = side == Side::Left ? p.alpha_l : p.alpha_r;
  return {-1.0, -8 * g / (3 * a), -32 * g * g / (3 * a * a), -32 * g * (79 * g * g + 9) / (45 * a * a * a)};
}

}  // namespace limcyc
