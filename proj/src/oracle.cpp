#include "limcyc/oracle.hpp"

#include <cmath>
#include <sstream>

#include "limcyc/halfmaps.hpp"

namespace limcyc {

namespace {

constexpr double kTimeTol = 1e-13;
constexpr double kHorizon = 700.0;

PlanarState field(const Subsystem& sub, PlanarState s) {
  return {2 * sub.gamma * s.x - s.y + sub.b, (sub.gamma * sub.gamma - 1) * s.x - sub.alpha};
}

}  // namespace

CrossingEvent cross_time(const Subsystem& sub, double y_start) {
  require_node(sub.gamma);
  const double inside = sub.side == Side::Left ? -1.0 : 1.0;
  double vx = -y_start + sub.b;
  if (!(vx * inside > 0)) {
    std::ostringstream os;
    os << "start point (0, " << y_start << ") does not enter the " << to_string(sub.side) << " half-plane";
    throw Error(ErrorKind::DomainError, os.str());
  }
  const PlanarState start{0.0, y_start};
  auto in_half = [&](double t) {
    double x = flow(sub, start, t).x;
    if (!std::isfinite(x)) throw Error(ErrorKind::NoReturn, "orbit escapes to infinity before returning to x = 0");
    return x * inside > 0;
  };
  // x(t) is a sum of three exponentials, so it has at most one zero besides t = 0
  double lo = 0, hi = 1e-3;
  while (in_half(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > kHorizon) throw Error(ErrorKind::NoReturn, "no return to x = 0 before t = 700");
  }
  if (lo == 0) {
    // shrink toward the start until the orbit is inside the half-plane
    double probe = hi;
    while (!in_half(probe) && probe > 1e-300) probe /= 2;
    if (!in_half(probe)) throw Error(ErrorKind::NoReturn, "orbit never enters the half-plane");
    double h2 = probe * 2;
    while (h2 < hi && in_half(h2)) h2 *= 2;
    lo = probe;
    hi = std::min(h2, hi);
  }
  while (hi - lo > kTimeTol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (in_half(mid)) lo = mid; else hi = mid;
  }
  double t = 0.5 * (lo + hi);
  PlanarState end = flow(sub, start, t);
  end.x = 0;
  return {t, end, sub.side == Side::Left ? Side::Right : Side::Left};
}

double poincare_map(const SystemParams& p, double y0) {
  CrossingEvent left = cross_time(Subsystem::left(p), y0);
  if (!(left.state.y < p.b))
    throw Error(ErrorKind::NoReturn, "left transit lands where the right field points outward");
  CrossingEvent right = cross_time(Subsystem::right(p), left.state.y);
  return right.state.y;
}

StabilityProbe iterate_stability(const SystemParams& p, double y0_star) {
  constexpr int kSteps = 200;
  auto probe = [&](double sign, int& steps) {
    const double delta = 1e-3 * std::abs(y0_star);
    double y = y0_star + sign * delta;
    for (steps = 1; steps <= kSteps; ++steps) {
      try {
        y = poincare_map(p, y);
      } catch (const Error&) {
        return Trend::Escapes;
      }
      if (!std::isfinite(y)) return Trend::Escapes;
      double ratio = std::abs(y - y0_star) / delta;
      if (ratio <= 0.99) return Trend::Approaches;
      if (ratio >= 1.01) return Trend::Escapes;
    }
    steps = kSteps;
    return Trend::Undecided;
  };
  StabilityProbe out{};
  out.inner = probe(-1.0, out.inner_steps);
  out.outer = probe(1.0, out.outer_steps);
  if (out.inner == Trend::Approaches && out.outer == Trend::Approaches)
    out.verdict = IterateVerdict::Attracting;
  else if (out.inner == Trend::Escapes && out.outer == Trend::Escapes)
    out.verdict = IterateVerdict::Repelling;
  else
    out.verdict = IterateVerdict::Inconclusive;
  return out;
}

OrbitTrace trace_orbit(const SystemParams& p, double y0, int turns, int samples_per_transit) {
  if (turns < 1 || samples_per_transit < 1) throw Error(ErrorKind::DomainError, "turns and samples must be positive");
  SuccessorDomain dom = domain(p);
  if (!(y0 > dom.y0_min && y0 < dom.y0_max)) {
    std::ostringstream os;
    os << "y0 = " << y0 << " outside the open domain (" << dom.y0_min << ", " << dom.y0_max << ")";
    throw Error(ErrorKind::OutOfDomain, os.str());
  }
  OrbitTrace out;
  double clock = 0, y = y0;
  out.section.push_back(y);
  auto transit = [&](const Subsystem& sub) {
    CrossingEvent ev = cross_time(sub, y);
    const PlanarState start{0.0, y};
    for (int k = 0; k < samples_per_transit; ++k) {
      double t = ev.time * k / samples_per_transit;
      PlanarState s = k == 0 ? start : flow(sub, start, t);
      out.samples.push_back({clock + t, s.x, s.y});
    }
    clock += ev.time;
    y = ev.state.y;
  };
  for (int turn = 0; turn < turns; ++turn) {
    transit(Subsystem::left(p));
    if (!(y < p.b)) throw Error(ErrorKind::NoReturn, "left transit lands where the right field points outward");
    transit(Subsystem::right(p));
    out.section.push_back(y);
  }
  out.samples.push_back({clock, 0.0, y});
  return out;
}

PlanarState rk4_integrate(const Subsystem& sub, PlanarState s, double t, double h) {
  int n = std::max(1, static_cast<int>(std::ceil(std::abs(t) / h)));
  double dt = t / n;
  for (int i = 0; i < n; ++i) {
    PlanarState k1 = field(sub, s);
    PlanarState k2 = field(sub, {s.x + 0.5 * dt * k1.x, s.y + 0.5 * dt * k1.y});
    PlanarState k3 = field(sub, {s.x + 0.5 * dt * k2.x, s.y + 0.5 * dt * k2.y});
    PlanarState k4 = field(sub, {s.x + dt * k3.x, s.y + dt * k3.y});
    s.x += dt / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x);
    s.y += dt / 6 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y);
  }
  return s;
}

std::string to_string(Trend t) {
  switch (t) {
    case Trend::Approaches: return "approaches";
    case Trend::Escapes: return "escapes";
    case Trend::Undecided: return "undecided";
  }
  return "?";
}

std::string to_string(IterateVerdict v) {
  switch (v) {
    case IterateVerdict::Attracting: return "attracting";
    case IterateVerdict::Repelling: return "repelling";
    case IterateVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace limcyc
