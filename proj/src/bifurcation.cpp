#include <cmath>
#include <sstream>

#include "limcyc/successor.hpp"

namespace limcyc {

namespace {

constexpr double kZeroTol = 1e-12;

RegimePrediction exact(std::string tag, int count, std::optional<Stability> st = std::nullopt) {
  return {std::move(tag), true, count, st};
}

RegimePrediction bound(std::string tag, int count, std::optional<Stability> st = std::nullopt) {
  return {std::move(tag), false, count, st};
}

Stability by_sign(bool stable) { return stable ? Stability::Stable : Stability::Unstable; }

}  // namespace

RegimePrediction classify_regime(const SystemParams& p) {
  require_node(p);
  if (!validate_for_cycles(p).ok) return exact("alar", 0);
  const Discriminants D = discriminants(p);
  const double gl = p.gamma_l, gr = p.gamma_r;
  if (p.b == 0) {
    if (gl * gr > 0) return exact("beq0lc(i)", 0);
    const bool lpos = gl > 0;
    const double other = lpos ? D.delta2 : D.delta3;
    const std::string branch = lpos ? "(iii)" : "(iv)";
    if (std::abs(D.delta1) <= kZeroTol && std::abs(other) <= kZeroTol) return exact("beq0lc(ii)", 0);
    if (D.delta1 * other < 0) return exact("beq0lc" + branch + "(b)", 1, by_sign(other < 0));
    return exact("beq0lc" + branch + "(a)", 0);
  }
  if (gl * gr > 0) {
    if (p.b * gr > 0) return exact("rlrrg0(i)", 0);
    return exact("rlrrg0(ii)", 1, by_sign(p.b > 0));
  }
  if (std::abs(gl + gr) <= kZeroTol) return bound("rl+rr=0", 1, by_sign(p.b > 0));
  if (gl < 0) {
    SystemParams q{-gl, -gr, p.alpha_l, p.alpha_r, -p.b};
    RegimePrediction r = classify_regime(q);
    r.tag = "mirror:" + r.tag;
    if (r.stability) r.stability = *r.stability == Stability::Stable ? Stability::Unstable : Stability::Stable;
    return r;
  }
  if (D.delta1 < 0 && D.delta2 > 0) {
    const double b_bar = -D.delta2;
    if (p.b <= b_bar) return exact("limitcyclewithb(i)", 0);
    if (p.b < 0) return exact("limitcyclewithb(ii)", 1, Stability::Unstable);
    return bound("limitcyclewithb(iii)-(iv)", 2);
  }
  if (p.b > 0) return bound(gl + gr > 0 ? "instable" : "inunstable", 2);
  return bound("rl+rrnot0", 2);
}

double pseudo_hopf_amplitude(const SystemParams& family, double b) {
  SystemParams p = family.with_b(b);
  if (!(p.gamma_l > 0 && p.gamma_r < 0))
    throw Error(ErrorKind::DomainError, "pseudo-Hopf amplitude needs gamma_l > 0 > gamma_r");
  const Discriminants D = discriminants(p);
  if (!(b * D.delta1 < 0)) throw Error(ErrorKind::NoSmallCycle, "b * delta1 >= 0, no cycle leaves the origin");
  CycleSearch cs = find_cycles(p);
  if (cs.roots.empty()) throw Error(ErrorKind::NoSmallCycle, "no cycle found near the origin");
  return cs.roots.front().y0_star;
}

std::vector<double> linspace_grid(double from, double to, int steps) {
  if (steps < 1 || !std::isfinite(from) || !std::isfinite(to) || !(from < to))
    throw Error(ErrorKind::DomainError, "b grid needs finite from < to and at least one step");
  std::vector<double> g;
  g.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) g.push_back(from + (to - from) * i / steps);
  return g;
}

FoldPoint locate_fold(const SystemParams& family, double y, double b) {
  struct Res {
    double f1, f2, fr, gmr, gml;
    bool ok;
  };
  auto residual = [&](double yy, double bb) {
    Res r{};
    try {
      SystemParams p = family.with_b(bb);
      SuccessorPoint pt = evaluate_successor(p, yy);
      r.fr = section_F(p.gamma_r, pt.s);
      r.f1 = pt.d;
      r.f2 = r.fr - section_F(p.gamma_l, pt.t);
      r.gmr = section_G_over_M(p.gamma_r, p.alpha_r, pt.s);
      r.gml = section_G_over_M(p.gamma_l, p.alpha_l, pt.t);
      r.ok = std::isfinite(r.f1) && std::isfinite(r.f2) && std::isfinite(r.gmr) && std::isfinite(r.gml);
    } catch (const Error&) {
      r.ok = false;
    }
    return r;
  };
  Res cur = residual(y, b);
  if (!cur.ok) throw Error(ErrorKind::ConvergenceFailure, "fold search starts outside the domain");
  auto norm = [](const Res& r) { return std::hypot(r.f1, r.f2); };
  for (int it = 0; it < 100; ++it) {
    if (std::abs(cur.f1) <= 1e-15 && std::abs(cur.f2) <= 1e-13) break;
    // rows: (d, d'), columns: (y0, b); dd/db = -F_R and dd'/db = -G_R/M_R
    double j11 = cur.f2, j12 = -cur.fr, j21 = cur.gmr - cur.gml, j22 = -cur.gmr;
    double det = j11 * j22 - j12 * j21;
    if (det == 0 || !std::isfinite(det)) break;
    double dy = -(cur.f1 * j22 - j12 * cur.f2) / det;
    double db = -(j11 * cur.f2 - j21 * cur.f1) / det;
    double lam = 1;
    bool moved = false;
    for (int k = 0; k < 50; ++k, lam /= 2) {
      Res nxt = residual(y + lam * dy, b + lam * db);
      if (nxt.ok && norm(nxt) < norm(cur)) {
        y += lam * dy;
        b += lam * db;
        cur = nxt;
        moved = true;
        break;
      }
    }
    if (!moved || (std::abs(dy) <= 1e-16 * std::abs(y) && std::abs(db) <= 1e-16 * std::max(1e-300, std::abs(b)))) break;
  }
  if (!(std::abs(cur.f1) <= 1e-10 && std::abs(cur.f2) <= 1e-9)) {
    std::ostringstream os;
    os.precision(17);
    os << "fold Newton stalled with d = " << cur.f1 << ", d' = " << cur.f2;
    throw Error(ErrorKind::ConvergenceFailure, os.str());
  }
  return {b, y, cur.f1, cur.f2, cur.gmr - cur.gml};
}

BifurcationReport scan_b(const SystemParams& family, const std::vector<double>& b_grid) {
  BifurcationReport rep{};
  const Discriminants D = discriminants(family);
  rep.b_m = family.alpha_r / (1 - family.gamma_r);
  rep.b_M = family.alpha_l / (family.gamma_l + 1);
  rep.b_bar = -D.delta2;
  for (double b : b_grid) {
    ScanRow row;
    row.b = b;
    try {
      CycleSearch cs = find_cycles(family.with_b(b));
      row.roots = cs.roots;
      row.count = static_cast<int>(cs.roots.size());
      if (!cs.failures.empty()) row.error = cs.failures.front();
    } catch (const Error& e) {
      row.error = e.what();
    }
    rep.rows.push_back(std::move(row));
  }
  for (const auto& row : rep.rows) {
    std::string sig = signature(row.roots);
    if (!rep.regimes.empty() && rep.regimes.back().signature == sig)
      rep.regimes.back().b_to = row.b;
    else
      rep.regimes.push_back({row.b, row.b, row.count, sig});
  }
  auto push_fold = [&](double y, double b, double lo, double hi) {
    try {
      FoldPoint f = locate_fold(family, y, b);
      if (f.b < lo || f.b > hi) return;
      for (const auto& g : rep.folds)
        if (std::abs(g.b - f.b) <= 1e-9) return;
      rep.folds.push_back(f);
    } catch (const Error&) {
    }
  };
  for (size_t i = 0; i + 1 < rep.rows.size(); ++i) {
    const ScanRow &a = rep.rows[i], &c = rep.rows[i + 1];
    const ScanRow* two = nullptr;
    if (a.count == 2 && c.count == 0) two = &a;
    if (a.count == 0 && c.count == 2) two = &c;
    if (!two) continue;
    // the branch tip bends sharply, so narrow the bracket before seeding Newton
    double b2 = two->b, b0 = (two == &a) ? c.b : a.b;
    double y = 0.5 * (two->roots[0].y0_star + two->roots[1].y0_star);
    for (int k = 0; k < 30; ++k) {
      double mid = 0.5 * (b2 + b0);
      CycleSearch cs;
      try {
        cs = find_cycles(family.with_b(mid));
      } catch (const Error&) {
        break;
      }
      if (cs.roots.size() == 2) {
        b2 = mid;
        y = 0.5 * (cs.roots[0].y0_star + cs.roots[1].y0_star);
      } else if (cs.roots.empty()) {
        b0 = mid;
      } else {
        if (cs.roots.size() == 1 && cs.roots[0].multiplicity == 2) {
          b2 = mid;
          y = cs.roots[0].y0_star;
        }
        break;
      }
    }
    push_fold(y, b2, std::min(a.b, c.b), std::max(a.b, c.b));
  }
  const double step = rep.rows.size() > 1 ? std::abs(rep.rows[1].b - rep.rows[0].b) : 0;
  for (const auto& row : rep.rows)
    for (const auto& r : row.roots)
      if (r.multiplicity == 2) push_fold(r.y0_star, row.b, row.b - step, row.b + step);
  if (!rep.folds.empty()) rep.b_tilde = rep.folds.front().b;
  return rep;
}

}  // namespace limcyc
