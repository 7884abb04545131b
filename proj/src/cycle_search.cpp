#include <algorithm>
#include <cmath>
#include <sstream>

#include "limcyc/successor.hpp"

namespace limcyc {

namespace {

constexpr double kRootWidth = 1e-12;
constexpr double kDoubleD = 1e-9;
constexpr double kDoubleDprime = 1e-7;
// d is a difference of two O(y) values; below this relative size its sign is rounding noise
constexpr double kNoise = 64 * 2.220446049250313e-16;

struct Sample {
  double y = 0;
  double d = NAN;
  double t = 0, s = 0;
  double y1 = 0;
  bool ok = false;
};

class Searcher {
 public:
  Searcher(const SystemParams& p, const CycleSearchOptions& opts) : p_(p), opts_(opts) {}

  CycleSearch run();

 private:
  Sample eval(double y, const Sample* near = nullptr) {
    Sample s;
    s.y = y;
    try {
      SuccessorPoint pt = near && near->ok ? evaluate_successor(p_, y, near->t, near->s)
                                           : evaluate_successor(p_, y);
      s.d = pt.d;
      s.t = pt.t;
      s.s = pt.s;
      s.y1 = pt.y1_left;
      s.ok = std::isfinite(pt.d);
    } catch (const Error&) {
      s.ok = false;
    }
    return s;
  }

  double dprime_at(const Sample& s) const { return section_F(p_.gamma_r, s.s) - section_F(p_.gamma_l, s.t); }

  std::vector<double> grid(double lo, double hi) const;
  Sample bisect_root(Sample a, Sample b);
  Sample critical_point(Sample a, Sample b);
  void add_simple(const Sample& root);
  void add_double(const Sample& root);

  const SystemParams& p_;
  CycleSearchOptions opts_;
  CycleSearch out_;
};

std::vector<double> Searcher::grid(double lo, double hi) const {
  const double w = hi - lo;
  auto margin = [](double e) { return 4e-12 * std::max(1.0, std::abs(e)); };
  double fmin = std::max({1e-10 * w, margin(lo), margin(hi)});
  std::vector<double> ys;
  if (!(fmin < w / 4)) return ys;
  const int half = std::max(2, opts_.grid_points / 2);
  const double ratio = std::log(0.5 * w / fmin);
  for (int i = 0; i < half; ++i) {
    double f = fmin * std::exp(ratio * i / (half - 1));
    ys.push_back(lo + f);
    ys.push_back(hi - f);
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end(), [](double a, double b) { return std::abs(a - b) <= 1e-15 * std::abs(a); }),
           ys.end());
  return ys;
}

Sample Searcher::bisect_root(Sample a, Sample b) {
  for (int it = 0; it < 200 && b.y - a.y > kRootWidth; ++it) {
    double mid = 0.5 * (a.y + b.y);
    if (mid <= a.y || mid >= b.y) break;
    Sample m = eval(mid, &a);
    if (!m.ok) break;
    if (m.d == 0) return m;
    if ((m.d > 0) == (a.d > 0)) a = m; else b = m;
  }
  Sample m = eval(0.5 * (a.y + b.y), &a);
  return m.ok ? m : a;
}

// Zero of d' between two samples whose d' values have opposite signs.
Sample Searcher::critical_point(Sample a, Sample b) {
  double fa = dprime_at(a);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (a.y + b.y);
    if (mid <= a.y || mid >= b.y || b.y - a.y <= 1e-14 * std::max(1.0, std::abs(mid))) break;
    Sample m = eval(mid, &a);
    if (!m.ok) break;
    double fm = dprime_at(m);
    if (fm == 0) return m;
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return eval(0.5 * (a.y + b.y), &a);
}

void Searcher::add_simple(const Sample& r) {
  for (const auto& q : out_.roots)
    if (std::abs(q.y0_star - r.y) <= 1e-10 * std::max(1.0, std::abs(r.y))) return;
  CycleRoot root;
  root.y0_star = r.y;
  root.multiplicity = 1;
  root.d_residual = r.d;
  root.dprime = dprime_at(r);
  root.t = r.t;
  root.s = r.s;
  root.stability = root.dprime < 0 ? Stability::Stable : Stability::Unstable;
  out_.roots.push_back(root);
}

void Searcher::add_double(const Sample& r) {
  for (const auto& q : out_.roots)
    if (std::abs(q.y0_star - r.y) <= 1e-10 * std::max(1.0, std::abs(r.y))) return;
  CycleRoot root;
  root.y0_star = r.y;
  root.multiplicity = 2;
  root.d_residual = r.d;
  root.dprime = dprime_at(r);
  root.t = r.t;
  root.s = r.s;
  try {
    root.d_second = d_second_at_root(p_, root);
  } catch (const Error& e) {
    out_.failures.push_back(e.what());
    return;
  }
  root.stability = root.d_second > 0 ? Stability::SemiStableInnerStable : Stability::SemiStableInnerUnstable;
  out_.roots.push_back(root);
}

CycleSearch Searcher::run() {
  out_.domain = domain(p_);
  if (out_.domain.empty()) {
    out_.empty_domain = true;
    return out_;
  }
  std::vector<double> ys = grid(out_.domain.y0_min, out_.domain.y0_max);
  if (ys.empty()) {
    out_.empty_domain = true;
    return out_;
  }
  std::vector<Sample> smp;
  smp.reserve(ys.size());
  const Sample* prev = nullptr;
  for (double y : ys) {
    Sample s = eval(y, prev);
    if (!s.ok && prev) s = eval(y);
    smp.push_back(s);
    if (smp.back().ok) prev = &smp.back();
  }
  std::vector<Sample> v;
  for (const auto& s : smp)
    if (s.ok) v.push_back(s);
  if (v.size() < 3) {
    out_.failures.push_back("too few valid successor evaluations on the grid");
    return out_;
  }

  bool all_zero = true;
  for (const auto& s : v)
    if (std::abs(s.d) > 1e-10 * std::max({1.0, std::abs(s.y1), std::abs(s.y)})) all_zero = false;
  if (all_zero) {
    out_.continuum = true;
    return out_;
  }

  // only samples whose sign is resolved take part in bracketing
  std::vector<Sample> sig;
  for (const auto& s : v)
    if (std::abs(s.d) > kNoise * std::max(std::abs(s.y), std::abs(s.y1))) sig.push_back(s);
  v = std::move(sig);

  const bool double_search = std::abs(p_.gamma_l + p_.gamma_r) > 1e-12;
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if ((v[i].d > 0) != (v[i + 1].d > 0)) add_simple(bisect_root(v[i], v[i + 1]));
  // local minima of |d| without a sign change can hide a close pair or a tangency
  for (size_t i = 1; i + 1 < v.size(); ++i) {
    const Sample &a = v[i - 1], &m = v[i], &b = v[i + 1];
    if ((a.d > 0) != (m.d > 0) || (b.d > 0) != (m.d > 0)) continue;
    if (!(std::abs(m.d) <= std::abs(a.d) && std::abs(m.d) <= std::abs(b.d))) continue;
    double fa = dprime_at(a), fb = dprime_at(b);
    if ((fa > 0) == (fb > 0)) continue;
    Sample c = critical_point(a, b);
    if (!c.ok) continue;
    if (c.d != 0 && (c.d > 0) != (m.d > 0)) {
      add_simple(bisect_root(a, c));
      add_simple(bisect_root(c, b));
    } else if (double_search && std::abs(c.d) <= kDoubleD && std::abs(dprime_at(c)) <= kDoubleDprime) {
      add_double(c);
    }
  }
  std::sort(out_.roots.begin(), out_.roots.end(),
            [](const CycleRoot& x, const CycleRoot& y) { return x.y0_star < y.y0_star; });
  return out_;
}

Stability flipped(Stability s) {
  switch (s) {
    case Stability::Stable: return Stability::Unstable;
    case Stability::Unstable: return Stability::Stable;
    case Stability::SemiStableInnerStable: return Stability::SemiStableInnerUnstable;
    case Stability::SemiStableInnerUnstable: return Stability::SemiStableInnerStable;
  }
  return s;
}

// Carries a root of the mirrored system back and re-brackets it in the original one.
void polish_mirrored(const SystemParams& p, const CycleRoot& mr, const SystemParams& q, CycleSearch& out) {
  double y;
  try {
    y = -left_map(q, mr.y0_star).y1;
  } catch (const Error& e) {
    out.failures.push_back(std::string("mirror map-back: ") + e.what());
    return;
  }
  CycleRoot root = mr;
  try {
    if (mr.multiplicity == 1) {
      SuccessorPoint c = evaluate_successor(p, y);
      double step = 1e-12 * std::max(1.0, std::abs(y));
      double lo = y, hi = y;
      SuccessorPoint pl = c, ph = c;
      bool found = c.d == 0;
      for (int k = 0; k < 60 && !found; ++k) {
        lo = y - step;
        hi = y + step;
        pl = evaluate_successor(p, lo);
        ph = evaluate_successor(p, hi);
        if ((pl.d > 0) != (ph.d > 0)) found = true;
        step *= 2;
      }
      if (!found) {
        out.failures.push_back("mirrored root could not be re-bracketed");
        return;
      }
      while (c.d != 0 && hi - lo > kRootWidth) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        SuccessorPoint m = evaluate_successor(p, mid, pl.t, pl.s);
        if (m.d == 0) {
          lo = hi = mid;
          break;
        }
        if ((m.d > 0) == (pl.d > 0)) {
          lo = mid;
          pl = m;
        } else {
          hi = mid;
        }
      }
      y = 0.5 * (lo + hi);
    }
    SuccessorPoint c = evaluate_successor(p, y);
    root.y0_star = y;
    root.d_residual = c.d;
    root.t = c.t;
    root.s = c.s;
    root.dprime = section_F(p.gamma_r, c.s) - section_F(p.gamma_l, c.t);
    if (mr.multiplicity == 1) {
      root.stability = root.dprime < 0 ? Stability::Stable : Stability::Unstable;
      if (root.stability != flipped(mr.stability))
        out.failures.push_back("mirror stability disagrees with the original derivative sign");
    } else {
      root.d_second = d_second_at_root(p, root);
      root.stability = root.d_second > 0 ? Stability::SemiStableInnerStable : Stability::SemiStableInnerUnstable;
    }
  } catch (const Error& e) {
    out.failures.push_back(std::string("mirrored root polish: ") + e.what());
    return;
  }
  out.roots.push_back(root);
}

}  // namespace

CycleSearch find_cycles(const SystemParams& p, const CycleSearchOptions& opts) {
  require_node(p);
  CycleValidation v = validate_for_cycles(p);
  if (!v.ok) throw Error(ErrorKind::DomainError, v.reason);
  if (p.gamma_l < 0 && p.gamma_r > 0) {
    // time reversal with y -> -y maps this case onto gamma_l > 0 > gamma_r
    SystemParams q{-p.gamma_l, -p.gamma_r, p.alpha_l, p.alpha_r, -p.b};
    CycleSearch m = Searcher(q, opts).run();
    CycleSearch out;
    out.domain = domain(p);
    out.mirrored = true;
    out.empty_domain = m.empty_domain;
    out.continuum = m.continuum;
    out.failures = m.failures;
    for (const auto& r : m.roots) polish_mirrored(p, r, q, out);
    std::sort(out.roots.begin(), out.roots.end(),
              [](const CycleRoot& x, const CycleRoot& y) { return x.y0_star < y.y0_star; });
    return out;
  }
  return Searcher(p, opts).run();
}

}  // namespace limcyc
