// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "limcyc/appendix.hpp"
#include "limcyc/oracle.hpp"
#include "limcyc/successor.hpp"
#include "limcyc/sturm.hpp"
#include "limcyc/verify.hpp"

using namespace limcyc;

namespace {

// tolerances
constexpr double kHalfMapRel = 1e-9;
constexpr double kOriginRel = 1e-3;
constexpr double kShiftAbs = 1e-10;
constexpr double kEndpointAbs = 1e-12;
constexpr double kHopfRel = 0.10;
constexpr double kFoldResidual = 1e-9;

const SystemParams kFamily{2, -3, 1, -1.4, 0};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

bool rel_close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)); }

class Rng {
 public:
  explicit Rng(unsigned seed) : g_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g_); }
  double sign() { return uniform(0, 1) < 0.5 ? -1.0 : 1.0; }
  double gamma() { return sign() * uniform(1.1, 5.0); }
  SystemParams system(double b_width) {
    return {gamma(), gamma(), uniform(0.3, 3.0), -uniform(0.3, 3.0), uniform(-b_width, b_width)};
  }

 private:
  std::mt19937_64 g_;
};

int failures = 0;

void report(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0) o.require(s < limit_s, "runtime " + std::to_string(s) + " s over " + std::to_string(limit_s) + " s");
  if (!o.pass) ++failures;
  std::printf("%s %2d %s [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", id, title, s, o.detail.str().c_str());
  std::fflush(stdout);
}

// --- 1 -------------------------------------------------------------------
void half_map_oracle(Outcome& o) {
  Rng rnd(101);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    SystemParams p = rnd.system(0.3);
    double t = rnd.uniform(0.01, 5.0);
    HalfMapSample l = left_sample(p, t);
    CrossingEvent cl = cross_time(Subsystem::left(p), l.y0);
    HalfMapSample r = right_sample(p, -t);
    CrossingEvent cr = cross_time(Subsystem::right(p), r.y1);
    for (auto [a, b] : {std::pair{cl.state.y, l.y1}, {cl.time, t}, {cr.state.y, r.y0}, {cr.time, t}}) {
      double e = std::abs(a - b) / std::max(std::abs(a), std::abs(b));
      worst = std::max(worst, e);
      o.require(e <= kHalfMapRel, "draw " + std::to_string(i));
    }
  }
  o.detail << "400 transits, worst relative error " << worst;
}

// --- 2 -------------------------------------------------------------------
void origin_derivatives(Outcome& o) {
  Rng rnd(202);
  double worst[4] = {0, 0, 0, 0}, library4 = 0;
  for (int i = 0; i < 20; ++i) {
    SystemParams p = rnd.system(0.3);
    for (Side side : {Side::Left, Side::Right}) {
      OriginSeries s = origin_series(p, side);
      double g = side == Side::Left ? p.gamma_l : p.gamma_r;
      double a = side == Side::Left ? p.alpha_l : p.alpha_r;
      double scale = std::abs(a) / (std::abs(g) + 1);
      auto P = [&](double h) {
        return side == Side::Left ? left_map(p, h).y1 : right_inverse_map(p, p.b + h).y1 - p.b;
      };
      // one-sided difference quotients; each removes the lower-order terms already checked
      auto q1 = [&](double h) { return P(h) / h; };
      auto q2 = [&](double h) { return 2 * (P(h) + h) / (h * h); };
      auto q3 = [&](double h) { return 6 * (P(h) + h - s.d2 * h * h / 2) / (h * h * h); };
      auto q4 = [&](double h) {
        return 24 * (P(h) + h - s.d2 * h * h / 2 - s.d3 * h * h * h / 6) / (h * h * h * h);
      };
      // two Richardson levels on the halving sequence h, h/2, h/4
      auto richardson = [](const std::function<double(double)>& q, double h) {
        double a0 = q(h), a1 = q(h / 2), a2 = q(h / 4);
        double b0 = 2 * a1 - a0, b1 = 2 * a2 - a1;
        return (4 * b1 - b0) / 3;
      };
      double est[4] = {richardson(q1, 1e-3 * scale), richardson(q2, 2e-3 * scale), richardson(q3, 2e-2 * scale),
                       richardson(q4, 5e-2 * scale)};
      // closed forms as stated for the half-map derivatives at the fixed endpoint
      double stated[4] = {-1.0, -8 * g / (3 * a), -32 * g * g / (3 * a * a), -32 * g * (23 * g * g + 9) / (9 * a * a * a)};
      for (int k = 0; k < 4; ++k) {
        double e = std::abs(est[k] - stated[k]) / std::abs(stated[k]);
        worst[k] = std::max(worst[k], e);
        o.require(e <= kOriginRel, "draw " + std::to_string(i) + " derivative " + std::to_string(k + 1));
      }
      library4 = std::max(library4, std::abs(est[3] - s.d4) / std::abs(s.d4));
    }
  }
  o.detail << "40 half-maps, worst relative error by order:";
  for (double w : worst) o.detail << ' ' << w;
  o.detail << "; library fourth derivative -32g(79g^2+9)/(45a^3) worst " << library4;
}

// --- 3 -------------------------------------------------------------------
void successor_identities(Outcome& o) {
  Rng rnd(303);
  int endpoint_bad = 0, shift_bad = 0, mono_bad = 0, n_end = 0, n_shift = 0, n_mono = 0;
  double endpoint_worst = 0, shift_worst = 0;
  while (n_end < 50 || n_shift < 50 || n_mono < 50) {
    SystemParams p = rnd.system(0.3);
    p.b = std::abs(p.b);
    SuccessorDomain dom = domain(p);
    MapDomain l = left_map_domain(p);
    // d(b; b) = b, evaluated with the right map at its own endpoint
    if (n_end < 50 && p.b < l.hi) {
      double dbb = right_inverse_map(p, p.b).y1 - left_map(p, p.b).y1;
      double e = std::abs(dbb - p.b);
      endpoint_worst = std::max(endpoint_worst, e);
      endpoint_bad += e > kEndpointAbs;
      ++n_end;
    }
    // d(y0; b) - d(y0 - b; 0) = b
    SuccessorDomain dom0 = domain(p.with_b(0));
    double hi = std::min(dom.y0_max, dom0.y0_max + p.b);
    if (n_shift < 50 && !dom.empty() && std::isfinite(hi) && hi > dom.y0_min) {
      double y0 = dom.y0_min + rnd.uniform(0.2, 0.8) * (hi - dom.y0_min);
      double e = std::abs(d(p, y0) - d(p.with_b(0), y0 - p.b) - p.b);
      shift_worst = std::max(shift_worst, e);
      shift_bad += e > kShiftAbs;
      ++n_shift;
    }
    // d strictly increasing in b at fixed y0 across a shared b grid
    if (n_mono < 50) {
      double b0 = std::min(p.b, 0.05), b1 = b0 + 0.05;
      SuccessorDomain d0 = domain(p.with_b(b0)), d1 = domain(p.with_b(b1));
      double lo = std::max(d0.y0_min, d1.y0_min), top = std::min(d0.y0_max, d1.y0_max);
      if (std::isfinite(top) && top > lo) {
        double y0 = lo + 0.5 * (top - lo);
        double prev = -INFINITY;
        bool ok = true;
        for (int k = 0; k <= 10; ++k) {
          double v = d(p.with_b(b0 + (b1 - b0) * k / 10), y0);
          ok = ok && v > prev;
          prev = v;
        }
        mono_bad += !ok;
        ++n_mono;
      }
    }
  }
  o.require(endpoint_bad == 0, "d(b;b) = b on " + std::to_string(endpoint_bad) + "/50 draws off by more than 1e-12");
  o.require(shift_bad == 0, "d(y0;b) - d(y0-b;0) = b on " + std::to_string(shift_bad) + "/50 draws off by more than 1e-10");
  o.require(mono_bad == 0, "monotonicity in b broken on " + std::to_string(mono_bad) + "/50 draws");
  o.detail << "d(b;b)-b worst " << endpoint_worst << ", shift identity worst " << shift_worst
           << ", monotone in b on " << 50 - mono_bad << "/50";
}

// --- 4 -------------------------------------------------------------------
void regime_reproduction(Outcome& o) {
  int systems = 0;
  std::ostringstream tags;
  auto compare = [&](const SystemParams& p, bool stable_iff_b_positive) {
    CycleSearch cs = find_cycles(p);
    RegimePrediction r = classify_regime(p);
    int n = cs.total_multiplicity();
    std::ostringstream id;
    id << "(" << p.gamma_l << "," << p.gamma_r << "," << p.alpha_l << "," << p.alpha_r << "," << p.b << ") " << r.tag;
    ++systems;
    if (r.exact) o.require(n == r.count, id.str() + " count " + std::to_string(n));
    else o.require(n <= r.count, id.str() + " count " + std::to_string(n));
    if (n == 1 && r.stability) o.require(cs.roots[0].stability == *r.stability, id.str() + " stability");
    if (n == 1 && stable_iff_b_positive) {
      IterateVerdict v = iterate_stability(p, cs.roots[0].y0_star).verdict;
      o.require((v == IterateVerdict::Attracting) == (p.b > 0), id.str() + " iterate verdict");
    }
    return r.tag;
  };
  // b = 0, every branch of the refracting theorem
  std::vector<std::string> seen;
  auto note = [&](const std::string& t) {
    if (std::find(seen.begin(), seen.end(), t) == seen.end()) seen.push_back(t);
  };
  for (double gl : {-3.0, -2.0, -1.5, 1.5, 2.0, 3.0})
    for (double gr : {-3.0, -2.0, -1.5, 1.5, 2.0, 3.0})
      for (double al : {0.5, 1.0, 1.4, 2.0})
        for (double ar : {-0.5, -1.0, -1.4, -2.0}) {
          SystemParams p{gl, gr, al, ar, 0};
          std::string t = compare(p, false);
          RegimePrediction r = classify_regime(p);
          note(r.stability ? t + ":" + to_string(*r.stability) : t);
        }
  // the centre case: both discriminants vanish
  for (double g : {1.5, 3.0}) {
    note(compare({g, -g, 1, -1, 0}, false));
  }
  for (const char* need : {"beq0lc(i)", "beq0lc(ii)", "beq0lc(iii)(a)", "beq0lc(iii)(b):stable",
                           "beq0lc(iii)(b):unstable", "beq0lc(iv)(a)", "beq0lc(iv)(b):stable", "beq0lc(iv)(b):unstable"}) {
    bool hit = std::find(seen.begin(), seen.end(), need) != seen.end();
    o.require(hit, std::string("branch ") + need + " not exercised");
  }
  // gamma_l * gamma_r > 0
  for (double gl : {-3.0, -1.5, 1.5, 3.0})
    for (double gr : {-2.0, 2.0, 4.0})
      if (gl * gr > 0)
        for (double b : {-0.2, -0.05, 0.05, 0.2}) compare({gl, gr, 1.0, -1.3, b}, true);
  // gamma_l + gamma_r = 0
  for (double g : {-3.0, -1.5, 1.5, 3.0})
    for (double ar : {-0.7, -1.0, -1.6})
      for (double b : {-0.1, -0.01, 0.01, 0.1}) compare({g, -g, 1.0, ar, b}, true);
  o.detail << systems << " systems, refracting branches:";
  for (const auto& s : seen) o.detail << ' ' << s;
}

// --- 5 -------------------------------------------------------------------
void pseudo_hopf(Outcome& o) {
  for (double b : {1e-6, 1e-5, 1e-4}) {
    double amp = pseudo_hopf_amplitude(kFamily, b);
    double want = std::sqrt(21 * b / 2);
    o.require(std::abs(amp - want) <= kHopfRel * want, "amplitude at b=" + std::to_string(b));
    o.detail << "b=" << b << " y0*=" << amp << " predicted " << want << "; ";
  }
  for (double b : {-1e-6, -1e-5, -1e-4}) {
    bool none = false;
    try {
      pseudo_hopf_amplitude(kFamily, b);
    } catch (const Error& e) {
      none = e.kind() == ErrorKind::NoSmallCycle;
    }
    CycleSearch cs = find_cycles(kFamily.with_b(b));
    // a pseudo-Hopf cycle would sit near sqrt(21|b|/2); the large unstable cycle of this regime is far outside
    for (const CycleRoot& r : cs.roots) none = none && r.y0_star > 3 * std::sqrt(21 * std::abs(b) / 2);
    o.require(none, "small cycle at b=" + std::to_string(b));
  }
  o.detail << "no small cycle for b < 0";
}

// --- 6 -------------------------------------------------------------------
void exactly_two(Outcome& o) {
  std::vector<double> grid = linspace_grid(-0.4, 0.4, 400);
  BifurcationReport r = scan_b(kFamily, grid);
  const double step = 0.8 / 400;
  std::vector<std::string> seq;
  for (const auto& g : r.regimes) seq.push_back(g.signature);
  std::string joined;
  for (const auto& s : seq) joined += (joined.empty() ? "" : " / ") + s;
  o.require(seq == std::vector<std::string>{"0", "1:U", "2:S,U", "0"}, "regime sequence " + joined);
  o.require(std::abs(r.b_m + 0.35) <= 1e-12, "b_m");
  o.require(std::abs(r.b_bar + 1.0 / 60) <= 1e-12, "b_bar");
  o.require(std::abs(r.b_M - 1.0 / 3) <= 1e-12, "b_M");
  if (seq.size() == 4) {
    o.require(r.regimes[0].b_to < r.b_bar && r.regimes[1].b_from >= r.b_bar - 1e-12 &&
                  r.regimes[1].b_from - r.regimes[0].b_to <= step + 1e-12,
              "0 -> 1 transition does not bracket b_bar");
  }
  o.require(r.b_tilde.has_value(), "no fold located");
  if (r.b_tilde && !r.folds.empty()) {
    const FoldPoint& f = r.folds.front();
    o.require(*r.b_tilde > 0 && *r.b_tilde < 1.0 / 3, "b_tilde outside (0, 1/3)");
    o.require(std::abs(f.d_residual) <= kFoldResidual && std::abs(f.dprime_residual) <= kFoldResidual, "fold residuals");
    o.require(f.d_second > 0, "sign of d'' at the fold");
    if (seq.size() == 4)
      o.require(r.regimes[2].b_to < *r.b_tilde && *r.b_tilde < r.regimes[3].b_from, "2 -> 0 transition misses b_tilde");
    o.detail << "b_tilde=" << *r.b_tilde << " |d|=" << std::abs(f.d_residual) << " |d'|=" << std::abs(f.dprime_residual)
             << " d''=" << f.d_second << "; ";
  }
  o.detail << "regimes " << joined;
}

// --- 7 -------------------------------------------------------------------
void multiplicity_cap(Outcome& o) {
  Rng rnd(707);
  int max_mult = 0, doubles = 0, failures_seen = 0;
  for (int i = 0; i < 10000; ++i) {
    SystemParams p = rnd.system(0.5);
    CycleSearch cs = find_cycles(p);
    max_mult = std::max(max_mult, cs.total_multiplicity());
    o.require(cs.total_multiplicity() <= 2, "draw " + std::to_string(i) + " has multiplicity above 2");
    failures_seen += !cs.failures.empty();
    for (const CycleRoot& r : cs.roots)
      if (r.multiplicity == 2) {
        ++doubles;
        double s = p.gamma_l + p.gamma_r;
        o.require(s != 0 && (r.d_second > 0) == (s < 0), "d'' sign law at draw " + std::to_string(i));
      }
  }
  // random draws almost never land on a fold, so also visit located folds on both sides of gl+gr=0
  int fold_doubles = 0;
  const SystemParams families[] = {{2, -3, 1, -1.4, 0}, {2, -3, 1, -1.2, 0}, {3, -2, 1, -0.8, 0},
                                   {2, -1.5, 1, -0.9, 0}, {2.5, -1.5, 1, -0.8, 0}};
  for (const SystemParams& fam : families) {
    BifurcationReport r = scan_b(fam, linspace_grid(-0.4, 0.4, 160));
    o.require(!r.folds.empty(), "no fold located");
    for (const FoldPoint& f : r.folds) {
      SystemParams p = fam;
      p.b = f.b;
      CycleSearch cs = find_cycles(p);
      o.require(cs.total_multiplicity() <= 2, "fold point has multiplicity above 2");
      double s = fam.gamma_l + fam.gamma_r;
      o.require((f.d_second > 0) == (s < 0), "d'' sign law at fold b=" + std::to_string(f.b));
      for (const CycleRoot& c : cs.roots)
        if (c.multiplicity == 2) {
          ++fold_doubles;
          o.require((c.d_second > 0) == (s < 0), "d'' sign law at fold root b=" + std::to_string(f.b));
        }
    }
  }
  o.require(fold_doubles > 0, "search reported no double root at any fold");
  o.detail << "10000 draws, max total multiplicity " << max_mult << ", double roots " << doubles
           << ", draws with search diagnostics " << failures_seen << "; fold double roots " << fold_doubles;
}

// --- 8, 9 ----------------------------------------------------------------
int count(const ExactPoly& p, const Bound& lo, const Bound& hi) { return sturm_count(p, lo, hi); }

void lemma_r1(Outcome& o) {
  ExactPoly R1 = build_appendix("R1");
  ExactPoly v1 = R1.substitute(Var::V, BigRational(1));
  o.require(count(v1, Bound::at(1), Bound::pos_inf()) == 1, "R1(u,1) root count on (1, inf)");
  RootIsolation iso = isolate_roots(v1, Bound::at(1), Bound::pos_inf(), BigRational(1, 4));
  o.require(iso.intervals.size() == 1, "R1(u,1) isolation");
  if (iso.intervals.size() == 1) {
    RootInterval iv = iso.intervals[0];
    // widen to a window around 75.5 that still isolates the root
    BigRational lo(753, 10), hi(757, 10);
    o.require(iv.lo >= lo && iv.hi <= hi, "root outside (75.3, 75.7]");
    o.require(count(v1, Bound::at(lo), Bound::at(hi)) == 1, "window (75.3, 75.7] does not isolate");
    o.detail << "u* in " << iv.to_string() << ", certified window (75.3, 75.7]; ";
  }
  ExactPoly vu = R1.substitute(Var::V, ExactPoly::variable(Var::U));
  o.require(count(vu, Bound::at(1), Bound::at(1000000)) == 0, "R1(u,u) roots on (1, 1e6]");
  ExactPoly u74 = R1.substitute(Var::U, BigRational(74)), u76 = R1.substitute(Var::U, BigRational(76));
  int c74 = count(u74, Bound::at(1), Bound::at(74)), c76 = count(u76, Bound::at(1), Bound::at(76));
  o.require(c74 == 0, "R1(74,v) roots on (1,74)");
  o.require(c76 == 1, "R1(76,v) roots on (1,76)");
  o.detail << "R1(u,u): 0 roots; R1(74,v): " << c74 << "; R1(76,v): " << c76;
}

void lemma_r2_h3(Outcome& o) {
  ExactPoly R2 = build_appendix("R2"), H3 = build_appendix("H3");
  ExactPoly r2v1 = R2.substitute(Var::V, BigRational(1));
  o.require(r2v1.evaluate(60, 0, 0) != 0 && count(r2v1, Bound::at(60), Bound::pos_inf()) == 0,
            "R2(u,1) root on [60, inf)");
  int c = count(R2.substitute(Var::U, BigRational(76)), Bound::at(1), Bound::at(76));
  o.require(c == 1, "R2(76,v) root count");
  o.detail << "R2(u,1) rootless on [60, inf); R2(76,v): " << c << " root; ";
  for (auto [v, near] : {std::pair{3L, 36L}, {4L, 26L}}) {
    ExactPoly h = H3.substitute(Var::U, BigRational(76)).substitute(Var::V, BigRational(v));
    int n = count(h, Bound::at(1), Bound::pos_inf());
    o.require(n == 1, "H3(76," + std::to_string(v) + ",g) root count");
    BigRational lo = BigRational(near) - BigRational(9, 20), hi = BigRational(near) + BigRational(9, 20);
    o.require(count(h, Bound::at(lo), Bound::at(hi)) == 1, "no isolating interval of width < 1 around " + std::to_string(near));
    RootIsolation iso = isolate_roots(h, Bound::at(lo), Bound::at(hi));
    if (!iso.intervals.empty()) o.detail << "H3(76," << v << ",g) root in " << iso.intervals[0].to_string() << "; ";
  }
}

// --- 10, 11, 12 ------------------------------------------------------------
void from_report(Outcome& o, const VerifyReport& r) {
  for (const auto& c : r.checks) o.require(c.pass, c.name + ": " + c.detail);
  o.detail << r.checks.size() << " sub-checks";
}

void resultant_identities(Outcome& o) {
  VerifyReport r = verify_resultant_identities();
  from_report(o, r);
  for (const auto& c : r.checks)
    for (const auto& [k, v] : c.facts)
      if (k.find("points") != std::string::npos || k.find("bound") != std::string::npos) o.detail << "; " << k << "=" << v;
}

void appendix_consistency(Outcome& o) {
  auto ds = appendix_displays();
  int ok = 0;
  for (const auto& d : ds) {
    o.require(d.matches(), d.label);
    ok += d.matches();
  }
  o.require(ds.size() >= 14, "fewer than 14 displays");
  o.detail << ok << "/" << ds.size() << " displays equal their specializations";
}

void sign_suite(Outcome& o) { from_report(o, verify_section42_signs()); }

}  // namespace

int main() {
  report(1, "half-map oracle agreement", 5, half_map_oracle);
  report(2, "origin derivatives", 0, origin_derivatives);
  report(3, "successor identities", 0, successor_identities);
  report(4, "theorem regime reproduction", 0, regime_reproduction);
  report(5, "pseudo-Hopf scaling", 0, pseudo_hopf);
  report(6, "exactly-two regime scan", 60, exactly_two);
  report(7, "multiplicity cap", 0, multiplicity_cap);
  report(8, "R1 root structure", 30, lemma_r1);
  report(9, "R2 and H3 roots", 0, lemma_r2_h3);
  report(10, "resultant identities", 60, resultant_identities);
  report(11, "appendix consistency", 0, appendix_consistency);
  report(12, "sign suite", 0, sign_suite);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
