#include <chrono>
#include <functional>
#include <sstream>

#include "limcyc/appendix.hpp"
#include "limcyc/common_root.hpp"
#include "limcyc/verify.hpp"

namespace limcyc {

void VerifyReport::add(SubCheck c) {
  pass = pass && c.pass;
  checks.push_back(std::move(c));
}

const SubCheck* VerifyReport::find(const std::string& check_name) const {
  for (const auto& c : checks)
    if (c.name == check_name) return &c;
  return nullptr;
}

const SubCheck* VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

void require_pass(const VerifyReport& r) {
  if (const SubCheck* f = r.first_failure())
    throw Error(ErrorKind::VerificationFailure, r.name + ": " + f->name + ": " + f->detail);
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs body, filling the check; exceptions become failures.
SubCheck timed(const std::string& name, const std::function<void(SubCheck&)>& body) {
  SubCheck c;
  c.name = name;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("exception: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return c;
}

std::string str(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

Bound at(long x) { return Bound::at(BigRational(x)); }
Bound at(const BigRational& x) { return Bound::at(x); }

ExactPoly spec(const ExactPoly& p, Var var, long value) { return p.substitute(var, BigRational(value)); }

int sign_of(const ExactPoly& univariate, const BigRational& x) {
  auto vars = univariate.variables();
  Var v = vars.empty() ? Var::U : vars.front();
  return IntPoly::from_exact(univariate, v).sign_at(x);
}

// Exactly `expected` roots of p on (lo, hi]; the isolating intervals go into the facts.
void count_check(SubCheck& c, const ExactPoly& p, const Bound& lo, const Bound& hi, int expected) {
  int n = sturm_count(p, lo, hi);
  c.facts.emplace_back("sturm_count", std::to_string(n));
  c.facts.emplace_back("interval", "(" + lo.to_string() + ", " + hi.to_string() + "]");
  if (n > 0) {
    auto iso = isolate_roots(p, lo, hi);
    for (size_t i = 0; i < iso.intervals.size(); ++i)
      c.facts.emplace_back("root_" + std::to_string(i + 1),
                           iso.intervals[i].to_string() + " ~ " + str(iso.intervals[i].approx()));
  }
  c.pass = n == expected;
  c.detail = std::to_string(n) + " root(s), expected " + std::to_string(expected);
}

// The value lies in a Sturm-certified isolating interval (lo, hi] holding exactly one root.
void near_value_check(SubCheck& c, const ExactPoly& p, const BigRational& lo, const BigRational& hi,
                      const std::string& value) {
  int n = sturm_count(p, at(lo), at(hi));
  c.facts.emplace_back("isolating_interval", "(" + lo.get_str() + ", " + hi.get_str() + "]");
  c.facts.emplace_back("interval_width", BigRational(hi - lo).get_str());
  c.pass = n == 1;
  c.detail = std::to_string(n) + " root(s) in an interval of width " + str(BigRational(hi - lo).get_d()) + " containing " + value;
}

void sign_check(SubCheck& c, const ExactPoly& p, const std::vector<long>& points, int expected) {
  c.pass = true;
  std::ostringstream os;
  for (long x : points) {
    int s = sign_of(p, BigRational(x));
    os << "sign(" << x << ")=" << s << " ";
    if (s != expected) c.pass = false;
  }
  c.detail = os.str();
}

void common_root(SubCheck& c, const ExactPoly& p, const VerifyOptions& opt) {
  CommonRootRegion reg;
  reg.x_hi = opt.box_max;
  CommonRootReport rep = common_root_check(p, p.derivative(Var::V), reg);
  c.pass = rep.status == CommonRootStatus::NoCommonRoot;
  c.detail = to_string(rep.status) + " on " + rep.region;
  c.facts.emplace_back("resultant_degree", std::to_string(rep.resultant_degree));
  std::ostringstream fs;
  for (auto [d, m] : rep.factors) fs << "(" << d << "," << m << ")";
  c.facts.emplace_back("squarefree_factors", fs.str());
  c.facts.emplace_back("u_roots_in_box", std::to_string(rep.x_roots));
  for (const auto& b : rep.boundary_excluded)
    c.facts.emplace_back("boundary_excluded", "u~" + str(b.x.approx()) + " at " + b.where);
  for (const auto& b : rep.candidates)
    c.facts.emplace_back("candidate", "u in " + b.x.to_string() + ", v~" + str(b.y));
}

VerifyReport lemma_r1(const VerifyOptions& opt) {
  VerifyReport r;
  r.name = "R1";
  const ExactPoly R1 = build_appendix("R1");
  const ExactPoly V = ExactPoly::variable(Var::V);
  const ExactPoly r1_v1 = spec(R1, Var::V, 1);
  r.add(timed("R1(u,1) has exactly one root on (1,+inf)",
              [&](SubCheck& c) { count_check(c, r1_v1, at(1), Bound::pos_inf(), 1); }));
  r.add(timed("R1(u,1) root isolated near 75.5 (width < 0.5)", [&](SubCheck& c) {
    near_value_check(c, r1_v1, BigRational(753, 10), BigRational(757, 10), "75.5");
  }));
  r.add(timed("R1(u,1) < 0 below the root and > 0 above", [&](SubCheck& c) {
    SubCheck lo, hi;
    sign_check(lo, r1_v1, {2, 10, 50, 75}, -1);
    sign_check(hi, r1_v1, {76, 100, 1000}, +1);
    c.pass = lo.pass && hi.pass;
    c.detail = lo.detail + "| " + hi.detail;
  }));
  const ExactPoly r1_vu = R1.substitute(Var::V, ExactPoly::variable(Var::U));
  r.add(timed("R1(u,u) has no root on (1,1e6]",
              [&](SubCheck& c) { count_check(c, r1_vu, at(1), at(1000000), 0); }));
  r.add(timed("R1(u,u) has no root on (1,+inf)",
              [&](SubCheck& c) { count_check(c, r1_vu, at(1), Bound::pos_inf(), 0); }));
  r.add(timed("R1(u,u) < 0", [&](SubCheck& c) { sign_check(c, r1_vu, {2, 76, 1000}, -1); }));
  const ExactPoly r1_74 = spec(R1, Var::U, 74), r1_76 = spec(R1, Var::U, 76);
  r.add(timed("R1(74,v) has no root on (1,74)", [&](SubCheck& c) {
    count_check(c, r1_74, at(1), at(74), 0);
    c.pass = c.pass && sign_of(r1_74, 74) != 0;
  }));
  r.add(timed("R1(74,v) < 0 on (1,74)", [&](SubCheck& c) { sign_check(c, r1_74, {2, 37, 73}, -1); }));
  r.add(timed("R1(76,v) has exactly one root on (1,76)", [&](SubCheck& c) {
    count_check(c, r1_76, at(1), at(76), 1);
    c.pass = c.pass && sign_of(r1_76, 76) != 0;
  }));
  const ExactPoly r1_v2 = R1.substitute(Var::U, V * V);
  r.add(timed("R1(v^2,v) has no root on (1,+inf)",
              [&](SubCheck& c) { count_check(c, r1_v2, at(1), Bound::pos_inf(), 0); }));
  r.add(timed("R1(v^2,v) < 0", [&](SubCheck& c) { sign_check(c, r1_v2, {2, 9, 100}, -1); }));
  r.add(timed("R1 and dR1/dv have no common root for 1<v<u<=" + opt.box_max.get_str(),
              [&](SubCheck& c) { common_root(c, R1, opt); }));
  r.notes.push_back("common-root search covers u <= " + opt.box_max.get_str() + " only; the tail u > " +
                    opt.box_max.get_str() + " is not verified");
  return r;
}

VerifyReport lemma_r2(const VerifyOptions& opt) {
  VerifyReport r;
  r.name = "R2";
  const ExactPoly R2 = build_appendix("R2");
  const ExactPoly r2_v1 = spec(R2, Var::V, 1);
  r.add(timed("R2(u,1) has no root on [60,+inf)", [&](SubCheck& c) {
    count_check(c, r2_v1, at(60), Bound::pos_inf(), 0);
    int s60 = sign_of(r2_v1, 60);
    c.facts.emplace_back("sign_at_60", std::to_string(s60));
    c.pass = c.pass && s60 != 0;
  }));
  r.add(timed("R2(u,1) roots on (1,+inf)", [&](SubCheck& c) {
    count_check(c, r2_v1, at(1), Bound::pos_inf(), sturm_count(r2_v1, at(1), Bound::pos_inf()));
  }));
  r.add(timed("R2(u,1) > 0 for u > u*", [&](SubCheck& c) { sign_check(c, r2_v1, {60, 76, 100, 1000}, +1); }));
  const ExactPoly r2_vu = R2.substitute(Var::V, ExactPoly::variable(Var::U));
  r.add(timed("R2(u,u) has no root on (1,+inf)",
              [&](SubCheck& c) { count_check(c, r2_vu, at(1), Bound::pos_inf(), 0); }));
  r.add(timed("R2(u,u) < 0", [&](SubCheck& c) { sign_check(c, r2_vu, {2, 76, 1000}, -1); }));
  const ExactPoly r2_76 = spec(R2, Var::U, 76);
  r.add(timed("R2(76,v) has exactly one root on (1,76)", [&](SubCheck& c) {
    count_check(c, r2_76, at(1), at(76), 1);
    c.pass = c.pass && sign_of(r2_76, 76) != 0;
  }));
  r.add(timed("R2 and dR2/dv have no common root for 1<v<u<=" + opt.box_max.get_str(),
              [&](SubCheck& c) { common_root(c, R2, opt); }));
  r.notes.push_back("common-root search covers u <= " + opt.box_max.get_str() + " only; the tail u > " +
                    opt.box_max.get_str() + " is not verified");
  return r;
}

VerifyReport lemma_h3(const VerifyOptions&) {
  VerifyReport r;
  r.name = "H3";
  const ExactPoly H3 = build_appendix("H3");
  const ExactPoly R2 = build_appendix("R2");
  auto P = [](const char* s) { return ExactPoly::parse(s); };
  r.add(timed("H3(u,v,1) = -32v(u^3v^5+2u^2v^4+2uv+1)(u-v)^5", [&](SubCheck& c) {
    c.pass = spec(H3, Var::G, 1) == P("-32*v*(u^3*v^5+2*u^2*v^4+2*u*v+1)*(u-v)^5");
    c.detail = c.pass ? "exact polynomial identity" : "identity fails";
  }));
  r.add(timed("leading coefficient in γ is u^3(v^2-1)^5(2u^2v+uv^2+u+2v) > 0", [&](SubCheck& c) {
    auto cs = H3.coefficients_in(Var::G);
    c.pass = cs.size() == 6 && cs[5] == P("u^3*(v^2-1)^5*(2*u^2*v+u*v^2+u+2*v)");
    c.detail = "degree " + std::to_string(H3.degree(Var::G)) + " in γ; factors positive for 1<v<u";
  }));
  struct Probe {
    long u, v;
    int region;  // sign of R2
    BigRational lo, hi;
    const char* value;
  };
  const Probe probes[] = {{76, 3, +1, BigRational(3555, 100), BigRational(3645, 100), "36"},
                          {76, 4, -1, BigRational(2555, 100), BigRational(2645, 100), "26"}};
  for (const auto& pr : probes) {
    const std::string tag = "H3(" + std::to_string(pr.u) + "," + std::to_string(pr.v) + ",γ)";
    const ExactPoly h = spec(spec(H3, Var::U, pr.u), Var::V, pr.v);
    r.add(timed(std::string("(") + std::to_string(pr.u) + "," + std::to_string(pr.v) + ") lies in " +
                    (pr.region > 0 ? "Q1 (R2 > 0)" : "Q2 (R2 < 0)"),
                [&](SubCheck& c) {
                  BigRational val = R2.evaluate(pr.u, pr.v, 0);
                  c.pass = sgn(val) == pr.region;
                  c.detail = "R2 = " + val.get_str();
                }));
    r.add(timed(tag + " has exactly one root on (1,+inf)",
                [&](SubCheck& c) { count_check(c, h, at(1), Bound::pos_inf(), 1); }));
    r.add(timed(tag + " root isolated near " + pr.value + " (width < 1)",
                [&](SubCheck& c) { near_value_check(c, h, pr.lo, pr.hi, pr.value); }));
  }
  r.add(timed("unique γ-root of H3 at sampled (u,v) in Q1 and Q2", [&](SubCheck& c) {
    int q1 = 0, q2 = 0, bad = 0;
    std::ostringstream os;
    for (long u : {76L, 80L, 100L, 150L, 200L, 500L}) {
      for (long num : {11L, 3L, 2L, 5L, 10L, 20L, 50L}) {
        // v = 1 + (u-1) * t for a spread of t in (0,1)
        BigRational t(num, 51);
        BigRational v = 1 + (u - 1) * t;
        if (v <= 1 || v >= u) continue;
        int region = sgn(R2.evaluate(u, v, 0));
        if (region == 0) continue;
        ExactPoly h = H3.substitute(Var::U, BigRational(u)).substitute(Var::V, v);
        int n = sturm_count(h, at(1), Bound::pos_inf());
        (region > 0 ? q1 : q2)++;
        if (n != 1) {
          ++bad;
          os << "(" << u << "," << v.get_d() << "):" << n << " ";
        }
      }
    }
    c.facts.emplace_back("samples_Q1", std::to_string(q1));
    c.facts.emplace_back("samples_Q2", std::to_string(q2));
    c.pass = bad == 0 && q1 > 0 && q2 > 0;
    c.detail = bad == 0 ? "all samples have one root" : "violations " + os.str();
  }));
  return r;
}

}  // namespace

VerifyReport verify_lemma(const std::string& name, const VerifyOptions& opt) {
  auto t0 = Clock::now();
  VerifyReport r;
  if (name == "R1" || name == "r1") r = lemma_r1(opt);
  else if (name == "R2" || name == "r2") r = lemma_r2(opt);
  else if (name == "H3" || name == "h3") r = lemma_h3(opt);
  else throw Error(ErrorKind::DomainError, "unknown lemma: " + name);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

VerifyReport verify_appendix() {
  auto t0 = Clock::now();
  VerifyReport r;
  r.name = "appendix";
  for (const auto& d : appendix_displays()) {
    SubCheck c;
    c.name = d.label;
    c.pass = d.matches();
    c.detail = c.pass ? "coefficient-level equality (" + std::to_string(d.display.terms().size()) + " terms)"
                      : "display differs from the specialization";
    r.add(std::move(c));
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

}  // namespace limcyc
