#include <chrono>
#include <random>
#include <sstream>

#include "limcyc/appendix.hpp"
#include "limcyc/resultant.hpp"
#include "limcyc/verify.hpp"

namespace limcyc {

namespace {

using Clock = std::chrono::steady_clock;

// c * prod factor_i^power_i
struct Factored {
  BigInt constant;
  std::vector<std::pair<ExactPoly, int>> factors;

  int degree(Var v) const {
    int d = 0;
    for (const auto& [f, k] : factors) d += k * f.degree(v);
    return d;
  }
  BigRational eval(const BigRational& u, const BigRational& v) const {
    BigRational r = constant;
    for (const auto& [f, k] : factors) {
      BigRational x = f.evaluate(u, v, 0), y = 1;
      for (int i = 0; i < k; ++i) y *= x;
      r *= y;
    }
    return r;
  }
};

struct Identity {
  std::string name;
  ExactPoly p, q;  // resultant in γ
  Factored rhs;
};

std::vector<Identity> identities() {
  auto P = [](const char* s) { return ExactPoly::parse(s); };
  const ExactPoly H3 = build_appendix("H3");
  const ExactPoly u = ExactPoly::variable(Var::U), v = ExactPoly::variable(Var::V), g = ExactPoly::variable(Var::G);
  // Derivative along u = v^γ, scaled by v.
  const ExactPoly vdH3 = v * H3.derivative(Var::V) + g * u * H3.derivative(Var::U);
  Identity a{"Res(H3, v dH3/dv, γ) = 33554432 u^11 v^6 (v^2-1)^25 (uv-1)^25 (u-v)^25 (u^2-1) R1",
             H3,
             vdH3,
             {BigInt(33554432),
              {{u, 11}, {v, 6}, {P("v^2-1"), 25}, {P("u*v-1"), 25}, {P("u-v"), 25}, {P("u^2-1"), 1},
               {build_appendix("R1"), 1}}}};
  Identity b{"Res(H3, dH3/dγ, γ) = -4096 (v^2-1)^25 u^11 v^2 (2u^2v+uv^2+u+2v) (uv-1)^20 (u-v)^20 R2",
             H3,
             H3.derivative(Var::G),
             {BigInt(-4096),
              {{P("v^2-1"), 25}, {u, 11}, {v, 2}, {P("2*u^2*v+u*v^2+u+2*v"), 1}, {P("u*v-1"), 20}, {P("u-v"), 20},
               {build_appendix("R2"), 1}}}};
  return {a, b};
}

BigRational random_rational(std::mt19937_64& rng, long num_max, long den_max) {
  std::uniform_int_distribution<long> n(1, num_max), d(1, den_max);
  BigRational r(n(rng), d(rng));
  r.canonicalize();
  return r;
}

SubCheck random_points(const Identity& id, const VerifyOptions& opt) {
  SubCheck c;
  c.name = id.name + " at random rational points";
  auto t0 = Clock::now();
  std::mt19937_64 rng(opt.seed);
  int ok = 0;
  std::ostringstream bad;
  for (int i = 0; i < opt.random_points; ++i) {
    BigRational v = 1 + random_rational(rng, 60, 17);
    BigRational u = v + random_rational(rng, 90, 13);
    BigRational lhs = resultant_at(id.p, id.q, Var::G, {u, v, 0});
    BigRational rhs = id.rhs.eval(u, v);
    if (lhs == rhs) ++ok;
    else bad << "(" << u.get_str() << "," << v.get_str() << ") ";
    if (i < 3) c.facts.emplace_back("point_" + std::to_string(i + 1), "(" + u.get_str() + ", " + v.get_str() + ")");
  }
  c.pass = ok == opt.random_points && opt.random_points >= 20;
  c.detail = std::to_string(ok) + "/" + std::to_string(opt.random_points) + " exact agreements, seed " +
             std::to_string(opt.seed);
  if (!bad.str().empty()) c.detail += "; failing at " + bad.str();
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return c;
}

// Agreement on an (Du+1) x (Dv+1) integer grid, with Du and Dv at least the degree of
// either side in u and v, forces equality of the two polynomials.
SubCheck grid_certificate(const Identity& id) {
  SubCheck c;
  c.name = id.name + " on a tensor grid above the degree bounds";
  auto t0 = Clock::now();
  const int du = std::max(resultant_degree_bound(id.p, id.q, Var::G, Var::U), id.rhs.degree(Var::U));
  const int dv = std::max(resultant_degree_bound(id.p, id.q, Var::G, Var::V), id.rhs.degree(Var::V));
  c.facts.emplace_back("degree_bound_u", std::to_string(du));
  c.facts.emplace_back("degree_bound_v", std::to_string(dv));
  const long u0 = dv + 3, v0 = 2;  // keeps 1 < v < u on the whole grid
  c.facts.emplace_back("grid", "u in [" + std::to_string(u0) + "," + std::to_string(u0 + du) + "], v in [" +
                                   std::to_string(v0) + "," + std::to_string(v0 + dv) + "]");
  const auto pc = id.p.coefficients_in(Var::G), qc = id.q.coefficients_in(Var::G);
  long mismatches = 0, points = 0;
  std::string first_bad;
  for (long ui = u0; ui <= u0 + du; ++ui) {
    const BigRational ur(ui);
    std::vector<IntPoly> pu, qu;
    for (const auto& f : pc) pu.push_back(IntPoly::from_exact(f.substitute(Var::U, ur), Var::V));
    for (const auto& f : qc) qu.push_back(IntPoly::from_exact(f.substitute(Var::U, ur), Var::V));
    std::vector<std::pair<IntPoly, int>> rf;
    for (const auto& [f, k] : id.rhs.factors) rf.emplace_back(IntPoly::from_exact(f.substitute(Var::U, ur), Var::V), k);
    for (long vi = v0; vi <= v0 + dv; ++vi) {
      const BigInt vb(vi);
      std::vector<BigInt> pv, qv;
      for (const auto& f : pu) pv.push_back(f.value_at(vb));
      for (const auto& f : qu) qv.push_back(f.value_at(vb));
      BigInt lhs = resultant(pv, qv), rhs = id.rhs.constant, t;
      for (const auto& [f, k] : rf) {
        BigInt x = f.value_at(vb);
        mpz_pow_ui(t.get_mpz_t(), x.get_mpz_t(), k);
        rhs *= t;
      }
      ++points;
      if (lhs != rhs && mismatches++ == 0) first_bad = "(" + std::to_string(ui) + "," + std::to_string(vi) + ")";
    }
  }
  c.facts.emplace_back("points", std::to_string(points));
  c.pass = mismatches == 0;
  c.detail = c.pass ? std::to_string(points) + " grid points agree; polynomial identity certified"
                    : std::to_string(mismatches) + " mismatches, first at " + first_bad;
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return c;
}

}  // namespace

VerifyReport verify_resultant_identities(const VerifyOptions& opt) {
  auto t0 = Clock::now();
  VerifyReport r;
  r.name = "resultants";
  for (const auto& id : identities()) {
    try {
      r.add(random_points(id, opt));
      if (opt.certify_grid) r.add(grid_certificate(id));
    } catch (const std::exception& e) {
      r.add({id.name, false, std::string("exception: ") + e.what(), {}, 0});
    }
  }
  r.notes.push_back("v dH3/dv is the derivative along u = v^γ: v H3_v + γ u H3_u");
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

}  // namespace limcyc
