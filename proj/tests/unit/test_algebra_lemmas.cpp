#include <random>

#include "doctest.h"
#include "limcyc/appendix.hpp"
#include "limcyc/sturm.hpp"
#include "limcyc/verify.hpp"

using namespace limcyc;

namespace {

ExactPoly P(const char* s) { return ExactPoly::parse(s); }

// coefficients of p(1 + w) in w, for p univariate in v
std::vector<BigRational> taylor_at_one(const ExactPoly& p) {
  ExactPoly shifted = p.substitute(Var::V, P("v + 1"));
  std::vector<BigRational> c(shifted.degree(Var::V) + 1);
  for (const auto& [e, k] : shifted.terms()) c[e[1]] = k;
  return c;
}

int leading_order(const std::vector<BigRational>& c) {
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("appendix specializations equal the general constructors") {
  auto displays = appendix_displays();
  CHECK(displays.size() == 15);
  for (const auto& d : displays) {
    INFO(d.label);
    CHECK(d.matches());
  }
  CHECK_THROWS_AS(build_appendix("R7"), Error);
  for (const auto& n : appendix_names()) CHECK_FALSE(build_appendix(n).is_zero());
}

TEST_CASE("section polynomials") {
  CHECK(build_appendix("Fd") == build_appendix("F2"));
  CHECK(build_appendix("Fd").substitute(Var::V, BigRational(1)).substitute(Var::U, BigRational(1)).is_zero());
  // Gnum carries the Fn factor
  CHECK_NOTHROW(build_appendix("Gnum").exact_divide(build_appendix("Fn")));
}

TEST_CASE("H11 vanishes to seventh order at v = 1 with a positive leading term") {
  ExactPoly h = build_appendix("H11");
  for (long g : {2L, 3L, 5L}) {
    ExactPoly hv = h.substitute(Var::G, BigRational(g)).substitute(Var::U, P("v").pow(g));
    auto c = taylor_at_one(hv);
    REQUIRE(leading_order(c) == 7);
    CHECK(c[7] == BigRational(4 * g * (g * g - 1) * (g * g - 1) * (g * g - 1)));
  }
}

TEST_CASE("the printed H11 bracket does not vanish at v = 1") {
  // signs of the v^4 and v^2 terms in the u^5 bracket flipped back
  ExactPoly corrected = build_appendix("H11");
  ExactPoly printed = corrected + P("2*((g-1)*(g-15)*v^4 - (g^2-1)*v^2)*u^5");
  ExactPoly at1 = printed.substitute(Var::U, BigRational(1)).substitute(Var::V, BigRational(1));
  CHECK(at1 == P("32*(1 - g)"));
  CHECK(corrected.substitute(Var::U, BigRational(1)).substitute(Var::V, BigRational(1)).is_zero());
  // near v = 1 the printed form is negative for every g > 1
  for (long g : {2L, 3L}) {
    ExactPoly hv = printed.substitute(Var::G, BigRational(g)).substitute(Var::U, P("v").pow(g));
    CHECK(hv.evaluate(0, BigRational(101, 100), 0) < 0);
  }
}

TEST_CASE("H3 leading Taylor term at v = 1") {
  ExactPoly h = build_appendix("H3");
  for (long g : {2L, 3L}) {
    ExactPoly hv = h.substitute(Var::G, BigRational(g)).substitute(Var::U, P("v").pow(g));
    auto c = taylor_at_one(hv);
    REQUIRE(leading_order(c) == 11);
    long k = g * g - 1;
    BigRational want(-8 * g * k * k * k * k * k, 3);
    want.canonicalize();
    CHECK(c[11] == want);
  }
}

TEST_CASE("H21 polynomial form against the rational form") {
  ExactPoly h21 = build_appendix("H21");
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> n(2, 60), d(1, 9);
  for (int i = 0; i < 20; ++i) {
    BigRational u(n(rng), d(rng)), v(n(rng), d(rng)), g(n(rng), d(rng));
    u.canonicalize();
    v.canonicalize();
    g.canonicalize();
    if (u * u == 1 || v * v == 1) continue;
    BigRational N = (u * v * v + u - 2 * v) * (2 * u * v - v * v - 1);
    BigRational D = v * (v * v - 1) * (u * u - 1);
    BigRational s = g - N / D;
    BigRational rational = u * v * (v * v - 1) * (v * v - 1) * (u * u - 1) * s * s +
                           N * (u * v - 1) * (u * v - 1) * (u - v) * (u - v) / (v * (u * u - 1));
    CHECK(rational == h21.evaluate(u, v, g) / (v * (u * u - 1)));
  }
}

TEST_CASE("certified signs") {
  ExactPoly fd = build_appendix("Fd");
  // Fd < 0 along u = v^g for v, g > 1
  CHECK(certified_sign(fd, 1.5, 2.0) == -1);
  CHECK(certified_sign(fd, 30.0, 7.0) == -1);
  CHECK(certified_sign_at(P("u - v"), 3.0, 3.0, 0.0) == 0);
  CHECK(certified_sign_at(P("u - v"), 3.0, 2.0, 0.0) == 1);
}

TEST_CASE("lemma reports") {
  VerifyReport r1 = verify_lemma("R1");
  CHECK(r1.pass);
  CHECK(r1.first_failure() == nullptr);
  VerifyReport r2 = verify_lemma("R2");
  CHECK(r2.pass);
  VerifyReport h3 = verify_lemma("H3");
  CHECK(h3.pass);
  CHECK_THROWS_AS(verify_lemma("R9"), Error);
  CHECK_NOTHROW(require_pass(r1));
}

TEST_CASE("a failing report raises") {
  VerifyReport bad;
  bad.name = "probe";
  SubCheck c;
  c.name = "always false";
  c.pass = false;
  bad.add(c);
  CHECK_FALSE(bad.pass);
  CHECK_THROWS_AS(require_pass(bad), Error);
}
