#include <random>

#include "doctest.h"
#include "limcyc/common_root.hpp"
#include "limcyc/resultant.hpp"

using namespace limcyc;

namespace {

ExactPoly P(const char* s) { return ExactPoly::parse(s); }

ExactPoly random_poly(std::mt19937_64& rng, int du, int dv) {
  std::uniform_int_distribution<int> c(-9, 9);
  ExactPoly p;
  for (int i = 0; i <= du; ++i)
    for (int j = 0; j <= dv; ++j) p += ExactPoly::monomial(BigRational(c(rng)), {i, j, 0});
  // keep the full degree in u
  p += ExactPoly::monomial(BigRational(1), {du, 0, 0});
  return p;
}

}  // namespace

TEST_CASE("resultant of linear factors") {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      ExactPoly pa = ExactPoly::variable(Var::U) - ExactPoly(a);
      ExactPoly pb = ExactPoly::variable(Var::U) - ExactPoly(b);
      CHECK(resultant(pa, pb, Var::U) == ExactPoly(a - b));
    }
  CHECK(resultant(P("u - v"), P("u - g"), Var::U) == P("v - g"));
  CHECK_THROWS_AS(resultant(P("v + 1"), P("u"), Var::U), Error);
}

TEST_CASE("resultant is multiplicative and vanishes on shared roots") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    ExactPoly f = random_poly(rng, 2, 1), g = random_poly(rng, 1, 2), h = random_poly(rng, 2, 1);
    ExactPoly lhs = resultant(f * g, h, Var::U);
    ExactPoly rhs = resultant(f, h, Var::U) * resultant(g, h, Var::U);
    CHECK(lhs == rhs);
  }
  ExactPoly common = P("u - v^2");
  CHECK(resultant(common * P("u + 2"), common * P("u*v + 1"), Var::U).is_zero());
}

TEST_CASE("numeric resultants match the symbolic one at points") {
  std::vector<BigInt> a{BigInt(-2), BigInt(0), BigInt(1)}, b{BigInt(-3), BigInt(1)};
  // Res(x^2 - 2, x - 3) = (-1)^2 * (3^2 - 2)
  CHECK(abs(resultant(a, b)) == 7);
  ExactPoly p = P("u^3 - v*u + g"), q = P("v*u^2 - 2*u + g^2");
  ExactPoly r = resultant(p, q, Var::U);
  std::array<BigRational, 3> pt{0, BigRational(3, 2), BigRational(-5, 7)};
  CHECK(resultant_at(p, q, Var::U, pt) == r.evaluate(pt[0], pt[1], pt[2]));
}

TEST_CASE("multimodular bivariate resultant agrees with Bareiss") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 6; ++i) {
    ExactPoly f = random_poly(rng, 3, 3), g = random_poly(rng, 2, 4);
    ExactPoly exact = resultant(f, g, Var::U);
    IntPoly mm = resultant_bivariate(f, g, Var::U, Var::V);
    CHECK(mm.degree() <= resultant_degree_bound(f, g, Var::U, Var::V));
    // same polynomial in v up to a positive rational normalisation
    IntPoly ex = IntPoly::from_exact(exact, Var::V);
    CHECK(ex.degree() == mm.degree());
    for (int k = 0; k <= ex.degree(); ++k) CHECK(BigInt(ex[k] * mm.lead()) == BigInt(mm[k] * ex.lead()));
  }
}

TEST_CASE("common roots in a planar region") {
  CommonRootRegion region;
  region.x_hi = 10;

  // u = 4, v = 2 lies inside 1 < v < u
  ExactPoly p = P("u - v^2"), q = P("u + v - 6");
  CommonRootReport hit = common_root_check(p, q, region);
  CHECK(hit.status == CommonRootStatus::CandidateFound);
  REQUIRE(hit.candidates.size() == 1);
  CHECK(hit.candidates[0].x.approx() == doctest::Approx(4));
  CHECK(hit.candidates[0].y == doctest::Approx(2));

  // the lines meet at (-3, -3), outside the region
  CommonRootReport miss = common_root_check(P("u - v"), P("u + v + 6"), region);
  CHECK(miss.status == CommonRootStatus::NoCommonRoot);

  // intersection on the boundary v = 1 is excluded, not reported
  CommonRootReport edge = common_root_check(P("u - v - 2"), P("u*v - 3"), region);
  CHECK(edge.status == CommonRootStatus::NoCommonRoot);
  CHECK_FALSE(edge.boundary_excluded.empty());
}

TEST_CASE("univariate common roots") {
  CommonRootReport r = common_root_check(P("(v-2)*(v-5)"), P("(v-5)*(v+1)"), Bound::at(1), Bound::pos_inf());
  CHECK(r.status == CommonRootStatus::CandidateFound);
  CommonRootReport n = common_root_check(P("(v-2)*(v-5)"), P("(v-5)*(v+1)"), Bound::at(1), Bound::at(4));
  CHECK(n.status == CommonRootStatus::NoCommonRoot);
}
