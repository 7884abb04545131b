#include "doctest.h"
#include "limcyc/successor.hpp"
#include "support.hpp"

using namespace limcyc;
using testing::close_rel;

namespace {

// interior point at a fraction of the way through the domain
double inside(const SystemParams& p, double frac) {
  SuccessorDomain dom = domain(p);
  double hi = std::isfinite(dom.y0_max) ? dom.y0_max : dom.y0_min + 2.0;
  return dom.y0_min + frac * (hi - dom.y0_min);
}

}  // namespace

TEST_CASE("discriminants of the reference family") {
  Discriminants D = discriminants({2, -3, 1, -1.4, 0});
  CHECK(D.delta1 == doctest::Approx(-1.0 / 7));
  CHECK(D.delta2 == doctest::Approx(1.0 / 60));
  CHECK(D.delta3 == doctest::Approx(-0.3));
}

TEST_CASE("successor is the difference of the two half-maps") {
  SystemParams p{2, -3, 1, -1.4, 0.005};
  for (double y : {0.01, 0.1, 0.2, 0.3}) {
    SuccessorPoint s = evaluate_successor(p, y);
    CHECK(s.d == doctest::Approx(right_inverse_map(p, y).y1 - left_map(p, y).y1).epsilon(1e-13));
    CHECK(s.t > 0);
    CHECK(s.s < 0);
    CHECK(d(p, y) == doctest::Approx(s.d).epsilon(1e-13));
  }
  CHECK_THROWS_AS(d(p, 0.005), Error);
  CHECK_THROWS_AS(d(p, 1.0 / 3), Error);
}

TEST_CASE("right-map offset shifts the inverse map") {
  // P_R^{-1}(y0; b) = P_R^{-1}(y0 - b; 0) + b
  testing::Draws rnd(21);
  for (int i = 0; i < 30; ++i) {
    SystemParams p = rnd.system();
    MapDomain r0 = right_map_domain(p.with_b(0));
    double hi = std::isfinite(r0.hi) ? r0.hi : 2.0;
    double y = rnd.uniform(0.05, 0.95) * hi;
    double lhs = right_inverse_map(p, y + p.b).y1;
    double rhs = right_inverse_map(p.with_b(0), y).y1 + p.b;
    CHECK(close_rel(lhs, rhs, 1e-11, 1e-14));
  }
}

TEST_CASE("d' and d'' against central differences") {
  testing::Draws rnd(22);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    SystemParams p = rnd.system();
    if (domain(p).empty()) continue;
    double y = inside(p, rnd.uniform(0.2, 0.8));
    double h = 1e-5 * std::max(1e-2, std::abs(y));
    double fd1 = (d(p, y + h) - d(p, y - h)) / (2 * h);
    double fd2 = (d_prime(p, y + h) - d_prime(p, y - h)) / (2 * h);
    double dp = d_prime(p, y), dpp = d_second(p, y);
    CHECK(close_rel(dp, fd1, 1e-5, 1e-7));
    CHECK(close_rel(dpp, fd2, 1e-4, 1e-5));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("section functions against differences in y0") {
  // F = dy1/dy0 - 1 and G/M = dF/dy0 along one half-map
  for (double g : {-3.0, -1.3, 1.5, 4.0}) {
    for (double a : {0.7, -1.2}) {
      for (double tau : {-2.0, -0.4, 0.4, 2.0}) {
        if ((tau > 0) != (a > 0)) continue;  // keep y0 on the admissible sign
        auto y0 = [&](double t) { return detail::half_map_y(g, a, t); };
        auto y1 = [&](double t) { return detail::half_map_y(g, a, -t); };
        auto F = [&](double t) { return section_F(g, t); };
        double h = 1e-6;
        double dy0 = (y0(tau + h) - y0(tau - h)) / (2 * h);
        double dy1 = (y1(tau + h) - y1(tau - h)) / (2 * h);
        // sign convention: F compares the exit ordinate slope with the entry slope
        double slope = dy1 / dy0;
        CHECK(close_rel(F(tau), slope - 1, 1e-6, 1e-9));
        double dF = (F(tau + h) - F(tau - h)) / (2 * h) / dy0;
        CHECK(close_rel(section_G_over_M(g, a, tau), dF, 1e-5, 1e-8));
        CHECK(close_rel(section_G(g, tau) / section_M(g, a, tau), section_G_over_M(g, a, tau), 1e-10, 1e-12));
        CHECK(close_rel(section_M(g, a, tau), y1(tau) - y0(tau), 1e-10, 1e-14));
      }
    }
  }
}

TEST_CASE("section functions stay finite for long transits") {
  // the plain exponentials overflow here; the ratios do not
  for (double g : {-6.0, 6.0})
    for (double tau : {-40.0, 40.0}) {
      double F = section_F(g, tau);
      CHECK(std::isfinite(F));
      CHECK(std::isfinite(section_G_over_M(g, tau > 0 ? 1.0 : -1.0, tau)));
      double ratio = detail::half_map_dy(g, 1.0, -tau) / detail::half_map_dy(g, 1.0, tau);
      if (std::isfinite(ratio) && ratio != 0) CHECK(close_rel(F, -ratio - 1, 1e-12));
    }
}

TEST_CASE("Taylor coefficients of d at the origin") {
  SystemParams p{2, -3, 1, -1.4, 0};
  TaylorCoeffs c = taylor_d0(p);
  Discriminants D = discriminants(p);
  CHECK(c.c2 == doctest::Approx(4.0 / 3 * D.delta1));
  for (double y : {1e-4, 2e-4}) {
    double series = y * y * (c.c2 + y * (c.c3 + y * c.c4));
    CHECK(std::abs(d(p, y) - series) <= 0.05 * std::abs(c.c4) * y * y * y * y);
  }
  CHECK_THROWS_AS(taylor_d0(p.with_b(0.1)), Error);
}

TEST_CASE("section coordinates at a cycle") {
  SystemParams p{2, -3, 1, -1.4, 0.005};
  CycleSearch cs = find_cycles(p);
  REQUIRE(cs.roots.size() == 2);
  for (const CycleRoot& r : cs.roots) {
    SectionCoords c = section_coords(p, r);
    CHECK(c.v_l > 1);
    CHECK(c.v_r < 1);
    CHECK(c.u_l == doctest::Approx(std::pow(c.v_l, 2.0)));
    CHECK(std::abs(c.m_l - c.m_r) <= 1e-8);
    CHECK(c.psi_l > 0);
    CHECK(c.psi_r > 0);
  }
}
