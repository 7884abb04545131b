#include "doctest.h"
#include "limcyc/oracle.hpp"
#include "limcyc/successor.hpp"
#include "support.hpp"

using namespace limcyc;
using testing::close_rel;

TEST_CASE("crossing events land on the switching line") {
  SystemParams p{2, -3, 1, -1.4, 0.005};
  CrossingEvent l = cross_time(Subsystem::left(p), 0.2);
  CHECK(std::abs(l.state.x) <= 1e-14);
  CHECK(l.state.y < 0);
  CHECK(l.time > 0);
  CHECK(l.side_entered == Side::Right);
  CHECK_THROWS_AS(cross_time(Subsystem::left(p), -0.2), Error);
  CHECK_THROWS_AS(cross_time(Subsystem::right(p), 0.2), Error);
  // the left transit stays in x < 0
  for (int k = 1; k < 16; ++k) CHECK(flow(Subsystem::left(p), {0, 0.2}, l.time * k / 16).x < 0);
}

TEST_CASE("return map matches the successor function") {
  testing::Draws rnd(41);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    SystemParams p = rnd.system();
    SuccessorDomain dom = domain(p);
    if (dom.empty()) continue;
    double hi = std::isfinite(dom.y0_max) ? dom.y0_max : dom.y0_min + 1;
    double y0 = dom.y0_min + rnd.uniform(0.1, 0.9) * (hi - dom.y0_min);
    double y1 = left_map(p, y0).y1;
    CrossingEvent l = cross_time(Subsystem::left(p), y0);
    CHECK(close_rel(l.state.y, y1, 1e-9, 1e-13));
    // P_R is decreasing, so d > 0 exactly when the full turn lands above y0
    if (right_inverse_map(p, y0).y1 != y1) {
      try {
        double P = poincare_map(p, y0);
        CHECK((P > y0) == (d(p, y0) > 0));
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoReturn);
      }
    }
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("iterate stability agrees with the sign of d'") {
  SystemParams p{2, -3, 1, -1.4, 0.005};
  CycleSearch cs = find_cycles(p);
  REQUIRE(cs.roots.size() == 2);
  StabilityProbe s = iterate_stability(p, cs.roots[0].y0_star);
  CHECK(s.verdict == IterateVerdict::Attracting);
  CHECK(s.inner == Trend::Approaches);
  CHECK(s.outer == Trend::Approaches);
  StabilityProbe u = iterate_stability(p, cs.roots[1].y0_star);
  CHECK(u.verdict == IterateVerdict::Repelling);
}

TEST_CASE("orbit traces") {
  SystemParams p{2, -3, 1, -1.4, 0.005};
  CycleSearch cs = find_cycles(p);
  REQUIRE(cs.roots.size() == 2);
  double ys = cs.roots[0].y0_star;
  OrbitTrace o = trace_orbit(p, ys, 3, 16);
  REQUIRE(o.section.size() == 4);
  CHECK(std::abs(o.section.back() - o.section.front()) <= 1e-8);
  CHECK(o.samples.size() == 3 * 2 * 16 + 1);
  for (size_t i = 1; i < o.samples.size(); ++i) CHECK(o.samples[i].t > o.samples[i - 1].t);
  CHECK(std::abs(o.samples.back().x) <= 1e-12);

  // inside the stable cycle's basin the section values move toward it
  OrbitTrace in = trace_orbit(p, 0.1, 30, 4);
  for (size_t i = 1; i < in.section.size(); ++i) CHECK(std::abs(in.section[i] - ys) < std::abs(in.section[i - 1] - ys));

  try {
    trace_orbit(p, 0.005, 2);
    FAIL("expected OutOfDomain");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfDomain);
  }
  CHECK_THROWS_AS(trace_orbit(p, 1.0 / 3, 2), Error);
}

TEST_CASE("RK4 converges at fourth order") {
  Subsystem s = Subsystem::left({2, -3, 1, -1.4, 0});
  PlanarState z{-0.1, 0.2}, ex = flow(s, z, 0.5);
  auto err = [&](double h) {
    PlanarState r = rk4_integrate(s, z, 0.5, h);
    return std::hypot(r.x - ex.x, r.y - ex.y);
  };
  double e1 = err(0.01), e2 = err(0.005);
  CHECK(e1 / e2 == doctest::Approx(16).epsilon(0.1));
}
