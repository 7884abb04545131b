#pragma once

#include <vector>

#include "limcyc/model.hpp"

namespace limcyc {

struct CrossingEvent {
  double time;
  PlanarState state;  // x == 0
  Side side_entered;
};

// First return of the orbit from (0, y_start) to x = 0 through the
// subsystem's half-plane.
CrossingEvent cross_time(const Subsystem& sub, double y_start);

// P = P_R o P_L: upper crossing -> left transit -> right transit -> upper crossing.
double poincare_map(const SystemParams& p, double y0);

enum class Trend { Approaches, Escapes, Undecided };
enum class IterateVerdict { Attracting, Repelling, Inconclusive };

struct StabilityProbe {
  Trend inner;
  Trend outer;
  int inner_steps;
  int outer_steps;
  IterateVerdict verdict;
};

StabilityProbe iterate_stability(const SystemParams& p, double y0_star);

struct OrbitSample {
  double t, x, y;
};

struct OrbitTrace {
  std::vector<OrbitSample> samples;
  std::vector<double> section;  // y on x = 0 at the start of each turn, plus the final return
};

// Closed-form trajectory over a number of full turns; y0 must lie inside the successor domain.
OrbitTrace trace_orbit(const SystemParams& p, double y0, int turns, int samples_per_transit = 64);

// Classical fixed-step RK4 on one subsystem's linear field.
PlanarState rk4_integrate(const Subsystem& sub, PlanarState x0, double t, double h);

std::string to_string(Trend t);
std::string to_string(IterateVerdict v);

}  // namespace limcyc
