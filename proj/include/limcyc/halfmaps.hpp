#pragma once

#include <limits>
#include <optional>

#include "limcyc/model.hpp"

namespace limcyc {

struct HalfMapSample {
  double tau;  // t > 0 on the left, s < 0 on the right
  double y0;
  double y1;
};

enum class UpperBranch { LeftAsymptote, RightAsymptote, Infinite };

struct SuccessorDomain {
  double y0_min;
  double y0_max;  // +inf when unbounded
  UpperBranch active_upper_branch;

  bool empty() const { return !(y0_min < y0_max); }
};

struct OriginSeries {
  double d1, d2, d3, d4;
};

struct MapValue {
  double y1;
  double tau;
};

HalfMapSample left_sample(const SystemParams& p, double t);
HalfMapSample right_sample(const SystemParams& p, double s);

MapValue left_map(const SystemParams& p, double y0);
MapValue right_inverse_map(const SystemParams& p, double y0);

// Same as the public maps but starting the inversion from a previous
// transition-time magnitude; used when sweeping y0 monotonically.
MapValue left_map(const SystemParams& p, double y0, std::optional<double> tau_hint);
MapValue right_inverse_map(const SystemParams& p, double y0, std::optional<double> tau_hint);

SuccessorDomain domain(const SystemParams& p);
OriginSeries origin_series(const SystemParams& p, Side side);

// Open interval of admissible y0 for one half-map (offset included).
struct MapDomain {
  double lo;
  double hi;
};
MapDomain left_map_domain(const SystemParams& p);
MapDomain right_map_domain(const SystemParams& p);

namespace detail {

// expm1(x) - x and expm1(x) - x - x^2/2, accurate near 0
double phi2(double x);
double phi3(double x);

// y0 of the unshifted half-map at transition time tau; y1 is the value at -tau.
double half_map_y(double gamma, double alpha, double tau);
double half_map_dy(double gamma, double alpha, double tau);

// Inverts tau -> half_map_y on tau*sign > 0, for target with the same sign as
// alpha*sign. Returns the signed tau.
double invert_half_map(double gamma, double alpha, double sign, double target,
                       std::optional<double> hint);

}  // namespace detail

}  // namespace limcyc
