#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "limcyc/sturm.hpp"

namespace limcyc {

// x in (x_lo, x_hi]; y in (y_lo, x) when y_below_x, else (y_lo, y_hi).
struct CommonRootRegion {
  Var x = Var::U;
  Var y = Var::V;
  BigRational x_lo = 1;
  BigRational x_hi = 200;
  BigRational y_lo = 1;
  bool y_below_x = true;
  BigRational y_hi = 0;
  double boundary_tol = 1e-6;
};

enum class CommonRootStatus { NoCommonRoot, CandidateFound };

struct CommonRootCandidate {
  RootInterval x;
  double y = 0;
  double residual = 0;  // relative size of the partner polynomial at the root
  std::string where;    // "interior", "y=y_lo", "y=x"
};

struct CommonRootReport {
  CommonRootStatus status = CommonRootStatus::NoCommonRoot;
  std::vector<CommonRootCandidate> candidates;
  std::vector<CommonRootCandidate> boundary_excluded;
  int resultant_degree = 0;
  std::vector<std::pair<int, int>> factors;  // (degree, multiplicity)
  int x_roots = 0;
  std::string region;
};

std::string to_string(CommonRootStatus s);

CommonRootReport common_root_check(const ExactPoly& p, const ExactPoly& q, const CommonRootRegion& region);
// Univariate variant: common roots in (lo, hi] via the gcd.
CommonRootReport common_root_check(const ExactPoly& p, const ExactPoly& q, const Bound& lo, const Bound& hi);

}  // namespace limcyc
