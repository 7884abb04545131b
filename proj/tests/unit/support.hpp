#pragma once

#include <cmath>
#include <random>

#include "limcyc/model.hpp"

namespace testing {

inline bool close_rel(double a, double b, double rel, double abs_floor = 0) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + abs_floor;
}

// Random system with |gamma| > 1 and alpha_l > 0 > alpha_r.
class Draws {
 public:
  explicit Draws(unsigned seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double sign() { return uniform(0, 1) < 0.5 ? -1.0 : 1.0; }
  double gamma() { return sign() * uniform(1.1, 5.0); }

  limcyc::SystemParams system(double b_half_width = 0.3) {
    return {gamma(), gamma(), uniform(0.3, 3.0), -uniform(0.3, 3.0), uniform(-b_half_width, b_half_width)};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing
