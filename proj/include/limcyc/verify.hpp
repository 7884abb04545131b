#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "limcyc/exact_poly.hpp"

namespace limcyc {

struct SubCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> facts;  // witness intervals, counts, ...
  double seconds = 0;
};

struct VerifyReport {
  std::string name;
  bool pass = true;
  std::vector<SubCheck> checks;
  std::vector<std::string> notes;
  double seconds = 0;

  void add(SubCheck c);
  const SubCheck* find(const std::string& check_name) const;
  const SubCheck* first_failure() const;
};

// Throws VerificationFailure naming the first failing sub-check.
void require_pass(const VerifyReport& r);

struct VerifyOptions {
  BigRational box_max = 200;   // u-range bound for common-root checks
  std::uint64_t seed = 7;      // random rational points for the identities
  int random_points = 20;
  int grid = 200;              // per-axis size of the sign grids
  bool certify_grid = true;    // tensor-grid certification of the identities
};

// "R1", "R2" or "H3". Unknown names throw DomainError.
VerifyReport verify_lemma(const std::string& name, const VerifyOptions& opt = {});
VerifyReport verify_resultant_identities(const VerifyOptions& opt = {});
VerifyReport verify_section42_signs(const VerifyOptions& opt = {});
VerifyReport verify_appendix();

// Sign of p at (u, v, γ) = (v^γ, v, γ) with adaptive precision; 0 when undecided.
int certified_sign(const ExactPoly& p, double v, double g, int max_bits = 16384);
// Sign of p at the given (u, v, γ), all taken as exact binary64 values.
int certified_sign_at(const ExactPoly& p, double u, double v, double g, int max_bits = 16384);
// High-precision value of p at (v^γ, v, γ).
double evaluate_power_point(const ExactPoly& p, double v, double g);

}  // namespace limcyc
