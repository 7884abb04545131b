#pragma once

#include <string>
#include <vector>

#include "limcyc/exact_poly.hpp"

namespace limcyc {

// General polynomials in (u, v, γ) with u standing for v^γ:
//   R1, R2, H3, H31 (transcribed), H11 (bracket sign corrected),
//   Fd, Fn, F1, F2, H21 (numerator after removing a positive factor),
//   Fnum, Gnum (numerators of the section functions F and G).
// Throws DomainError for unknown names.
ExactPoly build_appendix(const std::string& name);
std::vector<std::string> appendix_names();

struct AppendixDisplay {
  std::string name;            // e.g. "R1_v1"
  std::string label;           // e.g. "R1(u, v=1)"
  ExactPoly display;           // as transcribed
  ExactPoly specialization;    // derived from the general constructor
  bool matches() const { return display == specialization; }
};

std::vector<AppendixDisplay> appendix_displays();

}  // namespace limcyc
