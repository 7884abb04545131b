#pragma once

#include <array>
#include <vector>

#include "limcyc/int_poly.hpp"

namespace limcyc {

// Determinant of the Sylvester matrix in x (rows of p first), by Bareiss elimination.
// Throws DegreeZero when either polynomial has degree 0 in x.
ExactPoly resultant(const ExactPoly& p, const ExactPoly& q, Var x);

// Sylvester determinant for coefficient vectors (index = power); formal degree = size - 1.
BigInt resultant(const std::vector<BigInt>& p, const std::vector<BigInt>& q);
BigRational resultant(const std::vector<BigRational>& p, const std::vector<BigRational>& q);

// Res_x(p, q) with the remaining variables fixed to point[u], point[v], point[γ].
// The formal degrees in x of p and q are used even where leading coefficients vanish.
BigRational resultant_at(const ExactPoly& p, const ExactPoly& q, Var x, const std::array<BigRational, 3>& point);

// Coefficients in x of p, each an integer polynomial in keep, after clearing denominators.
std::vector<IntPoly> integer_coefficients(const ExactPoly& p, Var x, Var keep);

// Res_elim(p, q) for bivariate p, q with integer coefficients (denominators cleared first),
// as a polynomial in keep. Multimodular evaluation/interpolation with CRT, then checked
// against exact integer determinants at two extra points.
IntPoly resultant_bivariate(const ExactPoly& p, const ExactPoly& q, Var elim, Var keep);

// deg_keep Res_elim(p, q) <= deg_keep(p) deg_elim(q) + deg_keep(q) deg_elim(p).
int resultant_degree_bound(const ExactPoly& p, const ExactPoly& q, Var elim, Var keep);

}  // namespace limcyc
