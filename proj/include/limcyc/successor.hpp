#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limcyc/halfmaps.hpp"
#include "limcyc/model.hpp"

namespace limcyc {

struct Discriminants {
  double delta1, delta2, delta3;
};

enum class Stability { Stable, Unstable, SemiStableInnerStable, SemiStableInnerUnstable };

struct CycleRoot {
  double y0_star = 0;
  int multiplicity = 1;
  Stability stability = Stability::Stable;
  double d_residual = 0;
  double dprime = 0;
  double d_second = 0;  // only meaningful for multiplicity 2
  double t = 0;         // left transition time
  double s = 0;         // right transition time
};

struct SectionCoords {
  double v_l, v_r, u_l, u_r;
  double m_l, m_r;
  double psi_l, psi_r;
};

// Everything known about d at one y0 after both inversions.
struct SuccessorPoint {
  double y0;
  double t, s;
  double y1_left, y1_right;
  double d;
};

SuccessorPoint evaluate_successor(const SystemParams& p, double y0, std::optional<double> t_hint = std::nullopt,
                                  std::optional<double> s_hint = std::nullopt);

double d(const SystemParams& p, double y0);
double d_prime(const SystemParams& p, double y0);
// d'' anywhere in the domain: G_R/M_R - G_L/M_L.
double d_second(const SystemParams& p, double y0);
double d_second_at_root(const SystemParams& p, const CycleRoot& root);

// Per-side section functions in terms of the signed transition time tau (v = e^tau, u = v^gamma).
// F = dy1/dy0 - 1, G/M = dF/dy0, M = y1 - y0.
double section_F(double gamma, double tau);
double section_G_over_M(double gamma, double alpha, double tau);
double section_G(double gamma, double tau);
double section_M(double gamma, double alpha, double tau);
double section_psi(double gamma, double tau);
double psi(double v, double gamma);

Discriminants discriminants(const SystemParams& p);

struct TaylorCoeffs {
  double c2, c3, c4;
};
TaylorCoeffs taylor_d0(const SystemParams& p);

SectionCoords section_coords(const SystemParams& p, const CycleRoot& root);

struct CycleSearch {
  SuccessorDomain domain{};
  bool empty_domain = false;
  bool continuum = false;  // d vanishes identically on the grid
  bool mirrored = false;
  std::vector<CycleRoot> roots;
  std::vector<std::string> failures;

  int total_multiplicity() const;
};

struct CycleSearchOptions {
  int grid_points = 2048;
};

CycleSearch find_cycles(const SystemParams& p, const CycleSearchOptions& opts = {});

struct RegimePrediction {
  std::string tag;       // e.g. "beq0lc(iii)(b)"
  bool exact = false;    // count is exact (otherwise an upper bound)
  int count = 0;         // predicted count, or upper bound
  std::optional<Stability> stability;  // for a predicted unique cycle
};

RegimePrediction classify_regime(const SystemParams& p);

// Smallest cycle born at the origin for small |b| with b*delta1 < 0.
double pseudo_hopf_amplitude(const SystemParams& family, double b);

struct FoldPoint {
  double b;
  double y0;
  double d_residual;
  double dprime_residual;
  double d_second;
};

struct ScanRow {
  double b;
  int count = 0;
  std::vector<CycleRoot> roots;
  std::string error;  // per-point failure, empty when fine
};

struct RegimeInterval {
  double b_from, b_to;
  int count;
  std::string signature;
};

struct BifurcationReport {
  double b_m, b_bar, b_M;
  std::optional<double> b_tilde;
  std::vector<FoldPoint> folds;
  std::vector<ScanRow> rows;
  std::vector<RegimeInterval> regimes;
};

std::vector<double> linspace_grid(double from, double to, int steps);
BifurcationReport scan_b(const SystemParams& family, const std::vector<double>& b_grid);
// Saddle-node of cycles: solves d = d' = 0 in (y0, b) from a starting guess.
FoldPoint locate_fold(const SystemParams& family, double y0_guess, double b_guess);

std::string to_string(Stability s);
std::string signature(const std::vector<CycleRoot>& roots);

}  // namespace limcyc
