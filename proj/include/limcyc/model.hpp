#pragma once

#include <optional>
#include <string>
#include <utility>

#include "limcyc/errors.hpp"

namespace limcyc {

enum class Side { Left, Right };

// Canonical node-node system. Left half-plane x<0 carries no offset, the right
// one is shifted by b along the switching line.
struct SystemParams {
  double gamma_l = 0;
  double gamma_r = 0;
  double alpha_l = 0;
  double alpha_r = 0;
  double b = 0;

  bool is_node() const;
  bool has_opposite_alphas() const { return alpha_l > 0 && alpha_r < 0; }
  SystemParams with_b(double nb) const {
    SystemParams q = *this;
    q.b = nb;
    return q;
  }
};

// Rejects |gamma| <= 1 + 1e-12 with NonNodeParams.
void require_node(double gamma);
void require_node(const SystemParams& p);

struct Subsystem {
  double gamma;
  double alpha;
  double b;  // 0 on the left
  Side side;

  static Subsystem left(const SystemParams& p);
  static Subsystem right(const SystemParams& p);
};

struct PlanarState {
  double x = 0;
  double y = 0;
};

enum class LineLabel { LMinus, LPlus, RMinus, RPlus };

struct InvariantLine {
  double slope;
  double intercept;
  LineLabel label;

  double residual(PlanarState s) const { return s.y - (slope * s.x + intercept); }
};

PlanarState flow(const Subsystem& sub, PlanarState x0, double t);
PlanarState equilibrium(const Subsystem& sub);
// First line has slope gamma-1, second gamma+1.
std::pair<InvariantLine, InvariantLine> invariant_lines(const Subsystem& sub);
// x-components of the left and right fields on x = 0.
std::pair<double, double> boundary_field(const SystemParams& p, double y);

struct CycleValidation {
  bool ok;
  std::string reason;  // empty when ok
};
CycleValidation validate_for_cycles(const SystemParams& p);

std::string to_string(Side s);
std::string to_string(LineLabel l);

}  // namespace limcyc
