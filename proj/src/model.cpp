#include "limcyc/model.hpp"

#include <cmath>
#include <sstream>

namespace limcyc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonNodeParams: return "NonNodeParams";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NotADoubleRoot: return "NotADoubleRoot";
    case ErrorKind::RequiresRefracting: return "RequiresRefracting";
    case ErrorKind::NoSmallCycle: return "NoSmallCycle";
    case ErrorKind::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorKind::NoReturn: return "NoReturn";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::SignViolation: return "SignViolation";
  }
  return "Unknown";
}

namespace {
constexpr double kNodeMargin = 1e-12;
}

bool SystemParams::is_node() const {
  return std::abs(gamma_l) > 1 + kNodeMargin && std::abs(gamma_r) > 1 + kNodeMargin;
}

void require_node(double gamma) {
  if (!std::isfinite(gamma) || std::abs(gamma) <= 1 + kNodeMargin) {
    std::ostringstream os;
    os << "node condition |gamma| > 1 violated (gamma = " << gamma << ")";
    throw Error(ErrorKind::NonNodeParams, os.str());
  }
}

void require_node(const SystemParams& p) {
  require_node(p.gamma_l);
  require_node(p.gamma_r);
}

Subsystem Subsystem::left(const SystemParams& p) {
  require_node(p.gamma_l);
  return {p.gamma_l, p.alpha_l, 0.0, Side::Left};
}

Subsystem Subsystem::right(const SystemParams& p) {
  require_node(p.gamma_r);
  return {p.gamma_r, p.alpha_r, p.b, Side::Right};
}

PlanarState equilibrium(const Subsystem& sub) {
  require_node(sub.gamma);
  double xe = sub.alpha / (sub.gamma * sub.gamma - 1);
  return {xe, 2 * sub.gamma * xe + sub.b};
}

// A = [[2g, -1], [g^2-1, 0]] has eigenvalues g-1 and g+1, so
// e^{At} = ((A-(g-1)I) e^{(g+1)t} - (A-(g+1)I) e^{(g-1)t}) / 2.
PlanarState flow(const Subsystem& sub, PlanarState x0, double t) {
  PlanarState eq = equilibrium(sub);
  const double g = sub.gamma;
  const double dx = x0.x - eq.x;
  const double dy = x0.y - eq.y;
  const double ep = std::exp((g + 1) * t);
  const double em = std::exp((g - 1) * t);
  const double k = g * g - 1;
  // rows of A-(g-1)I and A-(g+1)I
  const double px = (g + 1) * dx - dy, py = k * dx + (1 - g) * dy;
  const double mx = (g - 1) * dx - dy, my = k * dx - (1 + g) * dy;
  return {eq.x + 0.5 * (px * ep - mx * em), eq.y + 0.5 * (py * ep - my * em)};
}

std::pair<InvariantLine, InvariantLine> invariant_lines(const Subsystem& sub) {
  require_node(sub.gamma);
  bool left = sub.side == Side::Left;
  InvariantLine minus{sub.gamma - 1, sub.alpha / (sub.gamma - 1) + sub.b,
                      left ? LineLabel::LMinus : LineLabel::RMinus};
  InvariantLine plus{sub.gamma + 1, sub.alpha / (sub.gamma + 1) + sub.b,
                     left ? LineLabel::LPlus : LineLabel::RPlus};
  return {minus, plus};
}

std::pair<double, double> boundary_field(const SystemParams& p, double y) {
  return {-y, -y + p.b};
}

CycleValidation validate_for_cycles(const SystemParams& p) {
  if (!(p.alpha_l > 0)) return {false, "alpha_l > 0 required (alpha_l = " + std::to_string(p.alpha_l) + ")"};
  if (!(p.alpha_r < 0)) return {false, "alpha_r < 0 required (alpha_r = " + std::to_string(p.alpha_r) + ")"};
  return {true, {}};
}

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

std::string to_string(LineLabel l) {
  switch (l) {
    case LineLabel::LMinus: return "L-";
    case LineLabel::LPlus: return "L+";
    case LineLabel::RMinus: return "R-";
    case LineLabel::RPlus: return "R+";
  }
  return "?";
}

}  // namespace limcyc
