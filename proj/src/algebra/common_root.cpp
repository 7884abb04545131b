#include "limcyc/common_root.hpp"

#include <cmath>
#include <sstream>

#include "limcyc/resultant.hpp"

namespace limcyc {

std::string to_string(CommonRootStatus s) {
  return s == CommonRootStatus::NoCommonRoot ? "NoCommonRoot" : "CandidateFound";
}

namespace {

// Refinement target for x-roots; partner residuals at true common roots scale with it.
const BigRational kFine(1, BigInt(1) << 160);
constexpr double kResidualTol = 1e-20;

IntPoly specialize(const ExactPoly& p, Var x, const BigRational& xv, Var y) {
  return IntPoly::from_exact(p.substitute(x, xv), y);
}

// |p(x, y)| divided by the sum of absolute term values.
double relative_value(const ExactPoly& p, Var xv, Var yv, const BigRational& x, const BigRational& y) {
  std::array<BigRational, 3> pt{0, 0, 0};
  pt[static_cast<int>(xv)] = x;
  pt[static_cast<int>(yv)] = y;
  double val = std::fabs(p.evaluate(pt[0], pt[1], pt[2]).get_d());
  double xd = std::fabs(x.get_d()), yd = std::fabs(y.get_d()), scale = 0;
  for (const auto& [e, c] : p.terms())
    scale += std::fabs(c.get_d()) * std::pow(xd, e[static_cast<int>(xv)]) * std::pow(yd, e[static_cast<int>(yv)]);
  return scale > 0 ? val / scale : val;
}

}  // namespace

CommonRootReport common_root_check(const ExactPoly& p, const ExactPoly& q, const CommonRootRegion& r) {
  CommonRootReport rep;
  {
    std::ostringstream os;
    os << var_name(r.x) << " in (" << r.x_lo.get_str() << ", " << r.x_hi.get_str() << "], " << var_name(r.y) << " in ("
       << r.y_lo.get_str() << ", " << (r.y_below_x ? var_name(r.x) : r.y_hi.get_str()) << ")";
    rep.region = os.str();
  }
  IntPoly res = resultant_bivariate(p, q, r.y, r.x);
  if (res.is_zero()) {
    // Shared factor: every x is a projection of a common root.
    rep.status = CommonRootStatus::CandidateFound;
    rep.candidates.push_back({{r.x_lo, r.x_hi}, 0, 0, "common factor"});
    return rep;
  }
  rep.resultant_degree = res.degree();
  const BigRational tol(r.boundary_tol);
  for (const auto& [f, mult] : squarefree_factorization(res)) {
    rep.factors.emplace_back(f.degree(), mult);
    for (RootInterval xi : isolate_roots(f, Bound::at(r.x_lo), Bound::at(r.x_hi)).intervals) {
      ++rep.x_roots;
      xi = refine_root(f, xi, kFine);
      const BigRational xm = xi.midpoint();
      const BigRational y_top = r.y_below_x ? xm : r.y_hi;
      // Search slightly past the boundaries so near-boundary roots are reported, not lost.
      const Bound lo = Bound::at(r.y_lo - tol), hi = Bound::at(y_top + tol);
      auto scan = [&](const ExactPoly& a, const ExactPoly& partner) {
        IntPoly ay = specialize(a, r.x, xm, r.y);
        if (ay.is_zero() || ay.degree() <= 0) return;
        IntPoly sqf = squarefree_part(ay);
        for (RootInterval yi : isolate_roots(sqf, lo, hi).intervals) {
          yi = refine_root(sqf, yi, kFine);
          BigRational ym = yi.midpoint();
          double rel = relative_value(partner, r.x, r.y, xm, ym);
          if (rel > kResidualTol) continue;
          CommonRootCandidate c{xi, ym.get_d(), rel, "interior"};
          if (abs(ym - r.y_lo) < tol) c.where = var_name(r.y) + "=" + r.y_lo.get_str();
          else if (abs(ym - y_top) < tol) c.where = var_name(r.y) + "=" + (r.y_below_x ? var_name(r.x) : r.y_hi.get_str());
          if (ym <= r.y_lo - tol || ym >= y_top + tol) continue;
          auto& bucket = c.where == "interior" ? rep.candidates : rep.boundary_excluded;
          for (const auto& o : bucket)
            if (o.x.lo == c.x.lo && std::fabs(o.y - c.y) < 1e-12) return;
          bucket.push_back(c);
        }
      };
      scan(q, p);
      scan(p, q);
    }
  }
  rep.status = rep.candidates.empty() ? CommonRootStatus::NoCommonRoot : CommonRootStatus::CandidateFound;
  return rep;
}

CommonRootReport common_root_check(const ExactPoly& p, const ExactPoly& q, const Bound& lo, const Bound& hi) {
  CommonRootReport rep;
  rep.region = "(" + lo.to_string() + ", " + hi.to_string() + "]";
  auto vars = (p + q).variables();
  if (vars.size() > 1) throw Error(ErrorKind::DomainError, "univariate common_root_check needs one variable");
  Var x = vars.empty() ? Var::U : vars.front();
  IntPoly g = gcd(IntPoly::from_exact(p, x), IntPoly::from_exact(q, x));
  rep.resultant_degree = g.degree();
  if (g.degree() > 0) {
    for (const auto& iv : isolate_roots(g, lo, hi).intervals) {
      ++rep.x_roots;
      rep.candidates.push_back({iv, 0, 0, "interior"});
    }
  }
  rep.status = rep.candidates.empty() ? CommonRootStatus::NoCommonRoot : CommonRootStatus::CandidateFound;
  return rep;
}

}  // namespace limcyc
