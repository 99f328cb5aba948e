#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "h3mag/numdiff.hpp"
#include "h3mag/printed_systems.hpp"

namespace h3mag {

template<typename Curve>
SystemResidual curve_residual(
  const ModelParams & p, const SystemKind & sys, Curve && curve, const Grid & grid, double fd_step, bool printed)
{
  SystemResidual out;
  const bool has_fi = has_first_integral(sys);
  double fi0 = 0.0, sp0 = 0.0;
  bool first = true;
  for (double t : grid.times()) {
    auto pos = [&](double s) -> Vec3 { return curve(s); };
    const Vec3 x = pos(t);
    const Vec3 v = numdiff::derivative(pos, t);
    const Vec3 a = numdiff::second_derivative(pos, t, fd_step);
    const State s{x[0], x[1], x[2], v[0], v[1], v[2]};
    const Acceleration rhs = printed ? printed::system_rhs(p, sys, s) : lorentz_rhs(p, sys, s);
    out.max_abs[0] = std::max(out.max_abs[0], std::abs(a[0] - rhs.ax));
    out.max_abs[1] = std::max(out.max_abs[1], std::abs(a[1] - rhs.ay));
    out.max_abs[2] = std::max(out.max_abs[2], std::abs(a[2] - rhs.az));
    const double sp = speed_squared(p, s);
    const double fi = has_fi ? first_integral(p, sys, s) : 0.0;
    if (first) {
      sp0 = sp;
      fi0 = fi;
      first = false;
    }
    out.speed2_drift = std::max(out.speed2_drift, std::abs(sp - sp0));
    out.first_integral_drift = std::max(out.first_integral_drift, std::abs(fi - fi0));
  }
  if (!has_fi) {
    out.first_integral_drift = std::numeric_limits<double>::quiet_NaN();
  }
  if (printed) {
    out.speed2_drift = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

}  // namespace h3mag
