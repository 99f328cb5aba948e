#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace h3mag::numdiff {

/// Step used for first derivatives: cbrt(eps) scaled by the abscissa magnitude.
inline double default_step(double at)
{
  static const double base = std::cbrt(std::numeric_limits<double>::epsilon());
  return base * std::max(1.0, std::abs(at));
}

/// Central first derivative with one level of Richardson extrapolation.
///
/// `T` must support `T - T` and scaling by `double` (double, Eigen vectors
/// and matrices all qualify).
template<typename F>
auto derivative(F && f, double at, double h)
{
  using T = decltype(f(at));
  const T coarse = (f(at + h) - f(at - h)) / (2.0 * h);
  const double hh = 0.5 * h;
  const T fine = (f(at + hh) - f(at - hh)) / (2.0 * hh);
  const T out = (4.0 * fine - coarse) / 3.0;
  return out;
}

template<typename F>
auto derivative(F && f, double at)
{
  return derivative(f, at, default_step(at));
}

/// Central second derivative, Richardson-extrapolated. The caller chooses
/// `h`; roughly eps^(1/4) balances truncation against cancellation.
template<typename F>
auto second_derivative(F && f, double at, double h)
{
  using T = decltype(f(at));
  const T mid = f(at);
  const T coarse = (f(at + h) - 2.0 * mid + f(at - h)) / (h * h);
  const double hh = 0.5 * h;
  const T fine = (f(at + hh) - 2.0 * mid + f(at - hh)) / (hh * hh);
  const T out = (4.0 * fine - coarse) / 3.0;
  return out;
}

}  // namespace h3mag::numdiff
