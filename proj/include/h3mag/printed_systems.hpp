#pragma once

#include "h3mag/dynamics.hpp"

// Independent transcriptions of the printed equations, coded term by term
// from the printed text. They are oracles: the library never integrates them.
namespace h3mag::printed {

/// The printed expansions of K × t in frame components.
FrameVector k1_cross_t(const ModelParams & p, const State & s);
FrameVector k2_cross_t(const ModelParams & p, const State & s);
FrameVector k3_cross_t(const ModelParams & p, const State & s);
FrameVector k4_cross_t(const ModelParams & p, const State & s);

/// The printed systems S_G, S1..S4 (selected by sys), solved for the second
/// derivatives. Each gives y'', x'' and w' = (z' + x y')'; z'' follows from
/// z'' = w' − x'y' − x y''. Throws std::invalid_argument for scaled fields.
Acceleration system_rhs(const ModelParams & p, const SystemKind & sys, const State & s);

/// The reduced K1 equations with w replaced by the constant c:
///   y'' + x'(c + 1/λ) = 0,   x'' + λ y'(λc − 1) = 0.
/// Returns (residual of the y equation, residual of the x equation).
struct ReducedResidual
{
  double y_eq = 0.0;
  double x_eq = 0.0;
};
ReducedResidual reduced_s1(const ModelParams & p, double c, double vx, double vy, double ax, double ay);

/// Reduced K2 equation for y at c = 0: y' = −x²/λ. Returns the residual.
double reduced_s2_y(const ModelParams & p, double x, double vy);

}  // namespace h3mag::printed
