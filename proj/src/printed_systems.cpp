#include "h3mag/printed_systems.hpp"

#include <stdexcept>

namespace h3mag::printed {

FrameVector k1_cross_t(const ModelParams & p, const State & s)
{
  return {-s.vx / p.lambda(), s.vy, 0.0};
}

FrameVector k2_cross_t(const ModelParams & p, const State & s)
{
  const double l = p.lambda();
  return {-s.vx * s.x / l, s.x * s.vy - (s.vz + s.x * s.vy), s.vx / l};
}

FrameVector k3_cross_t(const ModelParams & p, const State & s)
{
  const double l = p.lambda();
  return {(s.y * s.vx + s.vz + s.x * s.vy) / l, -s.y * s.vy, -s.vy / l};
}

FrameVector k4_cross_t(const ModelParams & p, const State & s)
{
  const double l = p.lambda();
  const double l2 = l * l;
  const double x = s.x, y = s.y, xp = s.vx, yp = s.vy;
  const double w = s.vz + x * yp;
  return {
    -(3.0 * x * x * xp - y * y * xp * l2 - 2.0 * y * l2 * w) / (2.0 * l),
    -0.5 * (-3.0 * x * x * yp + y * y * yp * l2 - 2.0 * x * w),
    -(x * xp + y * yp * l2) / l};
}

Acceleration system_rhs(const ModelParams & p, const SystemKind & sys, const State & s)
{
  const double l = p.lambda();
  const double l2 = l * l;
  const double x = s.x, y = s.y, xp = s.vx, yp = s.vy;
  const double w = s.vz + x * yp;
  double ypp = 0.0, xpp = 0.0, wp = 0.0;
  if (sys.is_geodesic()) {
    ypp = -xp * w;
    xpp = -l2 * yp * w;
  } else {
    if (!sys.field().is_unit()) {
      throw std::invalid_argument("no printed system exists for a scaled Killing field");
    }
    switch (sys.field().tag) {
      case KillingField::k1:
        ypp = -xp * (w + 1.0 / l);
        xpp = -yp * (l2 * w - l);
        break;
      case KillingField::k2:
        ypp = -xp * w - x * xp / l;
        xpp = l * (x * yp - (l * yp + 1.0) * w);
        wp = xp / l;
        break;
      case KillingField::k3:
        ypp = (w + y * xp) / l - xp * w;
        xpp = l * (-y * yp - l * yp * w);
        wp = -yp / l;
        break;
      case KillingField::k4:
        ypp = -xp * w + 3.0 * x * x * xp / (2.0 * l) - l * y * y * xp / 2.0 - l * y * w;
        xpp = -l2 * yp * w + 3.0 * l * x * x * yp / 2.0 - l2 * l * y * y * yp / 2.0 + l * x * w;
        wp = -l * y * yp - x * xp / l;
        break;
    }
  }
  return {xpp, ypp, wp - xp * yp - x * ypp};
}

ReducedResidual reduced_s1(const ModelParams & p, double c, double vx, double vy, double ax, double ay)
{
  const double l = p.lambda();
  return {ay + vx * (c + 1.0 / l), ax + l * vy * (l * c - 1.0)};
}

double reduced_s2_y(const ModelParams & p, double x, double vy)
{
  return vy + x * x / p.lambda();
}

}  // namespace h3mag::printed
