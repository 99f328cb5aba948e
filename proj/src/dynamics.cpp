#include "h3mag/dynamics.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace h3mag {

std::string SystemKind::name() const
{
  if (is_geodesic()) {
    return "geodesic";
  }
  std::string n = to_string(field_->tag);
  n[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(n[0])));
  return n;
}

SystemKind parse_system(const std::string & name)
{
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  if (lower == "geodesic") return SystemKind::geodesic();
  if (lower == "k1") return SystemKind::magnetic({KillingField::k1});
  if (lower == "k2") return SystemKind::magnetic({KillingField::k2});
  if (lower == "k3") return SystemKind::magnetic({KillingField::k3});
  if (lower == "k4") return SystemKind::magnetic({KillingField::k4});
  throw std::invalid_argument("unknown system '" + name + "' (expected geodesic, k1, k2, k3 or k4)");
}

FrameVector covariant_accel_frame(const ModelParams & p, const State & s, const Acceleration & a)
{
  const double l = p.lambda();
  const double w = vertical_speed(s);
  const double dw = a.az + s.vx * s.vy + s.x * a.ay;
  return {a.ay + s.vx * w, a.ax / l - l * s.vy * w, dw};
}

FrameVector lorentz_force(const ModelParams & p, const SystemKind & sys, const State & s)
{
  if (sys.is_geodesic()) {
    return {};
  }
  const PointH3 pt = s.position();
  return cross(killing_field_frame(sys.field(), p, pt), coordinate_to_frame(p, pt, s.velocity()));
}

Acceleration lorentz_rhs(const ModelParams & p, const SystemKind & sys, const State & s)
{
  const double l = p.lambda();
  const double w = vertical_speed(s);
  const FrameVector f = lorentz_force(p, sys, s);
  Acceleration a;
  a.ay = f.a1 - s.vx * w;
  a.ax = l * (f.a2 + l * s.vy * w);
  a.az = f.a3 - s.vx * s.vy - s.x * a.ay;
  return a;
}

double speed_squared(const ModelParams & p, const State & s)
{
  const FrameVector t = coordinate_to_frame(p, s.position(), s.velocity());
  return t.a1 * t.a1 + t.a2 * t.a2 + t.a3 * t.a3;
}

bool has_first_integral(const SystemKind & sys)
{
  return sys.is_geodesic() || sys.field().is_unit();
}

double first_integral(const ModelParams & p, const SystemKind & sys, const State & s)
{
  if (!has_first_integral(sys)) {
    throw std::invalid_argument("no first integral is available for a scaled Killing field");
  }
  const double l = p.lambda();
  const double w = vertical_speed(s);
  if (sys.is_geodesic()) {
    return w;
  }
  switch (sys.field().tag) {
    case KillingField::k1: return w;
    case KillingField::k2: return w - s.x / l;
    case KillingField::k3: return w + s.y / l;
    case KillingField::k4: return w + s.x * s.x / (2.0 * l) + 0.5 * l * s.y * s.y;
  }
  return w;
}

}  // namespace h3mag
