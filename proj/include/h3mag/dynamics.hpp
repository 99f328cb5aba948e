#pragma once

#include <optional>
#include <string>

#include "h3mag/geometry.hpp"

namespace h3mag {

/// Phase point: position plus coordinate velocity (x', y', z').
struct State
{
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double vx = 0.0;
  double vy = 0.0;
  double vz = 0.0;

  PointH3 position() const { return {x, y, z}; }
  CoordVector velocity() const { return {vx, vy, vz}; }
};

/// Coordinate second derivatives (x'', y'', z'').
struct Acceleration
{
  double ax = 0.0;
  double ay = 0.0;
  double az = 0.0;
};

/// Geodesic flow, or the Lorentz flow ∇_t t = K × t of a Killing field.
class SystemKind
{
public:
  static SystemKind geodesic() { return SystemKind{}; }
  static SystemKind magnetic(KillingFieldId field) { return SystemKind{field}; }

  bool is_geodesic() const { return !field_.has_value(); }
  /// Precondition: !is_geodesic().
  const KillingFieldId & field() const { return *field_; }

  std::string name() const;

private:
  SystemKind() = default;
  explicit SystemKind(KillingFieldId f) : field_(f) {}

  std::optional<KillingFieldId> field_;
};

/// Parses "geodesic", "k1".."k4" (case-insensitive). Throws std::invalid_argument.
SystemKind parse_system(const std::string & name);

/// w = z' + x y', the e3 component of the velocity.
inline double vertical_speed(const State & s) { return s.vz + s.x * s.vy; }

/// Frame components of ∇_t t for the curve with velocity s and coordinate
/// acceleration a under the Levi-Civita connection:
///   (y'' + x'w,  x''/λ − λy'w,  w'),   w' = z'' + x'y' + x y''.
FrameVector covariant_accel_frame(const ModelParams & p, const State & s, const Acceleration & a);

/// Lorentz force K × t in frame components (zero for the geodesic system).
FrameVector lorentz_force(const ModelParams & p, const SystemKind & sys, const State & s);

/// The unique acceleration with covariant_accel_frame(p, s, a) == lorentz_force(p, sys, s).
Acceleration lorentz_rhs(const ModelParams & p, const SystemKind & sys, const State & s);

/// g(t, t) = y'² + (x'/λ)² + w².
double speed_squared(const ModelParams & p, const State & s);

/// True when first_integral is defined for sys (geodesic or an unscaled K1..K4).
bool has_first_integral(const SystemKind & sys);

/// Conserved combination of each system:
///   geodesic, K1: w;  K2: w − x/λ;  K3: w + y/λ;  K4: w + x²/(2λ) + λy²/2.
/// Throws std::invalid_argument for scaled Killing fields.
double first_integral(const ModelParams & p, const SystemKind & sys, const State & s);

}  // namespace h3mag
