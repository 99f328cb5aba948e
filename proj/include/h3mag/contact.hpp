#pragma once

#include <cstdint>

#include "h3mag/geometry.hpp"

// Almost-contact structure (φ, ξ, η) on H3: ξ = e3, η = x dy + dz,
// φ(e1) = e2, φ(e2) = −e1, φ(e3) = 0.

namespace h3mag {

inline constexpr FrameVector reeb_field{0.0, 0.0, 1.0};

FrameVector phi(const FrameVector & w);

double eta(const ModelParams & p, const PointH3 & pt, const CoordVector & v);

/// dη(X, Y) for constant-coefficient coordinate fields X, Y, from central
/// differences of η along the coordinate flows.
double d_eta_numeric(const ModelParams & p, const PointH3 & pt, const CoordVector & x, const CoordVector & y);

struct ContactDefects
{
  /// max |g(φX, φY) − (g(X,Y) − η(X)η(Y))|
  double compatibility_minus = 0.0;
  /// Same identity with "+ η(X)η(Y)", the form that fails at X = Y = ξ.
  double compatibility_plus = 0.0;
  /// Least-squares s in dη(X,Y) ≈ s · g(X, φY).
  double d_eta_scale = 0.0;
  /// max |dη(X,Y) − s · g(X, φY)| after the fit.
  double d_eta_fit_defect = 0.0;
  /// max |d(dη)(X,Y,Z)|.
  double d_eta_closedness = 0.0;
  /// max |φ²X + X − η(X)ξ|
  double phi_squared = 0.0;
  /// max |g(φX,Y) + g(X,φY)|
  double phi_skew = 0.0;
};

/// Samples random points and vectors (seeded) and measures each identity.
/// Throws std::invalid_argument when samples < 1.
ContactDefects contact_identity_report(const ModelParams & p, int samples, std::uint64_t seed = 7);

}  // namespace h3mag
