#pragma once

#include <array>
#include <functional>
#include <string>

#include <Eigen/Core>

/*
 * Left-invariant Riemannian geometry of the Heisenberg group H3.
 *
 * The metric is g = dx²/λ² + dy² + (x dy + dz)² on global coordinates
 * (x, y, z). Tangent vectors appear in two bases: the coordinate basis
 * (∂x, ∂y, ∂z) and the left-invariant orthonormal frame
 *
 *   e1 = ∂y − x ∂z,   e2 = λ ∂x,   e3 = ∂z.
 *
 * Everything here is a pure function of value types. The numeric
 * operations (Christoffel symbols, Killing residuals, frame brackets) use
 * central finite differences with Richardson extrapolation and serve as
 * independent oracles for the closed-form connection table.
 */

namespace h3mag {

/// Metric parameter λ > 0.
class ModelParams
{
public:
  /// Throws std::invalid_argument unless lambda is finite and strictly positive.
  explicit ModelParams(double lambda);

  double lambda() const noexcept { return lambda_; }

private:
  double lambda_;
};

struct PointH3
{
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Components in the coordinate basis (∂x, ∂y, ∂z).
struct CoordVector
{
  double dx = 0.0;
  double dy = 0.0;
  double dz = 0.0;
};

/// Components in the orthonormal frame (e1, e2, e3).
struct FrameVector
{
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
};

enum class KillingField { k1, k2, k3, k4 };

struct KillingFieldId
{
  KillingField tag = KillingField::k1;
  double scale = 1.0;

  /// True when no scale factor other than 1 was requested.
  bool is_unit() const noexcept { return scale == 1.0; }
};

std::string to_string(KillingField k);

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline Vec3 as_vec(const PointH3 & p) { return {p.x, p.y, p.z}; }
inline Vec3 as_vec(const CoordVector & v) { return {v.dx, v.dy, v.dz}; }
inline Vec3 as_vec(const FrameVector & v) { return {v.a1, v.a2, v.a3}; }
inline PointH3 to_point(const Vec3 & v) { return {v[0], v[1], v[2]}; }
inline CoordVector to_coord(const Vec3 & v) { return {v[0], v[1], v[2]}; }
inline FrameVector to_frame(const Vec3 & v) { return {v[0], v[1], v[2]}; }

/// A vector field given in coordinate components.
using CoordField = std::function<CoordVector(const PointH3 &)>;

// ---------------------------------------------------------------------------
// Metric and frame

Mat3 metric_matrix(const ModelParams & p, const PointH3 & pt);

double inner(const ModelParams & p, const PointH3 & pt, const CoordVector & u, const CoordVector & v);

FrameVector coordinate_to_frame(const ModelParams & p, const PointH3 & pt, const CoordVector & v);
CoordVector frame_to_coordinate(const ModelParams & p, const PointH3 & pt, const FrameVector & w);

/// Coordinate components of the frame vector e_i (i in 1..3) at pt.
CoordVector frame_basis(const ModelParams & p, const PointH3 & pt, int i);

// ---------------------------------------------------------------------------
// Connection

/// Entry [i][j] holds ∇_{e_{i+1}} e_{j+1} in frame components.
using ConnectionTable = std::array<std::array<FrameVector, 3>, 3>;

ConnectionTable connection_table(const ModelParams & p);

/// Γ^k_{ij}, stored as gamma[k](i, j). Computed from finite differences of
/// metric_matrix.
struct Christoffel
{
  std::array<Mat3, 3> gamma;

  double operator()(int k, int i, int j) const { return gamma[k](i, j); }
};

Christoffel christoffel_numeric(const ModelParams & p, const PointH3 & pt);

/// ∇_u V at pt for a coordinate vector field V, via christoffel_numeric.
CoordVector covariant_derivative_numeric(
  const ModelParams & p, const CoordField & field, const PointH3 & pt, const CoordVector & u);

/// Frame connection coefficients rebuilt from christoffel_numeric.
ConnectionTable connection_table_numeric(const ModelParams & p, const PointH3 & pt);

// ---------------------------------------------------------------------------
// Cross product and Killing fields

/// Right-handed cross product in the orthonormal frame (e1 × e2 = e3).
FrameVector cross(const FrameVector & u, const FrameVector & v);

/// g(u×v, w) = det[u v w] in frame components (the Riemannian volume form).
double volume_form(const FrameVector & u, const FrameVector & v, const FrameVector & w);

CoordVector killing_field(const KillingFieldId & id, const ModelParams & p, const PointH3 & pt);
FrameVector killing_field_frame(const KillingFieldId & id, const ModelParams & p, const PointH3 & pt);

/// The printed K4 frame expansion −x e1 + λy e2 − ½(λ²y² − 3x²) e3.
/// Kept only so its Killing residual can be measured.
FrameVector k4_frame_as_printed(const ModelParams & p, const PointH3 & pt);

/// g(∇_u K, v) + g(∇_v K, u) for an arbitrary coordinate vector field.
double killing_residual(
  const ModelParams & p, const CoordField & field, const PointH3 & pt, const CoordVector & u,
  const CoordVector & v);

double killing_residual(
  const ModelParams & p, const KillingFieldId & id, const PointH3 & pt, const CoordVector & u,
  const CoordVector & v);

/// [e_i, e_j] from a finite-difference commutator of the coordinate fields.
FrameVector frame_bracket_numeric(const ModelParams & p, int i, int j, const PointH3 & pt);

}  // namespace h3mag
