#include "h3mag/geometry.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

#include "h3mag/numdiff.hpp"

namespace h3mag {

ModelParams::ModelParams(double lambda) : lambda_(lambda)
{
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw std::invalid_argument("lambda must be finite and strictly positive");
  }
}

std::string to_string(KillingField k)
{
  switch (k) {
    case KillingField::k1: return "K1";
    case KillingField::k2: return "K2";
    case KillingField::k3: return "K3";
    case KillingField::k4: return "K4";
  }
  return "?";
}

namespace {

PointH3 shifted(const PointH3 & pt, int axis, double by)
{
  PointH3 out = pt;
  switch (axis) {
    case 0: out.x += by; break;
    case 1: out.y += by; break;
    default: out.z += by; break;
  }
  return out;
}

double coordinate(const PointH3 & pt, int axis)
{
  return axis == 0 ? pt.x : (axis == 1 ? pt.y : pt.z);
}

// ∂_axis of a Vec3-valued function of the point.
template<typename F>
Vec3 partial(F && f, const PointH3 & pt, int axis)
{
  return numdiff::derivative(
    [&](double s) -> Vec3 { return f(shifted(pt, axis, s - coordinate(pt, axis))); },
    coordinate(pt, axis));
}

// Jacobian J(k, m) = ∂_m V^k.
Mat3 jacobian(const CoordField & field, const PointH3 & pt)
{
  Mat3 jac;
  for (int m = 0; m < 3; ++m) {
    jac.col(m) = partial([&](const PointH3 & q) { return as_vec(field(q)); }, pt, m);
  }
  return jac;
}

}  // namespace

Mat3 metric_matrix(const ModelParams & p, const PointH3 & pt)
{
  const double l = p.lambda();
  Mat3 g;
  // clang-format off
  g << 1.0 / (l * l), 0.0,              0.0,
       0.0,           1.0 + pt.x * pt.x, pt.x,
       0.0,           pt.x,              1.0;
  // clang-format on
  return g;
}

double inner(const ModelParams & p, const PointH3 & pt, const CoordVector & u, const CoordVector & v)
{
  return as_vec(u).dot(metric_matrix(p, pt) * as_vec(v));
}

FrameVector coordinate_to_frame(const ModelParams & p, const PointH3 & pt, const CoordVector & v)
{
  return {v.dy, v.dx / p.lambda(), v.dz + pt.x * v.dy};
}

CoordVector frame_to_coordinate(const ModelParams & p, const PointH3 & pt, const FrameVector & w)
{
  return {p.lambda() * w.a2, w.a1, w.a3 - pt.x * w.a1};
}

CoordVector frame_basis(const ModelParams & p, const PointH3 & pt, int i)
{
  FrameVector w;
  switch (i) {
    case 1: w.a1 = 1.0; break;
    case 2: w.a2 = 1.0; break;
    case 3: w.a3 = 1.0; break;
    default: throw std::out_of_range("frame index must be 1, 2 or 3");
  }
  return frame_to_coordinate(p, pt, w);
}

ConnectionTable connection_table(const ModelParams & p)
{
  const double h = 0.5 * p.lambda();
  ConnectionTable t{};
  // row e1
  t[0][1] = {0.0, 0.0, h};
  t[0][2] = {0.0, -h, 0.0};
  // row e2
  t[1][0] = {0.0, 0.0, -h};
  t[1][2] = {h, 0.0, 0.0};
  // row e3
  t[2][0] = {0.0, -h, 0.0};
  t[2][1] = {h, 0.0, 0.0};
  return t;
}

Christoffel christoffel_numeric(const ModelParams & p, const PointH3 & pt)
{
  std::array<Mat3, 3> dg;
  for (int m = 0; m < 3; ++m) {
    dg[m] = numdiff::derivative(
      [&](double s) -> Mat3 { return metric_matrix(p, shifted(pt, m, s - coordinate(pt, m))); },
      coordinate(pt, m));
  }
  const Mat3 ginv = metric_matrix(p, pt).inverse();

  Christoffel out;
  for (int k = 0; k < 3; ++k) {
    out.gamma[k].setZero();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        double acc = 0.0;
        for (int l = 0; l < 3; ++l) {
          acc += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        }
        out.gamma[k](i, j) = 0.5 * acc;
      }
    }
  }
  return out;
}

CoordVector covariant_derivative_numeric(
  const ModelParams & p, const CoordField & field, const PointH3 & pt, const CoordVector & u)
{
  const Vec3 uv = as_vec(u);
  const Vec3 vv = as_vec(field(pt));
  const Christoffel gam = christoffel_numeric(p, pt);
  Vec3 out = jacobian(field, pt) * uv;
  for (int k = 0; k < 3; ++k) {
    out[k] += uv.dot(gam.gamma[k] * vv);
  }
  return to_coord(out);
}

ConnectionTable connection_table_numeric(const ModelParams & p, const PointH3 & pt)
{
  ConnectionTable t{};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const CoordField ej = [&p, j](const PointH3 & q) { return frame_basis(p, q, j); };
      const CoordVector d = covariant_derivative_numeric(p, ej, pt, frame_basis(p, pt, i));
      t[i - 1][j - 1] = coordinate_to_frame(p, pt, d);
    }
  }
  return t;
}

FrameVector cross(const FrameVector & u, const FrameVector & v)
{
  return to_frame(as_vec(u).cross(as_vec(v)));
}

double volume_form(const FrameVector & u, const FrameVector & v, const FrameVector & w)
{
  Mat3 m;
  m.col(0) = as_vec(u);
  m.col(1) = as_vec(v);
  m.col(2) = as_vec(w);
  return m.determinant();
}

CoordVector killing_field(const KillingFieldId & id, const ModelParams & p, const PointH3 & pt)
{
  const double l2 = p.lambda() * p.lambda();
  Vec3 k;
  switch (id.tag) {
    case KillingField::k1: k = {0.0, 0.0, 1.0}; break;
    case KillingField::k2: k = {0.0, 1.0, 0.0}; break;
    case KillingField::k3: k = {1.0, 0.0, -pt.y}; break;
    case KillingField::k4:
      k = {l2 * pt.y, -pt.x, -0.5 * (l2 * pt.y * pt.y - pt.x * pt.x)};
      break;
  }
  return to_coord(id.scale * k);
}

FrameVector killing_field_frame(const KillingFieldId & id, const ModelParams & p, const PointH3 & pt)
{
  return coordinate_to_frame(p, pt, killing_field(id, p, pt));
}

FrameVector k4_frame_as_printed(const ModelParams & p, const PointH3 & pt)
{
  const double l = p.lambda();
  return {-pt.x, l * pt.y, -0.5 * (l * l * pt.y * pt.y - 3.0 * pt.x * pt.x)};
}

double killing_residual(
  const ModelParams & p, const CoordField & field, const PointH3 & pt, const CoordVector & u,
  const CoordVector & v)
{
  const Vec3 uv = as_vec(u);
  const Vec3 vv = as_vec(v);
  if (uv.isZero(0.0) && vv.isZero(0.0)) {
    return 0.0;
  }
  const CoordVector du = covariant_derivative_numeric(p, field, pt, u);
  const CoordVector dv = covariant_derivative_numeric(p, field, pt, v);
  return inner(p, pt, du, v) + inner(p, pt, dv, u);
}

double killing_residual(
  const ModelParams & p, const KillingFieldId & id, const PointH3 & pt, const CoordVector & u,
  const CoordVector & v)
{
  const CoordField f = [&](const PointH3 & q) { return killing_field(id, p, q); };
  return killing_residual(p, f, pt, u, v);
}

FrameVector frame_bracket_numeric(const ModelParams & p, int i, int j, const PointH3 & pt)
{
  if (i < 1 || i > 3 || j < 1 || j > 3) {
    throw std::out_of_range("frame index must be 1, 2 or 3");
  }
  if (i == j) {
    return {};
  }
  const CoordField ei = [&p, i](const PointH3 & q) { return frame_basis(p, q, i); };
  const CoordField ej = [&p, j](const PointH3 & q) { return frame_basis(p, q, j); };
  const Vec3 xi = as_vec(ei(pt));
  const Vec3 xj = as_vec(ej(pt));
  const Vec3 bracket = jacobian(ej, pt) * xi - jacobian(ei, pt) * xj;
  return coordinate_to_frame(p, pt, to_coord(bracket));
}

}  // namespace h3mag
