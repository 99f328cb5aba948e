#include "h3mag/contact.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "h3mag/numdiff.hpp"

namespace h3mag {

namespace {

PointH3 moved(const PointH3 & pt, const CoordVector & dir, double s)
{
  return {pt.x + s * dir.dx, pt.y + s * dir.dy, pt.z + s * dir.dz};
}

double flow_step(const PointH3 & pt)
{
  return numdiff::default_step(as_vec(pt).cwiseAbs().maxCoeff());
}

// Outer step for the nested derivative in the closedness check. The inner
// derivative already carries ~1e-11 noise, so a wide outer stencil keeps the
// amplification small.
constexpr double kOuterStep = 1e-2;

}  // namespace

FrameVector phi(const FrameVector & w)
{
  return {-w.a2, w.a1, 0.0};
}

double eta(const ModelParams &, const PointH3 & pt, const CoordVector & v)
{
  return pt.x * v.dy + v.dz;
}

double d_eta_numeric(const ModelParams & p, const PointH3 & pt, const CoordVector & x, const CoordVector & y)
{
  // Coordinate-constant fields commute, so the bracket term drops out.
  const double h = flow_step(pt);
  const double x_of_eta_y =
    numdiff::derivative([&](double s) { return eta(p, moved(pt, x, s), y); }, 0.0, h);
  const double y_of_eta_x =
    numdiff::derivative([&](double s) { return eta(p, moved(pt, y, s), x); }, 0.0, h);
  return x_of_eta_y - y_of_eta_x;
}

ContactDefects contact_identity_report(const ModelParams & p, int samples, std::uint64_t seed)
{
  if (samples < 1) {
    throw std::invalid_argument("contact_identity_report needs at least one sample");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> comp(-1.0, 1.0);
  auto random_frame = [&] { return FrameVector{comp(rng), comp(rng), comp(rng)}; };

  ContactDefects out;
  double num = 0.0;
  double den = 0.0;
  struct Pair
  {
    PointH3 pt;
    FrameVector x, y;
    double d_eta, g_x_phi_y;
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(samples));

  for (int n = 0; n < samples; ++n) {
    const PointH3 pt{coord(rng), coord(rng), coord(rng)};
    // The first pair is (ξ, ξ), the analytic counterexample for the "+" form.
    const FrameVector fx = n == 0 ? reeb_field : random_frame();
    const FrameVector fy = n == 0 ? reeb_field : random_frame();
    const FrameVector fz = random_frame();
    const CoordVector cx = frame_to_coordinate(p, pt, fx);
    const CoordVector cy = frame_to_coordinate(p, pt, fy);
    const CoordVector cz = frame_to_coordinate(p, pt, fz);

    const double gxy = inner(p, pt, cx, cy);
    const double gphi = inner(
      p, pt, frame_to_coordinate(p, pt, phi(fx)), frame_to_coordinate(p, pt, phi(fy)));
    const double ex = eta(p, pt, cx);
    const double ey = eta(p, pt, cy);
    out.compatibility_minus = std::max(out.compatibility_minus, std::abs(gphi - (gxy - ex * ey)));
    out.compatibility_plus = std::max(out.compatibility_plus, std::abs(gphi - (gxy + ex * ey)));

    const Vec3 phi2 = as_vec(phi(phi(fx))) + as_vec(fx) - ex * as_vec(reeb_field);
    out.phi_squared = std::max(out.phi_squared, phi2.cwiseAbs().maxCoeff());
    const double skew = inner(p, pt, frame_to_coordinate(p, pt, phi(fx)), cy) +
                        inner(p, pt, cx, frame_to_coordinate(p, pt, phi(fy)));
    out.phi_skew = std::max(out.phi_skew, std::abs(skew));

    const double de = d_eta_numeric(p, pt, cx, cy);
    const double rhs = inner(p, pt, cx, frame_to_coordinate(p, pt, phi(fy)));
    num += de * rhs;
    den += rhs * rhs;
    pairs.push_back({pt, fx, fy, de, rhs});

    auto d_eta_at = [&](const CoordVector & dir, const CoordVector & a, const CoordVector & b) {
      return numdiff::derivative(
        [&](double s) { return d_eta_numeric(p, moved(pt, dir, s), a, b); }, 0.0, kOuterStep);
    };
    const double closed = d_eta_at(cx, cy, cz) - d_eta_at(cy, cx, cz) + d_eta_at(cz, cx, cy);
    out.d_eta_closedness = std::max(out.d_eta_closedness, std::abs(closed));
  }

  out.d_eta_scale = den > 0.0 ? num / den : 0.0;
  for (const auto & pr : pairs) {
    out.d_eta_fit_defect =
      std::max(out.d_eta_fit_defect, std::abs(pr.d_eta - out.d_eta_scale * pr.g_x_phi_y));
  }
  return out;
}

}  // namespace h3mag
