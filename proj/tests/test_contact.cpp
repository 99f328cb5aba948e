#include <gtest/gtest.h>

#include "h3mag/contact.hpp"
#include "test_util.hpp"

using namespace h3mag;
using h3mag::test::max_diff;

TEST(Phi, Examples)
{
  EXPECT_LT(max_diff(phi({1, 0, 0}), FrameVector{0, 1, 0}), 1e-15);
  EXPECT_LT(max_diff(phi({0, 1, 0}), FrameVector{-1, 0, 0}), 1e-15);
  EXPECT_LT(max_diff(phi(reeb_field), FrameVector{}), 1e-15);
}

TEST(Phi, SkewAndSquare)
{
  test::Random rnd;
  for (int n = 0; n < 100; ++n) {
    const FrameVector x = rnd.frame(), y = rnd.frame();
    EXPECT_NEAR(as_vec(phi(x)).dot(as_vec(y)) + as_vec(x).dot(as_vec(phi(y))), 0.0, 1e-15);
    const Vec3 sq = as_vec(phi(phi(x))) + as_vec(x) - x.a3 * as_vec(reeb_field);
    EXPECT_LT(sq.cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Eta, Examples)
{
  const ModelParams p(1.0);
  EXPECT_DOUBLE_EQ(eta(p, {5, 0, 0}, {0, 1, 0}), 5.0);
  EXPECT_DOUBLE_EQ(eta(p, {-3, 8, 1}, {0, 0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(eta(p, {2, 2, 2}, {1, 0, 0}), 0.0);
}

TEST(Eta, ReebFieldHasUnitEta)
{
  test::Random rnd;
  const ModelParams p(2.0);
  for (int n = 0; n < 20; ++n) {
    const PointH3 pt = rnd.point();
    EXPECT_NEAR(eta(p, pt, frame_to_coordinate(p, pt, reeb_field)), 1.0, 1e-15);
  }
}

TEST(DEta, AntisymmetricAndConstant)
{
  const ModelParams p(1.0);
  const CoordVector dx{1, 0, 0}, dy{0, 1, 0};
  // dη = dx ∧ dy
  EXPECT_NEAR(d_eta_numeric(p, {0.3, -2, 1}, dx, dy), 1.0, 1e-9);
  EXPECT_NEAR(d_eta_numeric(p, {0.3, -2, 1}, dy, dx), -1.0, 1e-9);
  EXPECT_NEAR(d_eta_numeric(p, {4, 1, 1}, dx, {0, 0, 1}), 0.0, 1e-9);
}

TEST(ContactReport, IdentitiesAtUnitLambda)
{
  const ContactDefects d = contact_identity_report(ModelParams(1.0), 100);
  EXPECT_LT(d.compatibility_minus, 1e-9);
  EXPECT_GE(d.compatibility_plus, 1.0);
  EXPECT_LT(d.d_eta_closedness, 1e-7);
  EXPECT_LT(d.phi_squared, 1e-12);
  EXPECT_LT(d.phi_skew, 1e-12);
  EXPECT_LT(d.d_eta_fit_defect, 1e-7);
}

TEST(ContactReport, FittedScaleTracksLambda)
{
  for (double l : {0.5, 1.0, 2.0}) {
    const ContactDefects d = contact_identity_report(ModelParams(l), 50);
    EXPECT_NEAR(d.d_eta_scale, l, 1e-7) << l;
  }
}

TEST(ContactReport, SeededAndValidated)
{
  const ContactDefects a = contact_identity_report(ModelParams(1.5), 30, 99);
  const ContactDefects b = contact_identity_report(ModelParams(1.5), 30, 99);
  EXPECT_EQ(a.d_eta_scale, b.d_eta_scale);
  EXPECT_EQ(a.d_eta_closedness, b.d_eta_closedness);
  EXPECT_THROW(contact_identity_report(ModelParams(1.0), 0), std::invalid_argument);
}
