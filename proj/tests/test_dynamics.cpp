#include <gtest/gtest.h>

#include "h3mag/dynamics.hpp"
#include "h3mag/printed_systems.hpp"
#include "test_util.hpp"

using namespace h3mag;
using h3mag::test::max_diff;

namespace {

SystemKind magnetic(KillingField k) { return SystemKind::magnetic({k}); }

std::vector<SystemKind> all_systems()
{
  return {SystemKind::geodesic(), magnetic(KillingField::k1), magnetic(KillingField::k2),
          magnetic(KillingField::k3), magnetic(KillingField::k4)};
}

double accel_diff(const Acceleration & a, const Acceleration & b)
{
  return std::max({std::abs(a.ax - b.ax), std::abs(a.ay - b.ay), std::abs(a.az - b.az)});
}

}  // namespace

TEST(SystemKind, ParseAndName)
{
  EXPECT_TRUE(parse_system("geodesic").is_geodesic());
  EXPECT_EQ(parse_system("K3").field().tag, KillingField::k3);
  EXPECT_EQ(parse_system("k1").field().tag, KillingField::k1);
  EXPECT_THROW(parse_system("k5"), std::invalid_argument);
  EXPECT_THROW(parse_system(""), std::invalid_argument);
}

TEST(CovariantAccel, Example)
{
  State s;
  s.x = 1;
  s.vx = 1;
  s.vy = 2;
  s.vz = 3;
  // w = 5; the e2 entry carries the Levi-Civita sign −λy'w.
  EXPECT_LT(max_diff(covariant_accel_frame(ModelParams(1.0), s, {}), FrameVector{5, -10, 2}), 1e-14);
  EXPECT_LT(max_diff(covariant_accel_frame(ModelParams(1.0), State{}, {}), FrameVector{}), 1e-15);
}

TEST(CovariantAccel, MatchesChristoffelSymbols)
{
  test::Random rnd;
  for (double l : {0.5, 1.0, 2.0}) {
    const ModelParams p(l);
    for (int n = 0; n < 30; ++n) {
      const State s = rnd.state();
      const Acceleration a{rnd.uniform(-1, 1), rnd.uniform(-1, 1), rnd.uniform(-1, 1)};
      const Christoffel ch = christoffel_numeric(p, s.position());
      const Vec3 v = as_vec(s.velocity());
      Vec3 cov{a.ax, a.ay, a.az};
      for (int k = 0; k < 3; ++k) cov[k] += v.dot(ch.gamma[static_cast<std::size_t>(k)] * v);
      const FrameVector expected = coordinate_to_frame(p, s.position(), to_coord(cov));
      EXPECT_LT(max_diff(covariant_accel_frame(p, s, a), expected), 1e-7);
    }
  }
}

TEST(LorentzRhs, Examples)
{
  const ModelParams p(1.0);
  EXPECT_LT(accel_diff(lorentz_rhs(p, SystemKind::geodesic(), State{}), {}), 1e-15);
  State s;
  s.vx = 1;
  const Acceleration a = lorentz_rhs(p, magnetic(KillingField::k1), s);
  EXPECT_NEAR(a.ay, -1.0, 1e-15);
  EXPECT_NEAR(a.ax, 0.0, 1e-15);
  EXPECT_NEAR(a.az, 0.0, 1e-15);
}

TEST(LorentzRhs, InvertsCovariantAccel)
{
  test::Random rnd;
  for (const SystemKind & sys : all_systems()) {
    for (double l : {0.5, 1.0, 2.0}) {
      const ModelParams p(l);
      for (int n = 0; n < 50; ++n) {
        const State s = rnd.state();
        const FrameVector lhs = covariant_accel_frame(p, s, lorentz_rhs(p, sys, s));
        EXPECT_LT(max_diff(lhs, lorentz_force(p, sys, s)), 1e-12) << sys.name();
      }
    }
  }
}

TEST(LorentzRhs, MatchesSignCorrectedS2)
{
  // S2 coded term by term, with the e2 sign of the covariant derivative fixed:
  // x'' = λ(x y' + (λ y' − 1) w) instead of the printed λ(x y' − (λ y' + 1) w).
  test::Random rnd;
  for (int n = 0; n < 100; ++n) {
    const ModelParams p(rnd.uniform(0.3, 3.0));
    const double l = p.lambda();
    const State s = rnd.state();
    const double w = vertical_speed(s);
    const double ypp = -s.vx * w - s.x * s.vx / l;
    const double xpp = l * (s.x * s.vy + (l * s.vy - 1.0) * w);
    const double wp = s.vx / l;
    const double zpp = wp - s.vx * s.vy - s.x * ypp;
    const Acceleration rhs = lorentz_rhs(p, magnetic(KillingField::k2), s);
    EXPECT_NEAR(rhs.ay, ypp, 1e-12);
    EXPECT_NEAR(rhs.ax, xpp, 1e-12);
    EXPECT_NEAR(rhs.az, zpp, 1e-12);
  }
}

TEST(LorentzRhs, PrintedSystemsDifferOnlyByE2Sign)
{
  // x'' carries −λ²y'w in print and +λ²y'w under Levi-Civita; z'' does not
  // involve x''. S4 is excluded: its expansion rests on the printed K4 frame.
  test::Random rnd;
  for (const SystemKind & sys : all_systems()) {
    if (!sys.is_geodesic() && sys.field().tag == KillingField::k4) continue;
    for (int n = 0; n < 50; ++n) {
      const ModelParams p(rnd.uniform(0.3, 3.0));
      const double l = p.lambda();
      const State s = rnd.state();
      const double w = vertical_speed(s);
      const Acceleration lc = lorentz_rhs(p, sys, s);
      const Acceleration pr = printed::system_rhs(p, sys, s);
      EXPECT_NEAR(lc.ay, pr.ay, 1e-12) << sys.name();
      EXPECT_NEAR(lc.az, pr.az, 1e-12) << sys.name();
      EXPECT_NEAR(lc.ax - pr.ax, 2.0 * l * l * s.vy * w, 1e-11) << sys.name();
    }
  }
}

TEST(LorentzForce, CrossMatchesPrintedExpansions)
{
  test::Random rnd;
  for (double l : {0.5, 1.0, 2.0}) {
    const ModelParams p(l);
    for (int n = 0; n < 100; ++n) {
      const State s = rnd.state();
      EXPECT_LT(max_diff(lorentz_force(p, magnetic(KillingField::k1), s), printed::k1_cross_t(p, s)), 1e-12);
      EXPECT_LT(max_diff(lorentz_force(p, magnetic(KillingField::k2), s), printed::k2_cross_t(p, s)), 1e-12);
      EXPECT_LT(max_diff(lorentz_force(p, magnetic(KillingField::k3), s), printed::k3_cross_t(p, s)), 1e-12);
      const FrameVector t = coordinate_to_frame(p, s.position(), s.velocity());
      EXPECT_LT(max_diff(cross(k4_frame_as_printed(p, s.position()), t), printed::k4_cross_t(p, s)), 1e-12);
    }
  }
}

TEST(LorentzForce, GeodesicIsZeroAndScaled)
{
  test::Random rnd;
  const ModelParams p(1.3);
  const State s = rnd.state();
  EXPECT_LT(max_diff(lorentz_force(p, SystemKind::geodesic(), s), FrameVector{}), 1e-15);
  const FrameVector f1 = lorentz_force(p, magnetic(KillingField::k3), s);
  const FrameVector f3 = lorentz_force(p, SystemKind::magnetic({KillingField::k3, 3.0}), s);
  EXPECT_LT((3.0 * as_vec(f1) - as_vec(f3)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Speed, Examples)
{
  EXPECT_EQ(speed_squared(ModelParams(1.0), State{}), 0.0);
  State s;
  s.vx = 1;
  s.vy = 1;
  EXPECT_NEAR(speed_squared(ModelParams(1.0), s), 2.0, 1e-15);
}

TEST(FirstIntegral, Examples)
{
  const ModelParams p(1.0);
  State s;
  s.x = 1;
  s.y = 1;
  EXPECT_NEAR(first_integral(p, magnetic(KillingField::k4), s), 1.0, 1e-15);
  EXPECT_EQ(first_integral(p, SystemKind::geodesic(), State{}), 0.0);
  for (double c0 : {-2.0, 0.5, 3.0}) {
    const ModelParams q(2.0);
    State t;
    t.x = q.lambda() * c0;
    t.vz = 2.0 * c0;
    EXPECT_NEAR(first_integral(q, magnetic(KillingField::k2), t), c0, 1e-14);
  }
  EXPECT_FALSE(has_first_integral(SystemKind::magnetic({KillingField::k2, 2.0})));
  EXPECT_THROW(first_integral(p, SystemKind::magnetic({KillingField::k2, 2.0}), s), std::invalid_argument);
}

TEST(FirstIntegral, ConservedAlongTheFlow)
{
  test::Random rnd;
  for (const SystemKind & sys : all_systems()) {
    for (double l : {0.5, 1.0, 2.0}) {
      const ModelParams p(l);
      for (int n = 0; n < 30; ++n) {
        const State s = rnd.state();
        const Acceleration a = lorentz_rhs(p, sys, s);
        auto along = [&](double h) {
          return State{s.x + h * s.vx, s.y + h * s.vy, s.z + h * s.vz,
                       s.vx + h * a.ax, s.vy + h * a.ay, s.vz + h * a.az};
        };
        const double h = 1e-6;
        const double dspeed = (speed_squared(p, along(h)) - speed_squared(p, along(-h))) / (2 * h);
        const double dfi = (first_integral(p, sys, along(h)) - first_integral(p, sys, along(-h))) / (2 * h);
        EXPECT_NEAR(dspeed, 0.0, 1e-8) << sys.name();
        EXPECT_NEAR(dfi, 0.0, 1e-8) << sys.name();
      }
    }
  }
}

TEST(LorentzRhs, PrintedS4DiffersBeyondTheSign)
{
  test::Random rnd;
  const ModelParams p(1.0);
  const SystemKind k4 = magnetic(KillingField::k4);
  double worst = 0.0;
  for (int n = 0; n < 50; ++n) {
    const State s = rnd.state(2.0);
    worst = std::max(worst, std::abs(lorentz_rhs(p, k4, s).ay - printed::system_rhs(p, k4, s).ay));
  }
  EXPECT_GT(worst, 1e-2);
}
