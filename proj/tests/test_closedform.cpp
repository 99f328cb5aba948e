#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "h3mag/closedform.hpp"
#include "h3mag/numdiff.hpp"
#include "h3mag/printed_systems.hpp"
#include "test_util.hpp"

using namespace h3mag;

namespace {

ClosedFormSpec make(FamilyId f, Variant v, std::array<double, 5> k, std::optional<double> c = std::nullopt,
                    double lambda = 1.0)
{
  ClosedFormSpec s;
  s.family = f;
  s.variant = v;
  s.k = k;
  s.c = c;
  s.lambda = lambda;
  return s;
}

double dist(const PointH3 & a, const PointH3 & b)
{
  return (as_vec(a) - as_vec(b)).norm();
}

}  // namespace

TEST(Families, Enumeration)
{
  const auto fams = families();
  EXPECT_EQ(fams.size(), 8u);
  const auto tk13 = std::find_if(fams.begin(), fams.end(), [](const FamilyInfo & f) { return f.id == FamilyId::tk1_3; });
  ASSERT_NE(tk13, fams.end());
  EXPECT_EQ(tk13->constraints, "|λc| > 1");
  for (const FamilyInfo & f : fams) {
    EXPECT_NE(std::find(f.variants.begin(), f.variants.end(), Variant::corrected), f.variants.end());
    EXPECT_NE(std::find(f.variants.begin(), f.variants.end(), Variant::printed), f.variants.end());
  }
}

TEST(Families, ParseNames)
{
  for (FamilyId f : all_families) EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_EQ(parse_family("tk1_3"), FamilyId::tk1_3);
  EXPECT_THROW(parse_family("TK5"), std::invalid_argument);
  EXPECT_EQ(parse_variant("Printed"), Variant::printed);
  EXPECT_THROW(parse_variant("both"), std::invalid_argument);
}

TEST(Validate, Constraints)
{
  EXPECT_THROW(validate(make(FamilyId::tk1_3, Variant::printed, {1, 1, 1, 0, 0}, 0.5)), DomainViolation);
  EXPECT_THROW(validate(make(FamilyId::tk1_3, Variant::printed, {1, 1, 1, 0, 0})), DomainViolation);
  EXPECT_NO_THROW(validate(make(FamilyId::tk1_3, Variant::printed, {1, 1, 1, 0, 0}, -1.5)));
  EXPECT_THROW(validate(make(FamilyId::geo_ii, Variant::corrected, {1, 1, 1, 0, 0}, 0.0)), DomainViolation);
  EXPECT_THROW(validate(make(FamilyId::tk1_1, Variant::corrected, {}, 3.0)), DomainViolation);
  EXPECT_NO_THROW(validate(make(FamilyId::tk1_1, Variant::corrected, {}, 0.5, 2.0)));
  EXPECT_THROW(validate(make(FamilyId::tk3, Variant::corrected, {0.25, 0, 0, 0, 0})), DomainViolation);
  EXPECT_THROW(validate(make(FamilyId::geo_i, Variant::corrected, {std::nan(""), 0, 0, 0, 0})), DomainViolation);
  ClosedFormSpec bad = make(FamilyId::tk4, Variant::corrected, {1, 0, 0, 0, 0});
  bad.branch = 0;
  EXPECT_THROW(validate(bad), DomainViolation);
  EXPECT_THROW(eval(make(FamilyId::geo_i, Variant::corrected, {}), std::nan("")), DomainViolation);
}

TEST(Eval, PrintedTk11Examples)
{
  const ClosedFormSpec s = make(FamilyId::tk1_1, Variant::printed, {1, 1, 1, 0, 0});
  EXPECT_LT(dist(eval(s, 0.0), {1, 0, 0}), 1e-15);
  EXPECT_LT(dist(eval(s, 1.0), {2, 0, 7.0 / 6.0}), 1e-14);
}

TEST(Eval, PrintedTk4Pole)
{
  const ClosedFormSpec s = make(FamilyId::tk4, Variant::printed, {1, 0, 0, 0, 0});
  ASSERT_TRUE(pole(s).has_value());
  EXPECT_NEAR(*pole(s), 1.0 / (2.0 / 3.0), 1e-15);
  EXPECT_NO_THROW(eval(s, 1.0));
  EXPECT_THROW(eval(s, 1.6), DomainViolation);
  const TimeDomain d = natural_domain(s);
  EXPECT_LT(d.t_max, *pole(s));
  EXPECT_FALSE(pole(make(FamilyId::tk4, Variant::corrected, {1, 0, 0, 0, 0})).has_value());
}

TEST(Eval, CorrectedGeoIIsAffineWithQuadraticZ)
{
  const ClosedFormSpec s = make(FamilyId::geo_i, Variant::corrected, {2, 1, 3, -1, 4});
  const PointH3 p = eval(s, 1.0);
  EXPECT_NEAR(p.x, 3.0, 1e-15);
  EXPECT_NEAR(p.y, 2.0, 1e-15);
  EXPECT_NEAR(p.z, -3.0 - 3.0 + 4.0, 1e-14);
}

TEST(InitialState, ConstantCurve)
{
  const ClosedFormSpec s = make(FamilyId::geo_i, Variant::corrected, {0, 2, 0, 5, 1});
  for (double t0 : {-3.0, 0.0, 7.5}) {
    const State st = to_initial_state(s, t0);
    EXPECT_EQ(st.vx, 0.0);
    EXPECT_EQ(st.vy, 0.0);
    EXPECT_EQ(st.vz, 0.0);
  }
}

TEST(InitialState, PrintedTk11AtZero)
{
  // x' = c1, y' = c3, z' = 1/λ − c2c3
  const State st = to_initial_state(make(FamilyId::tk1_1, Variant::printed, {1, 1, 1, 0, 0}), 0.0);
  EXPECT_NEAR(st.vx, 1.0, 1e-9);
  EXPECT_NEAR(st.vy, 1.0, 1e-9);
  EXPECT_NEAR(st.vz, 0.0, 1e-9);
}

TEST(InitialState, MatchesAnalyticDerivativeOfGeoII)
{
  test::Random rnd;
  for (int n = 0; n < 20; ++n) {
    const double l = rnd.uniform(0.5, 2.0);
    const double c = rnd.uniform(0.3, 1.5);
    const std::array<double, 5> k{rnd.uniform(-1, 1), rnd.uniform(-1, 1), rnd.uniform(-1, 1), rnd.uniform(-1, 1), 0};
    const ClosedFormSpec s = make(FamilyId::geo_ii, Variant::printed, k, c, l);
    const double t = rnd.uniform(-1, 1);
    const double ep = std::exp(c * l * t), em = std::exp(-c * l * t);
    const double c1 = k[0], c2 = k[1], c3 = k[2];
    const double vx = -c1 * l * ep + c2 * l * em;
    const double vy = c1 * ep + c2 * em;
    const double vz = (2 * c1 * c2 + c * c) / c - c3 * (c1 * ep + c2 * em) -
                      (c1 * c1 - c2 * c2) / c * std::exp(-2 * c * l * t);
    const State st = to_initial_state(s, t);
    const double scale = std::max({1.0, std::abs(vx), std::abs(vy), std::abs(vz)});
    EXPECT_NEAR(st.vx, vx, 1e-9 * scale);
    EXPECT_NEAR(st.vy, vy, 1e-9 * scale);
    EXPECT_NEAR(st.vz, vz, 1e-9 * scale);
  }
}

TEST(ReducedS1, PrintedTk11SatisfiesIt)
{
  const ClosedFormSpec s = make(FamilyId::tk1_1, Variant::printed, {1, 1, 1, 0, 0});
  const ModelParams p(1.0);
  for (int i = 0; i < 100; ++i) {
    const double t = 0.02 * i;
    auto pos = [&](double u) { return as_vec(eval(s, u)); };
    const Vec3 v = numdiff::derivative(pos, t);
    const Vec3 a = numdiff::second_derivative(pos, t, 2e-3);
    const auto r = printed::reduced_s1(p, 1.0, v[0], v[1], a[0], a[1]);
    EXPECT_LT(std::abs(r.y_eq), 1e-8);
    EXPECT_LT(std::abs(r.x_eq), 1e-8);
  }
}

TEST(ReducedS1, PrintedTk13ViolatesIt)
{
  // The printed y component has the wrong sign relative to x; the same
  // curve with y mirrored satisfies the reduced equations.
  const double c = std::sqrt(2.0);
  const ClosedFormSpec s = make(FamilyId::tk1_3, Variant::printed, {1, 1, 1, 0, 0}, c);
  const ModelParams p(1.0);
  double printed_worst = 0.0, mirrored_worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double t = 0.02 * i;
    for (double sign : {1.0, -1.0}) {
      auto pos = [&](double u) {
        const PointH3 q = eval(s, u);
        return Vec3{q.x, sign * q.y, q.z};
      };
      const Vec3 v = numdiff::derivative(pos, t);
      const Vec3 a = numdiff::second_derivative(pos, t, 2e-3);
      const auto r = printed::reduced_s1(p, c, v[0], v[1], a[0], a[1]);
      const double worst = std::max(std::abs(r.y_eq), std::abs(r.x_eq));
      (sign > 0 ? printed_worst : mirrored_worst) = std::max(sign > 0 ? printed_worst : mirrored_worst, worst);
    }
  }
  EXPECT_GT(printed_worst, 1e-2);
  EXPECT_LT(mirrored_worst, 1e-7);
}

TEST(ReducedS2, PrintedTk2YSign)
{
  const ClosedFormSpec printed = make(FamilyId::tk2, Variant::printed, {2, 1, 0, 0, 0});
  const ClosedFormSpec corrected = make(FamilyId::tk2, Variant::corrected, {2, 1, 0, 0, 0});
  const ModelParams p(1.0);
  double pw = 0.0, cw = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double t = 0.04 * i;
    const State sp = to_initial_state(printed, t);
    const State sc = to_initial_state(corrected, t);
    pw = std::max(pw, std::abs(printed::reduced_s2_y(p, sp.x, sp.vy)));
    cw = std::max(cw, std::abs(printed::reduced_s2_y(p, sc.x, sc.vy)));
  }
  EXPECT_GT(pw, 1.0);
  EXPECT_LT(cw, 1e-8);
}

TEST(Corrected, Tk2MatchesInitialData)
{
  // x(0) = c1, x'(0) = −c2
  for (double c1 : {0.5, 2.0, -1.0}) {
    for (double c2 : {0.0, 1.0, -0.7}) {
      const State s = to_initial_state(make(FamilyId::tk2, Variant::corrected, {c1, c2, 0.3, -0.2, 0}), 0.0);
      EXPECT_NEAR(s.x, c1, 1e-12);
      EXPECT_NEAR(s.vx, -c2, 1e-8);
      EXPECT_NEAR(s.y, 0.3, 1e-12);
      EXPECT_NEAR(s.z, -0.2, 1e-12);
    }
  }
}

TEST(Corrected, Tk4BranchesAreDistinctCircles)
{
  ClosedFormSpec a = make(FamilyId::tk4, Variant::corrected, {1, 0, 0, 0, 0});
  ClosedFormSpec b = a;
  b.branch = -1;
  const PointH3 pa = eval(a, 0.7), pb = eval(b, 0.7);
  EXPECT_NEAR(pa.x * pa.x + pa.y * pa.y, 1.0, 1e-14);
  EXPECT_NEAR(pb.x * pb.x + pb.y * pb.y, 1.0, 1e-14);
  EXPECT_GT(dist(pa, pb), 1e-3);
}

TEST(Corrected, Tk12IsAffineInXY)
{
  const ClosedFormSpec s = make(FamilyId::tk1_2, Variant::corrected, {1, 2, 3, 4, 5}, std::nullopt, 2.0);
  const PointH3 a = eval(s, 0.0), b = eval(s, 1.0), c = eval(s, 2.0);
  EXPECT_NEAR(c.x - b.x, b.x - a.x, 1e-14);
  EXPECT_NEAR(c.y - b.y, b.y - a.y, 1e-14);
  EXPECT_EQ(effective_c(s), -0.5);
}

TEST(SystemFor, Mapping)
{
  EXPECT_TRUE(system_for(FamilyId::geo_ii).is_geodesic());
  EXPECT_EQ(system_for(FamilyId::tk1_3).field().tag, KillingField::k1);
  EXPECT_EQ(system_for(FamilyId::tk3).field().tag, KillingField::k3);
  EXPECT_EQ(system_for(FamilyId::tk4).field().tag, KillingField::k4);
}
