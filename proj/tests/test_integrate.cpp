#include <gtest/gtest.h>

#include <cmath>

#include "h3mag/closedform.hpp"
#include "h3mag/integrate.hpp"
#include "test_util.hpp"

using namespace h3mag;

namespace {

IntegratorConfig config(Method m, double t1, double sample_every)
{
  IntegratorConfig cfg;
  cfg.method = m;
  cfg.t_end = t1;
  cfg.sample_every = sample_every;
  return cfg;
}

double state_diff(const State & a, const State & b)
{
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z), std::abs(a.vx - b.vx),
                   std::abs(a.vy - b.vy), std::abs(a.vz - b.vz)});
}

double position_diff(const State & a, const PointH3 & b)
{
  return (as_vec(a.position()) - as_vec(b)).norm();
}

const SystemKind k1 = SystemKind::magnetic({KillingField::k1});

}  // namespace

TEST(Method, ParseAndPrint)
{
  EXPECT_EQ(parse_method("rk4"), Method::fixed_rk4);
  EXPECT_EQ(parse_method("fixed-rk4"), Method::fixed_rk4);
  EXPECT_EQ(parse_method("dopri5"), Method::embedded_45);
  EXPECT_EQ(to_string(Method::embedded_45), "embedded-45");
  EXPECT_THROW(parse_method("euler"), std::invalid_argument);
}

TEST(Config, Validation)
{
  IntegratorConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.rel_tol = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.sample_every = -1.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.t_end = cfg.t_start;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.step = std::nan("");
  cfg.method = Method::fixed_rk4;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Config, SampleTimesEndExactly)
{
  IntegratorConfig cfg = config(Method::embedded_45, 1.0, 0.3);
  const std::vector<double> t = sample_times(cfg);
  ASSERT_GE(t.size(), 2u);
  EXPECT_EQ(t.front(), 0.0);
  EXPECT_EQ(t.back(), 1.0);
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_GT(t[i], t[i - 1]);
}

TEST(Integrate, GeodesicFromRestStaysPut)
{
  const State s0{1, 2, 3, 0, 0, 0};
  for (Method m : {Method::fixed_rk4, Method::embedded_45}) {
    const Trajectory tr = integrate(ModelParams(1.0), SystemKind::geodesic(), s0, config(m, 1.0, 0.1));
    for (const Sample & s : tr.samples) EXPECT_EQ(state_diff(s.state, s0), 0.0);
  }
}

TEST(Integrate, GeodesicWithZeroVerticalSpeedMatchesGeoI)
{
  ClosedFormSpec spec;
  spec.family = FamilyId::geo_i;
  spec.k = {1, 0, 1, 0, 0};
  const State s0 = to_initial_state(spec, 0.0);
  const Trajectory tr = integrate(ModelParams(1.0), SystemKind::geodesic(), s0, config(Method::embedded_45, 2.0, 0.1));
  for (const Sample & s : tr.samples) EXPECT_LT(position_diff(s.state, eval(spec, s.t)), 1e-8);
}

TEST(Integrate, K1MatchesTk13)
{
  ClosedFormSpec spec;
  spec.family = FamilyId::tk1_3;
  spec.c = std::sqrt(2.0);
  spec.k = {1, 1, 1, 0, 0};
  const State s0 = to_initial_state(spec, 0.0);
  const Trajectory tr = integrate(ModelParams(1.0), k1, s0, config(Method::embedded_45, 2.0, 0.05));
  for (const Sample & s : tr.samples) EXPECT_LT(position_diff(s.state, eval(spec, s.t)), 1e-6);
}

TEST(Integrate, SamplesOnGridAndDiagnostics)
{
  test::Random rnd;
  const Trajectory tr = integrate(ModelParams(1.0), k1, rnd.state(), config(Method::embedded_45, 1.0, 0.25));
  const std::vector<double> grid = sample_times(config(Method::embedded_45, 1.0, 0.25));
  ASSERT_EQ(tr.samples.size(), grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(tr.samples[i].t, grid[i]);
  EXPECT_GT(tr.diagnostics.steps, 0u);
  EXPECT_LT(tr.diagnostics.max_speed2_drift, 1e-8);
  EXPECT_LT(tr.diagnostics.max_first_integral_drift, 1e-8);
}

TEST(Integrate, ScaledFieldHasNoFirstIntegral)
{
  test::Random rnd;
  const Trajectory tr = integrate(
    ModelParams(1.0), SystemKind::magnetic({KillingField::k2, 2.0}), rnd.state(), config(Method::embedded_45, 0.5, 0.1));
  EXPECT_TRUE(std::isnan(tr.diagnostics.max_first_integral_drift));
  EXPECT_LT(tr.diagnostics.max_speed2_drift, 1e-8);
}

TEST(Integrate, Conservation)
{
  test::Random rnd;
  const std::vector<SystemKind> systems{
    SystemKind::geodesic(), k1, SystemKind::magnetic({KillingField::k2}), SystemKind::magnetic({KillingField::k3}),
    SystemKind::magnetic({KillingField::k4})};
  for (const SystemKind & sys : systems) {
    for (int n = 0; n < 3; ++n) {
      const Trajectory tr = integrate(ModelParams(1.0), sys, rnd.state(0.5), config(Method::embedded_45, 5.0, 0.1));
      EXPECT_LT(tr.diagnostics.max_speed2_drift, 1e-8) << sys.name();
      EXPECT_LT(tr.diagnostics.max_first_integral_drift, 1e-8) << sys.name();
    }
  }
}

TEST(Integrate, TimeReversal)
{
  test::Random rnd;
  const ModelParams p(1.0);
  const State s0 = rnd.state();
  IntegratorConfig fwd = config(Method::fixed_rk4, 1.0, 0.5);
  const State end = integrate(p, k1, s0, fwd).samples.back().state;
  IntegratorConfig back = fwd;
  back.t_start = 1.0;
  back.t_end = 0.0;
  const State ret = integrate(p, k1, end, back).samples.back().state;
  EXPECT_LT(state_diff(ret, s0), 1e-7);
}

TEST(Integrate, Rk4Order)
{
  test::Random rnd;
  const ModelParams p(1.0);
  const State s0 = rnd.state();
  IntegratorConfig ref = config(Method::embedded_45, 1.0, 1.0);
  ref.rel_tol = 1e-13;
  ref.abs_tol = 1e-14;
  const State exact = integrate(p, k1, s0, ref).samples.back().state;
  std::vector<double> err;
  for (double h : {1e-2, 5e-3, 2.5e-3}) {
    IntegratorConfig cfg = config(Method::fixed_rk4, 1.0, 1.0);
    cfg.step = h;
    err.push_back(state_diff(integrate(p, k1, s0, cfg).samples.back().state, exact));
  }
  EXPECT_GE(std::log2(err[0] / err[1]), 3.7);
  EXPECT_GE(std::log2(err[1] / err[2]), 3.7);
}

TEST(Integrate, EmbeddedRespectsTolerance)
{
  test::Random rnd;
  const ModelParams p(1.0);
  const State s0 = rnd.state();
  IntegratorConfig cfg = config(Method::embedded_45, 2.0, 2.0);
  cfg.rel_tol = 1e-8;
  cfg.abs_tol = 1e-10;
  IntegratorConfig tight = cfg;
  tight.rel_tol = 1e-9;
  tight.abs_tol = 1e-11;
  const State a = integrate(p, k1, s0, cfg).samples.back().state;
  const State b = integrate(p, k1, s0, tight).samples.back().state;
  const double scale = std::max(1.0, as_vec(a.position()).norm());
  EXPECT_LT(state_diff(a, b), 100 * cfg.rel_tol * scale);
}

TEST(Integrate, MaxStepsExceeded)
{
  IntegratorConfig cfg = config(Method::fixed_rk4, 1.0, 1.0);
  cfg.max_steps = 10;
  try {
    integrate(ModelParams(1.0), k1, State{0, 0, 0, 1, 1, 1}, cfg);
    FAIL() << "expected IntegrationError";
  } catch (const IntegrationError & e) {
    EXPECT_EQ(e.kind(), IntegrationErrorKind::max_steps_exceeded);
  }
}

TEST(Integrate, NonFiniteInitialState)
{
  try {
    integrate(ModelParams(1.0), k1, State{std::nan(""), 0, 0, 1, 0, 0}, config(Method::embedded_45, 1.0, 0.5));
    FAIL() << "expected IntegrationError";
  } catch (const IntegrationError & e) {
    EXPECT_EQ(e.kind(), IntegrationErrorKind::non_finite);
  }
}

TEST(Sweep, SingletonEqualsIntegrate)
{
  test::Random rnd;
  const State s0 = rnd.state();
  const IntegratorConfig cfg = config(Method::embedded_45, 1.0, 0.1);
  const auto out = sweep({ModelParams(1.0)}, k1, {s0}, cfg);
  ASSERT_EQ(out.size(), 1u);
  const Trajectory direct = integrate(ModelParams(1.0), k1, s0, cfg);
  const auto & tr = std::get<Trajectory>(out[0]);
  ASSERT_EQ(tr.samples.size(), direct.samples.size());
  for (std::size_t i = 0; i < tr.samples.size(); ++i) EXPECT_EQ(state_diff(tr.samples[i].state, direct.samples[i].state), 0.0);
}

TEST(Sweep, PermutationAndErrors)
{
  test::Random rnd;
  std::vector<State> states;
  for (int n = 0; n < 10; ++n) states.push_back(rnd.state());
  states[4] = State{std::nan(""), 0, 0, 0, 0, 0};
  const IntegratorConfig cfg = config(Method::embedded_45, 1.0, 0.5);
  const auto fwd = sweep({ModelParams(1.0)}, SystemKind::geodesic(), states, cfg);
  std::vector<State> rev(states.rbegin(), states.rend());
  const auto bwd = sweep({ModelParams(1.0)}, SystemKind::geodesic(), rev, cfg);
  ASSERT_EQ(fwd.size(), 10u);
  for (std::size_t i = 0; i < 10; ++i) {
    const auto & a = fwd[i];
    const auto & b = bwd[9 - i];
    ASSERT_EQ(a.index(), b.index());
    if (i == 4) {
      EXPECT_TRUE(std::holds_alternative<IntegrationError>(a));
      continue;
    }
    const auto & ta = std::get<Trajectory>(a);
    const auto & tb = std::get<Trajectory>(b);
    EXPECT_EQ(state_diff(ta.samples.back().state, tb.samples.back().state), 0.0);
    EXPECT_LT(ta.diagnostics.max_speed2_drift, 1e-8);
  }
}
