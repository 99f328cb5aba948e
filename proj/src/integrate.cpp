#include "h3mag/integrate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <limits>

namespace h3mag {

std::string to_string(Method m)
{
  return m == Method::fixed_rk4 ? "fixed-rk4" : "embedded-45";
}

Method parse_method(const std::string & name)
{
  if (name == "fixed-rk4" || name == "rk4") return Method::fixed_rk4;
  if (name == "embedded-45" || name == "dopri5") return Method::embedded_45;
  throw std::invalid_argument("unknown method '" + name + "' (expected fixed-rk4 or embedded-45)");
}

std::string to_string(IntegrationErrorKind k)
{
  switch (k) {
    case IntegrationErrorKind::step_underflow: return "StepUnderflow";
    case IntegrationErrorKind::non_finite: return "NonFinite";
    case IntegrationErrorKind::max_steps_exceeded: return "MaxStepsExceeded";
    case IntegrationErrorKind::invalid_config: return "InvalidConfig";
  }
  return "Unknown";
}

void IntegratorConfig::validate() const
{
  auto finite_positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!std::isfinite(t_start) || !std::isfinite(t_end)) throw std::invalid_argument("t_start and t_end must be finite");
  if (t_end == t_start) throw std::invalid_argument("t_end must differ from t_start");
  if (!finite_positive(sample_every)) throw std::invalid_argument("sample_every must be positive");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  if (method == Method::fixed_rk4 && !finite_positive(step)) {
    throw std::invalid_argument("step must be positive");
  }
  if (method == Method::embedded_45) {
    if (!std::isfinite(rel_tol) || rel_tol < 1e-14) throw std::invalid_argument("rel_tol must be >= 1e-14");
    if (!std::isfinite(abs_tol) || abs_tol < 1e-14) throw std::invalid_argument("abs_tol must be >= 1e-14");
  }
}

std::vector<double> sample_times(const IntegratorConfig & cfg)
{
  const double span = std::abs(cfg.t_end - cfg.t_start);
  const double dir = cfg.t_end > cfg.t_start ? 1.0 : -1.0;
  const double ratio = span / cfg.sample_every;
  auto intervals = static_cast<std::size_t>(std::ceil(ratio - 1e-9 * std::max(1.0, ratio)));
  intervals = std::max<std::size_t>(intervals, 1);
  std::vector<double> out;
  out.reserve(intervals + 1);
  for (std::size_t k = 0; k < intervals; ++k) {
    out.push_back(cfg.t_start + dir * static_cast<double>(k) * cfg.sample_every);
  }
  out.push_back(cfg.t_end);
  return out;
}

namespace {

using Vec6 = std::array<double, 6>;

Vec6 pack(const State & s) { return {s.x, s.y, s.z, s.vx, s.vy, s.vz}; }
State unpack(const Vec6 & v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }

Vec6 axpy(const Vec6 & y, double h, std::initializer_list<std::pair<double, const Vec6 *>> terms)
{
  Vec6 out = y;
  for (const auto & [coef, k] : terms) {
    if (coef == 0.0) continue;
    for (std::size_t i = 0; i < 6; ++i) out[i] += h * coef * (*k)[i];
  }
  return out;
}

bool all_finite(const Vec6 & v)
{
  return std::all_of(v.begin(), v.end(), [](double c) { return std::isfinite(c); });
}

class Stepper
{
public:
  Stepper(const ModelParams & p, const SystemKind & sys, const IntegratorConfig & cfg)
  : p_(p), sys_(sys), cfg_(cfg), span_(std::abs(cfg.t_end - cfg.t_start)),
    dir_(cfg.t_end > cfg.t_start ? 1.0 : -1.0)
  {
  }

  Vec6 rhs(const Vec6 & y) const
  {
    const State s = unpack(y);
    const Acceleration a = lorentz_rhs(p_, sys_, s);
    return {s.vx, s.vy, s.vz, a.ax, a.ay, a.az};
  }

  /// Advances (t, y) exactly to target.
  void advance(double & t, Vec6 & y, double target)
  {
    if (cfg_.method == Method::fixed_rk4) {
      advance_rk4(t, y, target);
    } else {
      advance_dp45(t, y, target);
    }
  }

  std::size_t steps() const { return steps_; }
  std::size_t rejected() const { return rejected_; }

private:
  // Gaps below this are rounding noise in the sample grid; snap instead of stepping.
  double snap_tolerance() const { return 1e-14 * std::max(1.0, span_); }

  void count_step(double t)
  {
    if (steps_ + rejected_ >= cfg_.max_steps) {
      throw IntegrationError(IntegrationErrorKind::max_steps_exceeded, "maximum number of steps exceeded", t);
    }
  }

  void check_finite(const Vec6 & y, double t) const
  {
    if (!all_finite(y)) {
      throw IntegrationError(IntegrationErrorKind::non_finite, "non-finite state encountered", t);
    }
  }

  void advance_rk4(double & t, Vec6 & y, double target)
  {
    while (std::abs(target - t) > snap_tolerance()) {
      const double remaining = target - t;
      double h = dir_ * cfg_.step;
      bool last = false;
      if (std::abs(h) >= std::abs(remaining) - snap_tolerance()) {
        h = remaining;
        last = true;
      }
      count_step(t);
      const Vec6 k1 = rhs(y);
      const Vec6 k2 = rhs(axpy(y, 0.5 * h, {{1.0, &k1}}));
      const Vec6 k3 = rhs(axpy(y, 0.5 * h, {{1.0, &k2}}));
      const Vec6 k4 = rhs(axpy(y, h, {{1.0, &k3}}));
      y = axpy(y, h / 6.0, {{1.0, &k1}, {2.0, &k2}, {2.0, &k3}, {1.0, &k4}});
      t = last ? target : t + h;
      ++steps_;
      check_finite(y, t);
    }
    t = target;
  }

  double error_norm(const Vec6 & y0, const Vec6 & y1, const Vec6 & err) const
  {
    double acc = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      const double sc = cfg_.abs_tol + cfg_.rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
      const double r = err[i] / sc;
      acc += r * r;
    }
    return std::sqrt(acc / 6.0);
  }

  double weighted_norm(const Vec6 & v, const Vec6 & scale_from) const
  {
    double acc = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      const double sc = cfg_.abs_tol + cfg_.rel_tol * std::abs(scale_from[i]);
      acc += (v[i] / sc) * (v[i] / sc);
    }
    return std::sqrt(acc / 6.0);
  }

  // Initial step from the magnitude of the right-hand side and one trial
  // Euler step (Hairer, Nørsett & Wanner).
  double initial_step(const Vec6 & y0, const Vec6 & f0) const
  {
    const double d0 = weighted_norm(y0, y0);
    const double d1 = weighted_norm(f0, y0);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, span_);
    const Vec6 y1 = axpy(y0, dir_ * h0, {{1.0, &f0}});
    const Vec6 f1 = rhs(y1);
    Vec6 df;
    for (std::size_t i = 0; i < 6; ++i) df[i] = f1[i] - f0[i];
    const double d2 = weighted_norm(df, y0) / h0;
    const double dmax = std::max(d1, d2);
    const double h1 = dmax <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dmax, 0.2);
    return std::min({100.0 * h0, h1, span_});
  }

  void advance_dp45(double & t, Vec6 & y, double target)
  {
    // Dormand–Prince 5(4) tableau.
    static constexpr double a21 = 1.0 / 5.0;
    static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
    static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                            a54 = -212.0 / 729.0;
    static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                            a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
    static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                            b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
    static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                            e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

    if (!have_fsal_) {
      k1_ = rhs(y);
      have_fsal_ = true;
    }
    if (h_ == 0.0) {
      h_ = initial_step(y, k1_);
    }

    bool last_rejected = false;
    while (std::abs(target - t) > snap_tolerance()) {
      if (h_ < 1e-13 * span_) {
        throw IntegrationError(IntegrationErrorKind::step_underflow, "adaptive step size underflow", t);
      }
      const double remaining = target - t;
      double h = dir_ * h_;
      bool clipped = false;
      if (std::abs(h) >= std::abs(remaining)) {
        h = remaining;
        clipped = true;
      }
      count_step(t);

      const Vec6 k2 = rhs(axpy(y, h, {{a21, &k1_}}));
      const Vec6 k3 = rhs(axpy(y, h, {{a31, &k1_}, {a32, &k2}}));
      const Vec6 k4 = rhs(axpy(y, h, {{a41, &k1_}, {a42, &k2}, {a43, &k3}}));
      const Vec6 k5 = rhs(axpy(y, h, {{a51, &k1_}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
      const Vec6 k6 = rhs(axpy(y, h, {{a61, &k1_}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
      const Vec6 y_new = axpy(y, h, {{b1, &k1_}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
      const Vec6 k7 = rhs(y_new);
      Vec6 err{};
      for (std::size_t i = 0; i < 6; ++i) {
        err[i] = h * (e1 * k1_[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      }

      double en = error_norm(y, y_new, err);
      if (!std::isfinite(en)) {
        // Treated as a rejection; the step shrinks until it underflows.
        en = std::numeric_limits<double>::max();
      }

      if (en <= 1.0) {
        double fac = en == 0.0 ? kMaxGrowth
                               : 0.9 * std::pow(en, -0.7 / 5.0) * std::pow(err_prev_, 0.4 / 5.0);
        fac = std::clamp(fac, kMinGrowth, last_rejected ? 1.0 : kMaxGrowth);
        err_prev_ = std::max(en, 1e-4);
        y = y_new;
        k1_ = k7;
        t = clipped ? target : t + h;
        ++steps_;
        check_finite(y, t);
        // A clipped step says nothing about the natural step size.
        if (!clipped) {
          h_ = std::abs(h) * fac;
        }
        last_rejected = false;
      } else {
        const double fac = std::max(kMinGrowth, 0.9 * std::pow(en, -0.2));
        h_ = std::abs(h) * fac;
        ++rejected_;
        last_rejected = true;
      }
    }
    t = target;
  }

  static constexpr double kMinGrowth = 0.2;
  static constexpr double kMaxGrowth = 5.0;

  const ModelParams & p_;
  const SystemKind & sys_;
  const IntegratorConfig & cfg_;
  double span_;
  double dir_;
  double h_ = 0.0;
  double err_prev_ = 1e-4;
  Vec6 k1_{};
  bool have_fsal_ = false;
  std::size_t steps_ = 0;
  std::size_t rejected_ = 0;
};

}  // namespace

Trajectory integrate(const ModelParams & p, const SystemKind & sys, const State & s0, const IntegratorConfig & cfg)
{
  try {
    cfg.validate();
  } catch (const std::invalid_argument & e) {
    throw IntegrationError(IntegrationErrorKind::invalid_config, e.what(), cfg.t_start);
  }
  Vec6 y = pack(s0);
  if (!all_finite(y)) {
    throw IntegrationError(IntegrationErrorKind::non_finite, "initial state is not finite", cfg.t_start);
  }

  Trajectory traj{p, sys, {}, {}};
  const std::vector<double> grid = sample_times(cfg);
  traj.samples.reserve(grid.size());

  const bool with_fi = has_first_integral(sys);
  const double s2_0 = speed_squared(p, s0);
  const double fi_0 = with_fi ? first_integral(p, sys, s0) : 0.0;

  Stepper stepper(p, sys, cfg);
  double t = cfg.t_start;
  double s2_drift = 0.0;
  double fi_drift = 0.0;
  for (double target : grid) {
    stepper.advance(t, y, target);
    const State s = unpack(y);
    traj.samples.push_back({target, s});
    s2_drift = std::max(s2_drift, std::abs(speed_squared(p, s) - s2_0));
    if (with_fi) {
      fi_drift = std::max(fi_drift, std::abs(first_integral(p, sys, s) - fi_0));
    }
  }
  traj.diagnostics.max_speed2_drift = s2_drift;
  traj.diagnostics.max_first_integral_drift = with_fi ? fi_drift : std::numeric_limits<double>::quiet_NaN();
  traj.diagnostics.steps = stepper.steps();
  traj.diagnostics.rejected = stepper.rejected();
  return traj;
}

std::vector<SweepOutcome> sweep(
  const std::vector<ModelParams> & params, const SystemKind & sys, const std::vector<State> & initial,
  const IntegratorConfig & cfg)
{
  if (params.empty() || initial.empty()) {
    throw std::invalid_argument("sweep needs non-empty parameter and state lists");
  }
  if (params.size() != 1 && params.size() != initial.size()) {
    throw std::invalid_argument("sweep parameter list must have one entry or one per initial state");
  }
  std::vector<std::future<SweepOutcome>> jobs;
  jobs.reserve(initial.size());
  for (std::size_t i = 0; i < initial.size(); ++i) {
    const ModelParams & p = params.size() == 1 ? params.front() : params[i];
    jobs.push_back(std::async(std::launch::async, [&p, &sys, &s0 = initial[i], &cfg]() -> SweepOutcome {
      try {
        return integrate(p, sys, s0, cfg);
      } catch (const IntegrationError & e) {
        return e;
      }
    }));
  }
  std::vector<SweepOutcome> out;
  out.reserve(jobs.size());
  for (auto & j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace h3mag
