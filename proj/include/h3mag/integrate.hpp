#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "h3mag/dynamics.hpp"

namespace h3mag {

enum class Method { fixed_rk4, embedded_45 };

std::string to_string(Method m);
/// Accepts "fixed-rk4"/"rk4" and "embedded-45"/"dopri5". Throws std::invalid_argument.
Method parse_method(const std::string & name);

struct IntegratorConfig
{
  Method method = Method::embedded_45;
  double step = 1e-3;  ///< fixed-rk4 only
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double t_start = 0.0;
  double t_end = 1.0;
  std::size_t max_steps = 1'000'000;
  double sample_every = 0.01;

  /// Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
};

/// The uniform output grid t_start, t_start ± sample_every, ..., ending exactly at t_end.
std::vector<double> sample_times(const IntegratorConfig & cfg);

struct Sample
{
  double t = 0.0;
  State state;
};

struct Diagnostics
{
  double max_speed2_drift = 0.0;
  /// NaN when the system has no first integral (scaled Killing field).
  double max_first_integral_drift = 0.0;
  std::size_t steps = 0;
  std::size_t rejected = 0;
};

struct Trajectory
{
  ModelParams params;
  SystemKind system;
  std::vector<Sample> samples;
  Diagnostics diagnostics;
};

enum class IntegrationErrorKind { step_underflow, non_finite, max_steps_exceeded, invalid_config };

std::string to_string(IntegrationErrorKind k);

class IntegrationError : public std::runtime_error
{
public:
  IntegrationError(IntegrationErrorKind kind, const std::string & what, double t)
  : std::runtime_error(what), kind_(kind), t_(t)
  {
  }

  IntegrationErrorKind kind() const noexcept { return kind_; }
  /// Time reached when the failure was detected.
  double time() const noexcept { return t_; }

private:
  IntegrationErrorKind kind_;
  double t_;
};

/// Integrates the second-order system as a six-dimensional first-order ODE.
/// Samples are produced by stepping exactly onto each grid time.
/// Throws IntegrationError.
Trajectory integrate(const ModelParams & p, const SystemKind & sys, const State & s0, const IntegratorConfig & cfg);

using SweepOutcome = std::variant<Trajectory, IntegrationError>;

/// Runs integrate for each (params[i], initial[i]) concurrently. A single
/// params entry is broadcast against every initial state. Failures are
/// reported per run; the output order matches the input order.
std::vector<SweepOutcome> sweep(
  const std::vector<ModelParams> & params, const SystemKind & sys, const std::vector<State> & initial,
  const IntegratorConfig & cfg);

}  // namespace h3mag
