#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "h3mag/closedform.hpp"
#include "h3mag/contact.hpp"
#include "h3mag/integrate.hpp"

namespace h3mag {

inline constexpr double default_tolerance = 1e-6;
/// Base step of the Richardson second-derivative stencil (the fine level is half of it).
inline constexpr double default_fd_step = 2e-3;

struct Grid
{
  double t_min = 0.0;
  double t_max = 2.0;
  int n = 201;

  std::vector<double> times() const;
};

/// The default 201-point grid on the family's natural domain.
Grid default_grid(const ClosedFormSpec & spec);

enum class Classification { pass, fail };
std::string to_string(Classification c);

/// Residual maxima of a curve against one second-order system.
struct SystemResidual
{
  /// max |x''_fd − x''|, |y''_fd − y''|, |z''_fd − z''| over the grid.
  std::array<double, 3> max_abs{};
  /// max |I(t) − I(t_min)|; NaN when the system has no first integral.
  double first_integral_drift = 0.0;
  /// NaN when not applicable.
  double speed2_drift = 0.0;

  double worst() const;
};

struct ResidualReport
{
  ClosedFormSpec spec;
  Grid grid;
  double tolerance = default_tolerance;
  double fd_step = default_fd_step;
  /// Against the Levi-Civita Lorentz equation of system_for(spec.family).
  SystemResidual lorentz;
  /// Against the printed (first-integral substituted) system, for comparison.
  SystemResidual printed_system;
  Classification classification = Classification::fail;
  std::string notes;
};

/// Substitutes eval(spec, ·) into the system by finite differences. The grid
/// must stay 10 finite-difference steps away from any pole; otherwise a
/// DomainViolation naming the pole is thrown.
ResidualReport ode_residual(
  const ClosedFormSpec & spec, const Grid & grid, double tol = default_tolerance,
  double fd_step = default_fd_step);
ResidualReport ode_residual(const ClosedFormSpec & spec, double tol = default_tolerance);

/// Residual of an arbitrary sampled curve against `sys`, using the same
/// stencil. `curve` must be defined on [t − fd_step, t + fd_step] for every
/// grid time. When `printed` is set the printed system is used instead of the
/// Lorentz equation, and speed2_drift is NaN (the printed systems do not
/// conserve g(t, t)).
template<typename Curve>
SystemResidual curve_residual(
  const ModelParams & p, const SystemKind & sys, Curve && curve, const Grid & grid, double fd_step,
  bool printed = false);

/// Residual of an integrated trajectory: the sampled states are
/// differentiated by the same Richardson stencil on the sample grid.
/// Requires a uniform grid with at least 5 samples.
SystemResidual trajectory_residual(const Trajectory & traj);

struct Comparison
{
  double max_deviation = 0.0;
  double t_at_max = 0.0;
};

/// Tight-tolerance Dormand–Prince settings used by compare_with_integration.
IntegratorConfig comparison_config(double t0, double t1);

/// Integrates from to_initial_state(spec, t0) with the family's system and
/// returns the largest Euclidean coordinate deviation from eval on the sample
/// grid. Integration errors propagate.
Comparison compare_with_integration(const ClosedFormSpec & spec, double t0, double t1);
Comparison compare_with_integration(const ClosedFormSpec & spec, const IntegratorConfig & cfg);
/// As above, from an explicit initial state.
Comparison compare_with_integration(const ClosedFormSpec & spec, const State & s0, const IntegratorConfig & cfg);

struct StructureReport
{
  double lambda = 1.0;
  int samples = 0;
  std::uint64_t seed = 0;

  double orthonormality = 0.0;
  double connection_vs_christoffel = 0.0;
  double christoffel_symmetry = 0.0;
  /// [e_i, e_j] numeric vs ∇_{e_i}e_j − ∇_{e_j}e_i from the table.
  double torsion = 0.0;
  /// [e_i, e_j] numeric vs [e1, e2] = λe3, [e2, e3] = [e3, e1] = 0.
  double bracket = 0.0;
  /// Frame formula for ∇_t t vs Christoffel symbols, Levi-Civita sign.
  double covariant_accel = 0.0;
  /// Same with the printed e2 sign (x''/λ + λy'w).
  double covariant_accel_printed = 0.0;

  /// Killing residuals of K1..K4 (coordinate forms).
  std::array<double, 4> killing{};
  /// Killing residual of the printed K4 frame expansion.
  double killing_k4_printed_frame = 0.0;
  /// Residual of the non-Killing control field ∂y + z∂x; expected O(1).
  double negative_control = 0.0;

  /// cross(K, t) vs the printed expansions of K1×t, K2×t, K3×t and K4×t
  /// (the last using the printed K4 frame form, which the expansion is built on).
  std::array<double, 4> cross_vs_printed{};
  /// cross(K4 from coordinates, t) vs the printed K4×t.
  double cross_k4_coordinate_vs_printed = 0.0;

  ContactDefects contact;

  /// True when every gated defect is below tol and the negative control is at
  /// least 1e-2. The open-question items (printed K4 frame, "+" compatibility,
  /// dη scale, printed covariant sign) are reported but not gated.
  bool passes(double tol = default_tolerance) const;
};

/// Deterministic for a given seed. Throws std::invalid_argument when samples < 1.
StructureReport structure_selftest(const ModelParams & p, int samples, std::uint64_t seed = 7);

enum class LedgerScope { all, corrected_only };

enum class Verdict { satisfied, violated, out_of_scope };
std::string to_string(Verdict v);

struct LedgerEntry
{
  std::string id;
  /// Descriptive location in the source text.
  std::string location;
  std::string claim;
  Verdict verdict = Verdict::satisfied;
  /// Flags the items raised as open questions.
  bool open_question = false;
  /// What `measured` is, e.g. "max Lorentz residual".
  std::string measure;
  double measured = 0.0;
  double tolerance = default_tolerance;
  /// Residual against the printed system, for family entries.
  std::optional<double> printed_system_measured;
  std::string corrected_form;
  /// Same measure evaluated on the corrected form.
  std::optional<double> witness_measured;
  bool witness_pass = false;
  std::string notes;
};

/// Lower-case family tag ("tk1_3"), used for ledger ids and file names.
std::string lowered_id(FamilyId f);

/// The standard constants used for each family in the ledger and the gallery.
ClosedFormSpec reference_spec(FamilyId f, Variant v);

/// Verdicts on the printed claims. With corrected_only, only the corrected
/// families are checked and only their failures are listed.
std::vector<LedgerEntry> errata_ledger(double tol = default_tolerance, LedgerScope scope = LedgerScope::all);

/// ode_residual for several specs, evaluated concurrently; output order
/// matches input order. Each element holds either a report or the error text.
struct BatchItem
{
  std::optional<ResidualReport> report;
  std::optional<Comparison> comparison;
  std::string error;
  bool domain_error = false;
};
std::vector<BatchItem> verify_batch(const std::vector<ClosedFormSpec> & specs, double tol, bool with_integration);

}  // namespace h3mag

#include "h3mag/verify_impl.hpp"
