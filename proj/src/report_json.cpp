#include "h3mag/report_json.hpp"

#include <cmath>

namespace h3mag {

namespace {

// NaN and infinities have no JSON encoding; they become null.
nlohmann::json number(double v)
{
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

nlohmann::json to_json(const ClosedFormSpec & spec)
{
  nlohmann::json j;
  j["family"] = to_string(spec.family);
  j["variant"] = to_string(spec.variant);
  j["lambda"] = spec.lambda;
  j["c"] = spec.c ? nlohmann::json(*spec.c) : nlohmann::json(nullptr);
  j["c_effective"] = number(effective_c(spec));
  j["constants"] = spec.k;
  j["branch"] = spec.branch;
  return j;
}

nlohmann::json to_json(const SystemResidual & r)
{
  return {
    {"max_abs", {number(r.max_abs[0]), number(r.max_abs[1]), number(r.max_abs[2])}},
    {"first_integral_drift", number(r.first_integral_drift)},
    {"speed2_drift", number(r.speed2_drift)},
    {"worst", number(r.worst())}};
}

nlohmann::json to_json(const ResidualReport & r)
{
  return {
    {"schema_version", report_schema_version},
    {"kind", "residual_report"},
    {"spec", to_json(r.spec)},
    {"system", system_for(r.spec.family).name()},
    {"grid", {{"t_min", r.grid.t_min}, {"t_max", r.grid.t_max}, {"n", r.grid.n}}},
    {"tolerance", r.tolerance},
    {"fd_step", r.fd_step},
    {"lorentz", to_json(r.lorentz)},
    {"printed_system", to_json(r.printed_system)},
    {"classification", to_string(r.classification)},
    {"notes", r.notes}};
}

nlohmann::json to_json(const Comparison & c)
{
  return {{"max_deviation", number(c.max_deviation)}, {"t_at_max", c.t_at_max}};
}

nlohmann::json to_json(const StructureReport & r, double tol)
{
  const ContactDefects & c = r.contact;
  return {
    {"schema_version", report_schema_version},
    {"kind", "structure_report"},
    {"lambda", r.lambda},
    {"samples", r.samples},
    {"seed", r.seed},
    {"tolerance", tol},
    {"pass", r.passes(tol)},
    {"orthonormality", r.orthonormality},
    {"connection_vs_christoffel", r.connection_vs_christoffel},
    {"christoffel_symmetry", r.christoffel_symmetry},
    {"torsion", r.torsion},
    {"bracket", r.bracket},
    {"covariant_accel", r.covariant_accel},
    {"killing", {{"k1", r.killing[0]}, {"k2", r.killing[1]}, {"k3", r.killing[2]}, {"k4", r.killing[3]}}},
    {"negative_control", r.negative_control},
    {"cross_vs_printed",
     {{"k1", r.cross_vs_printed[0]},
      {"k2", r.cross_vs_printed[1]},
      {"k3", r.cross_vs_printed[2]},
      {"k4_printed_frame", r.cross_vs_printed[3]}}},
    {"contact",
     {{"compatibility_minus", c.compatibility_minus},
      {"d_eta_fit_defect", c.d_eta_fit_defect},
      {"d_eta_closedness", c.d_eta_closedness},
      {"phi_squared", c.phi_squared},
      {"phi_skew", c.phi_skew}}},
    {"open_questions",
     {{"killing_k4_printed_frame", r.killing_k4_printed_frame},
      {"cross_k4_coordinate_vs_printed", r.cross_k4_coordinate_vs_printed},
      {"compatibility_plus", c.compatibility_plus},
      {"d_eta_scale", c.d_eta_scale},
      {"covariant_accel_printed", r.covariant_accel_printed}}}};
}

nlohmann::json to_json(const LedgerEntry & e)
{
  nlohmann::json j{
    {"id", e.id},
    {"location", e.location},
    {"claim", e.claim},
    {"verdict", to_string(e.verdict)},
    {"open_question", e.open_question},
    {"measure", e.measure},
    {"measured", number(e.measured)},
    {"tolerance", e.tolerance},
    {"corrected_form", e.corrected_form},
    {"witness_pass", e.witness_pass},
    {"notes", e.notes}};
  j["printed_system_measured"] = e.printed_system_measured ? number(*e.printed_system_measured) : nullptr;
  j["witness_measured"] = e.witness_measured ? number(*e.witness_measured) : nullptr;
  return j;
}

nlohmann::json ledger_document(const std::vector<LedgerEntry> & entries, double tol)
{
  nlohmann::json list = nlohmann::json::array();
  for (const LedgerEntry & e : entries) list.push_back(to_json(e));
  return {
    {"schema_version", report_schema_version}, {"kind", "errata_ledger"}, {"tolerance", tol}, {"entries", list}};
}

}  // namespace h3mag
