#pragma once

#include <vector>

#include <json.hpp>

#include "h3mag/verify.hpp"

// JSON encodings of the verification reports. Layout in docs/report_schema.md.
namespace h3mag {

inline constexpr int report_schema_version = 1;

nlohmann::json to_json(const ClosedFormSpec & spec);
nlohmann::json to_json(const SystemResidual & r);
nlohmann::json to_json(const ResidualReport & r);
nlohmann::json to_json(const Comparison & c);
nlohmann::json to_json(const StructureReport & r, double tol);
nlohmann::json to_json(const LedgerEntry & e);

/// {"schema_version", "kind": "errata_ledger", "tolerance", "entries": [...]}
nlohmann::json ledger_document(const std::vector<LedgerEntry> & entries, double tol);

}  // namespace h3mag
