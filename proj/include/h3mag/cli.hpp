#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "h3mag/closedform.hpp"
#include "h3mag/integrate.hpp"

namespace h3mag::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_internal = 1,
  exit_config = 2,
  exit_integration = 3,
  exit_domain = 4,
  exit_defect = 5,
};

/// Raised for bad flags, bad config files or inconsistent settings (exit 2).
class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Every setting a command can read. JSON config files use the same key names
/// as the long flags (without dashes); see docs/report_schema.md.
struct RunConfig
{
  double lambda = 1.0;
  std::string system = "geodesic";
  std::optional<std::string> family;
  std::string variant = "corrected";
  std::optional<double> c;
  std::array<std::optional<double>, 5> k;
  int branch = 1;
  std::optional<double> t0;
  std::optional<double> t1;
  /// Number of output rows; each command has its own default (201, 100 for selftest).
  std::optional<int> samples;
  std::string method = "embedded-45";
  double rtol = 1e-10;
  double atol = 1e-12;
  double step = 1e-3;
  std::int64_t max_steps = 1'000'000;
  double tol = 1e-6;
  std::uint64_t seed = 7;
  std::string out = "-";
  std::string format = "csv";
  /// x, y, z, vx, vy, vz
  std::array<double, 6> state{};
  std::string scope = "all";
};

/// Overwrites the fields named in `j`. Unknown keys and type mismatches throw ConfigError.
void apply_json(RunConfig & cfg, const nlohmann::json & j);
RunConfig load_config_file(const std::string & path);

IntegratorConfig integrator_config(const RunConfig & cfg, double t0, double t1);
/// Family, variant, λ, c, c1..c5 and branch; unset constants default to 0.
ClosedFormSpec closed_form_spec(const RunConfig & cfg);

// ---------------------------------------------------------------------------
// Output

/// printf("%.17g")
std::string format_number(double v);

inline constexpr const char * trajectory_csv_header =
  "t,x,y,z,vx,vy,vz,speed2,first_integral,speed2_drift,fi_drift";
inline constexpr const char * curve_csv_header = "t,x,y,z";

std::string trajectory_csv(const Trajectory & traj);
nlohmann::json trajectory_json(const Trajectory & traj, const IntegratorConfig & cfg);

struct CurveRow
{
  double t;
  PointH3 p;
};
std::string curve_csv(const std::vector<CurveRow> & rows);

/// Writes `content` to `path` through a temporary file and a rename, so a
/// failed command never leaves a partial file. "-" writes to `stdout_stream`.
void write_output(const std::string & path, const std::string & content, std::ostream & stdout_stream);

// ---------------------------------------------------------------------------
// Entry point

/// Runs the command line in-process. Returns the exit code.
int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err);
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

/// Datasets written by the gallery command, at the figure constants.
struct GalleryItem
{
  std::string file;
  std::string label;
  ClosedFormSpec spec;
  double t_min;
  double t_max;
};
std::vector<GalleryItem> gallery_items(Variant variant);

}  // namespace h3mag::cli
