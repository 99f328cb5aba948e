#include "h3mag/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <system_error>

#include <unistd.h>

#include "h3mag/report_json.hpp"

namespace h3mag::cli {

std::string format_number(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trajectory_csv(const Trajectory & traj)
{
  std::string out(trajectory_csv_header);
  out += '\n';
  const bool with_fi = has_first_integral(traj.system);
  const State & s0 = traj.samples.front().state;
  const double sp0 = speed_squared(traj.params, s0);
  const double fi0 = with_fi ? first_integral(traj.params, traj.system, s0) : 0.0;
  for (const Sample & sm : traj.samples) {
    const State & s = sm.state;
    const double sp = speed_squared(traj.params, s);
    const double fi = with_fi ? first_integral(traj.params, traj.system, s) : std::nan("");
    for (double v : {sm.t, s.x, s.y, s.z, s.vx, s.vy, s.vz, sp, fi, sp - sp0, fi - fi0}) {
      out += format_number(v);
      out += ',';
    }
    out.back() = '\n';
  }
  return out;
}

nlohmann::json trajectory_json(const Trajectory & traj, const IntegratorConfig & cfg)
{
  nlohmann::json samples = nlohmann::json::array();
  for (const Sample & sm : traj.samples) {
    const State & s = sm.state;
    samples.push_back({sm.t, s.x, s.y, s.z, s.vx, s.vy, s.vz});
  }
  const Diagnostics & d = traj.diagnostics;
  nlohmann::json fi_drift = nullptr;
  if (std::isfinite(d.max_first_integral_drift)) fi_drift = d.max_first_integral_drift;
  return {
    {"schema_version", report_schema_version},
    {"kind", "trajectory"},
    {"lambda", traj.params.lambda()},
    {"system", traj.system.name()},
    {"integrator",
     {{"method", to_string(cfg.method)},
      {"step", cfg.step},
      {"rel_tol", cfg.rel_tol},
      {"abs_tol", cfg.abs_tol},
      {"t_start", cfg.t_start},
      {"t_end", cfg.t_end},
      {"sample_every", cfg.sample_every}}},
    {"diagnostics",
     {{"max_speed2_drift", d.max_speed2_drift},
      {"max_first_integral_drift", fi_drift},
      {"steps", d.steps},
      {"rejected", d.rejected}}},
    {"columns", {"t", "x", "y", "z", "vx", "vy", "vz"}},
    {"samples", samples}};
}

std::string curve_csv(const std::vector<CurveRow> & rows)
{
  std::string out(curve_csv_header);
  out += '\n';
  for (const CurveRow & r : rows) {
    out += format_number(r.t) + ',' + format_number(r.p.x) + ',' + format_number(r.p.y) + ',' +
           format_number(r.p.z) + '\n';
  }
  return out;
}

void write_output(const std::string & path, const std::string & content, std::ostream & stdout_stream)
{
  if (path == "-") {
    stdout_stream << content;
    stdout_stream.flush();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.close();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at '" + path + "'");
  }
}

}  // namespace h3mag::cli
