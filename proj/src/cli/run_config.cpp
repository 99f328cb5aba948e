#include "h3mag/cli.hpp"

#include <fstream>
#include <functional>
#include <map>

namespace h3mag::cli {

namespace {

using Json = nlohmann::json;

double as_double(const Json & v, const std::string & key)
{
  if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  return v.get<double>();
}

std::int64_t as_integer(const Json & v, const std::string & key)
{
  if (!v.is_number_integer()) throw ConfigError("config key '" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string as_string(const Json & v, const std::string & key)
{
  if (!v.is_string()) throw ConfigError("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<double> as_optional_double(const Json & v, const std::string & key)
{
  if (v.is_null()) return std::nullopt;
  return as_double(v, key);
}

using Setter = std::function<void(RunConfig &, const Json &, const std::string &)>;

const std::map<std::string, Setter> & setters()
{
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    t["schema_version"] = [](RunConfig &, const Json & v, const std::string & k) {
      if (as_integer(v, k) != 1) throw ConfigError("unsupported config schema_version (expected 1)");
    };
    t["lambda"] = [](RunConfig & c, const Json & v, const std::string & k) { c.lambda = as_double(v, k); };
    t["system"] = [](RunConfig & c, const Json & v, const std::string & k) { c.system = as_string(v, k); };
    t["family"] = [](RunConfig & c, const Json & v, const std::string & k) {
      if (v.is_null()) {
        c.family.reset();
      } else {
        c.family = as_string(v, k);
      }
    };
    t["variant"] = [](RunConfig & c, const Json & v, const std::string & k) { c.variant = as_string(v, k); };
    t["c"] = [](RunConfig & c, const Json & v, const std::string & k) { c.c = as_optional_double(v, k); };
    for (std::size_t i = 0; i < 5; ++i) {
      t["c" + std::to_string(i + 1)] = [i](RunConfig & c, const Json & v, const std::string & k) {
        c.k[i] = as_optional_double(v, k);
      };
    }
    t["branch"] = [](RunConfig & c, const Json & v, const std::string & k) {
      c.branch = static_cast<int>(as_integer(v, k));
    };
    t["t0"] = [](RunConfig & c, const Json & v, const std::string & k) { c.t0 = as_optional_double(v, k); };
    t["t1"] = [](RunConfig & c, const Json & v, const std::string & k) { c.t1 = as_optional_double(v, k); };
    t["samples"] = [](RunConfig & c, const Json & v, const std::string & k) {
      if (v.is_null()) {
        c.samples.reset();
      } else {
        c.samples = static_cast<int>(as_integer(v, k));
      }
    };
    t["method"] = [](RunConfig & c, const Json & v, const std::string & k) { c.method = as_string(v, k); };
    t["rtol"] = [](RunConfig & c, const Json & v, const std::string & k) { c.rtol = as_double(v, k); };
    t["atol"] = [](RunConfig & c, const Json & v, const std::string & k) { c.atol = as_double(v, k); };
    t["step"] = [](RunConfig & c, const Json & v, const std::string & k) { c.step = as_double(v, k); };
    t["max_steps"] = [](RunConfig & c, const Json & v, const std::string & k) { c.max_steps = as_integer(v, k); };
    t["tol"] = [](RunConfig & c, const Json & v, const std::string & k) { c.tol = as_double(v, k); };
    t["seed"] = [](RunConfig & c, const Json & v, const std::string & k) {
      const std::int64_t s = as_integer(v, k);
      if (s < 0) throw ConfigError("config key 'seed' must be non-negative");
      c.seed = static_cast<std::uint64_t>(s);
    };
    t["out"] = [](RunConfig & c, const Json & v, const std::string & k) { c.out = as_string(v, k); };
    t["format"] = [](RunConfig & c, const Json & v, const std::string & k) { c.format = as_string(v, k); };
    t["scope"] = [](RunConfig & c, const Json & v, const std::string & k) { c.scope = as_string(v, k); };
    const std::array<const char *, 6> names{"x", "y", "z", "vx", "vy", "vz"};
    for (std::size_t i = 0; i < names.size(); ++i) {
      t[names[i]] = [i](RunConfig & c, const Json & v, const std::string & k) { c.state[i] = as_double(v, k); };
    }
    return t;
  }();
  return table;
}

}  // namespace

void apply_json(RunConfig & cfg, const nlohmann::json & j)
{
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  const auto & table = setters();
  for (const auto & [key, value] : j.items()) {
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError("unknown config key '" + key + "'");
    it->second(cfg, value, key);
  }
}

RunConfig load_config_file(const std::string & path)
{
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception & e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  RunConfig cfg;
  apply_json(cfg, j);
  return cfg;
}

IntegratorConfig integrator_config(const RunConfig & cfg, double t0, double t1)
{
  const int samples = cfg.samples.value_or(201);
  if (samples < 2) throw ConfigError("samples must be at least 2");
  if (cfg.max_steps < 1) throw ConfigError("max_steps must be at least 1");
  IntegratorConfig ic;
  try {
    ic.method = parse_method(cfg.method);
  } catch (const std::invalid_argument & e) {
    throw ConfigError(e.what());
  }
  ic.step = cfg.step;
  ic.rel_tol = cfg.rtol;
  ic.abs_tol = cfg.atol;
  ic.t_start = t0;
  ic.t_end = t1;
  ic.max_steps = static_cast<std::size_t>(cfg.max_steps);
  ic.sample_every = std::abs(t1 - t0) / (samples - 1);
  try {
    ic.validate();
  } catch (const std::invalid_argument & e) {
    throw ConfigError(e.what());
  }
  return ic;
}

ClosedFormSpec closed_form_spec(const RunConfig & cfg)
{
  if (!cfg.family) throw ConfigError("--family is required");
  ClosedFormSpec spec;
  try {
    spec.family = parse_family(*cfg.family);
    spec.variant = parse_variant(cfg.variant);
  } catch (const std::invalid_argument & e) {
    throw ConfigError(e.what());
  }
  spec.lambda = cfg.lambda;
  spec.c = cfg.c;
  for (std::size_t i = 0; i < 5; ++i) spec.k[i] = cfg.k[i].value_or(0.0);
  spec.branch = cfg.branch;
  return spec;
}

}  // namespace h3mag::cli
