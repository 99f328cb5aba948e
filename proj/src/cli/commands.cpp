#include "h3mag/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "h3mag/report_json.hpp"

namespace h3mag::cli {

namespace {

struct Context
{
  std::ostream & out;
  std::ostream & err;
  std::shared_ptr<spdlog::logger> log;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream & err)
{
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto log = std::make_shared<spdlog::logger>("h3mag", sink);
  log->set_pattern("[%l] %v");
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char * env = std::getenv("H3MAG_LOG"); env && *env) {
    level = spdlog::level::from_str(env);
  }
  log->set_level(level);
  return log;
}

// Options are bound to a scratch RunConfig; after parsing, only the options
// that were actually given are copied over the config file values.
class Binder
{
public:
  Binder(CLI::App * app, RunConfig & flags) : app_(app), flags_(flags) {}

  template<typename Get>
  CLI::Option * add(const std::string & name, Get get, const std::string & desc)
  {
    CLI::Option * o = app_->add_option(name, get(flags_), desc);
    appliers_.push_back({o, [get](RunConfig & dst, RunConfig & src) { get(dst) = get(src); }});
    return o;
  }

  void apply(RunConfig & dst) const
  {
    for (const auto & [opt, fn] : appliers_) {
      if (opt->count() > 0) fn(dst, flags_);
    }
  }

private:
  CLI::App * app_;
  RunConfig & flags_;
  std::vector<std::pair<CLI::Option *, std::function<void(RunConfig &, RunConfig &)>>> appliers_;
};

#define H3MAG_FIELD(member) [](RunConfig & c) -> auto & { return c.member; }

void add_model_options(Binder & b)
{
  b.add("--lambda", H3MAG_FIELD(lambda), "metric parameter lambda > 0");
}

void add_spec_options(Binder & b)
{
  b.add("--family", H3MAG_FIELD(family), "GEO_I, GEO_II, TK1_1, TK1_2, TK1_3, TK2, TK3 or TK4");
  b.add("--variant", H3MAG_FIELD(variant), "printed or corrected");
  b.add("--c", H3MAG_FIELD(c), "first-integral constant c");
  b.add("--c1", H3MAG_FIELD(k[0]), "constant c1");
  b.add("--c2", H3MAG_FIELD(k[1]), "constant c2");
  b.add("--c3", H3MAG_FIELD(k[2]), "constant c3");
  b.add("--c4", H3MAG_FIELD(k[3]), "constant c4");
  b.add("--c5", H3MAG_FIELD(k[4]), "constant c5");
  b.add("--branch", H3MAG_FIELD(branch), "sign branch (+1 or -1), TK4 only");
}

void add_grid_options(Binder & b)
{
  b.add("--t0", H3MAG_FIELD(t0), "start time");
  b.add("--t1", H3MAG_FIELD(t1), "end time");
  b.add("--samples", H3MAG_FIELD(samples), "number of output rows");
}

void add_integrator_options(Binder & b)
{
  b.add("--method", H3MAG_FIELD(method), "embedded-45 (default) or fixed-rk4");
  b.add("--rtol", H3MAG_FIELD(rtol), "relative tolerance (embedded-45)");
  b.add("--atol", H3MAG_FIELD(atol), "absolute tolerance (embedded-45)");
  b.add("--step", H3MAG_FIELD(step), "step size (fixed-rk4)");
  b.add("--max-steps", H3MAG_FIELD(max_steps), "step budget");
}

void add_output_options(Binder & b)
{
  b.add("--out", H3MAG_FIELD(out), "output path, '-' for stdout");
  b.add("--format", H3MAG_FIELD(format), "csv or json");
}

void check_common(const RunConfig & cfg)
{
  if (!std::isfinite(cfg.lambda) || cfg.lambda <= 0.0) throw ConfigError("lambda must be finite and > 0");
  if (cfg.format != "csv" && cfg.format != "json") throw ConfigError("format must be csv or json");
  if (cfg.samples && *cfg.samples < 2) throw ConfigError("samples must be at least 2");
  if (!(cfg.tol > 0.0)) throw ConfigError("tol must be > 0");
}

std::vector<double> linspace(double a, double b, int n)
{
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  t.back() = b;
  return t;
}

std::string dump(const nlohmann::json & j)
{
  return j.dump(2) + "\n";
}

void report_integration_error(const Context & ctx, const IntegrationError & e)
{
  ctx.err << "error: IntegrationError(" << to_string(e.kind()) << ") at t = " << format_number(e.time()) << ": "
          << e.what() << "\n";
}

// ---------------------------------------------------------------------------

int cmd_simulate(const RunConfig & cfg, const Context & ctx)
{
  const ModelParams p(cfg.lambda);
  SystemKind sys = SystemKind::geodesic();
  try {
    sys = parse_system(cfg.system);
  } catch (const std::invalid_argument & e) {
    throw ConfigError(e.what());
  }
  const double t0 = cfg.t0.value_or(0.0);
  const double t1 = cfg.t1.value_or(1.0);
  State s0{cfg.state[0], cfg.state[1], cfg.state[2], cfg.state[3], cfg.state[4], cfg.state[5]};
  if (cfg.family) {
    const ClosedFormSpec spec = closed_form_spec(cfg);
    sys = system_for(spec.family);
    s0 = to_initial_state(spec, t0);
    ctx.log->info("initial state from {} {} at t = {}", to_string(spec.family), to_string(spec.variant), t0);
  }
  const IntegratorConfig ic = integrator_config(cfg, t0, t1);
  ctx.log->info("integrating {} with {} over [{}, {}]", sys.name(), to_string(ic.method), t0, t1);

  Trajectory traj{p, sys, {}, {}};
  try {
    traj = integrate(p, sys, s0, ic);
  } catch (const IntegrationError & e) {
    report_integration_error(ctx, e);
    return exit_integration;
  }
  ctx.log->info("{} steps, {} rejected, speed2 drift {}", traj.diagnostics.steps, traj.diagnostics.rejected,
                traj.diagnostics.max_speed2_drift);
  const std::string body = cfg.format == "json" ? dump(trajectory_json(traj, ic)) : trajectory_csv(traj);
  write_output(cfg.out, body, ctx.out);
  return exit_ok;
}

std::vector<CurveRow> sample_curve(const ClosedFormSpec & spec, double t0, double t1, int n)
{
  std::vector<CurveRow> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (double t : linspace(t0, t1, n)) rows.push_back({t, eval(spec, t)});
  return rows;
}

nlohmann::json curve_json(const ClosedFormSpec & spec, const std::vector<CurveRow> & rows)
{
  nlohmann::json list = nlohmann::json::array();
  for (const CurveRow & r : rows) list.push_back({r.t, r.p.x, r.p.y, r.p.z});
  return {
    {"schema_version", report_schema_version},
    {"kind", "curve"},
    {"spec", to_json(spec)},
    {"columns", {"t", "x", "y", "z"}},
    {"rows", list}};
}

int cmd_closed_form(const RunConfig & cfg, const Context & ctx)
{
  const ClosedFormSpec spec = closed_form_spec(cfg);
  try {
    validate(spec);
    const TimeDomain d = natural_domain(spec);
    const double t0 = cfg.t0.value_or(d.t_min);
    const double t1 = cfg.t1.value_or(d.t_max);
    if (auto tp = pole(spec); tp && *tp >= std::min(t0, t1) && *tp <= std::max(t0, t1)) {
      throw DomainViolation(to_string(spec.family) + " " + to_string(spec.variant) + ": pole at t = " +
                            format_number(*tp) + " inside [" + format_number(t0) + ", " + format_number(t1) + "]");
    }
    const auto rows = sample_curve(spec, t0, t1, cfg.samples.value_or(201));
    write_output(cfg.out, cfg.format == "json" ? dump(curve_json(spec, rows)) : curve_csv(rows), ctx.out);
  } catch (const DomainViolation & e) {
    ctx.err << "error: DomainViolation: " << e.what() << "\n";
    return exit_domain;
  }
  return exit_ok;
}

ClosedFormSpec verify_spec(const RunConfig & cfg, FamilyId f, Variant v)
{
  ClosedFormSpec spec = reference_spec(f, v);
  spec.lambda = cfg.lambda;
  if (cfg.c) spec.c = cfg.c;
  for (std::size_t i = 0; i < 5; ++i) {
    if (cfg.k[i]) spec.k[i] = *cfg.k[i];
  }
  spec.branch = cfg.branch;
  return spec;
}

std::string fixed(double v, int width)
{
  std::ostringstream os;
  os.width(width);
  if (std::isnan(v)) {
    os << "-";
  } else {
    os.setf(std::ios::scientific);
    os.precision(2);
    os << v;
  }
  return os.str();
}

constexpr double comparison_limit = 1e-5;

int cmd_verify(const RunConfig & cfg, bool all, const Context & ctx)
{
  std::vector<FamilyId> fams;
  if (all || !cfg.family) {
    fams.assign(all_families.begin(), all_families.end());
  } else {
    try {
      fams.push_back(parse_family(*cfg.family));
    } catch (const std::invalid_argument & e) {
      throw ConfigError(e.what());
    }
  }
  std::vector<Variant> variants;
  if (cfg.variant == "both") {
    variants = {Variant::printed, Variant::corrected};
  } else {
    try {
      variants = {parse_variant(cfg.variant)};
    } catch (const std::invalid_argument & e) {
      throw ConfigError(e.what());
    }
  }

  std::vector<ClosedFormSpec> specs;
  for (FamilyId f : fams) {
    for (Variant v : variants) specs.push_back(verify_spec(cfg, f, v));
  }

  // Custom grids go through ode_residual directly; the default grid uses the batch.
  std::vector<BatchItem> items;
  if (cfg.t0 || cfg.t1 || cfg.samples) {
    for (const ClosedFormSpec & spec : specs) {
      BatchItem item;
      try {
        Grid g = default_grid(spec);
        g.t_min = cfg.t0.value_or(g.t_min);
        g.t_max = cfg.t1.value_or(g.t_max);
        g.n = cfg.samples.value_or(g.n);
        item.report = ode_residual(spec, g, cfg.tol);
        item.comparison = compare_with_integration(spec, g.t_min, g.t_min + 1.0);
      } catch (const DomainViolation & e) {
        item.error = e.what();
        item.domain_error = true;
      } catch (const std::exception & e) {
        item.error = e.what();
      }
      items.push_back(std::move(item));
    }
  } else {
    items = verify_batch(specs, cfg.tol, true);
  }

  bool domain_error = false, other_error = false, corrected_fail = false;
  nlohmann::json results = nlohmann::json::array();
  std::ostringstream table;
  table << "family  variant    result  lorentz    printed-sys  integration\n";
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const ClosedFormSpec & spec = specs[i];
    const BatchItem & it = items[i];
    nlohmann::json r{{"family", to_string(spec.family)}, {"variant", to_string(spec.variant)}};
    r["report"] = it.report ? to_json(*it.report) : nlohmann::json(nullptr);
    r["comparison"] = it.comparison ? to_json(*it.comparison) : nlohmann::json(nullptr);
    r["error"] = it.error.empty() ? nlohmann::json(nullptr) : nlohmann::json(it.error);

    std::string verdict = "ERROR";
    if (it.error.empty() && it.report) {
      const bool pass = it.report->classification == Classification::pass &&
                        (!it.comparison || it.comparison->max_deviation < comparison_limit);
      verdict = pass ? "PASS" : "FAIL";
      if (!pass && spec.variant == Variant::corrected) corrected_fail = true;
    } else if (it.domain_error) {
      domain_error = true;
      ctx.err << "error: DomainViolation: " << it.error << "\n";
    } else {
      other_error = true;
      if (spec.variant == Variant::corrected) corrected_fail = true;
      ctx.err << "error: " << to_string(spec.family) << " " << to_string(spec.variant) << ": " << it.error << "\n";
    }
    r["result"] = verdict;
    results.push_back(r);

    std::ostringstream row;
    row.setf(std::ios::left);
    row.width(8);
    row << to_string(spec.family);
    row.width(11);
    row << to_string(spec.variant);
    row.width(8);
    row << verdict;
    table << row.str() << fixed(it.report ? it.report->lorentz.worst() : NAN, 9) << "  "
          << fixed(it.report ? it.report->printed_system.worst() : NAN, 11) << "  "
          << fixed(it.comparison ? it.comparison->max_deviation : NAN, 11) << "\n";
  }

  const nlohmann::json doc{
    {"schema_version", report_schema_version},
    {"kind", "verify_report"},
    {"tolerance", cfg.tol},
    {"integration_limit", comparison_limit},
    {"all_corrected_pass", !corrected_fail},
    {"results", results}};

  if (cfg.format == "json" && cfg.out == "-") {
    write_output("-", dump(doc), ctx.out);
  } else {
    ctx.out << table.str();
    if (cfg.out != "-") write_output(cfg.out, dump(doc), ctx.out);
  }

  if (domain_error) return exit_domain;
  if (corrected_fail) return exit_defect;
  if (other_error) return exit_integration;
  return exit_ok;
}

int cmd_selftest(const RunConfig & cfg, const Context & ctx)
{
  const StructureReport rep = structure_selftest(ModelParams(cfg.lambda), cfg.samples.value_or(100), cfg.seed);
  write_output(cfg.out, dump(to_json(rep, cfg.tol)), ctx.out);
  if (!rep.passes(cfg.tol)) {
    ctx.err << "error: structure defect above tolerance " << format_number(cfg.tol) << "\n";
    return exit_defect;
  }
  return exit_ok;
}

int cmd_errata(const RunConfig & cfg, const Context & ctx)
{
  LedgerScope scope = LedgerScope::all;
  if (cfg.scope == "corrected") {
    scope = LedgerScope::corrected_only;
  } else if (cfg.scope != "all") {
    throw ConfigError("scope must be all or corrected");
  }
  const auto entries = errata_ledger(cfg.tol, scope);
  write_output(cfg.out, dump(ledger_document(entries, cfg.tol)), ctx.out);
  for (const LedgerEntry & e : entries) {
    if (e.verdict == Verdict::violated && !e.witness_pass) {
      ctx.err << "error: ledger entry " << e.id << " has no passing corrected witness\n";
      return exit_defect;
    }
  }
  return exit_ok;
}

int cmd_families(const RunConfig & cfg, const Context & ctx)
{
  const auto list = families();
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const FamilyInfo & f : list) {
      nlohmann::json vs = nlohmann::json::array();
      for (Variant v : f.variants) vs.push_back(to_string(v));
      j.push_back({{"family", to_string(f.id)},
                   {"system", f.system},
                   {"constraints", f.constraints},
                   {"variants", vs},
                   {"corrected", f.corrected_summary}});
    }
    write_output(cfg.out, dump({{"schema_version", report_schema_version}, {"kind", "families"}, {"families", j}}),
                 ctx.out);
    return exit_ok;
  }
  std::ostringstream os;
  for (const FamilyInfo & f : list) {
    os << to_string(f.id) << "  [" << f.system << "]  " << f.constraints << "\n    corrected: " << f.corrected_summary
       << "\n";
  }
  write_output(cfg.out, os.str(), ctx.out);
  return exit_ok;
}

int cmd_gallery(const RunConfig & cfg, const Context & ctx)
{
  namespace fs = std::filesystem;
  if (cfg.out == "-") throw ConfigError("gallery needs --out <directory>");
  Variant variant = Variant::corrected;
  try {
    variant = parse_variant(cfg.variant);
  } catch (const std::invalid_argument & e) {
    throw ConfigError(e.what());
  }
  const fs::path dir(cfg.out);
  fs::create_directories(dir);

  const int n = cfg.samples.value_or(201);
  bool failed = false;
  nlohmann::json manifest = nlohmann::json::array();
  for (const GalleryItem & item : gallery_items(variant)) {
    nlohmann::json m{
      {"file", item.file},
      {"label", item.label},
      {"spec", to_json(item.spec)},
      {"t_min", item.t_min},
      {"t_max", item.t_max}};
    nlohmann::json flags = nlohmann::json::array();
    if (auto tp = pole(item.spec)) flags.push_back("pole at t = " + format_number(*tp) + " excluded from the grid");
    if (item.spec.family == FamilyId::tk4 && variant == Variant::corrected && item.spec.c1() == 0.0) {
      flags.push_back("degenerate: radius c1 = 0 gives the rest point");
    }
    try {
      validate(item.spec);
      const auto rows = sample_curve(item.spec, item.t_min, item.t_max, n);
      write_output((dir / item.file).string(), curve_csv(rows), ctx.out);
      m["rows"] = rows.size();
      m["status"] = "ok";
    } catch (const DomainViolation & e) {
      failed = true;
      flags.push_back(std::string("domain violation: ") + e.what());
      m["rows"] = 0;
      m["status"] = "domain_violation";
      ctx.err << "error: DomainViolation: " << item.file << ": " << e.what() << "\n";
    }
    m["flags"] = flags;
    manifest.push_back(m);
    ctx.log->info("gallery {} done", item.file);
  }
  const nlohmann::json doc{
    {"schema_version", report_schema_version},
    {"kind", "gallery_manifest"},
    {"variant", to_string(variant)},
    {"datasets", manifest}};
  write_output((dir / "manifest.json").string(), dump(doc), ctx.out);
  return failed ? exit_domain : exit_ok;
}

}  // namespace

std::vector<GalleryItem> gallery_items(Variant variant)
{
  auto make = [variant](FamilyId f, std::array<double, 5> k, std::optional<double> c) {
    ClosedFormSpec s;
    s.family = f;
    s.variant = variant;
    s.lambda = 1.0;
    s.k = k;
    s.c = c;
    return s;
  };
  std::vector<GalleryItem> out{
    {"tk1_1.csv", "K1, c = 1/lambda: c1 = c2 = c3 = 1, c4 = c5 = 0, lambda = 1", make(FamilyId::tk1_1, {1, 1, 1, 0, 0}, {}),
     0.0, 2.0},
    {"tk1_2.csv", "K1, c = -1/lambda: c1 = c2 = lambda = 1, c3 = c4 = c5 = 0", make(FamilyId::tk1_2, {1, 1, 0, 0, 0}, {}),
     0.0, 2.0},
    {"tk1_3.csv", "K1, |lambda c| > 1: lambda = 1, c = sqrt(2), c1 = c2 = c3 = 1, c4 = c5 = 0",
     make(FamilyId::tk1_3, {1, 1, 1, 0, 0}, std::numbers::sqrt2), 0.0, 2.0},
    {"tk2.csv", "K2: c1 = 2 c2 = 2, lambda = 1", make(FamilyId::tk2, {2, 1, 0, 0, 0}, {}), 0.0, 2.0},
    {"tk3.csv", "K3: c1 = c2 = c3 = c4 = 1, lambda = 1", make(FamilyId::tk3, {1, 1, 1, 1, 0}, {}), 0.0, 2.0},
    {"tk4.csv", "K4: c1 = c2 = 0, lambda = 1 (pole of the printed form at t = 0)", make(FamilyId::tk4, {0, 0, 0, 0, 0}, {}),
     -2.0, -0.25},
  };
  return out;
}

int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
  Context ctx{out, err, make_logger(err)};

  CLI::App app{"Killing magnetic curves in the Heisenberg group H3: integration, closed forms and verification", "h3mag"};
  app.require_subcommand(1);

  RunConfig flags;
  std::string config_path;
  bool verify_all = false;

  struct Sub
  {
    CLI::App * app;
    std::unique_ptr<Binder> binder;
  };
  std::vector<Sub> subs;
  auto sub = [&](const std::string & name, const std::string & desc) -> Binder & {
    CLI::App * s = app.add_subcommand(name, desc);
    s->add_option("--config", config_path, "JSON config file; flags override its values");
    subs.push_back({s, std::make_unique<Binder>(s, flags)});
    return *subs.back().binder;
  };

  {
    Binder & b = sub("simulate", "integrate the geodesic or a K1..K4 Lorentz system");
    add_model_options(b);
    b.add("--system", H3MAG_FIELD(system), "geodesic, k1, k2, k3 or k4");
    b.add("--x", H3MAG_FIELD(state[0]), "initial x");
    b.add("--y", H3MAG_FIELD(state[1]), "initial y");
    b.add("--z", H3MAG_FIELD(state[2]), "initial z");
    b.add("--vx", H3MAG_FIELD(state[3]), "initial x'");
    b.add("--vy", H3MAG_FIELD(state[4]), "initial y'");
    b.add("--vz", H3MAG_FIELD(state[5]), "initial z'");
    add_spec_options(b);
    add_grid_options(b);
    add_integrator_options(b);
    add_output_options(b);
  }
  {
    Binder & b = sub("closed-form", "evaluate a closed-form family on a grid");
    add_model_options(b);
    add_spec_options(b);
    add_grid_options(b);
    add_output_options(b);
  }
  {
    Binder & b = sub("verify", "residual oracle and integration cross-check for closed-form families");
    add_model_options(b);
    add_spec_options(b);
    add_grid_options(b);
    b.add("--tol", H3MAG_FIELD(tol), "classification tolerance");
    add_output_options(b);
    subs.back().app->add_flag("--all", verify_all, "all eight families");
  }
  {
    Binder & b = sub("selftest", "structure checks of the metric, connection, Killing fields and contact form");
    add_model_options(b);
    b.add("--samples", H3MAG_FIELD(samples), "random samples");
    b.add("--seed", H3MAG_FIELD(seed), "random seed");
    b.add("--tol", H3MAG_FIELD(tol), "defect tolerance");
    b.add("--out", H3MAG_FIELD(out), "output path, '-' for stdout");
  }
  {
    Binder & b = sub("gallery", "export the figure datasets as CSV");
    b.add("--out", H3MAG_FIELD(out), "output directory")->required();
    b.add("--variant", H3MAG_FIELD(variant), "printed or corrected (default)");
    b.add("--samples", H3MAG_FIELD(samples), "rows per file");
  }
  {
    Binder & b = sub("errata", "errata ledger as JSON");
    b.add("--tol", H3MAG_FIELD(tol), "classification tolerance");
    b.add("--scope", H3MAG_FIELD(scope), "all or corrected");
    b.add("--out", H3MAG_FIELD(out), "output path, '-' for stdout");
  }
  {
    Binder & b = sub("families", "list the closed-form families");
    add_output_options(b);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_config;
  }

  const Sub * chosen = nullptr;
  for (const Sub & s : subs) {
    if (s.app->parsed()) chosen = &s;
  }
  const std::string name = chosen->app->get_name();

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config_file(config_path);
    chosen->binder->apply(cfg);
    check_common(cfg);
    ctx.log->debug("command {}", name);
    if (name == "simulate") return cmd_simulate(cfg, ctx);
    if (name == "closed-form") return cmd_closed_form(cfg, ctx);
    if (name == "verify") return cmd_verify(cfg, verify_all, ctx);
    if (name == "selftest") return cmd_selftest(cfg, ctx);
    if (name == "gallery") return cmd_gallery(cfg, ctx);
    if (name == "errata") return cmd_errata(cfg, ctx);
    return cmd_families(cfg, ctx);
  } catch (const ConfigError & e) {
    err << "error: config: " << e.what() << "\n";
    return exit_config;
  } catch (const DomainViolation & e) {
    err << "error: DomainViolation: " << e.what() << "\n";
    return exit_domain;
  } catch (const IntegrationError & e) {
    report_integration_error(ctx, e);
    return exit_integration;
  } catch (const std::invalid_argument & e) {
    err << "error: config: " << e.what() << "\n";
    return exit_config;
  } catch (const std::exception & e) {
    err << "error: " << e.what() << "\n";
    return exit_internal;
  }
}

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
  std::vector<const char *> argv{"h3mag"};
  for (const std::string & a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace h3mag::cli
