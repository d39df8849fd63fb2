#pragma once

// Config-driven verification harness.
//
// A config is one JSON document {"defaults": {...}, "scenarios": [...]}.
// Every scenario is parsed and schema-checked before anything runs; each
// then produces a RunReport (one JSON file) and rows in an aggregate CSV.
// A failing solver marks its own scenario as Error and the batch goes on.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "json.hpp"
#include "steklov/bounds.hpp"
#include "steklov/cap_galerkin.hpp"
#include "steklov/json_io.hpp"
#include "steklov/radial_steklov.hpp"
#include "steklov/spaceform.hpp"
#include "steklov/star_domain.hpp"
#include "steklov/warped_profile.hpp"

namespace steklov::harness {

namespace fs = std::filesystem;

enum class ScenarioKind {
  SineScalingSweep,
  SturmComparison,
  RadialMu1,
  CapMu1,
  StarDomainBound,
  CurvatureSandwich,
  CatalogEval,
};

// Names used for "kind" in config files.
inline constexpr std::pair<ScenarioKind, std::string_view> kKindNames[] = {
    {ScenarioKind::SineScalingSweep, "Lemma1Sweep"},
    {ScenarioKind::SturmComparison, "Lemma2Check"},
    {ScenarioKind::RadialMu1, "RadialMu1"},
    {ScenarioKind::CapMu1, "CapMu1"},
    {ScenarioKind::StarDomainBound, "Theorem1Check"},
    {ScenarioKind::CurvatureSandwich, "Theorem2Check"},
    {ScenarioKind::CatalogEval, "CatalogEval"},
};

inline std::string_view to_string(ScenarioKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "Unknown";
}

/// Solver settings and tolerances. Built-in defaults, overridden by the
/// config's "defaults" object, overridden again by keys inside "params".
struct Settings {
  int steps = kDefaultRadialSteps;
  int degree = 16;
  int quad_points = 512;
  int scan_points = kDefaultScanPoints;
  int samples = 1000;
  double rel_tol = kVerdictRelTol;
  double equality_tol = 1e-6;

  Settings overridden_by(const JsonFields& f) const {
    Settings s = *this;
    s.steps = f.integer_or("steps", steps);
    s.degree = f.integer_or("K", degree);
    s.quad_points = f.integer_or("M", quad_points);
    s.scan_points = f.integer_or("scan_M", scan_points);
    s.samples = f.integer_or("samples", samples);
    s.rel_tol = f.number_or("rel_tol", rel_tol);
    s.equality_tol = f.number_or("equality_tol", equality_tol);
    return s;
  }

  json to_json() const {
    return {{"steps", steps},     {"K", degree},         {"M", quad_points},          {"scan_M", scan_points},
            {"samples", samples}, {"rel_tol", rel_tol}, {"equality_tol", equality_tol}};
  }
};

struct SineScalingSweepParams {
  double a_min = 0.0;
  double a_max = 1.0;
  int a_points = 101;
  int x_points = 100;
  double tol = 1e-12;
};
struct SturmComparisonParams {
  ProfileSpec profile;
  double k = 0.0;
  CurvatureSide side = CurvatureSide::AtLeast;
};
struct RadialMu1Params {
  ProfileSpec profile;
};
struct CapMu1Params {
  DomainSpec domain;
};
struct StarDomainBoundParams {
  DomainSpec domain;
};
struct CurvatureSandwichParams {
  ProfileSpec profile;
  double k = 0.0;
  CurvatureSide side = CurvatureSide::AtLeast;
};
struct CatalogEvalParams {
  std::string bound;
  FourierRadius planar;
  double R_m = 0.0, R_M = 0.0, a = 0.0;
  int n = 2;
  std::optional<DomainSpec> domain;
};

using ScenarioParams = std::variant<SineScalingSweepParams, SturmComparisonParams, RadialMu1Params, CapMu1Params,
                                    StarDomainBoundParams, CurvatureSandwichParams, CatalogEvalParams>;

struct Expected {
  double value = 0.0;
  double tol = 0.0;
};

/// Tags a scenario as one point of a parameter sweep for plot-data output.
struct Sweep {
  std::string series;
  double parameter = 0.0;
};

struct Scenario {
  std::string name;
  ScenarioKind kind = ScenarioKind::RadialMu1;
  ScenarioParams params;
  Settings settings;
  std::optional<Expected> expected;
  std::optional<Sweep> sweep;
  json echo;
};

struct Config {
  std::vector<Scenario> scenarios;
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline ScenarioParams parse_params(ScenarioKind kind, const JsonFields& p, const Settings& s) {
  switch (kind) {
    case ScenarioKind::SineScalingSweep: {
      SineScalingSweepParams out;
      out.a_min = p.number_or("a_min", out.a_min);
      out.a_max = p.number_or("a_max", out.a_max);
      out.a_points = p.integer_or("a_points", out.a_points);
      out.x_points = p.integer_or("x_points", out.x_points);
      out.tol = p.number_or("tol", out.tol);
      if (out.a_min < 0.0 || out.a_max < out.a_min) p.fail("a_max", "need 0 <= a_min <= a_max");
      if (out.a_min < 1.0 && out.a_max > 1.0) p.fail("a_max", "the a-range must lie on one side of a = 1");
      if (out.a_points < 2 || out.x_points < 2) p.fail("a_points", "need at least 2 grid points per axis");
      return out;
    }
    case ScenarioKind::SturmComparison:
      return SturmComparisonParams{parse_profile(p.object("profile")), p.number("k"), parse_side(p, "side")};
    case ScenarioKind::RadialMu1:
      return RadialMu1Params{parse_profile(p.object("profile"))};
    case ScenarioKind::CapMu1:
      return CapMu1Params{parse_domain(p.object("domain"), s.scan_points)};
    case ScenarioKind::StarDomainBound:
      return StarDomainBoundParams{parse_domain(p.object("domain"), s.scan_points)};
    case ScenarioKind::CurvatureSandwich:
      return CurvatureSandwichParams{parse_profile(p.object("profile")), p.number("k"), parse_side(p, "side")};
    case ScenarioKind::CatalogEval: {
      CatalogEvalParams out;
      out.bound = p.string("bound");
      if (out.bound == "kuttler_sigillito") {
        out.planar.R0 = p.number("R0");
        out.planar.modes = parse_modes(p);
      } else if (out.bound == "garcia_montano") {
        out.R_m = p.number("R_m");
        out.R_M = p.number("R_M");
        out.a = p.number("a");
        out.n = p.integer("n");
      } else if (out.bound == "star_domain") {
        out.domain = parse_domain(p.object("domain"), s.scan_points);
      } else {
        p.fail("bound", "expected \"kuttler_sigillito\", \"garcia_montano\" or \"star_domain\"");
      }
      return out;
    }
  }
  p.fail("kind", "unsupported scenario kind");
}

}  // namespace detail

/// Schema-checks the whole document; throws ValidationError naming the
/// offending field path.
inline Config parse_config(const json& doc) {
  const JsonFields root(doc, "");
  Settings base;
  if (root.has("defaults")) base = base.overridden_by(root.object("defaults"));
  const json& list = root.raw("scenarios");
  if (!list.is_array()) root.fail("scenarios", "expected an array");

  Config cfg;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const JsonFields f(list[i], "scenarios[" + std::to_string(i) + "]");
    Scenario sc;
    sc.name = f.string("name");
    const std::string kind = f.string("kind");
    const auto it = std::find_if(std::begin(kKindNames), std::end(kKindNames),
                                 [&kind](const auto& e) { return e.second == kind; });
    if (it == std::end(kKindNames)) f.fail("kind", "unknown scenario kind \"" + kind + "\"");
    sc.kind = it->first;

    const json empty = json::object();
    const JsonFields params(f.has("params") ? f.raw("params") : empty, f.child("params"));
    sc.settings = base.overridden_by(params);
    if (sc.settings.steps < 100) params.fail("steps", "need at least 100 radial steps");
    if (sc.settings.samples < 100) params.fail("samples", "need at least 100 samples");
    if (sc.settings.scan_points < kDefaultScanPoints) params.fail("scan_M", "scan grid needs at least 1e4 points");
    if (sc.settings.rel_tol < 0.0 || sc.settings.equality_tol < 0.0) params.fail("rel_tol", "tolerances must be >= 0");
    sc.params = detail::parse_params(sc.kind, params, sc.settings);

    if (f.has("expected")) {
      if (sc.kind == ScenarioKind::SineScalingSweep || sc.kind == ScenarioKind::SturmComparison)
        f.fail("expected", "not supported for property sweeps");
      const JsonFields e = f.object("expected");
      sc.expected = Expected{e.number("value"), e.number("tol")};
      if (sc.expected->tol < 0.0) e.fail("tol", "must be >= 0");
    }
    if (f.has("sweep")) {
      const JsonFields w = f.object("sweep");
      sc.sweep = Sweep{w.string_or("series", sc.name), w.number("parameter")};
    }

    sc.echo = {{"name", sc.name},
               {"kind", kind},
               {"params", f.has("params") ? f.raw("params") : empty},
               {"settings", sc.settings.to_json()},
               {"expected", sc.expected ? json{{"value", sc.expected->value}, {"tol", sc.expected->tol}} : json()},
               {"sweep", sc.sweep ? json{{"series", sc.sweep->series}, {"parameter", sc.sweep->parameter}} : json()}};
    cfg.scenarios.push_back(std::move(sc));
  }
  return cfg;
}

/// Reads and parses a config file; JSON syntax errors carry line/column.
inline Config load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config", "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("config", std::string(path.string()) + ": " + e.what());
  }
  return parse_config(doc);
}

// ---------------------------------------------------------------------------
// Execution

enum class RunStatus { Pass, Fail, Error };

inline std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Pass: return "Pass";
    case RunStatus::Fail: return "Fail";
    case RunStatus::Error: return "Error";
  }
  return "Unknown";
}

/// One row of the aggregate CSV. margin = min(value - lower, upper - value)
/// over the bounds present.
struct CheckRow {
  std::string check;
  std::optional<double> lower;
  double value = 0.0;
  std::optional<double> upper;
  double margin = 0.0;
  bool pass = false;
};

inline CheckRow bounded_check(std::string name, double value, std::optional<double> lower,
                              std::optional<double> upper) {
  CheckRow row{std::move(name), lower, value, upper, std::numeric_limits<double>::infinity(), true};
  if (lower) row.margin = std::min(row.margin, value - *lower);
  if (upper) row.margin = std::min(row.margin, *upper - value);
  if (!lower && !upper) row.margin = std::numeric_limits<double>::quiet_NaN();
  row.pass = !(row.margin < 0.0) && std::isfinite(value);
  return row;
}

inline CheckRow bound_check(std::string name, const BoundReport& b) {
  const double value = b.mu1_reference ? b.mu1_reference->mu1 : std::numeric_limits<double>::quiet_NaN();
  return CheckRow{std::move(name), b.lower, value, b.upper, b.margin, b.verdict != Verdict::Violated};
}

struct RunReport {
  json scenario;
  json outputs = json::array();
  std::vector<CheckRow> checks;
  RunStatus status = RunStatus::Pass;
  std::string error;
  double wall_time = 0.0;

  /// Everything except wall_time; identical configs give identical payloads.
  json payload() const {
    json rows = json::array();
    for (const auto& c : checks)
      rows.push_back({{"check", c.check},
                      {"lower", steklov::detail::number_or_null(c.lower)},
                      {"value", steklov::detail::number_or_null(c.value)},
                      {"upper", steklov::detail::number_or_null(c.upper)},
                      {"margin", steklov::detail::number_or_null(c.margin)},
                      {"pass", c.pass}});
    return {{"scenario", scenario},
            {"status", std::string(to_string(status))},
            {"outputs", outputs},
            {"checks", rows},
            {"error", error.empty() ? json() : json(error)}};
  }

  json to_json() const { return {{"payload", payload()}, {"wall_time", wall_time}}; }
};

namespace detail {

struct Outcome {
  json outputs = json::array();
  std::vector<CheckRow> checks;
  std::optional<double> primary;  // value compared against `expected`
};

inline Outcome run_sine_scaling(const SineScalingSweepParams& p) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  const bool lower_side = p.a_max <= 1.0;  // gap >= 0 expected
  double min_gap = std::numeric_limits<double>::infinity();
  double max_gap = -min_gap;
  int equality = 0, nontrivial = 0;
  for (int i = 0; i < p.a_points; ++i) {
    const double a = p.a_min + (p.a_max - p.a_min) * i / (p.a_points - 1);
    for (int j = 0; j < p.x_points; ++j) {
      const double x = kHalfPi * j / (p.x_points - 1);
      const double g = sine_scaling_gap(a, x);
      min_gap = std::min(min_gap, g);
      max_gap = std::max(max_gap, g);
      if (std::abs(g) <= p.tol) {
        ++equality;
        if (!(a == 0.0 || a == 1.0 || x == 0.0)) ++nontrivial;
      }
    }
  }
  Outcome o;
  o.outputs.push_back({{"type", "sweep_summary"},
                       {"points", p.a_points * p.x_points},
                       {"min_gap", min_gap},
                       {"max_gap", max_gap},
                       {"equality_points", equality},
                       {"nontrivial_equality_points", nontrivial}});
  if (lower_side)
    o.checks.push_back(bounded_check("gap_nonnegative", min_gap, -p.tol, std::nullopt));
  else
    o.checks.push_back(bounded_check("gap_nonpositive", max_gap, std::nullopt, p.tol));
  o.checks.push_back(bounded_check("equality_only_trivial", nontrivial, std::nullopt, 0.0));
  return o;
}

inline Outcome run_scenario_body(const Scenario& sc) {
  const Settings& s = sc.settings;
  Outcome o;
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, SineScalingSweepParams>) {
          o = run_sine_scaling(p);
        } else if constexpr (std::is_same_v<P, SturmComparisonParams>) {
          const RadialProfile prof = make_profile(p.profile);
          const ComparisonReport c = comparison_report(prof, p.k, s.samples, p.side);
          o.outputs.push_back(steklov::to_json(c));
          o.checks.push_back(bounded_check("sigma_vs_sin_k", c.max_ratio_violation, std::nullopt, ComparisonReport::kTolerance));
          o.checks.push_back(bounded_check("ratio_monotone", c.ratio_monotone_violation, std::nullopt, ComparisonReport::kTolerance));
          o.checks.push_back(bounded_check("limit_at_zero", c.limit_at_zero, 1.0 - ComparisonReport::kLimitTolerance,
                                           1.0 + ComparisonReport::kLimitTolerance));
        } else if constexpr (std::is_same_v<P, RadialMu1Params>) {
          const SteklovResult r = radial_mu1(make_profile(p.profile), s.steps);
          o.outputs.push_back(steklov::to_json(r));
          o.checks.push_back(bounded_check("mu1", r.mu1, std::nullopt, std::nullopt));  // informational
          o.primary = r.mu1;
        } else if constexpr (std::is_same_v<P, CapMu1Params>) {
          const SteklovResult r = cap_mu1(make_domain(p.domain), {s.degree, s.quad_points});
          o.outputs.push_back(steklov::to_json(r));
          o.checks.push_back(bounded_check("mu1", r.mu1, std::nullopt, std::nullopt));  // informational
          o.primary = r.mu1;
        } else if constexpr (std::is_same_v<P, StarDomainBoundParams>) {
          const StarDomain d = make_domain(p.domain);
          const DomainScalars sc_ = domain_scalars(d);
          const SteklovResult ball = ball_mu1_sphere(d.dimension(), sc_.R_m, s.steps);
          o.outputs.push_back(steklov::to_json(sc_));
          if (d.dimension() == 2) {
            const SteklovResult omega = cap_mu1(d, {s.degree, s.quad_points});
            const BoundReport b = star_domain_check(sc_, 2, ball, omega, s.rel_tol);
            o.outputs.push_back(steklov::to_json(b));
            o.checks.push_back(bound_check("bound_below_mu1", b));
            if (sc_.R_M - sc_.R_m <= 1e-12)
              o.checks.push_back(bounded_check("equality_at_ball", std::abs(omega.mu1 - *b.lower), std::nullopt, s.equality_tol));
            o.primary = *b.lower;
          } else {
            const BoundReport b = star_domain_check(sc_, d.dimension(), ball, std::nullopt, s.rel_tol);
            o.outputs.push_back(steklov::to_json(b));
            BoundReport vs_ball = star_domain_check(sc_, d.dimension(), ball, ball, s.rel_tol);
            vs_ball.bound_name = "star_domain_lower_vs_inscribed_ball";
            o.outputs.push_back(steklov::to_json(vs_ball));
            o.checks.push_back(bounded_check("bound_positive", *b.lower, 0.0, std::nullopt));
            o.checks.push_back(bound_check("bound_below_ball_mu1", vs_ball));
            o.primary = *b.lower;
          }
        } else if constexpr (std::is_same_v<P, CurvatureSandwichParams>) {
          const RadialProfile prof = make_profile(p.profile);
          const RadialProfile canonical(prof.dimension(), prof.radius(), ConstantCurvature{p.k});
          const SteklovResult mu_g = radial_mu1(prof, s.steps);
          const SteklovResult mu_can = radial_mu1(canonical, s.steps);
          const BoundReport b = curvature_sandwich(prof, p.k, p.side, mu_g, mu_can, s.samples, s.rel_tol);
          o.outputs.push_back(steklov::to_json(b));
          o.checks.push_back(bound_check("sandwich", b));
          o.primary = mu_g.mu1;
        } else if constexpr (std::is_same_v<P, CatalogEvalParams>) {
          double value = 0.0;
          if (p.bound == "kuttler_sigillito") {
            value = kuttler_sigillito_bound(p.planar, s.scan_points);
          } else if (p.bound == "garcia_montano") {
            value = garcia_montano_bound(p.R_m, p.R_M, p.a, p.n);
          } else {
            const StarDomain d = make_domain(*p.domain);
            const DomainScalars sc_ = domain_scalars(d);
            value = star_domain_lower_bound(sc_, d.dimension(), ball_mu1_sphere(d.dimension(), sc_.R_m, s.steps));
          }
          o.outputs.push_back({{"type", "catalog_value"}, {"bound", p.bound}, {"value", value}});
          o.checks.push_back(bounded_check("positive", value, 0.0, std::nullopt));
          o.primary = value;
        }
      },
      sc.params);
  return o;
}

}  // namespace detail

/// Runs one scenario; library errors become status Error with the message.
inline RunReport run_scenario(const Scenario& sc) {
  RunReport rep;
  rep.scenario = sc.echo;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    detail::Outcome o = detail::run_scenario_body(sc);
    if (sc.expected) {
      if (!o.primary) throw ValidationError("expected", "scenario kind has no primary value");
      o.checks.push_back(bounded_check("expected", *o.primary, sc.expected->value - sc.expected->tol,
                                       sc.expected->value + sc.expected->tol));
    }
    rep.outputs = std::move(o.outputs);
    rep.checks = std::move(o.checks);
    const bool all_pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckRow& c) { return c.pass; });
    rep.status = all_pass ? RunStatus::Pass : RunStatus::Fail;
  } catch (const std::exception& e) {
    rep.outputs = json::array();
    rep.checks.clear();
    rep.status = RunStatus::Error;
    rep.error = e.what();
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Runs every scenario, optionally on a worker pool. Report order follows
/// the config regardless of scheduling.
inline std::vector<RunReport> run_all(const Config& cfg, bool parallel) {
  std::vector<RunReport> reports(cfg.scenarios.size());
  if (!parallel || cfg.scenarios.size() < 2) {
    for (std::size_t i = 0; i < cfg.scenarios.size(); ++i) reports[i] = run_scenario(cfg.scenarios[i]);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::min<std::size_t>(cfg.scenarios.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cfg.scenarios.size(); i = next++) reports[i] = run_scenario(cfg.scenarios[i]);
    });
  pool.clear();  // joins
  return reports;
}

// ---------------------------------------------------------------------------
// Output

namespace detail {

inline std::string format_number(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline std::string format_number(const std::optional<double>& x) { return x ? format_number(*x) : ""; }

// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << "\r\n";
}

inline std::string file_stem(std::size_t index, const std::string& name) {
  std::ostringstream os;
  os << std::setw(3) << std::setfill('0') << index << '_';
  for (char c : name) os << (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.' ? c : '_');
  return os.str();
}

}  // namespace detail

inline const std::vector<std::string> kSummaryHeader = {"scenario", "check", "lower", "value", "upper", "margin", "status"};

/// Writes NNN_<name>.json per scenario plus summary.csv into out_dir.
inline void write_reports(const std::vector<RunReport>& reports, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  std::ofstream csv(out_dir / "summary.csv", std::ios::binary);
  if (!csv) throw ValidationError("out", "cannot write " + (out_dir / "summary.csv").string());
  detail::write_csv_row(csv, kSummaryHeader);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const RunReport& r = reports[i];
    const std::string name = r.scenario.value("name", std::string("scenario"));
    std::ofstream js(out_dir / (detail::file_stem(i, name) + ".json"), std::ios::binary);
    if (!js) throw ValidationError("out", "cannot write report for " + name);
    js << r.to_json().dump(2) << '\n';
    if (r.status == RunStatus::Error) {
      detail::write_csv_row(csv, {name, "error", "", "", "", "", "Error"});
      continue;
    }
    for (const auto& c : r.checks)
      detail::write_csv_row(csv, {name, c.check, detail::format_number(c.lower), detail::format_number(c.value),
                                  detail::format_number(c.upper), detail::format_number(c.margin),
                                  c.pass ? "Pass" : "Fail"});
  }
}

/// Exit code for a batch: 0 all Pass, 1 some Fail, 2 some Error.
inline int exit_code(const std::vector<RunReport>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.status == RunStatus::Error) return 2;
    if (r.status == RunStatus::Fail) code = 1;
  }
  return code;
}

inline int run_scenarios(const fs::path& config_path, const fs::path& out_dir, bool parallel,
                         std::ostream& diag = std::cerr) {
  Config cfg;
  try {
    cfg = load_config(config_path);
  } catch (const ValidationError& e) {
    diag << "invalid config: " << e.what() << '\n';
    return 2;
  }
  const std::vector<RunReport> reports = run_all(cfg, parallel);
  try {
    write_reports(reports, out_dir);
  } catch (const std::exception& e) {
    diag << "cannot write reports: " << e.what() << '\n';
    return 2;
  }
  for (const auto& r : reports)
    if (r.status == RunStatus::Error) diag << r.scenario.value("name", "") << ": " << r.error << '\n';
  return exit_code(reports);
}

/// Collects one row per report (its first bound report, else its first
/// eigenvalue or catalog value) into <report_dir>/plot_data.csv, sorted by
/// sweep series then sweep parameter. Returns the CSV path.
inline fs::path emit_plot_data(const fs::path& report_dir) {
  if (!fs::is_directory(report_dir)) throw ValidationError("reports", "not a directory: " + report_dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(report_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  struct Row {
    std::string series;
    std::optional<double> parameter;
    std::string scenario, bound_name, verdict;
    std::optional<double> lower, mu1, upper, margin;
  };
  auto opt = [](const json& j, const char* key) -> std::optional<double> {
    if (!j.contains(key) || !j[key].is_number()) return std::nullopt;
    return j[key].get<double>();
  };

  std::vector<Row> rows;
  std::size_t report_count = 0;
  for (const auto& path : files) {
    std::ifstream in(path);
    const json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("payload")) continue;
    ++report_count;
    const json& payload = doc["payload"];
    const json& sc = payload["scenario"];
    const json* chosen = nullptr;
    for (const char* type : {"bound_report", "steklov_result", "catalog_value"}) {
      for (const auto& out : payload["outputs"])
        if (out.value("type", "") == type) {
          chosen = &out;
          break;
        }
      if (chosen) break;
    }
    if (!chosen) continue;
    Row row;
    row.scenario = sc.value("name", "");
    const bool tagged = sc.contains("sweep") && sc["sweep"].is_object();
    row.series = tagged ? sc["sweep"].value("series", row.scenario) : row.scenario;
    if (tagged) row.parameter = opt(sc["sweep"], "parameter");
    const std::string type = (*chosen)["type"];
    if (type == "bound_report") {
      row.bound_name = (*chosen)["bound_name"];
      row.verdict = (*chosen)["verdict"];
      row.lower = opt(*chosen, "lower");
      row.upper = opt(*chosen, "upper");
      row.mu1 = opt(*chosen, "mu1");
      row.margin = opt(*chosen, "margin");
    } else if (type == "steklov_result") {
      row.bound_name = "mu1";
      row.mu1 = opt(*chosen, "mu1");
    } else {
      row.bound_name = (*chosen)["bound"];
      row.lower = opt(*chosen, "value");
    }
    rows.push_back(std::move(row));
  }
  if (report_count == 0) throw ValidationError("reports", "no run reports found in " + report_dir.string());

  std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.series != y.series) return x.series < y.series;
    if (x.parameter.has_value() != y.parameter.has_value()) return x.parameter.has_value();
    if (x.parameter && *x.parameter != *y.parameter) return *x.parameter < *y.parameter;
    return x.scenario < y.scenario;
  });

  const fs::path out = report_dir / "plot_data.csv";
  std::ofstream csv(out, std::ios::binary);
  if (!csv) throw ValidationError("reports", "cannot write " + out.string());
  detail::write_csv_row(csv, {"series", "parameter", "scenario", "bound_name", "lower", "mu1", "upper", "ratio",
                              "margin", "verdict"});
  for (const auto& r : rows) {
    std::optional<double> ratio;
    if (r.lower && r.upper && *r.lower != 0.0) ratio = *r.upper / *r.lower;
    detail::write_csv_row(csv, {r.series, detail::format_number(r.parameter), r.scenario, r.bound_name,
                                detail::format_number(r.lower), detail::format_number(r.mu1),
                                detail::format_number(r.upper), detail::format_number(ratio),
                                detail::format_number(r.margin), r.verdict});
  }
  return out;
}

/// One-shot radial solve for a profile given as inline JSON or a file path.
inline json mu1_command(const std::string& profile, int steps) {
  json doc = json::parse(profile, nullptr, false);
  if (doc.is_discarded()) {
    std::ifstream in(profile);
    if (!in) throw ValidationError("profile", "neither valid JSON nor a readable file");
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ValidationError("profile", e.what());
    }
  }
  const ProfileSpec spec = parse_profile(JsonFields(doc, "profile"));
  json out = steklov::to_json(radial_mu1(make_profile(spec), steps));
  out["profile"] = to_json(spec);
  out["steps"] = steps;
  return out;
}

}  // namespace steklov::harness
