#pragma once

// JSON forms of descriptors and results used by the verification harness.
//
// Profile descriptor: {"family": "constant"|"cubic", "k": float, "eps": float, "n": int, "R": float}
// Domain descriptor:  {"n": 2|3, "R0": float, "modes": [{"eps": float, "m": int, "phase": float}], "M": int}

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "steklov/bounds.hpp"
#include "steklov/error.hpp"
#include "steklov/star_domain.hpp"
#include "steklov/steklov_result.hpp"
#include "steklov/warped_profile.hpp"

namespace steklov {

using nlohmann::json;

/// Typed, path-aware access to one JSON object. Errors name the full path,
/// e.g. "scenarios[2].params.profile.k: expected a number".
class JsonFields {
 public:
  JsonFields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail("", "expected an object");
  }

  const std::string& path() const noexcept { return path_; }
  bool has(std::string_view key) const { return j_.contains(key); }
  const json& raw(std::string_view key) const {
    if (!has(key)) fail(key, "missing required field");
    return j_.at(std::string(key));
  }

  double number(std::string_view key) const {
    const json& v = raw(key);
    if (!v.is_number()) fail(key, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(key, "expected a finite number");
    return x;
  }
  double number_or(std::string_view key, double fallback) const { return has(key) ? number(key) : fallback; }

  int integer(std::string_view key) const {
    const json& v = raw(key);
    if (!v.is_number_integer()) fail(key, "expected an integer");
    return v.get<int>();
  }
  int integer_or(std::string_view key, int fallback) const { return has(key) ? integer(key) : fallback; }

  std::string string(std::string_view key) const {
    const json& v = raw(key);
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  }
  std::string string_or(std::string_view key, std::string fallback) const {
    return has(key) ? string(key) : std::move(fallback);
  }

  JsonFields object(std::string_view key) const { return JsonFields(raw(key), child(key)); }

  std::string child(std::string_view key) const { return path_.empty() ? std::string(key) : path_ + "." + std::string(key); }

  [[noreturn]] void fail(std::string_view key, const std::string& message) const {
    throw ValidationError(key.empty() ? path_ : child(key), message);
  }

 private:
  const json& j_;
  std::string path_;
};

// ---------------------------------------------------------------------------
// Descriptors

struct ProfileSpec {
  std::string family = "constant";
  double k = 0.0;
  double eps = 0.0;
  int n = 2;
  double R = 1.0;
};

inline ProfileSpec parse_profile(const JsonFields& f) {
  ProfileSpec s;
  s.family = f.string("family");
  if (s.family != "constant" && s.family != "cubic") f.fail("family", "expected \"constant\" or \"cubic\"");
  s.k = f.number("k");
  s.eps = f.number_or("eps", 0.0);
  s.n = f.integer("n");
  s.R = f.number("R");
  return s;
}

inline RadialProfile make_profile(const ProfileSpec& s) {
  if (s.family == "cubic") return RadialProfile(s.n, s.R, CubicPerturbed{s.k, s.eps});
  return RadialProfile(s.n, s.R, ConstantCurvature{s.k});
}

inline json to_json(const ProfileSpec& s) {
  return {{"family", s.family}, {"k", s.k}, {"eps", s.eps}, {"n", s.n}, {"R", s.R}};
}

struct DomainSpec {
  int n = 2;
  double R0 = 1.0;
  std::vector<ShapeMode> modes;
  int scan_points = kDefaultScanPoints;
};

/// Optional "modes" array of {eps, m, phase}.
inline std::vector<ShapeMode> parse_modes(const JsonFields& f) {
  std::vector<ShapeMode> out;
  if (!f.has("modes")) return out;
  const json& modes = f.raw("modes");
  if (!modes.is_array()) f.fail("modes", "expected an array");
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const JsonFields m(modes[i], f.child("modes") + "[" + std::to_string(i) + "]");
    out.push_back({m.number("eps"), m.integer("m"), m.number_or("phase", 0.0)});
  }
  return out;
}

inline DomainSpec parse_domain(const JsonFields& f, int default_scan_points = kDefaultScanPoints) {
  DomainSpec s;
  s.n = f.integer("n");
  s.R0 = f.number("R0");
  s.scan_points = f.integer_or("M", default_scan_points);
  s.modes = parse_modes(f);
  return s;
}

inline StarDomain make_domain(const DomainSpec& s) { return StarDomain(s.n, s.R0, s.modes, s.scan_points); }

inline json to_json(const DomainSpec& s) {
  json modes = json::array();
  for (const auto& m : s.modes) modes.push_back({{"eps", m.eps}, {"m", m.m}, {"phase", m.phase}});
  return {{"n", s.n}, {"R0", s.R0}, {"modes", modes}, {"M", s.scan_points}};
}

inline CurvatureSide parse_side(const JsonFields& f, std::string_view key) {
  const std::string s = f.string_or(key, "AtLeast");
  if (s == "AtLeast") return CurvatureSide::AtLeast;
  if (s == "AtMost") return CurvatureSide::AtMost;
  f.fail(key, "expected \"AtLeast\" or \"AtMost\"");
}

// ---------------------------------------------------------------------------
// Results

namespace detail {

inline json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }
inline json number_or_null(const std::optional<double>& x) { return x ? number_or_null(*x) : json(nullptr); }

}  // namespace detail

inline json to_json(const SteklovResult& r) {
  return {{"type", "steklov_result"},
          {"mu1", r.mu1},
          {"method", std::string(to_string(r.method))},
          {"step_or_degree", r.step_or_degree},
          {"err_estimate", r.err_estimate},
          {"under_resolved", r.under_resolved}};
}

inline json to_json(const BoundReport& b) {
  return {{"type", "bound_report"},
          {"bound_name", b.bound_name},
          {"lower", detail::number_or_null(b.lower)},
          {"upper", detail::number_or_null(b.upper)},
          {"mu1", b.mu1_reference ? json(b.mu1_reference->mu1) : json(nullptr)},
          {"mu1_reference", b.mu1_reference ? to_json(*b.mu1_reference) : json(nullptr)},
          {"verdict", std::string(to_string(b.verdict))},
          {"margin", detail::number_or_null(b.margin)},
          {"inputs_echo", b.inputs_echo}};
}

inline json to_json(const DomainScalars& s) {
  return {{"type", "domain_scalars"},
          {"R_m", s.R_m},
          {"R_M", s.R_M},
          {"a", s.a},
          {"sec_alpha", s.sec_alpha},
          {"boundary_area", s.boundary_area}};
}

inline json to_json(const ComparisonReport& c) {
  return {{"type", "comparison_report"},
          {"max_ratio_violation", c.max_ratio_violation},
          {"ratio_monotone_violation", c.ratio_monotone_violation},
          {"limit_at_zero", c.limit_at_zero}};
}

}  // namespace steklov
