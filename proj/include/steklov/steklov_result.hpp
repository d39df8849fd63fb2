#pragma once

#include <string_view>

namespace steklov {

enum class SteklovMethod { RadialShooting, CapGalerkin, ClosedForm };

constexpr std::string_view to_string(SteklovMethod m) noexcept {
  switch (m) {
    case SteklovMethod::RadialShooting: return "RadialShooting";
    case SteklovMethod::CapGalerkin: return "CapGalerkin";
    case SteklovMethod::ClosedForm: return "ClosedForm";
  }
  return "Unknown";
}

/// First non-zero Steklov eigenvalue with the discretisation that produced it.
///
/// `err_estimate` is the absolute difference between the two finest
/// discretisation levels; `mu1` is the value at the finer one.
struct SteklovResult {
  double mu1 = 0.0;
  SteklovMethod method = SteklovMethod::ClosedForm;
  int step_or_degree = 0;
  double err_estimate = 0.0;
  // Set when err_estimate exceeds 1e-4 * mu1.
  bool under_resolved = false;
};

}  // namespace steklov
