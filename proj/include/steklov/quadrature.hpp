#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

namespace steklov {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1]; nodes are Legendre roots found by Newton
/// iteration from the Tricomi initial guesses.
inline QuadratureRule gauss_legendre(int n) {
  // (P_n(x), P_n'(x)) by the three-term recurrence.
  auto legendre = [n](double x) {
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
  };

  QuadratureRule q;
  q.nodes.assign(n, 0.0);
  q.weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.nodes[i] = -x;
    q.nodes[n - 1 - i] = x;
    q.weights[i] = w;
    q.weights[n - 1 - i] = w;
  }
  return q;
}

/// Location and value of an extremum found by scanning and refining.
struct Extremum {
  double arg = 0.0;
  double value = 0.0;
};

namespace detail {

// Golden-section search for the maximum of f on [lo, hi].
template <class Fn>
Extremum golden_max(const Fn& f, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? Extremum{c, fc} : Extremum{d, fd};
}

}  // namespace detail

/// Maximum of f over [t0, t1] from a uniform scan of `points` samples,
/// followed by golden-section refinement around the best local maxima.
/// With `periodic` the samples are t0 + i (t1 - t0)/points, i < points, and
/// neighbours wrap around.
template <class Fn>
Extremum scan_max(const Fn& f, double t0, double t1, int points, bool periodic) {
  const int count = periodic ? points : points + 1;
  const double h = (t1 - t0) / points;
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = f(t0 + i * h);

  Extremum best{t0, v[0]};
  std::vector<std::pair<double, int>> peaks;
  for (int i = 0; i < count; ++i) {
    if (v[i] > best.value) best = {t0 + i * h, v[i]};
    const double left = i > 0 ? v[i - 1] : (periodic ? v[count - 1] : v[i]);
    const double right = i + 1 < count ? v[i + 1] : (periodic ? v[0] : v[i]);
    if (v[i] >= left && v[i] >= right) peaks.emplace_back(v[i], i);
  }
  // A constant function makes every sample a peak; refining is pointless.
  if (peaks.size() > 16) {
    std::partial_sort(peaks.begin(), peaks.begin() + 16, peaks.end(), std::greater<>());
    peaks.resize(16);
  }
  for (const auto& [value, i] : peaks) {
    double lo = t0 + (i - 1) * h, hi = t0 + (i + 1) * h;
    if (!periodic) lo = std::max(lo, t0), hi = std::min(hi, t1);
    const Extremum e = detail::golden_max(f, lo, hi);
    if (e.value > best.value) best = e;
  }
  if (periodic) {
    const double period = t1 - t0;
    best.arg = t0 + std::fmod(std::fmod(best.arg - t0, period) + period, period);
  }
  return best;
}

template <class Fn>
Extremum scan_min(const Fn& f, double t0, double t1, int points, bool periodic) {
  const Extremum e = scan_max([&f](double t) { return -f(t); }, t0, t1, points, periodic);
  return {e.arg, -e.value};
}

}  // namespace steklov
