#pragma once

// Seeded case generators for property sweeps. Each property runs over a
// fixed number of cases drawn from one std::mt19937_64 so failures replay.

#include <cstdint>
#include <random>
#include <string>

#include <gtest/gtest.h>

namespace steklov::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  template <class T, std::size_t N>
  const T& pick(const T (&items)[N]) {
    return items[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng_)];
  }

 private:
  std::mt19937_64 rng_;
};

/// Calls body(gen, case_index) `cases` times, tagging failures with the case.
template <class Body>
void for_all(int cases, std::uint64_t seed, Body&& body) {
  Gen gen(seed);
  for (int i = 0; i < cases; ++i) {
    SCOPED_TRACE("case " + std::to_string(i) + " seed " + std::to_string(seed));
    body(gen, i);
    if (::testing::Test::HasFatalFailure()) return;
  }
}

}  // namespace steklov::testing
