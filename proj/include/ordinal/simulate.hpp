#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ordinal {

struct ThemeSpec {
  std::string name;
  double mean = 0.0;
  double std = 0.0;
};

struct SimulationConfig {
  std::vector<ThemeSpec> themes;
  int n = 10000;
  std::uint32_t seed = 42;
  double lo = 1.0;
  double hi = 5.0;
  int decimals = 4;

  /// The three perception themes, 10,000 students, seed 42, [1,5], 4 decimals.
  static SimulationConfig defaults();

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const;
};

/// One theme's scores in generation order. Immutable once built.
struct SampleSet {
  std::string theme;
  std::vector<double> values;
};

std::vector<ThemeSpec> default_themes();

double clip(double x, double lo, double hi);

/// Scale by 10^decimals, round to nearest with ties to even, scale back.
/// Operates on the binary double exactly as numpy's `ndarray.round` does.
double round_half_even(double x, int decimals);

/// One seeded stream, theme-major: all n draws for theme 0, then theme 1, ...
/// Each draw is clipped to [lo, hi] and then rounded.
std::vector<SampleSet> run_simulation(const SimulationConfig& config);

/// n unclipped, unrounded normal draws from a fresh stream.
SampleSet draw_normal_sample(std::string label, double mean, double std, int n, std::uint32_t seed);

}  // namespace ordinal
