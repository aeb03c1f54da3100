#pragma once

#include <span>
#include <string>
#include <vector>

#include "ordinal/simulate.hpp"

namespace ordinal {

struct ThemeSummary {
  std::string theme;
  double mean = 0.0;
  double std = 0.0;  // sample std (n-1); 0 when n == 1
  double min = 0.0;
  double max = 0.0;
  std::size_t n = 0;
};

ThemeSummary summarize(const SampleSet& sample);

enum class Weighting {
  Spec,    // population sigma from the theme specs
  Sample,  // realized sample std
};

struct Composite {
  Weighting weighting = Weighting::Spec;
  std::vector<double> weights;  // w_i proportional to 1 / sigma_i^2, summing to 1
  double score = 0.0;           // sum of w_i * mean_i
};

/// Inverse-variance weights. Throws std::invalid_argument on any sigma <= 0.
std::vector<double> inverse_variance_weights(std::span<const double> sigmas);

/// Precision-weighted Success Score over theme means. `specs` supplies sigma
/// under Weighting::Spec and must align with `summaries`.
Composite composite_score(std::span<const ThemeSummary> summaries, std::span<const ThemeSpec> specs,
                          Weighting weighting = Weighting::Spec);

}  // namespace ordinal
