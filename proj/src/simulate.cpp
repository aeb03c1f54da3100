#include "ordinal/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ordinal/reference_stream.hpp"

namespace ordinal {

std::vector<ThemeSpec> default_themes() {
  return {
      {"Ease of Use & Learnability", 4.1169, 0.2709},
      {"System Efficiency & Learning Burden", 4.1240, 0.0910},
      {"Perceived Complexity & Integration", 3.7100, 0.2160},
  };
}

SimulationConfig SimulationConfig::defaults() {
  SimulationConfig config;
  config.themes = default_themes();
  return config;
}

void SimulationConfig::validate() const {
  if (themes.empty()) {
    throw std::invalid_argument("config: at least one theme is required");
  }
  for (const auto& theme : themes) {
    if (!std::isfinite(theme.mean)) {
      throw std::invalid_argument("theme '" + theme.name + "': mean must be finite");
    }
    if (!(theme.std >= 0.0) || !std::isfinite(theme.std)) {
      throw std::invalid_argument("theme '" + theme.name + "': std must be finite and >= 0");
    }
  }
  if (n < 1) {
    throw std::invalid_argument("config: n must be >= 1");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("config: lo must be < hi");
  }
  if (decimals < 0 || decimals > 15) {
    throw std::invalid_argument("config: decimals must be in [0, 15]");
  }
}

double clip(double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); }

double round_half_even(double x, int decimals) {
  if (decimals < 0) {
    throw std::invalid_argument("round_half_even: decimals must be >= 0");
  }
  const double scale = std::pow(10.0, decimals);
  // nearbyint honours the default FE_TONEAREST mode: ties go to even.
  return std::nearbyint(x * scale) / scale;
}

std::vector<SampleSet> run_simulation(const SimulationConfig& config) {
  config.validate();
  ReferenceStream stream(config.seed);
  std::vector<SampleSet> out;
  out.reserve(config.themes.size());
  for (const auto& theme : config.themes) {
    SampleSet sample{theme.name, {}};
    sample.values.reserve(static_cast<std::size_t>(config.n));
    for (int i = 0; i < config.n; ++i) {
      const double raw = stream.next_normal(theme.mean, theme.std);
      sample.values.push_back(round_half_even(clip(raw, config.lo, config.hi), config.decimals));
    }
    out.push_back(std::move(sample));
  }
  return out;
}

SampleSet draw_normal_sample(std::string label, double mean, double std, int n, std::uint32_t seed) {
  if (n < 1) {
    throw std::invalid_argument("draw_normal_sample: n must be >= 1");
  }
  ReferenceStream stream(seed);
  SampleSet sample{std::move(label), {}};
  sample.values.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    sample.values.push_back(stream.next_normal(mean, std));
  }
  return sample;
}

}  // namespace ordinal
