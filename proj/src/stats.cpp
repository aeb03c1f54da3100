#include "ordinal/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ordinal {

ThemeSummary summarize(const SampleSet& sample) {
  const auto& v = sample.values;
  if (v.empty()) {
    throw std::invalid_argument("summarize: sample '" + sample.theme + "' is empty");
  }
  ThemeSummary s;
  s.theme = sample.theme;
  s.n = v.size();
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  s.min = *lo;
  s.max = *hi;
  double sum = 0.0;
  for (const double x : v) sum += x;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n >= 2) {
    double ss = 0.0;
    for (const double x : v) ss += (x - s.mean) * (x - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  // Summation rounding can nudge a constant sample's mean past its extrema.
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

std::vector<double> inverse_variance_weights(std::span<const double> sigmas) {
  if (sigmas.empty()) {
    throw std::invalid_argument("inverse_variance_weights: no themes");
  }
  std::vector<double> w;
  w.reserve(sigmas.size());
  double total = 0.0;
  for (const double sigma : sigmas) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
      throw std::invalid_argument("inverse_variance_weights: zero variance (sigma must be > 0)");
    }
    w.push_back(1.0 / (sigma * sigma));
    total += w.back();
  }
  for (double& x : w) x /= total;
  return w;
}

Composite composite_score(std::span<const ThemeSummary> summaries, std::span<const ThemeSpec> specs,
                          Weighting weighting) {
  std::vector<double> sigmas;
  if (weighting == Weighting::Spec) {
    if (specs.size() != summaries.size()) {
      throw std::invalid_argument("composite_score: need one theme spec per summary");
    }
    for (const auto& spec : specs) sigmas.push_back(spec.std);
  } else {
    for (const auto& s : summaries) sigmas.push_back(s.std);
  }
  Composite c;
  c.weighting = weighting;
  c.weights = inverse_variance_weights(sigmas);
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    c.score += c.weights[i] * summaries[i].mean;
  }
  return c;
}

}  // namespace ordinal
