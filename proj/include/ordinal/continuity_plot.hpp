#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ordinal/simulate.hpp"

namespace ordinal {

/// sin(pi (x - 1) / 4): maps the Likert range [1, 5] onto phase [0, pi].
double kant_curve(double x);

/// Analytic derivative (pi / 4) cos(pi (x - 1) / 4).
double kant_slope(double x);

struct TangentLine {
  double x0 = 0.0;
  double slope = 0.0;
  double intercept = 0.0;

  double at(double x) const { return slope * x + intercept; }
};

TangentLine tangent_line(double x0);

/// numpy.linspace semantics: count points, both ends included, last == hi.
std::vector<double> linspace(double lo, double hi, int count);

struct Histogram {
  std::vector<double> edges;  // bins + 1, increasing
  std::vector<std::size_t> counts;
  std::vector<double> heights;  // count / (n * width) when density, else count
  bool density = true;
  std::size_t total = 0;
};

/// Equal-width bins over [min, max] of the data with numpy.histogram's edge and
/// last-bin-closed rules. Throws std::invalid_argument on empty data or bins < 1.
Histogram build_histogram(const SampleSet& source, int bins = 50, bool density = true);

struct CurveSeries {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<TangentLine> tangents;
};

CurveSeries build_curve(int points = 1000, const std::vector<double>& tangent_at = {2.0, 3.0, 4.0});

struct PlotBundle {
  std::string source_label;
  Histogram histogram;
  CurveSeries curve;
};

/// The default figure source: unclipped, unrounded normal(4.1, 0.27) x 10000.
SampleSet reference_plot_source(std::uint32_t seed = 42);

PlotBundle build_plot(const SampleSet& source, int bins = 50);

/// 900x540 SVG: histogram bars, the curve, dashed tangents and a legend.
std::string render_svg(const PlotBundle& bundle);

std::string histogram_csv(const Histogram& h);         // x = bin centre, y = height
std::string curve_csv(const CurveSeries& c);           // x, f(x)
std::string tangent_csv(const CurveSeries& c, std::size_t which);  // x, line(x)

/// Writes the SVG to `svg_path` and the CSV series next to it
/// (<stem>_histogram.csv, <stem>_curve.csv, <stem>_tangent_x<x0>.csv).
/// Returns every path written. I/O failures throw std::runtime_error naming the path.
std::vector<std::filesystem::path> emit_plot(const PlotBundle& bundle,
                                             const std::filesystem::path& svg_path);

}  // namespace ordinal
