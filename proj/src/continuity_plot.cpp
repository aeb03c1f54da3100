#include "ordinal/continuity_plot.hpp"

#include <system_error>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace ordinal {

namespace {

// sin(pi * t) with the argument folded into [-1/2, 1/2] so values near the
// zeros at integer t keep full relative accuracy.
double sin_pi(double t) {
  const double n = std::nearbyint(t);
  const double r = t - n;
  const double s = std::sin(std::numbers::pi * r);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

}  // namespace

double kant_curve(double x) { return sin_pi((x - 1.0) / 4.0); }

double kant_slope(double x) {
  return (std::numbers::pi / 4.0) * std::cos(std::numbers::pi * (x - 1.0) / 4.0);
}

TangentLine tangent_line(double x0) {
  const double slope = kant_slope(x0);
  return {x0, slope, kant_curve(x0) - slope * x0};
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) {
    throw std::invalid_argument("linspace: count must be >= 1");
  }
  std::vector<double> xs(static_cast<std::size_t>(count));
  if (count == 1) {
    xs[0] = lo;
    return xs;
  }
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) xs[static_cast<std::size_t>(i)] = lo + i * step;
  xs.back() = hi;
  return xs;
}

Histogram build_histogram(const SampleSet& source, int bins, bool density) {
  if (source.values.empty()) {
    throw std::invalid_argument("build_histogram: source '" + source.theme + "' is empty");
  }
  if (bins < 1) {
    throw std::invalid_argument("build_histogram: bins must be >= 1");
  }
  const auto [mn, mx] = std::minmax_element(source.values.begin(), source.values.end());
  double first = *mn;
  double last = *mx;
  if (first == last) {
    first -= 0.5;
    last += 0.5;
  }
  Histogram h;
  h.density = density;
  h.total = source.values.size();
  h.edges = linspace(first, last, bins + 1);
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  const double norm = bins / (last - first);
  const auto nb = static_cast<std::ptrdiff_t>(bins);
  for (const double v : source.values) {
    auto idx = static_cast<std::ptrdiff_t>((v - first) * norm);
    if (idx == nb) --idx;
    // Correct floating-point drift against the actual edges.
    if (v < h.edges[static_cast<std::size_t>(idx)]) --idx;
    if (idx != nb - 1 && v >= h.edges[static_cast<std::size_t>(idx) + 1]) ++idx;
    ++h.counts[static_cast<std::size_t>(idx)];
  }
  h.heights.resize(h.counts.size());
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    const double c = static_cast<double>(h.counts[i]);
    h.heights[i] =
        density ? c / (h.edges[i + 1] - h.edges[i]) / static_cast<double>(h.total) : c;
  }
  return h;
}

CurveSeries build_curve(int points, const std::vector<double>& tangent_at) {
  CurveSeries c;
  c.xs = linspace(1.0, 5.0, points);
  c.ys.reserve(c.xs.size());
  for (const double x : c.xs) c.ys.push_back(kant_curve(x));
  for (const double x0 : tangent_at) c.tangents.push_back(tangent_line(x0));
  return c;
}

SampleSet reference_plot_source(std::uint32_t seed) {
  return draw_normal_sample("Monte Carlo Distribution", 4.1, 0.27, 10000, seed);
}

PlotBundle build_plot(const SampleSet& source, int bins) {
  return {source.theme, build_histogram(source, bins, true), build_curve()};
}

namespace {

std::string xml_escape(std::string_view text) {
  std::string out;
  for (const char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// 1, 2 or 5 times a power of ten, giving roughly `target` ticks over `span`.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  if (frac < 1.5) return mag;
  if (frac < 3.5) return 2.0 * mag;
  if (frac < 7.5) return 5.0 * mag;
  return 10.0 * mag;
}

const char* const kTangentColors[] = {"darkgreen", "darkorange", "purple"};

std::string tangent_label(double x0) { return fmt::format("Tangent at x={:g}", x0); }

}  // namespace

std::string render_svg(const PlotBundle& bundle) {
  constexpr double kWidth = 900.0;
  constexpr double kHeight = 540.0;
  constexpr double kLeft = 70.0, kRight = 20.0, kTop = 50.0, kBottom = 60.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  const auto& h = bundle.histogram;
  const auto& c = bundle.curve;

  double x_lo = std::min(c.xs.front(), h.edges.front());
  double x_hi = std::max(c.xs.back(), h.edges.back());
  double y_lo = 0.0;
  double y_hi = *std::max_element(h.heights.begin(), h.heights.end());
  for (const double y : c.ys) y_hi = std::max(y_hi, y);
  for (const auto& t : c.tangents) {
    for (const double x : {c.xs.front(), c.xs.back()}) {
      y_lo = std::min(y_lo, t.at(x));
      y_hi = std::max(y_hi, t.at(x));
    }
  }
  const double x_pad = 0.05 * (x_hi - x_lo);
  const double y_pad = 0.05 * (y_hi - y_lo);
  x_lo -= x_pad;
  x_hi += x_pad;
  y_lo -= y_pad;
  y_hi += y_pad;

  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };

  std::string svg;
  auto out = std::back_inserter(svg);
  fmt::format_to(out,
                 "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                 "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
                 "viewBox=\"0 0 {0:.0f} {1:.0f}\" font-family=\"sans-serif\">\n",
                 kWidth, kHeight);
  fmt::format_to(out, "<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n",
                 kWidth, kHeight);
  fmt::format_to(out,
                 "<defs><clipPath id=\"plot-area\"><rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" "
                 "height=\"{:.3f}\"/></clipPath></defs>\n",
                 kLeft, kTop, plot_w, plot_h);

  // Grid and ticks.
  svg += "<g class=\"grid\" stroke=\"#b0b0b0\" stroke-width=\"0.8\" stroke-opacity=\"0.6\">\n";
  const double xs = nice_step(x_hi - x_lo, 8);
  const double ys = nice_step(y_hi - y_lo, 8);
  std::vector<double> x_ticks, y_ticks;
  for (double t = std::ceil(x_lo / xs) * xs; t <= x_hi + 1e-12; t += xs) x_ticks.push_back(t);
  for (double t = std::ceil(y_lo / ys) * ys; t <= y_hi + 1e-12; t += ys) y_ticks.push_back(t);
  for (const double t : x_ticks) {
    fmt::format_to(out, "<line x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{0:.3f}\" y2=\"{2:.3f}\"/>\n",
                   px(t), kTop, kTop + plot_h);
  }
  for (const double t : y_ticks) {
    fmt::format_to(out, "<line x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{2:.3f}\" y2=\"{1:.3f}\"/>\n",
                   kLeft, py(t), kLeft + plot_w);
  }
  svg += "</g>\n<g class=\"tick-labels\" font-size=\"11\" fill=\"#222\">\n";
  for (const double t : x_ticks) {
    fmt::format_to(out, "<text x=\"{:.3f}\" y=\"{:.3f}\" text-anchor=\"middle\">{:.2f}</text>\n",
                   px(t), kTop + plot_h + 16.0, t + 0.0);
  }
  for (const double t : y_ticks) {
    fmt::format_to(out, "<text x=\"{:.3f}\" y=\"{:.3f}\" text-anchor=\"end\">{:.2f}</text>\n",
                   kLeft - 6.0, py(t) + 4.0, t + 0.0);
  }
  svg += "</g>\n";

  // Histogram.
  svg += "<g class=\"histogram\" clip-path=\"url(#plot-area)\" fill=\"skyblue\" "
         "fill-opacity=\"0.6\" stroke=\"none\">\n";
  for (std::size_t i = 0; i < h.heights.size(); ++i) {
    const double x0 = px(h.edges[i]);
    const double x1 = px(h.edges[i + 1]);
    const double top = py(h.heights[i]);
    fmt::format_to(out, "<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\"/>\n",
                   x0, top, x1 - x0, py(0.0) - top);
  }
  svg += "</g>\n";

  // Curve.
  svg += "<path class=\"curve\" clip-path=\"url(#plot-area)\" fill=\"none\" stroke=\"darkred\" "
         "stroke-width=\"2.2\" d=\"";
  for (std::size_t i = 0; i < c.xs.size(); ++i) {
    fmt::format_to(out, "{}{:.3f},{:.3f}", i == 0 ? "M" : " L", px(c.xs[i]), py(c.ys[i]));
  }
  svg += "\"/>\n";

  // Tangents.
  for (std::size_t k = 0; k < c.tangents.size(); ++k) {
    const auto& t = c.tangents[k];
    fmt::format_to(out,
                   "<line class=\"tangent\" clip-path=\"url(#plot-area)\" x1=\"{:.3f}\" y1=\"{:.3f}\" "
                   "x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"{}\" stroke-width=\"1.5\" "
                   "stroke-dasharray=\"6,4\"/>\n",
                   px(c.xs.front()), py(t.at(c.xs.front())), px(c.xs.back()), py(t.at(c.xs.back())),
                   kTangentColors[k % 3]);
  }

  // Frame, title, axis labels.
  fmt::format_to(out,
                 "<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"none\" "
                 "stroke=\"#222\" stroke-width=\"1\"/>\n",
                 kLeft, kTop, plot_w, plot_h);
  fmt::format_to(out,
                 "<text x=\"{:.3f}\" y=\"30\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n",
                 kLeft + plot_w / 2.0, xml_escape("Monte Carlo vs. Kantian Continuity"));
  fmt::format_to(out,
                 "<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
                 kLeft + plot_w / 2.0, kHeight - 18.0,
                 xml_escape("Simulated Success Score (Likert 1-5)"));
  fmt::format_to(out,
                 "<text transform=\"translate(18,{:.3f}) rotate(-90)\" font-size=\"12\" "
                 "text-anchor=\"middle\">{}</text>\n",
                 kTop + plot_h / 2.0, xml_escape("Density / Value"));

  // Legend.
  struct Entry {
    std::string label;
    std::string swatch;
  };
  std::vector<Entry> entries;
  entries.push_back({bundle.source_label,
                     "<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"18\" height=\"10\" fill=\"skyblue\" "
                     "fill-opacity=\"0.6\"/>"});
  entries.push_back({"Kantian Curve: f(x)=sin(π(x−1)/4)",
                     "<line x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{2:.3f}\" y2=\"{1:.3f}\" "
                     "stroke=\"darkred\" stroke-width=\"2.2\"/>"});
  for (std::size_t k = 0; k < c.tangents.size(); ++k) {
    entries.push_back({tangent_label(c.tangents[k].x0),
                       std::string("<line x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{2:.3f}\" y2=\"{1:.3f}\" "
                                   "stroke=\"") +
                           kTangentColors[k % 3] +
                           "\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>"});
  }
  const double lx = kLeft + 12.0;
  const double ly = kTop + 12.0;
  fmt::format_to(out,
                 "<g class=\"legend\" font-size=\"11\">\n<rect x=\"{:.3f}\" y=\"{:.3f}\" "
                 "width=\"250\" height=\"{:.3f}\" fill=\"white\" fill-opacity=\"0.85\" "
                 "stroke=\"#999\"/>\n",
                 lx, ly, 10.0 + 18.0 * static_cast<double>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double row_y = ly + 14.0 + 18.0 * static_cast<double>(i);
    if (i == 0) {
      svg += fmt::format(fmt::runtime(entries[i].swatch), lx + 8.0, row_y - 8.0);
    } else {
      svg += fmt::format(fmt::runtime(entries[i].swatch), lx + 8.0, row_y - 3.0, lx + 26.0);
    }
    fmt::format_to(out, "\n<text x=\"{:.3f}\" y=\"{:.3f}\">{}</text>\n", lx + 32.0, row_y,
                   xml_escape(entries[i].label));
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

std::string histogram_csv(const Histogram& h) {
  std::string csv = "x,y\n";
  for (std::size_t i = 0; i < h.heights.size(); ++i) {
    fmt::format_to(std::back_inserter(csv), "{:.10f},{:.10f}\n",
                   0.5 * (h.edges[i] + h.edges[i + 1]), h.heights[i]);
  }
  return csv;
}

std::string curve_csv(const CurveSeries& c) {
  std::string csv = "x,y\n";
  for (std::size_t i = 0; i < c.xs.size(); ++i) {
    fmt::format_to(std::back_inserter(csv), "{:.10f},{:.10f}\n", c.xs[i], c.ys[i] + 0.0);
  }
  return csv;
}

std::string tangent_csv(const CurveSeries& c, std::size_t which) {
  const TangentLine& t = c.tangents.at(which);
  std::string csv = "x,y\n";
  for (const double x : c.xs) {
    fmt::format_to(std::back_inserter(csv), "{:.10f},{:.10f}\n", x, t.at(x) + 0.0);
  }
  return csv;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  file << content;
  if (!file.flush()) {
    throw std::runtime_error("failed writing '" + path.string() + "'");
  }
}

}  // namespace

std::vector<std::filesystem::path> emit_plot(const PlotBundle& bundle,
                                             const std::filesystem::path& svg_path) {
  const auto dir = svg_path.parent_path();
  const auto stem = svg_path.stem().string();
  auto sibling = [&](const std::string& suffix) { return dir / (stem + suffix); };

  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create directory '" + dir.string() + "': " + ec.message());
  }
  std::vector<std::filesystem::path> written;
  write_file(svg_path, render_svg(bundle));
  written.push_back(svg_path);
  written.push_back(sibling("_histogram.csv"));
  write_file(written.back(), histogram_csv(bundle.histogram));
  written.push_back(sibling("_curve.csv"));
  write_file(written.back(), curve_csv(bundle.curve));
  for (std::size_t k = 0; k < bundle.curve.tangents.size(); ++k) {
    written.push_back(sibling(fmt::format("_tangent_x{:g}.csv", bundle.curve.tangents[k].x0)));
    write_file(written.back(), tangent_csv(bundle.curve, k));
  }
  return written;
}

}  // namespace ordinal
