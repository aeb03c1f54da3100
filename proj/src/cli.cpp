#include "ordinal/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <system_error>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "ordinal/continuity_plot.hpp"
#include "ordinal/dataset.hpp"
#include "ordinal/ideal_order.hpp"
#include "ordinal/order_axioms.hpp"
#include "ordinal/report.hpp"
#include "ordinal/stats.hpp"

namespace ordinal::cli {

namespace {

// Input problems that map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint32_t parse_seed(const std::string& text, const std::string& origin) {
  std::uint32_t seed = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError(origin + ": '" + text + "' is not a 32-bit unsigned seed");
  }
  return seed;
}

SimulationConfig load_config_file(const std::filesystem::path& path, bool& seed_set) {
  std::ifstream file(path);
  if (!file) {
    throw UsageError("cannot open config '" + path.string() + "'");
  }
  SimulationConfig config = SimulationConfig::defaults();
  try {
    const auto j = nlohmann::json::parse(file);
    if (!j.is_object()) throw UsageError("config '" + path.string() + "': expected a JSON object");
    if (j.contains("themes")) {
      config.themes.clear();
      for (const auto& t : j.at("themes")) {
        config.themes.push_back(
            {t.at("name").get<std::string>(), t.at("mean").get<double>(), t.at("std").get<double>()});
      }
    }
    if (j.contains("n")) config.n = j.at("n").get<int>();
    if (j.contains("seed")) {
      const auto s = j.at("seed").get<std::int64_t>();
      if (s < 0 || s > 0xffffffffLL) throw UsageError("config: seed out of 32-bit range");
      config.seed = static_cast<std::uint32_t>(s);
      seed_set = true;
    }
    if (j.contains("lo")) config.lo = j.at("lo").get<double>();
    if (j.contains("hi")) config.hi = j.at("hi").get<double>();
    if (j.contains("decimals")) config.decimals = j.at("decimals").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config '" + path.string() + "': " + e.what());
  }
  return config;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text) || !file.flush()) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
}

struct CommonOptions {
  std::optional<std::string> config;
  std::optional<std::uint32_t> seed;
  std::optional<int> n;
  std::optional<std::string> out;
};

bool strict_failure(const Verdicts<double>& v) {
  return !v[3].passed || !v[4].passed || !v[5].passed;
}

int cmd_simulate(const CommonOptions& opt, std::optional<std::size_t> head, std::ostream& out) {
  const auto config = resolve_config(opt.config, opt.seed, opt.n);
  const auto samples = run_simulation(config);
  if (opt.out) {
    write_text(*opt.out, write_dataset_csv(samples, config.decimals));
  }
  if (head) {
    out << format_head(samples, *head, config.decimals);
  } else if (!opt.out) {
    out << write_dataset_csv(samples, config.decimals);
  }
  return kOk;
}

int cmd_check(const std::string& dataset, const CommonOptions& opt, bool json, bool strict,
              std::ostream& out) {
  const auto samples = read_dataset_csv(std::filesystem::path(dataset));
  const auto matrix = check_all(samples);
  const auto report = matrix_json(matrix);
  if (opt.out) write_text(*opt.out, report.dump(2) + "\n");
  if (json) {
    out << report.dump(2) << "\n";
  } else {
    out << "Axiom evaluation (" << (samples.empty() ? 0 : samples.front().values.size())
        << " rows, 6 axioms x " << samples.size() << " themes):\n\n";
    out << render_matrix_table(matrix) << "\nWitnesses:\n";
    for (std::size_t r = 0; r < matrix.rows.size(); ++r) {
      out << "  " << matrix.rows[r] << "\n";
      for (const auto& v : matrix.cells[r]) {
        out << fmt::format("    {} {:<20} {:<5}  {}\n", axiom_code(v.axiom), axiom_name(v.axiom),
                           v.passed ? "True" : "False", describe_witness(v.witness));
      }
    }
  }
  if (strict) {
    for (const auto& row : matrix.cells) {
      if (strict_failure(row)) return kStrictDloFailed;
    }
  }
  return kOk;
}

int cmd_report(const std::string& dataset, const CommonOptions& opt, const std::string& weighting,
               std::ostream& out) {
  const auto samples = read_dataset_csv(std::filesystem::path(dataset));
  std::vector<ThemeSummary> summaries;
  nlohmann::json summary = nlohmann::json::array();
  for (const auto& s : samples) {
    summaries.push_back(summarize(s));
    summary.push_back(summary_json(summaries.back()));
  }
  Composite composite;
  if (weighting == "sample") {
    composite = composite_score(summaries, {}, Weighting::Sample);
  } else {
    const auto config = resolve_config(opt.config, opt.seed, opt.n);
    std::vector<ThemeSpec> specs;
    for (const auto& s : samples) {
      const auto it = std::find_if(config.themes.begin(), config.themes.end(),
                                   [&](const ThemeSpec& t) { return t.name == s.theme; });
      if (it == config.themes.end()) {
        throw UsageError("column '" + s.theme +
                         "' has no theme spec in the config; use --weighting sample or --config");
      }
      specs.push_back(*it);
    }
    composite = composite_score(summaries, specs, Weighting::Spec);
  }
  const nlohmann::json report = {{"summary", summary},
                                 {"composite", composite_json(composite, summaries)}};
  if (opt.out) write_text(*opt.out, report.dump(2) + "\n");
  out << report.dump(2) << "\n";
  return kOk;
}

int cmd_plot(const std::optional<std::string>& dataset, const CommonOptions& opt,
             const std::string& source, int bins, std::ostream& out) {
  SampleSet data;
  if (source == "figure3") {
    std::uint32_t seed = 42;
    if (opt.seed) {
      seed = *opt.seed;
    } else if (const char* env = std::getenv(kSeedEnvVar); env != nullptr && *env != '\0') {
      seed = parse_seed(env, kSeedEnvVar);
    }
    data = reference_plot_source(seed);
  } else if (source.rfind("theme:", 0) == 0) {
    const std::string name = source.substr(6);
    const auto samples = dataset ? read_dataset_csv(std::filesystem::path(*dataset))
                                 : run_simulation(resolve_config(opt.config, opt.seed, opt.n));
    const auto it = std::find_if(samples.begin(), samples.end(),
                                 [&](const SampleSet& s) { return s.theme == name; });
    if (it == samples.end()) throw UsageError("no theme named '" + name + "'");
    data = *it;
  } else {
    throw UsageError("--source must be 'figure3' or 'theme:<name>'");
  }
  const auto bundle = build_plot(data, bins);
  const std::filesystem::path svg = opt.out.value_or("continuity.svg");
  for (const auto& p : emit_plot(bundle, svg)) out << "wrote " << p.string() << "\n";
  return kOk;
}

std::string verdict_row(const std::string& label, bool a1, bool a2, bool a3, bool a4, bool a5,
                        bool a6) {
  std::string row = fmt::format("{:<22}", label);
  for (const bool b : {a1, a2, a3, a4, a5, a6}) row += fmt::format("  {:>5}", b ? "True" : "False");
  return row + "\n";
}

template <typename T>
std::string verdict_row(const std::string& label, const Verdicts<T>& v) {
  return verdict_row(label, v[0].passed, v[1].passed, v[2].passed, v[3].passed, v[4].passed,
                     v[5].passed);
}

int cmd_ideal(int probes, std::optional<std::uint32_t> seed_flag, const std::string& lo,
              const std::string& hi, const std::vector<std::string>& bisect, bool json,
              std::ostream& out) {
  if (probes < 1) throw UsageError("--probes must be >= 1");
  std::uint32_t seed = 42;
  if (seed_flag) {
    seed = *seed_flag;
  } else if (const char* env = std::getenv(kSeedEnvVar); env != nullptr && *env != '\0') {
    seed = parse_seed(env, kSeedEnvVar);
  }
  const OpenInterval iv(Rational::parse(lo), Rational::parse(hi));
  const auto members = draw_probes(iv, probes, seed);
  const auto ideal = verify_ideal_axioms(iv, members);
  const double lo_d = iv.lo.to_double();
  const double hi_d = iv.hi.to_double();
  const auto projection = check_numeric(quantize_projection(members, lo_d, hi_d, 4));

  std::vector<OpenInterval> chain;
  if (!bisect.empty()) {
    int k = 0;
    const auto& ks = bisect[2];
    const auto [ptr, ec] = std::from_chars(ks.data(), ks.data() + ks.size(), k);
    if (ec != std::errc() || ptr != ks.data() + ks.size() || k < 1) {
      throw UsageError("--bisect: k must be an integer >= 1");
    }
    chain = bisect_chain(Rational::parse(bisect[0]), Rational::parse(bisect[1]), k);
  }

  // The gap the finite projection cannot fill, filled constructively.
  std::optional<std::pair<Rational, Rational>> gap;
  if (const auto* g = std::get_if<AdjacentGap<double>>(&projection[5].witness)) {
    gap.emplace(Rational::parse(fmt::format("{:.4f}", g->a)), Rational::parse(fmt::format("{:.4f}", g->b)));
  }

  if (json) {
    nlohmann::json j;
    j["interval"] = {{"lo", iv.lo.to_string()}, {"hi", iv.hi.to_string()}};
    j["probes"] = probes;
    j["seed"] = seed;
    j["ideal"] = verdicts_json(ideal);
    j["projection"] = verdicts_json(projection);
    if (gap) {
      j["gap_midpoint"] = {{"a", gap->first.to_string()},
                           {"b", gap->second.to_string()},
                           {"c", density_witness(gap->first, gap->second).to_string()}};
    }
    if (!chain.empty()) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : chain) {
        arr.push_back({{"lo", c.lo.to_string()}, {"hi", c.hi.to_string()}, {"width", c.width().to_string()}});
      }
      j["bisect"] = arr;
    }
    out << j.dump(2) << "\n";
    return kOk;
  }

  out << fmt::format("Ideal order on ({}, {}) with {} probes, seed {}\n\n", iv.lo.to_string(),
                     iv.hi.to_string(), probes, seed);
  out << fmt::format("{:<22}", "");
  for (const auto id : kAllAxioms) out << fmt::format("  {:>5}", axiom_code(id));
  out << "\n" << verdict_row("ideal (exact)", ideal) << verdict_row("quantized projection", projection);
  out << "\nProjection witnesses:\n";
  for (const auto& v : projection) {
    if (!v.passed) out << "  " << axiom_code(v.axiom) << ": " << describe_witness(v.witness) << "\n";
  }
  if (gap) {
    out << fmt::format("Constructed intermediate: ({} + {}) / 2 = {}\n", gap->first.to_string(),
                       gap->second.to_string(), density_witness(gap->first, gap->second).to_string());
  }
  if (!chain.empty()) {
    out << "\nBisection chain:\n";
    for (std::size_t i = 0; i < chain.size(); ++i) {
      out << fmt::format("  {:>3}: ({}, {})  width {}\n", i, chain[i].lo.to_string(),
                         chain[i].hi.to_string(), chain[i].width().to_string());
    }
  }
  return kOk;
}

}  // namespace

SimulationConfig resolve_config(const std::optional<std::filesystem::path>& config_path,
                                std::optional<std::uint32_t> seed_flag, std::optional<int> n_flag) {
  bool seed_set = false;
  SimulationConfig config =
      config_path ? load_config_file(*config_path, seed_set) : SimulationConfig::defaults();
  if (!seed_set) {
    if (const char* env = std::getenv(kSeedEnvVar); env != nullptr && *env != '\0') {
      config.seed = parse_seed(env, kSeedEnvVar);
    }
  }
  if (seed_flag) config.seed = *seed_flag;
  if (n_flag) config.n = *n_flag;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return config;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Likert Monte Carlo simulation and dense-linear-order axiom checks",
               "ordinal_gate"};
  app.require_subcommand(1);

  CommonOptions common;
  auto add_common = [&](CLI::App* sub, bool with_sim) {
    sub->add_option("--out", common.out, "Output path");
    if (with_sim) {
      sub->add_option("--config", common.config, "JSON config (themes, n, seed, lo, hi, decimals)");
      sub->add_option("--seed", common.seed, "Random seed (overrides config and " +
                                                 std::string(kSeedEnvVar) + ")");
      sub->add_option("--n", common.n, "Synthetic students per theme");
    }
  };

  auto* simulate = app.add_subcommand("simulate", "Generate the theme dataset as CSV");
  add_common(simulate, true);
  std::optional<std::size_t> head;
  simulate->add_option("--head", head, "Print the first N rows");

  std::string dataset;
  bool json = false;
  bool strict = false;
  auto* check = app.add_subcommand("check", "Evaluate the six order axioms per theme");
  check->add_option("dataset", dataset, "Dataset CSV")->required();
  add_common(check, false);
  check->add_flag("--json", json, "Print the JSON report instead of the table");
  check->add_flag("--strict-dlo", strict, "Exit 3 when no-endpoints or density fail");

  std::string weighting = "spec";
  auto* report = app.add_subcommand("report", "Summary statistics and composite score");
  report->add_option("dataset", dataset, "Dataset CSV")->required();
  add_common(report, true);
  report->add_option("--weighting", weighting, "spec | sample")
      ->check(CLI::IsMember({"spec", "sample"}));

  std::optional<std::string> plot_dataset;
  std::string source = "figure3";
  int bins = 50;
  auto* plot = app.add_subcommand("plot", "Histogram, sine proxy and tangents as SVG + CSV");
  plot->add_option("dataset", plot_dataset, "Dataset CSV for --source theme:<name>");
  add_common(plot, true);
  plot->add_option("--source", source, "figure3 | theme:<name>");
  plot->add_option("--bins", bins, "Histogram bins")->check(CLI::PositiveNumber);

  int probes = 1000;
  std::string lo = "1";
  std::string hi = "5";
  std::vector<std::string> bisect;
  std::optional<std::uint32_t> ideal_seed;
  auto* ideal = app.add_subcommand("ideal", "Exact rational order on an open interval vs its quantized projection");
  ideal->add_option("--probes", probes, "Random members to check");
  ideal->add_option("--seed", ideal_seed, "Probe seed");
  ideal->add_option("--lo", lo, "Interval lower bound (rational)");
  ideal->add_option("--hi", hi, "Interval upper bound (rational)");
  ideal->add_option("--bisect", bisect, "a b k: bisection chain")->expected(3);
  ideal->add_flag("--json", json, "JSON output");

  std::vector<const char*> argv{"ordinal_gate"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*simulate) return cmd_simulate(common, head, out);
    if (*check) return cmd_check(dataset, common, json, strict, out);
    if (*report) return cmd_report(dataset, common, weighting, out);
    if (*plot) return cmd_plot(plot_dataset, common, source, bins, out);
    if (*ideal) return cmd_ideal(probes, ideal_seed, lo, hi, bisect, json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DatasetError& e) {
    err << "error: " << dataset << ": " << e.what() << "\n";
    return kUsageError;
  } catch (const std::system_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::logic_error& e) {
    // invalid_argument / domain_error: bad values reaching the library.
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace ordinal::cli
