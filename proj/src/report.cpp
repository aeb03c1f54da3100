#include "ordinal/report.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace ordinal {

namespace {

template <typename T, typename ToJson>
nlohmann::json witness_json(const Witness<T>& w, ToJson&& value) {
  return std::visit(
      [&](const auto& v) -> nlohmann::json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, SelfLoop<T>>) {
          return {{"kind", "self_loop"}, {"value", value(v.a)}};
        } else if constexpr (std::is_same_v<V, BrokenTriple<T>>) {
          return {{"kind", "broken_triple"}, {"a", value(v.a)}, {"b", value(v.b)}, {"c", value(v.c)}};
        } else if constexpr (std::is_same_v<V, IncomparablePair<T>>) {
          return {{"kind", "incomparable_pair"}, {"a", value(v.a)}, {"b", value(v.b)}};
        } else if constexpr (std::is_same_v<V, MaxElement<T>>) {
          return {{"kind", "max_element"}, {"value", value(v.a)}};
        } else if constexpr (std::is_same_v<V, MinElement<T>>) {
          return {{"kind", "min_element"}, {"value", value(v.a)}};
        } else if constexpr (std::is_same_v<V, AdjacentGap<T>>) {
          return {{"kind", "adjacent_gap"}, {"a", value(v.a)}, {"b", value(v.b)}};
        } else if constexpr (std::is_same_v<V, Vacuous>) {
          return {{"kind", "vacuous"}};
        } else {
          return {{"kind", "exhaustive"}, {"count", v.count}};
        }
      },
      w);
}

template <typename T, typename ToJson>
nlohmann::json verdict_json_impl(const AxiomVerdict<T>& v, ToJson&& value) {
  nlohmann::json j;
  j["axiom"] = std::string(axiom_code(v.axiom));
  j["passed"] = v.passed;
  j["witness"] = witness_json(v.witness, value);
  j["checked"] = v.checked;
  return j;
}

}  // namespace

nlohmann::json verdict_json(const AxiomVerdict<double>& v) {
  return verdict_json_impl(v, [](double x) { return x; });
}

nlohmann::json verdict_json(const AxiomVerdict<std::string>& v) {
  return verdict_json_impl(v, [](const std::string& x) { return x; });
}

nlohmann::json verdict_json(const AxiomVerdict<Rational>& v) {
  return verdict_json_impl(v, [](const Rational& x) { return x.to_string(); });
}

nlohmann::json matrix_json(const AxiomMatrix& matrix) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    rows.push_back({{"name", matrix.rows[i]}, {"axioms", verdicts_json(matrix.cells[i])}});
  }
  return {{"rows", rows}};
}

std::string render_matrix_table(const AxiomMatrix& matrix) {
  std::size_t name_w = 0;
  for (const auto& r : matrix.rows) name_w = std::max(name_w, r.size());
  std::string out = fmt::format("{:<{}}", "", name_w);
  for (const auto id : kAllAxioms) out += fmt::format("  {:>5}", axiom_code(id));
  out += '\n';
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    out += fmt::format("{:<{}}", matrix.rows[i], name_w);
    for (const auto& v : matrix.cells[i]) out += fmt::format("  {:>5}", v.passed ? "True" : "False");
    out += '\n';
  }
  return out;
}

std::string describe_witness(const Witness<double>& w) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, SelfLoop<double>>) {
          return fmt::format("{:.4f} < {:.4f} holds", v.a, v.a);
        } else if constexpr (std::is_same_v<V, BrokenTriple<double>>) {
          return fmt::format("{:.4f} < {:.4f} < {:.4f} but not {:.4f} < {:.4f}", v.a, v.b, v.c, v.a, v.c);
        } else if constexpr (std::is_same_v<V, IncomparablePair<double>>) {
          return fmt::format("{:.4f} and {:.4f} are incomparable", v.a, v.b);
        } else if constexpr (std::is_same_v<V, MaxElement<double>>) {
          return fmt::format("maximum {:.4f}: nothing above it", v.a);
        } else if constexpr (std::is_same_v<V, MinElement<double>>) {
          return fmt::format("minimum {:.4f}: nothing below it", v.a);
        } else if constexpr (std::is_same_v<V, AdjacentGap<double>>) {
          return fmt::format("nothing strictly between {:.4f} and {:.4f}", v.a, v.b);
        } else if constexpr (std::is_same_v<V, Vacuous>) {
          return "vacuous";
        } else {
          return fmt::format("exhaustive over {} cases", v.count);
        }
      },
      w);
}

nlohmann::json summary_json(const ThemeSummary& s) {
  return {{"theme", s.theme}, {"n", s.n},     {"mean", s.mean},
          {"std", s.std},     {"min", s.min}, {"max", s.max}};
}

nlohmann::json composite_json(const Composite& c, std::span<const ThemeSummary> summaries) {
  nlohmann::json ordered = nlohmann::json::array();
  for (std::size_t i = 0; i < c.weights.size(); ++i) {
    ordered.push_back({{"theme", summaries[i].theme}, {"weight", c.weights[i]}});
  }
  return {{"weighting", c.weighting == Weighting::Spec ? "spec" : "sample"},
          {"weights", ordered},
          {"score", c.score}};
}

}  // namespace ordinal
