#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "ordinal/order_axioms.hpp"
#include "ordinal/rational.hpp"
#include "ordinal/stats.hpp"

namespace ordinal {

// {"axiom":"A4","passed":false,"witness":{"kind":"max_element","value":4.5447},"checked":10000}
nlohmann::json verdict_json(const AxiomVerdict<double>& v);
nlohmann::json verdict_json(const AxiomVerdict<std::string>& v);
nlohmann::json verdict_json(const AxiomVerdict<Rational>& v);  // values as "n/d" strings

template <typename T>
nlohmann::json verdicts_json(const Verdicts<T>& verdicts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : verdicts) arr.push_back(verdict_json(v));
  return arr;
}

/// {"rows":[{"name":..., "axioms":[...]}, ...]}
nlohmann::json matrix_json(const AxiomMatrix& matrix);

/// True/False grid, one row per theme, columns A1..A6.
std::string render_matrix_table(const AxiomMatrix& matrix);

/// One line per failing axiom with its witness, for humans.
std::string describe_witness(const Witness<double>& w);

nlohmann::json summary_json(const ThemeSummary& s);
nlohmann::json composite_json(const Composite& c, std::span<const ThemeSummary> summaries);

}  // namespace ordinal
