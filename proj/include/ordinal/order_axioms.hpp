#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "ordinal/simulate.hpp"

namespace ordinal {

// The six axioms of dense linear order without endpoints, in catalogue order.
enum class AxiomId {
  A1_Irreflexivity,
  A2_Transitivity,
  A3_Comparability,
  A4_NoGreatest,
  A5_NoLeast,
  A6_Density,
};

inline constexpr std::array<AxiomId, 6> kAllAxioms = {
    AxiomId::A1_Irreflexivity, AxiomId::A2_Transitivity, AxiomId::A3_Comparability,
    AxiomId::A4_NoGreatest,    AxiomId::A5_NoLeast,      AxiomId::A6_Density,
};

std::string_view axiom_code(AxiomId id);  // "A1" .. "A6"
std::string_view axiom_name(AxiomId id);  // "Irreflexivity", ...

// Witness variants. Failure witnesses carry elements of the checked structure;
// Vacuous and Exhaustive document how a pass was established.
template <typename T>
struct SelfLoop {
  T a;
  bool operator==(const SelfLoop&) const = default;
};
template <typename T>
struct BrokenTriple {
  T a, b, c;
  bool operator==(const BrokenTriple&) const = default;
};
template <typename T>
struct IncomparablePair {
  T a, b;
  bool operator==(const IncomparablePair&) const = default;
};
template <typename T>
struct MaxElement {
  T a;
  bool operator==(const MaxElement&) const = default;
};
template <typename T>
struct MinElement {
  T a;
  bool operator==(const MinElement&) const = default;
};
template <typename T>
struct AdjacentGap {
  T a, b;
  bool operator==(const AdjacentGap&) const = default;
};
struct Vacuous {
  bool operator==(const Vacuous&) const = default;
};
struct Exhaustive {
  std::size_t count = 0;
  bool operator==(const Exhaustive&) const = default;
};

template <typename T>
using Witness = std::variant<SelfLoop<T>, BrokenTriple<T>, IncomparablePair<T>, MaxElement<T>,
                             MinElement<T>, AdjacentGap<T>, Vacuous, Exhaustive>;

template <typename T>
struct AxiomVerdict {
  AxiomId axiom = AxiomId::A1_Irreflexivity;
  bool passed = false;
  Witness<T> witness = Vacuous{};
  std::size_t checked = 0;
};

template <typename T>
using Verdicts = std::array<AxiomVerdict<T>, 6>;

/// Rewrites the element type of a witness, e.g. from domain indices to ids.
template <typename To, typename From, typename F>
Witness<To> map_witness(const Witness<From>& w, F&& f) {
  return std::visit(
      [&](const auto& v) -> Witness<To> {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, SelfLoop<From>>) {
          return SelfLoop<To>{f(v.a)};
        } else if constexpr (std::is_same_v<V, BrokenTriple<From>>) {
          return BrokenTriple<To>{f(v.a), f(v.b), f(v.c)};
        } else if constexpr (std::is_same_v<V, IncomparablePair<From>>) {
          return IncomparablePair<To>{f(v.a), f(v.b)};
        } else if constexpr (std::is_same_v<V, MaxElement<From>>) {
          return MaxElement<To>{f(v.a)};
        } else if constexpr (std::is_same_v<V, MinElement<From>>) {
          return MinElement<To>{f(v.a)};
        } else if constexpr (std::is_same_v<V, AdjacentGap<From>>) {
          return AdjacentGap<To>{f(v.a), f(v.b)};
        } else {
          return v;
        }
      },
      w);
}

template <typename To, typename From, typename F>
Verdicts<To> map_verdicts(const Verdicts<From>& in, F&& f) {
  Verdicts<To> out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    out[i] = AxiomVerdict<To>{in[i].axiom, in[i].passed, map_witness<To>(in[i].witness, f),
                              in[i].checked};
  }
  return out;
}

/// An explicit strict relation over opaque element ids.
struct FiniteRelation {
  std::vector<std::string> domain;
  std::vector<std::pair<std::string, std::string>> pairs;
};

std::vector<double> sorted_distinct(const SampleSet& sample);

/// Every pair of sorted-adjacent distinct values, ascending.
std::vector<std::pair<double, double>> adjacent_gaps(const SampleSet& sample);

/// Numeric fast path. Throws std::invalid_argument on an empty sample or NaN.
Verdicts<double> check_numeric(const SampleSet& sample);

/// Direct quantifier evaluation over an indexed domain {0..n-1}. `related(i, j)`
/// is queried once per ordered pair. Counterexamples are the first in
/// lexicographic index order. O(n^3 / 64) time, O(n^2) bits.
Verdicts<std::size_t> check_indexed_relation(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& related);

/// Throws std::invalid_argument for duplicate ids or a pair naming an unknown id.
Verdicts<std::string> check_relation(const FiniteRelation& rel);

struct AxiomMatrix {
  std::vector<std::string> rows;
  std::vector<Verdicts<double>> cells;
};

AxiomMatrix check_all(std::span<const SampleSet> samples);

}  // namespace ordinal
