#include "ordinal/order_axioms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <unordered_map>

namespace ordinal {

std::string_view axiom_code(AxiomId id) {
  switch (id) {
    case AxiomId::A1_Irreflexivity: return "A1";
    case AxiomId::A2_Transitivity: return "A2";
    case AxiomId::A3_Comparability: return "A3";
    case AxiomId::A4_NoGreatest: return "A4";
    case AxiomId::A5_NoLeast: return "A5";
    case AxiomId::A6_Density: return "A6";
  }
  return "?";
}

std::string_view axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::A1_Irreflexivity: return "Irreflexivity";
    case AxiomId::A2_Transitivity: return "Transitivity";
    case AxiomId::A3_Comparability: return "Total comparability";
    case AxiomId::A4_NoGreatest: return "No greatest element";
    case AxiomId::A5_NoLeast: return "No least element";
    case AxiomId::A6_Density: return "Density";
  }
  return "?";
}

std::vector<double> sorted_distinct(const SampleSet& sample) {
  std::vector<double> values = sample.values;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<std::pair<double, double>> adjacent_gaps(const SampleSet& sample) {
  const auto distinct = sorted_distinct(sample);
  std::vector<std::pair<double, double>> gaps;
  for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
    gaps.emplace_back(distinct[i], distinct[i + 1]);
  }
  return gaps;
}

Verdicts<double> check_numeric(const SampleSet& sample) {
  if (sample.values.empty()) {
    throw std::invalid_argument("check_numeric: sample '" + sample.theme + "' is empty");
  }
  if (std::any_of(sample.values.begin(), sample.values.end(),
                  [](double v) { return std::isnan(v); })) {
    throw std::invalid_argument("check_numeric: sample '" + sample.theme + "' contains NaN");
  }
  const auto s = sorted_distinct(sample);
  const std::size_t n = sample.values.size();
  const std::size_t d = s.size();
  Verdicts<double> out;

  // A1: every value against itself.
  out[0] = {AxiomId::A1_Irreflexivity, true, Exhaustive{n}, n};
  for (const double v : sample.values) {
    if (v < v) {
      out[0] = {AxiomId::A1_Irreflexivity, false, SelfLoop<double>{v}, n};
      break;
    }
  }

  // A2: consecutive sorted triples. Any longer chain decomposes into these.
  const std::size_t triples = d >= 3 ? d - 2 : 0;
  out[1] = {AxiomId::A2_Transitivity, true, Exhaustive{triples}, triples};
  for (std::size_t i = 0; i + 2 < d; ++i) {
    const double a = s[i], b = s[i + 1], c = s[i + 2];
    if (a < b && b < c && !(a < c)) {
      out[1] = {AxiomId::A2_Transitivity, false, BrokenTriple<double>{a, b, c}, i + 1};
      break;
    }
  }

  // A3: every unordered pair of distinct values.
  const std::size_t pairs = d * (d - 1) / 2;
  out[2] = {AxiomId::A3_Comparability, true, Exhaustive{pairs}, pairs};
  for (std::size_t i = 0; i < d && out[2].passed; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const double a = s[i], b = s[j];
      if (!(a < b || b < a || a == b)) {
        out[2] = {AxiomId::A3_Comparability, false, IncomparablePair<double>{a, b}, pairs};
        break;
      }
    }
  }

  // A4/A5: a finite nonempty set always has extrema.
  out[3] = {AxiomId::A4_NoGreatest, false, MaxElement<double>{s.back()}, n};
  out[4] = {AxiomId::A5_NoLeast, false, MinElement<double>{s.front()}, n};

  // A6: the first sorted-adjacent distinct pair has nothing strictly between.
  if (d < 2) {
    out[5] = {AxiomId::A6_Density, true, Vacuous{}, 0};
  } else {
    out[5] = {AxiomId::A6_Density, false, AdjacentGap<double>{s[0], s[1]}, 1};
  }
  return out;
}

namespace {

// Square boolean matrix stored as 64-bit words per row.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }
  bool test(std::size_t r, std::size_t c) const {
    return (row(r)[c / 64] >> (c % 64)) & 1U;
  }
  bool row_any(std::size_t r) const {
    const auto* p = row(r);
    return std::any_of(p, p + words_, [](std::uint64_t w) { return w != 0; });
  }
  // Lowest c with this(x, c) && !this(y, c), or n if none.
  std::size_t first_and_not(std::size_t x, std::size_t y) const {
    const auto* px = row(x);
    const auto* py = row(y);
    for (std::size_t w = 0; w < words_; ++w) {
      if (const std::uint64_t m = px[w] & ~py[w]) {
        return w * 64 + static_cast<std::size_t>(__builtin_ctzll(m));
      }
    }
    return n_;
  }
  // Whether row x of this and row y of other share a set bit.
  bool intersects(std::size_t x, const BitMatrix& other, std::size_t y) const {
    const auto* px = row(x);
    const auto* py = other.row(y);
    for (std::size_t w = 0; w < words_; ++w) {
      if (px[w] & py[w]) return true;
    }
    return false;
  }

 private:
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

Verdicts<std::size_t> check_indexed_relation(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& related) {
  BitMatrix fwd(n);  // fwd(a, b) <=> a < b
  BitMatrix bwd(n);  // bwd(b, a) <=> a < b
  std::size_t edges = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (related(a, b)) {
        fwd.set(a, b);
        bwd.set(b, a);
        ++edges;
      }
    }
  }

  Verdicts<std::size_t> out;

  out[0] = {AxiomId::A1_Irreflexivity, true, Exhaustive{n}, n};
  for (std::size_t a = 0; a < n; ++a) {
    if (fwd.test(a, a)) {
      out[0] = {AxiomId::A1_Irreflexivity, false, SelfLoop<std::size_t>{a}, a + 1};
      break;
    }
  }

  // A2: for each a < b, every successor c of b must be a successor of a.
  out[1] = {AxiomId::A2_Transitivity, true, Exhaustive{n * n * n}, n * n * n};
  for (std::size_t a = 0; a < n && out[1].passed; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!fwd.test(a, b)) continue;
      if (const std::size_t c = fwd.first_and_not(b, a); c < n) {
        out[1] = {AxiomId::A2_Transitivity, false, BrokenTriple<std::size_t>{a, b, c},
                  (a * n + b) * n + c + 1};
        break;
      }
    }
  }

  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  out[2] = {AxiomId::A3_Comparability, true, Exhaustive{pairs}, pairs};
  for (std::size_t a = 0; a < n && out[2].passed; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!fwd.test(a, b) && !fwd.test(b, a)) {
        out[2] = {AxiomId::A3_Comparability, false, IncomparablePair<std::size_t>{a, b}, pairs};
        break;
      }
    }
  }

  out[3] = {AxiomId::A4_NoGreatest, true, Exhaustive{n}, n};
  for (std::size_t a = 0; a < n; ++a) {
    if (!fwd.row_any(a)) {
      out[3] = {AxiomId::A4_NoGreatest, false, MaxElement<std::size_t>{a}, a + 1};
      break;
    }
  }
  out[4] = {AxiomId::A5_NoLeast, true, Exhaustive{n}, n};
  for (std::size_t a = 0; a < n; ++a) {
    if (!bwd.row_any(a)) {
      out[4] = {AxiomId::A5_NoLeast, false, MinElement<std::size_t>{a}, a + 1};
      break;
    }
  }

  // A6: for each a < b, some c with a < c and c < b.
  if (edges == 0) {
    out[5] = {AxiomId::A6_Density, true, Vacuous{}, 0};
  } else {
    out[5] = {AxiomId::A6_Density, true, Exhaustive{edges}, edges};
    std::size_t seen = 0;
    for (std::size_t a = 0; a < n && out[5].passed; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!fwd.test(a, b)) continue;
        ++seen;
        if (!fwd.intersects(a, bwd, b)) {
          out[5] = {AxiomId::A6_Density, false, AdjacentGap<std::size_t>{a, b}, seen};
          break;
        }
      }
    }
  }
  return out;
}

Verdicts<std::string> check_relation(const FiniteRelation& rel) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < rel.domain.size(); ++i) {
    if (!index.emplace(rel.domain[i], i).second) {
      throw std::invalid_argument("check_relation: duplicate domain id '" + rel.domain[i] + "'");
    }
  }
  const std::size_t n = rel.domain.size();
  std::vector<char> matrix(n * n, 0);
  for (const auto& [from, to] : rel.pairs) {
    const auto fi = index.find(from);
    const auto ti = index.find(to);
    if (fi == index.end() || ti == index.end()) {
      throw std::invalid_argument("check_relation: pair (" + from + ", " + to +
                                  ") references an unknown id");
    }
    matrix[fi->second * n + ti->second] = 1;
  }
  const auto indexed = check_indexed_relation(
      n, [&](std::size_t a, std::size_t b) { return matrix[a * n + b] != 0; });
  return map_verdicts<std::string>(indexed, [&](std::size_t i) { return rel.domain[i]; });
}

AxiomMatrix check_all(std::span<const SampleSet> samples) {
  // Rows are independent; evaluate concurrently and join in input order.
  std::vector<std::future<Verdicts<double>>> pending;
  pending.reserve(samples.size());
  for (const auto& sample : samples) {
    pending.push_back(std::async(std::launch::async, [&sample] { return check_numeric(sample); }));
  }
  AxiomMatrix matrix;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    matrix.rows.push_back(samples[i].theme);
    matrix.cells.push_back(pending[i].get());
  }
  return matrix;
}

}  // namespace ordinal
