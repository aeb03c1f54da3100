#include "ordinal/ideal_order.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordinal/reference_stream.hpp"

namespace ordinal {

namespace {

const Rational kHalf(BigInt(1), BigInt(2));
constexpr std::uint32_t kMaxProbeDenominator = 1000000;

}  // namespace

OpenInterval::OpenInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo < hi)) {
    throw std::invalid_argument("OpenInterval: lo must be < hi (got " + lo.to_string() + ", " +
                                hi.to_string() + ")");
  }
}

Rational density_witness(const Rational& a, const Rational& b) {
  if (!(a < b)) {
    throw std::invalid_argument("density_witness: need a < b (got " + a.to_string() + ", " +
                                b.to_string() + ")");
  }
  return (a + b) * kHalf;
}

Rational above_witness(const Rational& a, const OpenInterval& iv) {
  if (!iv.contains(a)) {
    throw std::invalid_argument("above_witness: " + a.to_string() + " is not inside the interval");
  }
  return (a + iv.hi) * kHalf;
}

Rational below_witness(const Rational& a, const OpenInterval& iv) {
  if (!iv.contains(a)) {
    throw std::invalid_argument("below_witness: " + a.to_string() + " is not inside the interval");
  }
  return (iv.lo + a) * kHalf;
}

std::vector<OpenInterval> bisect_chain(const Rational& a, const Rational& b, int k) {
  if (k < 1) {
    throw std::invalid_argument("bisect_chain: k must be >= 1");
  }
  std::vector<OpenInterval> chain;
  chain.reserve(static_cast<std::size_t>(k) + 1);
  chain.emplace_back(a, b);
  for (int i = 0; i < k; ++i) {
    const OpenInterval& last = chain.back();
    chain.emplace_back(last.lo, density_witness(last.lo, last.hi));
  }
  return chain;
}

std::vector<Rational> draw_probes(const OpenInterval& iv, int count, std::uint32_t seed) {
  if (count < 1) {
    throw std::invalid_argument("draw_probes: count must be >= 1");
  }
  ReferenceStream stream(seed);
  const Rational width = iv.width();
  std::vector<Rational> probes;
  probes.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const std::uint32_t den = 2 + stream.next_u32() % (kMaxProbeDenominator - 1);
    const std::uint32_t num = 1 + stream.next_u32() % (den - 1);
    probes.push_back(iv.lo + width * Rational(BigInt(num), BigInt(den)));
  }
  return probes;
}

Verdicts<Rational> verify_ideal_axioms(const OpenInterval& iv, std::vector<Rational> members) {
  if (members.empty()) {
    throw std::invalid_argument("verify_ideal_axioms: need at least one member");
  }
  for (const auto& m : members) {
    if (!iv.contains(m)) {
      throw std::invalid_argument("verify_ideal_axioms: " + m.to_string() + " is outside the interval");
    }
  }
  // The structure is a set: repeated draws are one element.
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  // A1-A3 over the sampled structure, with every comparison exact.
  const auto indexed = check_indexed_relation(
      members.size(), [&](std::size_t a, std::size_t b) { return members[a] < members[b]; });
  Verdicts<Rational> out =
      map_verdicts<Rational>(indexed, [&](std::size_t i) { return members[i]; });

  // A4/A5: the successor/predecessor produced by the witness functions must be
  // a member of the interval strictly above/below each probe.
  out[3] = {AxiomId::A4_NoGreatest, true, Exhaustive{members.size()}, members.size()};
  out[4] = {AxiomId::A5_NoLeast, true, Exhaustive{members.size()}, members.size()};
  for (const auto& a : members) {
    if (out[3].passed) {
      const Rational up = above_witness(a, iv);
      if (!(a < up && iv.contains(up))) {
        out[3] = {AxiomId::A4_NoGreatest, false, MaxElement<Rational>{a}, members.size()};
      }
    }
    if (out[4].passed) {
      const Rational down = below_witness(a, iv);
      if (!(down < a && iv.contains(down))) {
        out[4] = {AxiomId::A5_NoLeast, false, MinElement<Rational>{a}, members.size()};
      }
    }
  }

  // A6: every ordered pair of probes gets a constructed intermediate.
  std::size_t checked = 0;
  out[5] = {AxiomId::A6_Density, true, Vacuous{}, 0};
  for (std::size_t i = 0; i < members.size() && out[5].passed; ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      const Rational& a = members[i];
      const Rational& b = members[j];
      if (!(a < b)) continue;
      ++checked;
      const Rational c = density_witness(a, b);
      if (!(a < c && c < b && iv.contains(c))) {
        out[5] = {AxiomId::A6_Density, false, AdjacentGap<Rational>{a, b}, checked};
        break;
      }
    }
  }
  if (out[5].passed && checked > 0) {
    out[5] = {AxiomId::A6_Density, true, Exhaustive{checked}, checked};
  } else if (out[5].passed) {
    // One distinct probe: no pair to split, so also exercise the interval
    // itself through a member and its constructed successor.
    const Rational& a = members.front();
    const Rational b = above_witness(a, iv);
    const Rational c = density_witness(a, b);
    const bool ok = a < c && c < b && iv.contains(c);
    out[5] = ok ? AxiomVerdict<Rational>{AxiomId::A6_Density, true, Exhaustive{1}, 1}
                : AxiomVerdict<Rational>{AxiomId::A6_Density, false, AdjacentGap<Rational>{a, b}, 1};
  }
  return out;
}

Verdicts<Rational> verify_ideal_axioms(const OpenInterval& iv, int probes, std::uint32_t seed) {
  return verify_ideal_axioms(iv, draw_probes(iv, probes, seed));
}

SampleSet quantize_projection(const std::vector<Rational>& members, double lo, double hi,
                              int decimals) {
  SampleSet sample{"quantized projection", {}};
  sample.values.reserve(members.size());
  for (const auto& m : members) {
    sample.values.push_back(round_half_even(clip(m.to_double(), lo, hi), decimals));
  }
  return sample;
}

}  // namespace ordinal
