#pragma once

#include <cstdint>
#include <vector>

#include "ordinal/order_axioms.hpp"
#include "ordinal/rational.hpp"
#include "ordinal/simulate.hpp"

namespace ordinal {

/// Open interval (lo, hi) of the rationals; membership is strict on both ends.
struct OpenInterval {
  Rational lo;
  Rational hi;

  OpenInterval(Rational lo_, Rational hi_);
  bool contains(const Rational& x) const { return lo < x && x < hi; }
  Rational width() const { return hi - lo; }
};

/// Midpoint of a < b; throws std::invalid_argument unless a < b.
Rational density_witness(const Rational& a, const Rational& b);

/// Strict successor / predecessor of a inside iv, halfway to the boundary.
/// Throws std::invalid_argument if a is not a member of iv.
Rational above_witness(const Rational& a, const OpenInterval& iv);
Rational below_witness(const Rational& a, const OpenInterval& iv);

/// Intervals 0..k: (a, b) followed by k successive left halves.
std::vector<OpenInterval> bisect_chain(const Rational& a, const Rational& b, int k);

/// `count` members of iv with denominators bounded by 10^6 (relative to iv),
/// drawn from a seeded reference stream.
std::vector<Rational> draw_probes(const OpenInterval& iv, int count, std::uint32_t seed);

/// Checks the six axioms over the interval using `probes` sampled members:
/// A1-A3 by exhaustive exact comparison over the probe set, A4-A6 by calling
/// the witness functions and verifying their postconditions exactly.
Verdicts<Rational> verify_ideal_axioms(const OpenInterval& iv, int probes, std::uint32_t seed);

/// Same axioms on a supplied member list (used by the contrast demonstration).
Verdicts<Rational> verify_ideal_axioms(const OpenInterval& iv, std::vector<Rational> members);

/// Rounds each member to `decimals` places after clipping to [lo, hi] in
/// double precision, the way the survey pipeline quantizes its draws.
SampleSet quantize_projection(const std::vector<Rational>& members, double lo, double hi,
                              int decimals);

}  // namespace ordinal
