#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

namespace ordinal {

/// MT19937 stream that reproduces numpy's legacy `RandomState` draws for a
/// scalar seed: the same tempered words, the same 53-bit doubles and the same
/// polar-method Gaussians (including the cached second deviate).
class ReferenceStream {
 public:
  static constexpr std::size_t kStateWords = 624;

  struct State {
    std::array<std::uint32_t, kStateWords> words{};
    std::size_t index = kStateWords;  // always in [0, 624]
    std::optional<double> gauss_spare;
  };

  /// Knuth-style scalar initialization (`init_genrand`).
  explicit ReferenceStream(std::uint32_t seed);

  std::uint32_t next_u32();

  /// (a*2^26 + b) / 2^53 with a = u32 >> 5, b = u32 >> 6. Two words per call.
  double next_double53();

  /// Marsaglia polar method; returns the second deviate of a fresh pair and
  /// caches the first for the next call.
  double next_gauss();

  /// mean + std * next_gauss(). Throws std::invalid_argument for std < 0.
  double next_normal(double mean, double std);

  const State& state() const noexcept { return state_; }

 private:
  void twist();

  State state_;
};

}  // namespace ordinal
