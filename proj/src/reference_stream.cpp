#include "ordinal/reference_stream.hpp"

#include <cmath>
#include <stdexcept>

namespace ordinal {

namespace {

constexpr std::size_t kShift = 397;
constexpr std::uint32_t kMatrixA = 0x9908b0dfU;
constexpr std::uint32_t kUpperMask = 0x80000000U;
constexpr std::uint32_t kLowerMask = 0x7fffffffU;

}  // namespace

ReferenceStream::ReferenceStream(std::uint32_t seed) {
  auto& mt = state_.words;
  mt[0] = seed;
  for (std::size_t i = 1; i < kStateWords; ++i) {
    mt[i] = 1812433253U * (mt[i - 1] ^ (mt[i - 1] >> 30)) + static_cast<std::uint32_t>(i);
  }
  state_.index = kStateWords;
  state_.gauss_spare.reset();
}

void ReferenceStream::twist() {
  auto& mt = state_.words;
  for (std::size_t i = 0; i < kStateWords; ++i) {
    const std::uint32_t y = (mt[i] & kUpperMask) | (mt[(i + 1) % kStateWords] & kLowerMask);
    mt[i] = mt[(i + kShift) % kStateWords] ^ (y >> 1) ^ ((y & 1U) ? kMatrixA : 0U);
  }
  state_.index = 0;
}

std::uint32_t ReferenceStream::next_u32() {
  if (state_.index >= kStateWords) {
    twist();
  }
  std::uint32_t y = state_.words[state_.index++];
  y ^= (y >> 11);
  y ^= (y << 7) & 0x9d2c5680U;
  y ^= (y << 15) & 0xefc60000U;
  y ^= (y >> 18);
  return y;
}

double ReferenceStream::next_double53() {
  const std::uint32_t a = next_u32() >> 5;
  const std::uint32_t b = next_u32() >> 6;
  return (a * 67108864.0 + b) / 9007199254740992.0;
}

double ReferenceStream::next_gauss() {
  if (state_.gauss_spare) {
    const double spare = *state_.gauss_spare;
    state_.gauss_spare.reset();
    return spare;
  }
  double x1 = 0.0;
  double x2 = 0.0;
  double r2 = 0.0;
  do {
    x1 = 2.0 * next_double53() - 1.0;
    x2 = 2.0 * next_double53() - 1.0;
    r2 = x1 * x1 + x2 * x2;
  } while (r2 >= 1.0 || r2 == 0.0);
  const double f = std::sqrt(-2.0 * std::log(r2) / r2);
  state_.gauss_spare = f * x1;
  return f * x2;
}

double ReferenceStream::next_normal(double mean, double std) {
  if (!(std >= 0.0)) {
    throw std::invalid_argument("normal: standard deviation must be >= 0");
  }
  return mean + std * next_gauss();
}

}  // namespace ordinal
