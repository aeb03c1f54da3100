#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fixtures.hpp"
#include "ordinal/reference_stream.hpp"

using ordinal::ReferenceStream;
namespace oracle = ordinal::fixtures::numpy_oracle;

TEST_CASE("scalar seeding follows the Knuth initializer") {
  ReferenceStream s(42);
  const auto& w = s.state().words;
  CHECK(w[0] == 42U);
  for (std::size_t i = 1; i < w.size(); ++i) {
    const std::uint32_t expect =
        static_cast<std::uint32_t>(1812433253ULL * (w[i - 1] ^ (w[i - 1] >> 30)) + i);
    REQUIRE(w[i] == expect);
  }
  CHECK(s.state().index == 624);
  CHECK_FALSE(s.state().gauss_spare.has_value());

  ReferenceStream again(42);
  CHECK(again.state().words == w);
}

TEST_CASE("distinct seeds give distinct first words") {
  ReferenceStream a(0);
  ReferenceStream b(1);
  CHECK(a.next_u32() != b.next_u32());
}

TEST_CASE("tempered words match the reference implementation") {
  ReferenceStream d(5489);
  for (const auto expect : oracle::kU32Seed5489) CHECK(d.next_u32() == expect);
  ReferenceStream s(42);
  for (const auto expect : oracle::kU32Seed42) CHECK(s.next_u32() == expect);
}

TEST_CASE("index cycles through whole blocks") {
  ReferenceStream s(7);
  for (int i = 0; i < 10000; ++i) {
    s.next_u32();
    REQUIRE(s.state().index <= 624);
    REQUIRE(s.state().index >= 1);
  }
  CHECK(s.state().index == 10000 % 624);
}

TEST_CASE("copied state replays identically") {
  ReferenceStream a(123);
  for (int i = 0; i < 777; ++i) a.next_u32();
  ReferenceStream b = a;
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u32() == b.next_u32());
}

TEST_CASE("53-bit doubles") {
  ReferenceStream s(42);
  for (const double expect : oracle::kDoubleSeed42) CHECK(s.next_double53() == expect);

  ReferenceStream r(2024);
  double sum = 0.0;
  for (int i = 0; i < 1000000; ++i) {
    const double u = r.next_double53();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    if (i < 100000) sum += u;
  }
  const double mean = sum / 100000.0;
  CHECK(mean >= 0.497);
  CHECK(mean <= 0.503);

  // Two words per double.
  ReferenceStream x(9);
  ReferenceStream y(9);
  x.next_double53();
  y.next_u32();
  y.next_u32();
  CHECK(x.next_u32() == y.next_u32());
}

TEST_CASE("polar gaussians match the reference stream") {
  ReferenceStream s(42);
  CHECK(s.next_gauss() == doctest::Approx(oracle::kGauss42_0).epsilon(1e-15));
  CHECK(s.state().gauss_spare.has_value());
  CHECK(s.next_gauss() == doctest::Approx(oracle::kGauss42_1).epsilon(1e-15));
  CHECK_FALSE(s.state().gauss_spare.has_value());
  for (int i = 2; i < 9999; ++i) s.next_gauss();
  CHECK(std::abs(s.next_gauss() - oracle::kGauss42_9999) < 1e-12);
  CHECK(std::abs(s.next_gauss() - oracle::kGauss42_10000) < 1e-12);

  ReferenceStream z(0);
  for (const double expect : oracle::kGaussSeed0) CHECK(std::abs(z.next_gauss() - expect) < 1e-12);
}

TEST_CASE("spare discipline: loop and spare alternate, draws come in polar pairs") {
  ReferenceStream s(31337);
  // Words consumed by one call; a call never spans more than one refill here.
  auto consumed = [&](auto&& call) {
    const std::size_t before = s.state().index;
    call();
    const std::size_t after = s.state().index;
    return after >= before ? after - before : after + 624 - before;
  };
  std::size_t total = 0;
  for (int k = 0; k < 500; ++k) {
    const std::size_t loop_words = consumed([&] { s.next_gauss(); });
    REQUIRE(s.state().gauss_spare.has_value());
    REQUIRE(loop_words > 0);
    REQUIRE(loop_words % 4 == 0);  // two doubles per attempt, two words per double
    const std::size_t spare_words = consumed([&] { s.next_gauss(); });
    REQUIRE_FALSE(s.state().gauss_spare.has_value());
    REQUIRE(spare_words == 0);
    total += loop_words;
  }
  CHECK(total % 4 == 0);
}

TEST_CASE("gaussian marginals over 1e5 draws") {
  ReferenceStream s(99);
  const int n = 100000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = s.next_gauss();
    sum += g;
    sq += g * g;
  }
  const double mean = sum / n;
  const double sd = std::sqrt((sq - n * mean * mean) / (n - 1));
  CHECK(std::abs(mean) <= 4.0 / std::sqrt(n));
  CHECK(std::abs(sd - 1.0) <= 4.0 / std::sqrt(2.0 * n));
}

TEST_CASE("next_normal") {
  ReferenceStream s(42);
  const double v = s.next_normal(4.1169, 0.2709);
  CHECK(std::abs(v - (4.1169 + 0.2709 * oracle::kGauss42_0)) < 1e-15);
  CHECK(std::nearbyint(v * 1e4) == 42515.0);

  ReferenceStream t(1);
  CHECK(t.next_normal(3.0, 0.0) == 3.0);
  CHECK_THROWS_AS(t.next_normal(0.0, -1.0), std::invalid_argument);
}
