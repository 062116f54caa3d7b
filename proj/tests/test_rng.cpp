#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "psdp/rng.hpp"

using namespace psdp;

TEST_CASE("underlying engine matches the standard's pinned output") {
  // The C++ standard fixes the 10000th consecutive invocation of a
  // default-constructed mt19937_64.
  std::mt19937_64 gen;
  gen.discard(9999);
  CHECK(gen() == 9981545732273789042ULL);
}

TEST_CASE("uniform01 applies the documented 53-bit mapping") {
  Rng a(123), b(123);
  for (int i = 0; i < 1000; ++i) {
    const double expected =
        static_cast<double>(b.next_u64() >> 11) * 0x1.0p-53;
    CHECK(a.uniform01() == expected);
  }
}

TEST_CASE("uniform01 stays in [0,1)") {
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("normal consumes exactly two raw draws and matches the formula") {
  Rng a(99), b(99);
  for (int i = 0; i < 1000; ++i) {
    const double u1 = 1.0 - b.uniform01();
    const double u2 = b.uniform01();
    const double expected =
        std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    CHECK(a.normal() == expected);
  }
}

TEST_CASE("truncated_normal respects its bounds") {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const double x = rng.truncated_normal(11.0, 1.0, 10.0, 12.0);
    CHECK(x >= 10.0);
    CHECK(x <= 12.0);
  }
}

TEST_CASE("normal draws have plausible moments") {
  Rng rng(2024);
  const int n = 200000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sumsq += x * x;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(var - 1.0) < 0.02);
}

TEST_CASE("gaussian fill is row-major and seed-deterministic") {
  Rng a(42), b(42);
  const Matrix M = a.gaussian(3, 2);
  CHECK(M(0, 0) == b.normal());
  CHECK(M(0, 1) == b.normal());
  CHECK(M(1, 0) == b.normal());
  Rng c(42);
  const Matrix M2 = c.gaussian(3, 2);
  CHECK(M == M2);
}

TEST_CASE("derive_seed separates nearby rep indices") {
  const std::uint64_t master = 7;
  CHECK(derive_seed(master, 0) != derive_seed(master, 1));
  CHECK(derive_seed(master, 1) != derive_seed(master, 2));
  CHECK(mix64(0) != 0);  // hashing includes the increment step
}

TEST_CASE("frozen stream fixture") {
  // Regression pins for the documented mappings; a change in any of these
  // silently invalidates every seeded fixture in the project.
  Rng a(42);
  const std::uint64_t u0 = a.next_u64();
  const std::uint64_t u1 = a.next_u64();
  CHECK(u0 == 13930160852258120406ULL);
  CHECK(u1 == 11788048577503494824ULL);

  Rng b(42);
  CHECK(b.uniform01() == doctest::Approx(0.75515553295453897).epsilon(1e-15));

  Rng c(42);
  const double n0 = c.normal();
  const double n1 = c.normal();
  CHECK(n0 == doctest::Approx(-1.0771745442782885).epsilon(1e-12));
  CHECK(n1 == doctest::Approx(1.0945198485006107).epsilon(1e-12));

  CHECK(mix64(0) == 16294208416658607535ULL);
  CHECK(mix64(1) == 10451216379200822465ULL);
}
