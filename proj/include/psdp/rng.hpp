#pragma once

#include <cstdint>
#include <random>

#include "psdp/linalg.hpp"

namespace psdp {

/// splitmix64 output function. Used to derive per-instance seeds from a
/// master seed so that repetition i draws from an independent stream.
std::uint64_t mix64(std::uint64_t x);

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return master ^ mix64(index);
}

/// Deterministic random source for the problem generators and fixtures.
///
/// The raw stream is std::mt19937_64, whose outputs are pinned by the C++
/// standard, and every derived draw uses a fixed documented mapping:
///   - uniform01: (u64 >> 11) * 2^-53, in [0, 1)
///   - normal:    Box–Muller cosine branch, sqrt(-2 ln(1-u1)) cos(2π u2),
///                consuming exactly two raw draws per call
///   - truncated_normal: rejection on normal(), variable consumption
///   - gaussian:  row-major fill of normal() draws
/// Changing any of these invalidates the frozen generator fixtures.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  double normal();
  double truncated_normal(double mean, double stddev, double lo, double hi);

  Matrix gaussian(Index rows, Index cols);

 private:
  std::mt19937_64 gen_;
};

}  // namespace psdp
