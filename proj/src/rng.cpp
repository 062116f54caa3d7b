#include "psdp/rng.hpp"

#include <cmath>
#include <numbers>

namespace psdp {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double Rng::normal() {
  const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::truncated_normal(double mean, double stddev, double lo,
                             double hi) {
  for (;;) {
    const double x = mean + stddev * normal();
    if (x >= lo && x <= hi) return x;
  }
}

Matrix Rng::gaussian(Index rows, Index cols) {
  Matrix M(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) M(i, j) = normal();
  return M;
}

}  // namespace psdp
