#pragma once

#include <cstdint>

#include "psdp/objective.hpp"
#include "psdp/rng.hpp"

namespace psdp {

enum class ProblemKind { P1 = 1, P2 = 2, P3 = 3 };
enum class OptimumKind { ProjectedRandom, RankDeficient };

struct GeneratorSpec {
  Index n = 0;
  Index m = 0;
  ProblemKind problem = ProblemKind::P1;
  OptimumKind optimum = OptimumKind::ProjectedRandom;
  std::uint64_t seed = 0;

  void validate() const;
};

/// QR of an i.i.d. standard normal matrix, with R's diagonal forced
/// nonnegative. Redraws on a numerically rank-deficient sample.
Matrix random_orthogonal(Index dim, Rng& rng);

/// Diagonal of Λ, length min(n, m). One-based index i in the formulas:
///   P1: truncated normal, mean 11, stddev 1, rejected into [10, 12]
///   P2: λ_i = i + 2 r_i,                      r_i ~ U[0,1]
///   P3: λ_i = 1 + 99 (i−1)/(m+1) + 2 r_i,     r_i ~ U[0,1]
Vector lambda_diagonal(const GeneratorSpec& spec, Rng& rng);

struct GeneratedInstance {
  ProblemInstance instance;
  PsdMatrix X0;
};

/// Builds A = P Λ Qᵀ, an optimum X*, B = X*·A, and a feasible start
/// X₀ = π(standard normal). Draw order: P, Q, Λ, optimum, start. The
/// projected-random optimum is π(standard normal); the rank-deficient one is
/// Vᵀ Σ V with Σ(1,1) = Σ(2,2) = 0 and Σ(i,i) ~ U[0,1] for i ≥ 3.
GeneratedInstance make_instance(const GeneratorSpec& spec);

}  // namespace psdp
