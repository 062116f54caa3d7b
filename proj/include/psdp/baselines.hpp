#pragma once

#include "psdp/solver.hpp"

namespace psdp {

struct BaselineConfig {
  double epsilon = 1e-5;
  int max_iter = 10000;
  bool restart = false;  // FGM only: reset momentum when it points uphill
  bool record_trace = false;
  std::function<void(int k, const Matrix& X)> iterate_observer;

  void validate() const;
};

/// Classical projected gradient, X_{k+1} = π(X_k − (1/L)∇F(X_k)), with the
/// fixed step 1/L from lipschitz_constant. Stopping rule and report fields
/// match the spectral solver.
SolveReport grad_solve(const ProblemInstance& inst, const PsdMatrix& X0,
                       const BaselineConfig& cfg = {});

/// Accelerated projected gradient: gradient steps from the extrapolated
/// point Y_k with the classical t-sequence. Y_k may leave the cone; only the
/// X iterates are projected and reported.
SolveReport fgm_solve(const ProblemInstance& inst, const PsdMatrix& X0,
                      const BaselineConfig& cfg = {});

}  // namespace psdp
