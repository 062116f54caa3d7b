#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "psdp/objective.hpp"

namespace psdp {

enum class BBRule { BB1, BB2, Alternate };
enum class Termination { Tolerance, MaxIter, LineSearchStall };
const char* to_string(Termination t);
const char* to_string(BBRule r);
std::optional<BBRule> bb_rule_from_string(std::string_view s);

/// Hyperparameters of the non-monotone spectral projected gradient solver.
/// Defaults reproduce the benchmark settings: σ = 1e-4, τ₀ = 1e-3,
/// τ ∈ [1e-20, 1e20], ε = 1e-5, γ = 0.85, η = 0.2, 10000 iterations.
struct SolverConfig {
  double sigma = 1e-4;   // sufficient-decrease slope factor, in (0,1)
  double tau0 = 1e-3;    // initial step
  double tau_min = 1e-20;
  double tau_max = 1e20;
  double epsilon = 1e-5;  // stop once ‖X_k − X_{k−1}‖_F ≤ epsilon
  double gamma = 0.85;    // averaging memory in [0,1); 0 recovers monotone Armijo
  double eta = 0.2;       // backtracking shrink, in (0,1)
  int max_iter = 10000;
  int max_backtracks = 60;
  BBRule bb_rule = BBRule::BB1;
  bool use_fastpath = true;
  bool record_trace = false;
  // Invoked with every accepted iterate; test hook, off by default.
  std::function<void(int k, const Matrix& X)> iterate_observer;

  void validate() const;  // throws std::invalid_argument on range violations
};

/// One accepted iteration. C and Q are the post-update averages C_{k+1} and
/// Q_{k+1}; fval is F(X_{k+1}); trials counts objective evaluations spent in
/// the line search; fastpath tells whether the accepted projection took the
/// Cholesky shortcut.
struct TraceRow {
  int k;
  double tau;
  double C;
  double Q;
  double fval;
  int trials;
  bool fastpath;
};

struct SolveReport {
  Matrix X_hat;  // symmetric PSD by construction
  int nitr = 0;
  int nfe = 0;  // objective evaluations, including the initial F(X₀)
  double wall_time_s = 0.0;
  double fval = 0.0;
  double xerr = 0.0;  // ‖X_hat − X_penultimate‖_F
  std::optional<double> global_error;  // ‖X* − X_hat‖_F when X* is known
  Termination termination = Termination::Tolerance;
  int fastpath_hits = 0;
  int projections = 0;
  std::vector<TraceRow> trace;  // empty unless record_trace
};

struct ArcPoint {
  Matrix Z;
  bool used_fastpath;
};

/// Z(τ) = π(X − τ·grad). A zero gradient degenerates the arc to its feasible
/// base point, which is returned unprojected.
ArcPoint projection_arc_point(const Matrix& X, const Matrix& grad, double tau,
                              bool use_fastpath);

/// Barzilai–Borwein step from the secant pair S = X_k − X_{k−1},
/// Y = ∇F(X_k) − ∇F(X_{k−1}), absolute value applied. `k` is the index of
/// the iteration consuming the step; Alternate picks BB1 on even k. A
/// degenerate denominator yields nullopt and the caller keeps its previous
/// step (still subject to the [τ_min, τ_max] clip).
std::optional<double> bb_step(const Matrix& S, const Matrix& Y, BBRule rule,
                              int k);

struct Averages {
  double C;
  double Q;
};

/// Q_{k+1} = γQ_k + 1;  C_{k+1} = (γ Q_k C_k + f_{k+1}) / Q_{k+1}.
Averages update_averages(double C, double Q, double f_next, double gamma);

struct LineSearchResult {
  Matrix Z;         // accepted point (best trial when stalled)
  Matrix residual;  // Z·A − B at the returned point
  double f = 0.0;
  double tau = 0.0;
  int trials = 0;
  int projections = 0;
  int fastpath_hits = 0;
  bool fastpath = false;  // shortcut used for the returned point
  bool stalled = false;
};

/// Backtracks τ ← ητ from tau_init until F(Z(τ)) ≤ c_ref + σ⟨grad, Z(τ)−X⟩.
/// Each trial costs one projection and one objective evaluation; the
/// directional term reuses `grad`. Gives up after max_backtracks shrinks and
/// returns the best trial with `stalled` set.
LineSearchResult nonmonotone_line_search(const ProblemInstance& inst,
                                         const Matrix& X, const Matrix& grad,
                                         double c_ref, double tau_init,
                                         const SolverConfig& cfg);

/// Full solver loop: line search on the projection arc, Zhang–Hager average
/// update, BB step, clip. Stops when consecutive iterates are within epsilon,
/// the iteration cap is hit, or the line search stalls.
SolveReport solve(const ProblemInstance& inst, const PsdMatrix& X0,
                  const SolverConfig& cfg = {});

/// Same loop against caller-supplied value/gradient callbacks. Only the
/// least-squares objective ships, but the iteration itself never looks at
/// the instance beyond these two functions.
struct SmoothObjective {
  std::function<double(const Matrix&)> value;
  std::function<Matrix(const Matrix&)> gradient;
};
SolveReport solve(const SmoothObjective& f, const PsdMatrix& X0,
                  const SolverConfig& cfg = {});

/// ‖X − π(X − ∇F(X))‖_F; vanishes exactly at constrained stationary points.
double stationarity_residual(const ProblemInstance& inst, const Matrix& X);

}  // namespace psdp
