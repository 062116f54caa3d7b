#include "psdp/baselines.hpp"

#include <chrono>
#include <cmath>

namespace psdp {

void BaselineConfig::validate() const {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("BaselineConfig: epsilon must be positive");
  if (max_iter < 1)
    throw std::invalid_argument("BaselineConfig: max_iter must be positive");
}

namespace {

double checked(double v) {
  if (!std::isfinite(v))
    throw NonFiniteError("baseline: objective evaluated to a non-finite value");
  return v;
}

}  // namespace

SolveReport grad_solve(const ProblemInstance& inst, const PsdMatrix& X0,
                       const BaselineConfig& cfg) {
  cfg.validate();
  inst.validate();
  if (X0.dim() != inst.n())
    throw std::invalid_argument("grad_solve: X0 dimension mismatch");
  const auto t_start = std::chrono::steady_clock::now();
  const Index n = inst.n();
  const double step = 1.0 / lipschitz_constant(inst);

  SolveReport rep;
  Matrix X = X0.matrix();
  Evaluation e = evaluate(inst, X);
  checked(e.value);
  rep.nfe = 1;

  double diff = std::sqrt(static_cast<double>(n));  // ‖X₀ − (X₀+I)‖
  int k = 0;
  Termination term = Termination::Tolerance;
  while (diff > cfg.epsilon) {
    if (k >= cfg.max_iter) {
      term = Termination::MaxIter;
      break;
    }
    ArcPoint arc = projection_arc_point(X, e.gradient, step, false);
    rep.projections += 1;
    Evaluation e_next = evaluate(inst, arc.Z);
    checked(e_next.value);
    rep.nfe += 1;
    diff = (arc.Z - X).norm();
    X = std::move(arc.Z);
    e = std::move(e_next);
    k += 1;
    if (cfg.record_trace)
      rep.trace.push_back({k - 1, step, e.value, 1.0, e.value, 1, false});
    if (cfg.iterate_observer) cfg.iterate_observer(k - 1, X);
  }

  rep.X_hat = std::move(X);
  rep.nitr = k;
  rep.fval = e.value;
  rep.xerr = diff;
  rep.termination = term;
  if (inst.known_optimum)
    rep.global_error = (inst.known_optimum->matrix() - rep.X_hat).norm();
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return rep;
}

SolveReport fgm_solve(const ProblemInstance& inst, const PsdMatrix& X0,
                      const BaselineConfig& cfg) {
  cfg.validate();
  inst.validate();
  if (X0.dim() != inst.n())
    throw std::invalid_argument("fgm_solve: X0 dimension mismatch");
  const auto t_start = std::chrono::steady_clock::now();
  const Index n = inst.n();
  const double step = 1.0 / lipschitz_constant(inst);

  SolveReport rep;
  Matrix X = X0.matrix();
  Matrix Y = X;
  double t = 1.0;

  double diff = std::sqrt(static_cast<double>(n));
  int k = 0;
  Termination term = Termination::Tolerance;
  while (diff > cfg.epsilon) {
    if (k >= cfg.max_iter) {
      term = Termination::MaxIter;
      break;
    }
    Evaluation e = evaluate(inst, Y);  // value and gradient at the extrapolation
    checked(e.value);
    rep.nfe += 1;

    Matrix X_next;
    if (e.gradient.isZero(0.0) && (Y - X).isZero(0.0)) {
      X_next = X;  // stationary feasible point; nothing to project
    } else {
      X_next = project_psd(Y - step * e.gradient).release();
      rep.projections += 1;
    }
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    if (cfg.restart && frob_inner(e.gradient, X_next - X) > 0.0) {
      // momentum points uphill; drop it
      Y = X_next;
      t = 1.0;
    } else {
      Y = X_next + ((t - 1.0) / t_next) * (X_next - X);
      t = t_next;
    }
    diff = (X_next - X).norm();
    X = std::move(X_next);
    k += 1;
    if (cfg.record_trace)  // fval here is F(Y_k), the evaluation point
      rep.trace.push_back({k - 1, step, e.value, 1.0, e.value, 1, false});
    if (cfg.iterate_observer) cfg.iterate_observer(k - 1, X);
  }

  rep.fval = checked(objective(inst, X));
  rep.nfe += 1;
  rep.X_hat = std::move(X);
  rep.nitr = k;
  rep.xerr = diff;
  rep.termination = term;
  if (inst.known_optimum)
    rep.global_error = (inst.known_optimum->matrix() - rep.X_hat).norm();
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return rep;
}

}  // namespace psdp
