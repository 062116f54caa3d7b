#include "psdp/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <utility>

namespace psdp {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::Tolerance: return "TOLERANCE";
    case Termination::MaxIter: return "MAX_ITER";
    case Termination::LineSearchStall: return "LINE_SEARCH_STALL";
  }
  return "UNKNOWN";
}

const char* to_string(BBRule r) {
  switch (r) {
    case BBRule::BB1: return "bb1";
    case BBRule::BB2: return "bb2";
    case BBRule::Alternate: return "alt";
  }
  return "unknown";
}

std::optional<BBRule> bb_rule_from_string(std::string_view s) {
  if (s == "bb1") return BBRule::BB1;
  if (s == "bb2") return BBRule::BB2;
  if (s == "alt" || s == "alternate") return BBRule::Alternate;
  return std::nullopt;
}

void SolverConfig::validate() const {
  auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
  if (!(sigma > 0.0 && sigma < 1.0)) fail("SolverConfig: sigma must be in (0,1)");
  if (!(tau0 > 0.0)) fail("SolverConfig: tau0 must be positive");
  if (!(tau_min > 0.0 && tau_min <= tau_max))
    fail("SolverConfig: need 0 < tau_min <= tau_max");
  if (!(epsilon > 0.0)) fail("SolverConfig: epsilon must be positive");
  if (!(gamma >= 0.0 && gamma < 1.0)) fail("SolverConfig: gamma must be in [0,1)");
  if (!(eta > 0.0 && eta < 1.0)) fail("SolverConfig: eta must be in (0,1)");
  if (max_iter < 1) fail("SolverConfig: max_iter must be positive");
  if (max_backtracks < 1) fail("SolverConfig: max_backtracks must be positive");
}

ArcPoint projection_arc_point(const Matrix& X, const Matrix& grad, double tau,
                              bool use_fastpath) {
  if (!(tau > 0.0))
    throw std::invalid_argument("projection_arc_point: tau must be positive");
  if (X.rows() != X.cols() || grad.rows() != X.rows() || grad.cols() != X.cols())
    throw std::invalid_argument("projection_arc_point: shape mismatch");
  if (grad.isZero(0.0)) return {X, false};
  if (use_fastpath) {
    FastpathProjection p = project_psd_fastpath(X - tau * grad);
    return {std::move(p.point).release(), p.used_fastpath};
  }
  return {project_psd(X - tau * grad).release(), false};
}

std::optional<double> bb_step(const Matrix& S, const Matrix& Y, BBRule rule,
                              int k) {
  if (S.rows() != Y.rows() || S.cols() != Y.cols())
    throw std::invalid_argument("bb_step: secant pair shape mismatch");
  const bool use_bb1 =
      rule == BBRule::BB1 || (rule == BBRule::Alternate && k % 2 == 0);
  const double sty = frob_inner(S, Y);
  double step;
  if (use_bb1) {
    const double scale = S.norm() * Y.norm();
    if (scale == 0.0 || std::abs(sty) <= 1e-30 * scale) return std::nullopt;
    step = std::abs(S.squaredNorm() / sty);
  } else {
    const double yy = Y.squaredNorm();
    if (yy <= 1e-30 * std::max(S.squaredNorm(), Y.squaredNorm()))
      return std::nullopt;
    step = std::abs(sty / yy);
  }
  if (!(step > 0.0) || !std::isfinite(step)) return std::nullopt;
  return step;
}

Averages update_averages(double C, double Q, double f_next, double gamma) {
  if (!(Q >= 1.0))
    throw std::invalid_argument("update_averages: Q must be >= 1");
  const double q_next = gamma * Q + 1.0;
  return {(gamma * Q * C + f_next) / q_next, q_next};
}

namespace {

// Internal evaluation interface. `value` may deposit the residual for the
// instance-backed objective so the accepted trial's gradient is one matmul;
// the callback-backed objective leaves it empty and recomputes.
struct Oracle {
  std::function<double(const Matrix& Z, Matrix* residual_out)> value;
  std::function<Matrix(const Matrix& Z, const Matrix& residual)> gradient;
};

Oracle make_oracle(const ProblemInstance& inst) {
  return {[&inst](const Matrix& Z, Matrix* out) {
            Matrix R = residual(inst, Z);
            const double v = value_from_residual(R);
            if (out) *out = std::move(R);
            return v;
          },
          [&inst](const Matrix&, const Matrix& R) {
            return gradient_from_residual(inst, R);
          }};
}

Oracle make_oracle(const SmoothObjective& f) {
  return {[&f](const Matrix& Z, Matrix* out) {
            if (out) out->resize(0, 0);
            return f.value(Z);
          },
          [&f](const Matrix& Z, const Matrix&) { return f.gradient(Z); }};
}

double checked_value(const Oracle& f, const Matrix& Z, Matrix* out) {
  const double v = f.value(Z, out);
  if (!std::isfinite(v))
    throw NonFiniteError("solver: objective evaluated to a non-finite value");
  return v;
}

LineSearchResult line_search_impl(const Oracle& f, const Matrix& X,
                                  const Matrix& grad, double c_ref,
                                  double tau_init, const SolverConfig& cfg) {
  LineSearchResult out;
  LineSearchResult best;
  best.f = std::numeric_limits<double>::infinity();
  double tau = tau_init;
  for (int h = 0;; ++h) {
    ArcPoint arc = projection_arc_point(X, grad, tau, cfg.use_fastpath);
    out.projections += 1;
    out.fastpath_hits += arc.used_fastpath ? 1 : 0;
    Matrix R;
    const double f_trial = checked_value(f, arc.Z, &R);
    out.trials += 1;
    const double dd = frob_inner(grad, arc.Z - X);
    // projection onto a convex set containing X: the arc never points uphill
    assert(dd <= 1e-12 * (1.0 + grad.norm() * (arc.Z - X).norm()));
    if (f_trial <= c_ref + cfg.sigma * dd) {
      out.Z = std::move(arc.Z);
      out.residual = std::move(R);
      out.f = f_trial;
      out.tau = tau;
      out.fastpath = arc.used_fastpath;
      return out;
    }
    if (f_trial < best.f) {
      best.Z = std::move(arc.Z);
      best.residual = std::move(R);
      best.f = f_trial;
      best.tau = tau;
      best.fastpath = arc.used_fastpath;
    }
    if (h >= cfg.max_backtracks) {
      best.trials = out.trials;
      best.projections = out.projections;
      best.fastpath_hits = out.fastpath_hits;
      best.stalled = true;
      return best;
    }
    tau *= cfg.eta;
  }
}

SolveReport solve_core(const Oracle& f, const Matrix& X0,
                       const SolverConfig& cfg, const Matrix* x_star) {
  cfg.validate();
  const auto t_start = std::chrono::steady_clock::now();
  const Index n = X0.rows();

  SolveReport rep;
  Matrix X = X0;
  Matrix R;
  double fx = checked_value(f, X, &R);  // C₀ = F(X₀)
  rep.nfe = 1;
  Matrix grad = f.gradient(X, R);

  double C = fx;
  double Q = 1.0;
  double tau = std::clamp(cfg.tau0, cfg.tau_min, cfg.tau_max);

  // X_{−1} = X₀ + I keeps the very first tolerance check from firing.
  Matrix X_prev = X + Matrix::Identity(n, n);
  double diff = std::sqrt(static_cast<double>(n));
  int k = 0;
  Termination term = Termination::Tolerance;

  while (diff > cfg.epsilon) {
    if (k >= cfg.max_iter) {
      term = Termination::MaxIter;
      break;
    }
    LineSearchResult ls = line_search_impl(f, X, grad, C, tau, cfg);
    rep.nfe += ls.trials;
    rep.projections += ls.projections;
    rep.fastpath_hits += ls.fastpath_hits;

    const Matrix S = ls.Z - X;
    Matrix grad_next = f.gradient(ls.Z, ls.residual);
    const Averages avg = update_averages(C, Q, ls.f, cfg.gamma);
    C = avg.C;
    Q = avg.Q;
    const std::optional<double> bb =
        bb_step(S, grad_next - grad, cfg.bb_rule, k + 1);
    // degenerate secant keeps the accepted step
    tau = std::clamp(bb.value_or(ls.tau), cfg.tau_min, cfg.tau_max);

    X_prev = std::move(X);
    X = std::move(ls.Z);
    grad = std::move(grad_next);
    fx = ls.f;
    k += 1;
    diff = (X - X_prev).norm();

    if (cfg.record_trace)
      rep.trace.push_back({k - 1, ls.tau, C, Q, ls.f, ls.trials, ls.fastpath});
    if (cfg.iterate_observer) cfg.iterate_observer(k - 1, X);
    if (ls.stalled) {
      term = Termination::LineSearchStall;
      break;
    }
  }

  rep.X_hat = std::move(X);
  rep.nitr = k;
  rep.fval = fx;
  rep.xerr = diff;
  rep.termination = term;
  if (x_star) rep.global_error = (*x_star - rep.X_hat).norm();
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return rep;
}

}  // namespace

LineSearchResult nonmonotone_line_search(const ProblemInstance& inst,
                                         const Matrix& X, const Matrix& grad,
                                         double c_ref, double tau_init,
                                         const SolverConfig& cfg) {
  if (!(tau_init >= cfg.tau_min && tau_init <= cfg.tau_max))
    throw std::invalid_argument(
        "nonmonotone_line_search: tau_init outside [tau_min, tau_max]");
  return line_search_impl(make_oracle(inst), X, grad, c_ref, tau_init, cfg);
}

SolveReport solve(const ProblemInstance& inst, const PsdMatrix& X0,
                  const SolverConfig& cfg) {
  inst.validate();
  if (X0.dim() != inst.n())
    throw std::invalid_argument("solve: X0 dimension mismatch");
  const Matrix* x_star =
      inst.known_optimum ? &inst.known_optimum->matrix() : nullptr;
  return solve_core(make_oracle(inst), X0.matrix(), cfg, x_star);
}

SolveReport solve(const SmoothObjective& f, const PsdMatrix& X0,
                  const SolverConfig& cfg) {
  return solve_core(make_oracle(f), X0.matrix(), cfg, nullptr);
}

double stationarity_residual(const ProblemInstance& inst, const Matrix& X) {
  const Matrix g = gradient(inst, X);
  return (X - project_psd(X - g).matrix()).norm();
}

}  // namespace psdp
