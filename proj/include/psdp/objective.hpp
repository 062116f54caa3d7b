#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "psdp/psd_cone.hpp"

namespace psdp {

/// Raised when a solver evaluates the objective to NaN or infinity; the
/// benchmark harness marks the affected cell as failed and moves on.
struct NonFiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Least-squares data (A, B) for  min ½‖XA − B‖²_F  over symmetric PSD X.
struct ProblemInstance {
  std::string label;
  Matrix A;  // n×m
  Matrix B;  // n×m
  std::optional<PsdMatrix> known_optimum;  // set when built as B = X*·A

  Index n() const { return A.rows(); }
  Index m() const { return A.cols(); }
  void validate() const;
};

double objective(const ProblemInstance& inst, const Matrix& X);

/// XA − B.
Matrix residual(const ProblemInstance& inst, const Matrix& X);
double value_from_residual(const Matrix& R);
/// ∇F(X) = (XA − B)Aᵀ, recovered from a residual already at hand.
Matrix gradient_from_residual(const ProblemInstance& inst, const Matrix& R);
Matrix gradient(const ProblemInstance& inst, const Matrix& X);

/// Fused evaluation sharing the residual between value and gradient. Counts
/// as one function evaluation and one gradient evaluation.
struct Evaluation {
  double value;
  Matrix gradient;
};
Evaluation evaluate(const ProblemInstance& inst, const Matrix& X);

/// ⟨∇F(X), Z⟩.
double directional_derivative(const ProblemInstance& inst, const Matrix& X,
                              const Matrix& Z);

/// σ_max(A)², the Lipschitz constant of ∇F. Step 1/L for the baselines.
double lipschitz_constant(const ProblemInstance& inst);

}  // namespace psdp
