#include "psdp/objective.hpp"

namespace psdp {

namespace {

void check_dim(const ProblemInstance& inst, const Matrix& X) {
  if (X.rows() != inst.n() || X.cols() != inst.n())
    throw std::invalid_argument("objective: X must be n×n for this instance");
}

}  // namespace

void ProblemInstance::validate() const {
  if (A.rows() < 1 || A.cols() < 1)
    throw std::invalid_argument("ProblemInstance: A must be nonempty");
  if (B.rows() != A.rows() || B.cols() != A.cols())
    throw std::invalid_argument("ProblemInstance: A and B must share shape");
  if (!all_finite(A) || !all_finite(B))
    throw std::invalid_argument("ProblemInstance: non-finite entries");
  if (known_optimum && known_optimum->dim() != n())
    throw std::invalid_argument("ProblemInstance: known optimum has wrong dimension");
}

double objective(const ProblemInstance& inst, const Matrix& X) {
  check_dim(inst, X);
  return 0.5 * (X * inst.A - inst.B).squaredNorm();
}

Matrix residual(const ProblemInstance& inst, const Matrix& X) {
  check_dim(inst, X);
  return X * inst.A - inst.B;
}

double value_from_residual(const Matrix& R) { return 0.5 * R.squaredNorm(); }

Matrix gradient_from_residual(const ProblemInstance& inst, const Matrix& R) {
  return R * inst.A.transpose();
}

Matrix gradient(const ProblemInstance& inst, const Matrix& X) {
  return gradient_from_residual(inst, residual(inst, X));
}

Evaluation evaluate(const ProblemInstance& inst, const Matrix& X) {
  const Matrix R = residual(inst, X);
  return {value_from_residual(R), gradient_from_residual(inst, R)};
}

double directional_derivative(const ProblemInstance& inst, const Matrix& X,
                              const Matrix& Z) {
  if (Z.rows() != inst.n() || Z.cols() != inst.n())
    throw std::invalid_argument("directional_derivative: Z must be n×n");
  return frob_inner(gradient(inst, X), Z);
}

double lipschitz_constant(const ProblemInstance& inst) {
  const double s = spectral_norm(inst.A);
  return s * s;
}

}  // namespace psdp
