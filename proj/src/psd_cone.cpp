#include "psdp/psd_cone.hpp"

#include <stdexcept>
#include <utility>

namespace psdp {

PsdMatrix PsdMatrix::checked(Matrix X) {
  if (!is_numerically_psd(X))
    throw std::invalid_argument("PsdMatrix: matrix is not numerically PSD");
  return PsdMatrix(std::move(X));
}

PsdMatrix PsdMatrix::unchecked(Matrix X) { return PsdMatrix(std::move(X)); }

Matrix symmetric_part(const Matrix& X) {
  if (X.rows() != X.cols() || X.rows() == 0)
    throw std::invalid_argument("symmetric_part: matrix must be square");
  return 0.5 * (X.transpose() + X);
}

PsdMatrix project_psd(const Matrix& X) {
  const Matrix S = symmetric_part(X);
  const SpectralDecomposition dec = sym_eig(S);
  const Vector clipped = dec.eigenvalues.cwiseMax(0.0);
  Matrix P = dec.eigenvectors * clipped.asDiagonal() * dec.eigenvectors.transpose();
  P = 0.5 * (P + P.transpose());  // remove reconstruction roundoff asymmetry
  return PsdMatrix::unchecked(std::move(P));
}

FastpathProjection project_psd_fastpath(const Matrix& X) {
  Matrix S = symmetric_part(X);
  if (try_cholesky(S)) return {PsdMatrix::unchecked(std::move(S)), true};
  return {project_psd(X), false};
}

bool is_numerically_psd(const Matrix& X, double sym_rel_tol,
                        double eig_rel_tol) {
  if (X.rows() != X.cols() || X.rows() == 0 || !all_finite(X)) return false;
  const double scale = 1.0 + X.norm();
  if ((X - X.transpose()).norm() > sym_rel_tol * scale) return false;
  const SpectralDecomposition dec = sym_eig(symmetric_part(X));
  const double lambda_min = dec.eigenvalues(dec.eigenvalues.size() - 1);
  return lambda_min >= -eig_rel_tol * scale;
}

}  // namespace psdp
