#pragma once

#include "psdp/linalg.hpp"

namespace psdp {

/// Symmetric positive semi-definite matrix. Instances come out of the
/// projection routines (PSD by construction) or through `checked`, which
/// validates the numerical invariants:
///   - symmetric within 1e-10 relative Frobenius error,
///   - smallest eigenvalue ≥ −1e-8·(1 + ‖X‖_F).
class PsdMatrix {
 public:
  static PsdMatrix checked(Matrix X);    // throws std::invalid_argument
  static PsdMatrix unchecked(Matrix X);  // caller guarantees the invariants

  const Matrix& matrix() const { return mat_; }
  Matrix release() && { return std::move(mat_); }
  Index dim() const { return mat_.rows(); }

 private:
  explicit PsdMatrix(Matrix X) : mat_(std::move(X)) {}
  Matrix mat_;
};

/// ½(Xᵀ + X).
Matrix symmetric_part(const Matrix& X);

/// Nearest PSD matrix in Frobenius norm: eigendecompose the symmetric part
/// and clip negative eigenvalues at exactly zero.
PsdMatrix project_psd(const Matrix& X);

struct FastpathProjection {
  PsdMatrix point;
  bool used_fastpath;
};

/// Cholesky shortcut: when the symmetric part is positive definite it equals
/// the projection, so the eigendecomposition is skipped. Otherwise falls back
/// to project_psd.
FastpathProjection project_psd_fastpath(const Matrix& X);

/// Numerical membership test matching the PsdMatrix invariants.
bool is_numerically_psd(const Matrix& X, double sym_rel_tol = 1e-10,
                        double eig_rel_tol = 1e-8);

}  // namespace psdp
