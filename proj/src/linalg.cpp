#include "psdp/linalg.hpp"

#include <cmath>
#include <stdexcept>

#ifdef PSDP_HAVE_LAPACKE
#include <lapacke.h>
#endif

namespace psdp {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

bool all_finite(const Matrix& M) { return M.allFinite(); }

Matrix matmul(const Matrix& L, const Matrix& R) {
  require(L.cols() == R.rows(), "matmul: inner dimensions differ");
  return L * R;
}

double frob_inner(const Matrix& L, const Matrix& R) {
  require(L.rows() == R.rows() && L.cols() == R.cols(),
          "frob_inner: shape mismatch");
  return L.cwiseProduct(R).sum();
}

SpectralDecomposition sym_eig(const Matrix& S, const KernelTolerances& tol) {
  require(S.rows() == S.cols() && S.rows() > 0, "sym_eig: matrix must be square");
  require((S - S.transpose()).norm() <= tol.symmetry * (1.0 + S.norm()),
          "sym_eig: matrix is not symmetric");
  const Index n = S.rows();
  SpectralDecomposition dec;
#ifdef PSDP_HAVE_LAPACKE
  {
    Matrix v = 0.5 * (S + S.transpose());
    Vector w(n);
    const lapack_int info =
        LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', static_cast<lapack_int>(n),
                       v.data(), static_cast<lapack_int>(n), w.data());
    if (info == 0) {
      dec.eigenvalues = w.reverse();
      dec.eigenvectors = v.rowwise().reverse();
      return dec;
    }
    // fall through to the Eigen solver on LAPACK failure
  }
#endif
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (S + S.transpose()));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("sym_eig: eigendecomposition failed");
  dec.eigenvalues = es.eigenvalues().reverse();
  dec.eigenvectors = es.eigenvectors().rowwise().reverse();
  return dec;
}

bool try_cholesky(const Matrix& S) {
  require(S.rows() == S.cols() && S.rows() > 0,
          "try_cholesky: matrix must be square");
  // Eigen's LLT aborts with NumericalIssue on any pivot <= 0, so boundary
  // PSD matrices fail here and take the projection path instead.
  Eigen::LLT<Matrix> llt(S);
  return llt.info() == Eigen::Success;
}

std::optional<Matrix> qr_orthogonal_factor(const Matrix& M,
                                           const KernelTolerances& tol) {
  require(M.rows() == M.cols() && M.rows() > 0,
          "qr_orthogonal_factor: matrix must be square");
  const Index n = M.rows();
  Eigen::HouseholderQR<Matrix> qr(M);
  const Vector rdiag = qr.matrixQR().diagonal();
  const double pivot_scale = std::max(1.0, rdiag.cwiseAbs().maxCoeff());
  for (Index j = 0; j < n; ++j)
    if (std::abs(rdiag(j)) <= tol.qr_rank * pivot_scale) return std::nullopt;
  Matrix Q = qr.householderQ() * Matrix::Identity(n, n);
  for (Index j = 0; j < n; ++j)
    if (rdiag(j) < 0.0) Q.col(j) = -Q.col(j);
  return Q;
}

double spectral_norm(const Matrix& M) {
  require(M.rows() > 0 && M.cols() > 0, "spectral_norm: empty matrix");
  Eigen::BDCSVD<Matrix> svd(M);
  return svd.singularValues()(0);
}

}  // namespace psdp
