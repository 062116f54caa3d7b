#pragma once

#include <Eigen/Dense>
#include <optional>

namespace psdp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Tolerances used by the kernel contracts. The defaults are the module
/// constants; pass a modified record to relax or tighten a single call site.
struct KernelTolerances {
  double symmetry = 1e-12;       // relative asymmetry accepted by sym_eig
  double orthogonality = 1e-10;  // ‖QᵀQ − I‖_F accepted for orthogonal factors
  double qr_rank = 1e-12;        // relative pivot cutoff for rank deficiency
};

inline constexpr KernelTolerances kDefaultTolerances{};

/// Eigendecomposition of a symmetric matrix, S = V diag(w) Vᵀ.
/// Eigenvalues are sorted descending; consumers must not assume more than
/// that about ordering or eigenvector signs.
struct SpectralDecomposition {
  Matrix eigenvectors;  // orthonormal columns
  Vector eigenvalues;   // descending
};

bool all_finite(const Matrix& M);

/// Matrix product with an explicit inner-dimension check.
Matrix matmul(const Matrix& L, const Matrix& R);

/// Frobenius inner product Σᵢⱼ Lᵢⱼ Rᵢⱼ = Tr[LᵀR].
double frob_inner(const Matrix& L, const Matrix& R);

/// Spectral decomposition of a symmetric matrix. Rejects inputs whose
/// asymmetry exceeds tol.symmetry relative to the matrix norm.
SpectralDecomposition sym_eig(const Matrix& S,
                              const KernelTolerances& tol = kDefaultTolerances);

/// Attempts a Cholesky factorization; true iff it completes with all pivots
/// strictly positive. A zero pivot (boundary PSD) counts as failure. Only the
/// lower triangle of S is read. Never throws on an indefinite input.
bool try_cholesky(const Matrix& S);

/// Orthogonal factor of the QR factorization with the sign convention that
/// R's diagonal is nonnegative. Returns nullopt when a pivot falls below the
/// rank cutoff; the caller regenerates its input in that case.
std::optional<Matrix> qr_orthogonal_factor(
    const Matrix& M, const KernelTolerances& tol = kDefaultTolerances);

/// Largest singular value.
double spectral_norm(const Matrix& M);

}  // namespace psdp
