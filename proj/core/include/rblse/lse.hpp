#pragma once

#include "rblse/errors.hpp"
#include "rblse/types.hpp"

namespace rblse {

/// One field-level equality-constrained least squares problem
///
///   minimize ||A X - B||_F  subject to  C X = D
///
/// over real (Scalar = double) or complex (Scalar = Complex) matrices.
/// A is m x n, B is m x d, C is p x n, D is p x d, with p <= n so that C
/// can have full row rank.
template <typename Scalar>
struct LSEInstance {
  DenseMatrix<Scalar> A, B, C, D;

  Index m() const { return A.rows(); }
  Index n() const { return A.cols(); }
  Index p() const { return C.rows(); }
  Index d() const { return B.cols(); }

  /// Throws DimensionMismatch when the four operands disagree.
  void check_shapes() const;
};

template <typename Scalar>
struct QRFactors {
  DenseMatrix<Scalar> Q;  // k x k unitary (orthogonal when real)
  DenseMatrix<Scalar> R;  // k x l upper triangular
};

/// Full Householder QR factorization M = Q R with the diagonal of R made
/// real and nonnegative by absorbing signs into the columns of Q. The full
/// square Q is always formed.
template <typename Scalar>
QRFactors<Scalar> qr_full(const DenseMatrix<Scalar>& m);

/// Moore-Penrose pseudoinverse via SVD. Singular values at or below tol are
/// treated as zero; tol < 0 selects the default max(k, l) * eps * sigma_max.
template <typename Scalar>
DenseMatrix<Scalar> pinv(const DenseMatrix<Scalar>& m, double tol = -1.0);

/// Numerical full-row-rank test for a p x n matrix with p <= n: true iff
/// sigma_min > tol, defaulting tol to max(p, n) * eps * sigma_max.
template <typename Scalar>
bool rank_check(const DenseMatrix<Scalar>& c, double tol = -1.0);

/// Largest singular value (2-norm); 0 for an empty matrix.
template <typename Scalar>
double norm2(const DenseMatrix<Scalar>& m);

/// Orthonormal basis of the nullspace of c, computed from a full SVD.
/// Columns span { x : c x = 0 }.
template <typename Scalar>
DenseMatrix<Scalar> nullspace_basis(const DenseMatrix<Scalar>& c,
                                    double tol = -1.0);

template <typename Scalar>
struct LSESolution {
  DenseMatrix<Scalar> X;   // n x d minimum-norm minimizer
  DenseMatrix<Scalar> Q;   // n x n unitary factor of C^H = Q [R; 0]
  DenseMatrix<Scalar> R;   // p x p nonsingular upper triangular
  DenseMatrix<Scalar> P1;  // m x p block of A Q
  DenseMatrix<Scalar> P2;  // m x (n - p) block of A Q
  double residual_norm = 0.0;        // ||A X - B||_F
  double constraint_violation = 0.0; // ||C X - D||_F
};

/// Minimum-Frobenius-norm solution via QR of C^H:
///
///   X = Q [ (R^H)^-1 D ; P2^+ (B - P1 (R^H)^-1 D) ]
///
/// The triangular system is solved by substitution, never by inversion.
/// When p = n the second block row is empty and the constraint pins X.
/// Throws RankDeficientConstraint when C fails rank_check, and
/// DimensionMismatch on inconsistent operands.
template <typename Scalar>
LSESolution<Scalar> solve_lse(const LSEInstance<Scalar>& inst);

/// Independent nullspace-method solution used for cross-checking:
///
///   X = C^+ D + N (A N)^+ (B - A C^+ D),  N = nullspace_basis(C).
///
/// Computes the same minimum-norm minimizer through a different route.
template <typename Scalar>
DenseMatrix<Scalar> lse_oracle(const LSEInstance<Scalar>& inst);

extern template struct LSEInstance<double>;
extern template struct LSEInstance<Complex>;
extern template QRFactors<double> qr_full<double>(const DenseMatrix<double>&);
extern template QRFactors<Complex> qr_full<Complex>(const DenseMatrix<Complex>&);
extern template DenseMatrix<double> pinv<double>(const DenseMatrix<double>&, double);
extern template DenseMatrix<Complex> pinv<Complex>(const DenseMatrix<Complex>&, double);
extern template bool rank_check<double>(const DenseMatrix<double>&, double);
extern template bool rank_check<Complex>(const DenseMatrix<Complex>&, double);
extern template double norm2<double>(const DenseMatrix<double>&);
extern template double norm2<Complex>(const DenseMatrix<Complex>&);
extern template DenseMatrix<double> nullspace_basis<double>(const DenseMatrix<double>&, double);
extern template DenseMatrix<Complex> nullspace_basis<Complex>(const DenseMatrix<Complex>&, double);
extern template LSESolution<double> solve_lse<double>(const LSEInstance<double>&);
extern template LSESolution<Complex> solve_lse<Complex>(const LSEInstance<Complex>&);
extern template DenseMatrix<double> lse_oracle<double>(const LSEInstance<double>&);
extern template DenseMatrix<Complex> lse_oracle<Complex>(const LSEInstance<Complex>&);

}  // namespace rblse
