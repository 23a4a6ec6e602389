#include "rblse/lse.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <limits>
#include <string>

namespace rblse {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

template <typename Scalar>
Eigen::JacobiSVD<DenseMatrix<Scalar>> svd_values_only(
    const DenseMatrix<Scalar>& m) {
  return Eigen::JacobiSVD<DenseMatrix<Scalar>>(m);
}

double default_rank_tol(Index rows, Index cols, double sigma_max) {
  return static_cast<double>(std::max(rows, cols)) * kEps * sigma_max;
}

}  // namespace

template <typename Scalar>
void LSEInstance<Scalar>::check_shapes() const {
  if (A.cols() != C.cols()) {
    throw DimensionMismatch("A and C column counts differ: " +
                            std::to_string(A.cols()) + " vs " +
                            std::to_string(C.cols()));
  }
  if (A.rows() != B.rows()) {
    throw DimensionMismatch("A and B row counts differ");
  }
  if (C.rows() != D.rows()) {
    throw DimensionMismatch("C and D row counts differ");
  }
  if (B.cols() != D.cols()) {
    throw DimensionMismatch("B and D column counts differ");
  }
}

template <typename Scalar>
QRFactors<Scalar> qr_full(const DenseMatrix<Scalar>& m) {
  const Index k = m.rows();
  const Index l = m.cols();
  Eigen::HouseholderQR<DenseMatrix<Scalar>> qr(m);
  QRFactors<Scalar> out;
  out.Q = qr.householderQ() * DenseMatrix<Scalar>::Identity(k, k);
  out.R = qr.matrixQR().template triangularView<Eigen::Upper>();
  // Absorb signs so the diagonal of R is real and nonnegative, making the
  // factors deterministic and comparable across runs.
  for (Index i = 0; i < std::min(k, l); ++i) {
    const double mag = std::abs(out.R(i, i));
    if (mag == 0.0) continue;
    const Scalar phase = out.R(i, i) / mag;
    out.Q.col(i) *= phase;
    out.R.row(i) *= Eigen::numext::conj(phase);
    out.R(i, i) = Scalar(mag);
  }
  return out;
}

template <typename Scalar>
DenseMatrix<Scalar> pinv(const DenseMatrix<Scalar>& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) {
    return DenseMatrix<Scalar>::Zero(m.cols(), m.rows());
  }
  Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(
      m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (tol < 0.0) tol = default_rank_tol(m.rows(), m.cols(), sv(0));
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol) inv(i) = 1.0 / sv(i);
  }
  return svd.matrixV() * inv.asDiagonal() *
         svd.matrixU().adjoint();
}

template <typename Scalar>
bool rank_check(const DenseMatrix<Scalar>& c, double tol) {
  if (c.rows() > c.cols()) return false;
  if (c.rows() == 0) return true;
  const auto svd = svd_values_only(c);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (tol < 0.0) tol = default_rank_tol(c.rows(), c.cols(), sv(0));
  return sv(sv.size() - 1) > tol;
}

template <typename Scalar>
double norm2(const DenseMatrix<Scalar>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return svd_values_only(m).singularValues()(0);
}

template <typename Scalar>
DenseMatrix<Scalar> nullspace_basis(const DenseMatrix<Scalar>& c, double tol) {
  Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(c, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (tol < 0.0) {
    tol = sv.size() > 0 ? default_rank_tol(c.rows(), c.cols(), sv(0)) : 0.0;
  }
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol) ++rank;
  }
  return svd.matrixV().rightCols(c.cols() - rank);
}

template <typename Scalar>
LSESolution<Scalar> solve_lse(const LSEInstance<Scalar>& inst) {
  inst.check_shapes();
  const Index n = inst.n();
  const Index p = inst.p();
  const Index d = inst.d();
  if (p > n || !rank_check<Scalar>(inst.C)) {
    throw RankDeficientConstraint("constraint matrix is not of full row rank");
  }

  LSESolution<Scalar> sol;
  auto qr = qr_full<Scalar>(DenseMatrix<Scalar>(inst.C.adjoint()));
  sol.Q = std::move(qr.Q);
  sol.R = qr.R.topRows(p);

  const DenseMatrix<Scalar> aq = inst.A * sol.Q;
  sol.P1 = aq.leftCols(p);
  sol.P2 = aq.rightCols(n - p);

  // R^H is lower triangular: forward substitution.
  const DenseMatrix<Scalar> rh = sol.R.adjoint();
  const DenseMatrix<Scalar> y =
      rh.template triangularView<Eigen::Lower>().solve(inst.D);

  DenseMatrix<Scalar> yz(n, d);
  yz.topRows(p) = y;
  if (n > p) {
    yz.bottomRows(n - p) = pinv<Scalar>(sol.P2) * (inst.B - sol.P1 * y);
  }
  sol.X = sol.Q * yz;
  sol.residual_norm = (inst.A * sol.X - inst.B).norm();
  sol.constraint_violation = (inst.C * sol.X - inst.D).norm();
  return sol;
}

template <typename Scalar>
DenseMatrix<Scalar> lse_oracle(const LSEInstance<Scalar>& inst) {
  inst.check_shapes();
  if (inst.p() > inst.n() || !rank_check<Scalar>(inst.C)) {
    throw RankDeficientConstraint("constraint matrix is not of full row rank");
  }
  const DenseMatrix<Scalar> n_basis = nullspace_basis<Scalar>(inst.C);
  const DenseMatrix<Scalar> x0 = pinv<Scalar>(inst.C) * inst.D;
  const DenseMatrix<Scalar> an = inst.A * n_basis;
  return x0 + n_basis * (pinv<Scalar>(an) * (inst.B - inst.A * x0));
}

template struct LSEInstance<double>;
template struct LSEInstance<Complex>;
template QRFactors<double> qr_full<double>(const DenseMatrix<double>&);
template QRFactors<Complex> qr_full<Complex>(const DenseMatrix<Complex>&);
template DenseMatrix<double> pinv<double>(const DenseMatrix<double>&, double);
template DenseMatrix<Complex> pinv<Complex>(const DenseMatrix<Complex>&, double);
template bool rank_check<double>(const DenseMatrix<double>&, double);
template bool rank_check<Complex>(const DenseMatrix<Complex>&, double);
template double norm2<double>(const DenseMatrix<double>&);
template double norm2<Complex>(const DenseMatrix<Complex>&);
template DenseMatrix<double> nullspace_basis<double>(const DenseMatrix<double>&, double);
template DenseMatrix<Complex> nullspace_basis<Complex>(const DenseMatrix<Complex>&, double);
template LSESolution<double> solve_lse<double>(const LSEInstance<double>&);
template LSESolution<Complex> solve_lse<Complex>(const LSEInstance<Complex>&);
template DenseMatrix<double> lse_oracle<double>(const LSEInstance<double>&);
template DenseMatrix<Complex> lse_oracle<Complex>(const LSEInstance<Complex>&);

}  // namespace rblse
