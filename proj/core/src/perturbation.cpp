#include "rblse/perturbation.hpp"

#include <cmath>
#include <limits>

#include "rblse/random.hpp"

namespace rblse {

namespace {

RBMatrix scaled_direction(const RBMatrix& target, double eps,
                          std::uint64_t seed, std::uint64_t stream) {
  rng::Stream s(seed, stream);
  const RBMatrix direction = s.uniform_rb_matrix(target.rows(), target.cols());
  const double dn = frobenius_norm(direction);
  if (dn == 0.0) return RBMatrix::zero(target.rows(), target.cols());
  return (eps * frobenius_norm(target) / dn) * direction;
}

}  // namespace

RBLSEProblem perturb(const RBLSEProblem& prob, const PerturbationSpec& spec) {
  if (spec.eps < 0.0) {
    throw PreconditionViolated("perturbation level must be nonnegative");
  }
  if (spec.eps == 0.0) return prob;

  RBLSEProblem out = prob;
  out.A = prob.A + scaled_direction(prob.A, spec.eps, spec.seed,
                                    rng::kStreamDeltaA);
  out.B = prob.B + scaled_direction(prob.B, spec.eps, spec.seed,
                                    rng::kStreamDeltaB);
  out.C = prob.C + scaled_direction(prob.C, spec.eps, spec.seed,
                                    rng::kStreamDeltaC);
  out.D = prob.D + scaled_direction(prob.D, spec.eps, spec.seed,
                                    rng::kStreamDeltaD);

  if (4 * out.p() <= out.n() &&
      !rank_check<double>(real_rep_col(out.C))) {
    throw RankLostUnderPerturbation(
        "perturbed real constraint stack lost full row rank");
  }
  if (2 * out.p() <= out.n() &&
      !rank_check<Complex>(complex_rep_col(out.C))) {
    throw RankLostUnderPerturbation(
        "perturbed complex constraint stack lost full row rank");
  }
  return out;
}

double measure_eps(const RBLSEProblem& orig, const RBLSEProblem& pert) {
  const auto ratio = [](const RBMatrix& m, const RBMatrix& mh) {
    if (m.rows() != mh.rows() || m.cols() != mh.cols()) {
      throw DimensionMismatch("perturbed operand shape differs from original");
    }
    const double num = frobenius_norm(mh - m);
    const double den = frobenius_norm(m);
    if (den == 0.0) {
      return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return num / den;
  };
  double eps = ratio(orig.A, pert.A);
  eps = std::max(eps, ratio(orig.B, pert.B));
  eps = std::max(eps, ratio(orig.C, pert.C));
  eps = std::max(eps, ratio(orig.D, pert.D));
  return eps;
}

namespace {

template <typename Scalar>
PerturbationReport bound_impl(const LSEInstance<Scalar>& inst,
                              const DenseMatrix<Scalar>& x, double eps,
                              SolveMode mode) {
  using Mat = DenseMatrix<Scalar>;
  const Index n = inst.n();

  const Mat c_pinv = pinv<Scalar>(inst.C);
  const Mat projector = Mat::Identity(n, n) - c_pinv * inst.C;
  const Mat ap = inst.A * projector;
  const Mat ap_pinv = pinv<Scalar>(ap);
  const Mat sens = (Mat::Identity(n, n) - ap_pinv * inst.A) * c_pinv;

  PerturbationReport rep;
  rep.mode = mode;
  rep.eps = eps;

  const double a_norm = inst.A.norm();
  const double b_norm = inst.B.norm();
  const double c_norm = inst.C.norm();
  const double d_norm = inst.D.norm();
  const double x_norm = x.norm();

  rep.cond_objective = a_norm * norm2<Scalar>(ap_pinv);
  rep.sens_norm2 = norm2<Scalar>(sens);
  rep.cond_constraint = c_norm * rep.sens_norm2;
  rep.asens_norm2 = norm2<Scalar>(DenseMatrix<Scalar>(inst.A * sens));
  rep.residual_norm = (inst.B - inst.A * x).norm();
  rep.forward_error_absolute = (x_norm == 0.0);

  rep.ratio_d = d_norm / (c_norm * x_norm);
  rep.ratio_b = b_norm / (a_norm * x_norm);
  rep.ratio_r = rep.residual_norm / (a_norm * x_norm);

  if (eps == 0.0) {
    rep.bound = 0.0;  // the bound is linear in eps
  } else {
    rep.bound = eps * (rep.cond_constraint * (rep.ratio_d + 1.0) +
                       rep.cond_objective * (rep.ratio_b + 1.0) +
                       rep.cond_objective * rep.cond_objective *
                           ((c_norm / a_norm) * rep.asens_norm2 + 1.0) *
                           rep.ratio_r);
  }
  if constexpr (std::is_same_v<Scalar, double>) {
    rep.projector_real = projector;
  } else {
    rep.projector_complex = projector;
  }
  return rep;
}

}  // namespace

PerturbationReport bound_real(const RBLSEProblem& prob, const RealMatrix& x_rl,
                              double eps) {
  if (x_rl.rows() != prob.n() || x_rl.cols() != prob.d()) {
    throw DimensionMismatch("solution shape does not match the problem");
  }
  return bound_impl<double>(stack_real(prob), x_rl, eps, SolveMode::Real);
}

PerturbationReport bound_complex(const RBLSEProblem& prob,
                                 const ComplexMatrix& x_cl, double eps) {
  if (x_cl.rows() != prob.n() || x_cl.cols() != prob.d()) {
    throw DimensionMismatch("solution shape does not match the problem");
  }
  return bound_impl<Complex>(stack_complex(prob), x_cl, eps,
                             SolveMode::Complex);
}

}  // namespace rblse
