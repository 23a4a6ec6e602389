#pragma once

#include <utility>

#include "rblse/lse.hpp"
#include "rblse/matrix.hpp"
#include "rblse/representation.hpp"

namespace rblse {

enum class SolveMode { Real, Complex };

const char* to_string(SolveMode mode);

/// minimize ||A X - B||_F subject to C X = D over reduced biquaternion data,
/// with X restricted to real (solve_real) or complex (solve_complex)
/// matrices. A: m x n, B: m x d, C: p x n, D: p x d.
struct RBLSEProblem {
  RBMatrix A, B, C, D;

  Index m() const { return A.rows(); }
  Index n() const { return A.cols(); }
  Index p() const { return C.rows(); }
  Index d() const { return B.cols(); }

  void check_shapes() const;
  /// m >= n + d, and 4p <= n (Real) or 2p <= n (Complex).
  void check_preconditions(SolveMode mode) const;
};

struct RBLSESolution {
  SolveMode mode = SolveMode::Real;
  RealMatrix x_real;        // set in Real mode
  ComplexMatrix x_complex;  // set in Complex mode
  double eps_residual = 0.0;    // log10 ||A X - (B + R)||_F, R = A X - B
  double eps_constraint = 0.0;  // log10 ||C X - D||_F
  double solve_seconds = 0.0;   // wall clock for stacking + solve
};

/// Stacked field-level instances built from the first block columns of the
/// representations: (A_c, B_c, C_c, D_c).
LSEInstance<double> stack_real(const RBLSEProblem& prob);
LSEInstance<Complex> stack_complex(const RBLSEProblem& prob);

/// Real solution via the real-representation stack. Minimizing
/// ||A_c X - B_c||_F over real X under C_c X = D_c solves the original
/// problem because the stack preserves residual norms block-wise.
/// Throws PreconditionViolated / RankDeficientConstraint.
RBLSESolution solve_real(const RBLSEProblem& prob);

/// Complex solution via the complex-representation stack.
RBLSESolution solve_complex(const RBLSEProblem& prob);

/// (eps_residual, eps_constraint) for a candidate solution, evaluated with
/// reduced biquaternion arithmetic. The residual metric recomputes
/// R = A X - B once and measures the self-consistency ||A X - (B + R)||_F.
std::pair<double, double> residual_metrics(const RBLSEProblem& prob,
                                           const RealMatrix& x);
std::pair<double, double> residual_metrics(const RBLSEProblem& prob,
                                           const ComplexMatrix& x);

/// Closed-form flop-count model of the two solve pipelines (QR, products,
/// pseudoinverse, substitution, assembly). Requires n >= 4p (Real) or
/// n >= 2p (Complex).
double flop_estimate(SolveMode mode, Index m, Index n, Index p, Index d);

}  // namespace rblse
