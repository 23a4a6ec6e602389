#pragma once

#include <cstdint>
#include <limits>

#include "rblse/solvers.hpp"

namespace rblse {

struct PerturbationSpec {
  double eps = 0.0;   // target normwise perturbation level
  std::uint64_t seed = 0;
};

/// Adds DeltaM = eps * ||M||_F * E / ||E||_F to each of A, B, C, D, with E a
/// seeded uniform random reduced biquaternion matrix of matching shape, so
/// the relative perturbation of every operand equals eps. Every constraint
/// stack whose mode size precondition holds (4p <= n real, 2p <= n complex)
/// is re-checked for full row rank; throws RankLostUnderPerturbation when a
/// check fails.
RBLSEProblem perturb(const RBLSEProblem& prob, const PerturbationSpec& spec);

/// Smallest eps bounding all four relative data perturbations:
/// max of ||DeltaM||_F / ||M||_F over M in {A, B, C, D}. A zero-norm
/// original with a nonzero perturbation yields +infinity.
double measure_eps(const RBLSEProblem& orig, const RBLSEProblem& pert);

/// First-order forward-error bound and its ingredients. With the stacked
/// data (A_c, B_c, C_c, D_c) and the solution X:
///
///   P  = I - C_c^+ C_c                      (orthogonal projector)
///   L  = (I - (A_c P)^+ A_c) C_c^+
///   K_A = ||C_c||_F ||L||_2,  K_B = ||A_c||_F ||(A_c P)^+||_2
///   R  = B_c - A_c X
///
///   U = eps * ( K_A (||D_c|| / (||C_c|| ||X||) + 1)
///             + K_B (||B_c|| / (||A_c|| ||X||) + 1)
///             + K_B^2 (||C_c|| / ||A_c|| ||A_c L||_2 + 1)
///                    * ||R||_F / (||A_c|| ||X||) )
///
/// The quadratic remainder of the underlying expansion is dropped; U is the
/// first-order term only, hence exactly linear in eps.
struct PerturbationReport {
  SolveMode mode = SolveMode::Real;
  double eps = 0.0;
  /// ||X_hat - X||_F / ||X||_F, filled by the caller after the perturbed
  /// solve; left NaN by bound_real / bound_complex.
  double forward_error = std::numeric_limits<double>::quiet_NaN();
  /// Set when ||X||_F = 0: forward_error then carries the absolute error.
  bool forward_error_absolute = false;
  double bound = 0.0;            // U
  double cond_constraint = 0.0;  // K_A
  double cond_objective = 0.0;   // K_B
  double sens_norm2 = 0.0;       // ||L||_2
  double asens_norm2 = 0.0;      // ||A_c L||_2
  double residual_norm = 0.0;    // ||R||_F
  double ratio_d = 0.0;          // ||D_c|| / (||C_c|| ||X||)
  double ratio_b = 0.0;          // ||B_c|| / (||A_c|| ||X||)
  double ratio_r = 0.0;          // ||R||_F / (||A_c|| ||X||)
  RealMatrix projector_real;        // P (Real mode)
  ComplexMatrix projector_complex;  // P (Complex mode)
};

/// Bound for the real solution x_rl of prob at perturbation level eps.
PerturbationReport bound_real(const RBLSEProblem& prob, const RealMatrix& x_rl,
                              double eps);

/// Bound for the complex solution x_cl of prob at perturbation level eps.
PerturbationReport bound_complex(const RBLSEProblem& prob,
                                 const ComplexMatrix& x_cl, double eps);

}  // namespace rblse
