#pragma once

#include "rblse/matrix.hpp"

namespace rblse {

/// 4m x 4n real representation of M. Block pattern, with Mi the component
/// planes:
///
///   [ M0  -M1   M2  -M3 ]
///   [ M1   M0   M3   M2 ]
///   [ M2  -M3   M0  -M1 ]
///   [ M3   M2   M1   M0 ]
///
/// The map is an algebra homomorphism: (PQ)^R = P^R Q^R, and
/// ||M^R||_F = 2 ||M||_F.
RealMatrix real_rep(const RBMatrix& m);

/// First block column [M0; M1; M2; M3] of the real representation
/// (4m x n). Carries the full information of M and satisfies
/// ||M^R_c||_F = ||M||_F.
RealMatrix real_rep_col(const RBMatrix& m);

/// 2m x 2n complex representation [[N1, N2], [N2, N1]];
/// ||M^C||_F = sqrt(2) ||M||_F.
ComplexMatrix complex_rep(const RBMatrix& m);

/// First block column [N1; N2] (2m x n); ||M^C_c||_F = ||M||_F.
ComplexMatrix complex_rep_col(const RBMatrix& m);

/// Rebuilds the full real representation from its first block column as
/// [col, Qi col, Qj col, Qk col] with the block operators below.
/// Throws StructureViolation when the row count is not divisible by 4.
RealMatrix expand_real_col(const RealMatrix& col);

/// Complex analog: [col, Pj col]. Row count must be divisible by 2.
ComplexMatrix expand_complex_col(const ComplexMatrix& col);

/// Inverse of real_rep. Reads only the first block column; the remaining
/// blocks are validated against the expected pattern. tau bounds the
/// Frobenius norm of the off-pattern deviation (0 demands an exact match).
/// Throws StructureViolation on violation.
RBMatrix from_real_rep(const RealMatrix& rep, double tau = 0.0);

/// Inverse of complex_rep, same validation contract as from_real_rep.
RBMatrix from_complex_rep(const ComplexMatrix& rep, double tau = 0.0);

/// Validation tolerance for representations loaded from external sources.
inline double structure_tolerance(double input_frobenius_norm) {
  return 1e-12 * input_frobenius_norm;
}

/// The signed block permutations that generate the representation columns.
/// MulI / MulJ / MulK act on 4m-row stacks of component planes and realize
/// right-multiplication of M by i, j, k; MulJPair acts on 2m-row complex
/// stacks and realizes right-multiplication by j. MulI/MulK are
/// antisymmetric orthogonal, MulJ is symmetric orthogonal, MulJPair is a
/// unitary involution.
enum class BlockOpKind { MulI, MulJ, MulK, MulJPair };

struct BlockOperator {
  BlockOpKind kind;
  Index block;  // plane row count m

  /// Operand row count: 4m for the real-stack operators, 2m for MulJPair.
  Index dim() const {
    return (kind == BlockOpKind::MulJPair ? 2 : 4) * block;
  }

  /// Dense signed-permutation matrix. Intended as a test oracle; the apply
  /// functions below never materialize it.
  RealMatrix dense() const;
};

/// Applies the operator as a signed block permutation in O(size).
RealMatrix apply_block_operator(const BlockOperator& op, const RealMatrix& x);
ComplexMatrix apply_block_operator(const BlockOperator& op,
                                   const ComplexMatrix& x);

}  // namespace rblse
