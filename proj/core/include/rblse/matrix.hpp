#pragma once

#include <array>

#include "rblse/scalar.hpp"
#include "rblse/types.hpp"

namespace rblse {

/// m x n reduced biquaternion matrix M = M0 + M1 i + M2 j + M3 k, stored as
/// four real component planes of equal shape. The complex planes
/// N1 = M0 + M1 i and N2 = M2 + M3 i (M = N1 + N2 j) are computed on demand,
/// never stored.
class RBMatrix {
 public:
  RBMatrix() = default;

  /// Zero matrix of the given shape.
  RBMatrix(Index rows, Index cols);

  /// From component planes; all four must share one shape.
  RBMatrix(RealMatrix m0, RealMatrix m1, RealMatrix m2, RealMatrix m3);

  static RBMatrix zero(Index rows, Index cols) { return RBMatrix(rows, cols); }
  static RBMatrix identity(Index n);
  static RBMatrix from_real(const RealMatrix& x);
  static RBMatrix from_complex(const ComplexMatrix& x);
  static RBMatrix from_complex_pair(const ComplexMatrix& n1,
                                    const ComplexMatrix& n2);

  Index rows() const { return planes_[0].rows(); }
  Index cols() const { return planes_[0].cols(); }
  Index size() const { return planes_[0].size(); }

  /// Component plane, index 0..3 for the 1, i, j, k coefficients.
  const RealMatrix& comp(int idx) const { return planes_[idx]; }
  RealMatrix& comp(int idx) { return planes_[idx]; }

  ComplexMatrix n1() const;
  ComplexMatrix n2() const;

  RBScalar operator()(Index r, Index c) const {
    return {planes_[0](r, c), planes_[1](r, c), planes_[2](r, c),
            planes_[3](r, c)};
  }
  void set(Index r, Index c, const RBScalar& v);

  /// Exact (bitwise) plane equality.
  friend bool operator==(const RBMatrix& a, const RBMatrix& b);

  friend RBMatrix operator+(const RBMatrix& a, const RBMatrix& b);
  friend RBMatrix operator-(const RBMatrix& a, const RBMatrix& b);

  /// Matrix product under the commutative multiplication table.
  friend RBMatrix operator*(const RBMatrix& a, const RBMatrix& b);

 private:
  std::array<RealMatrix, 4> planes_;
};

/// Left scaling by a reduced biquaternion scalar (applied entry-wise).
RBMatrix scale(const RBScalar& alpha, const RBMatrix& a);

inline RBMatrix operator*(double alpha, const RBMatrix& a) {
  return scale(RBScalar(alpha, 0, 0, 0), a);
}

/// sqrt of the sum of squared entry norms.
double frobenius_norm(const RBMatrix& a);

}  // namespace rblse
