#include "rblse/matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "rblse/errors.hpp"

namespace rblse {

namespace {

void require_same_shape(const RBMatrix& a, const RBMatrix& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

}  // namespace

RBMatrix::RBMatrix(Index rows, Index cols) {
  for (auto& p : planes_) p = RealMatrix::Zero(rows, cols);
}

RBMatrix::RBMatrix(RealMatrix m0, RealMatrix m1, RealMatrix m2, RealMatrix m3)
    : planes_{std::move(m0), std::move(m1), std::move(m2), std::move(m3)} {
  for (int i = 1; i < 4; ++i) {
    if (planes_[i].rows() != planes_[0].rows() ||
        planes_[i].cols() != planes_[0].cols()) {
      throw DimensionMismatch("component planes must share one shape");
    }
  }
}

RBMatrix RBMatrix::identity(Index n) {
  RBMatrix out(n, n);
  out.planes_[0] = RealMatrix::Identity(n, n);
  return out;
}

RBMatrix RBMatrix::from_real(const RealMatrix& x) {
  RBMatrix out(x.rows(), x.cols());
  out.planes_[0] = x;
  return out;
}

RBMatrix RBMatrix::from_complex(const ComplexMatrix& x) {
  RBMatrix out(x.rows(), x.cols());
  out.planes_[0] = x.real();
  out.planes_[1] = x.imag();
  return out;
}

RBMatrix RBMatrix::from_complex_pair(const ComplexMatrix& n1,
                                     const ComplexMatrix& n2) {
  if (n1.rows() != n2.rows() || n1.cols() != n2.cols()) {
    throw DimensionMismatch("complex pair planes must share one shape");
  }
  return RBMatrix(n1.real(), n1.imag(), n2.real(), n2.imag());
}

ComplexMatrix RBMatrix::n1() const {
  return planes_[0] + Complex(0, 1) * planes_[1];
}

ComplexMatrix RBMatrix::n2() const {
  return planes_[2] + Complex(0, 1) * planes_[3];
}

void RBMatrix::set(Index r, Index c, const RBScalar& v) {
  planes_[0](r, c) = v.p0;
  planes_[1](r, c) = v.p1;
  planes_[2](r, c) = v.p2;
  planes_[3](r, c) = v.p3;
}

bool operator==(const RBMatrix& a, const RBMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < 4; ++i) {
    if (a.planes_[i] != b.planes_[i]) return false;
  }
  return true;
}

RBMatrix operator+(const RBMatrix& a, const RBMatrix& b) {
  require_same_shape(a, b, "add");
  return RBMatrix(a.planes_[0] + b.planes_[0], a.planes_[1] + b.planes_[1],
                  a.planes_[2] + b.planes_[2], a.planes_[3] + b.planes_[3]);
}

RBMatrix operator-(const RBMatrix& a, const RBMatrix& b) {
  require_same_shape(a, b, "subtract");
  return RBMatrix(a.planes_[0] - b.planes_[0], a.planes_[1] - b.planes_[1],
                  a.planes_[2] - b.planes_[2], a.planes_[3] - b.planes_[3]);
}

// Plane products follow the same component expressions as rb_mul, so the
// 1x1 case reduces to the scalar product bitwise.
RBMatrix operator*(const RBMatrix& a, const RBMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("product: inner dimensions " +
                            std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()));
  }
  const RealMatrix& a0 = a.planes_[0];
  const RealMatrix& a1 = a.planes_[1];
  const RealMatrix& a2 = a.planes_[2];
  const RealMatrix& a3 = a.planes_[3];
  const RealMatrix& b0 = b.planes_[0];
  const RealMatrix& b1 = b.planes_[1];
  const RealMatrix& b2 = b.planes_[2];
  const RealMatrix& b3 = b.planes_[3];
  return RBMatrix((a0 * b0 - a1 * b1) + (a2 * b2 - a3 * b3),
                  (a0 * b1 + a1 * b0) + (a2 * b3 + a3 * b2),
                  (a0 * b2 + a2 * b0) - (a1 * b3 + a3 * b1),
                  (a0 * b3 + a3 * b0) + (a1 * b2 + a2 * b1));
}

RBMatrix scale(const RBScalar& alpha, const RBMatrix& a) {
  const RealMatrix& a0 = a.comp(0);
  const RealMatrix& a1 = a.comp(1);
  const RealMatrix& a2 = a.comp(2);
  const RealMatrix& a3 = a.comp(3);
  return RBMatrix(
      (alpha.p0 * a0 - alpha.p1 * a1) + (alpha.p2 * a2 - alpha.p3 * a3),
      (alpha.p0 * a1 + alpha.p1 * a0) + (alpha.p2 * a3 + alpha.p3 * a2),
      (alpha.p0 * a2 + alpha.p2 * a0) - (alpha.p1 * a3 + alpha.p3 * a1),
      (alpha.p0 * a3 + alpha.p3 * a0) + (alpha.p1 * a2 + alpha.p2 * a1));
}

double frobenius_norm(const RBMatrix& a) {
  return std::sqrt(a.comp(0).squaredNorm() + a.comp(1).squaredNorm() +
                   a.comp(2).squaredNorm() + a.comp(3).squaredNorm());
}

}  // namespace rblse
