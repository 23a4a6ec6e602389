#pragma once

#include <cmath>
#include <complex>

namespace rblse {

/// One reduced biquaternion p0 + p1 i + p2 j + p3 k.
///
/// The basis multiplication is commutative: ij = ji = k, jk = kj = i,
/// ki = ik = -j, i^2 = k^2 = -1, j^2 = 1. The algebra has zero divisors
/// (see idempotents e1, e2 below), so no division is provided.
struct RBScalar {
  double p0 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;

  constexpr RBScalar() = default;
  constexpr RBScalar(double w, double i, double j, double k)
      : p0(w), p1(i), p2(j), p3(k) {}

  static constexpr RBScalar one() { return {1.0, 0.0, 0.0, 0.0}; }

  /// Idempotent zero divisors: e1 e2 = 0, e1^2 = e1, e2^2 = e2.
  static constexpr RBScalar e1() { return {0.5, 0.0, 0.5, 0.0}; }
  static constexpr RBScalar e2() { return {0.5, 0.0, -0.5, 0.0}; }

  /// Complex-pair view: value = r1() + r2() j.
  std::complex<double> r1() const { return {p0, p1}; }
  std::complex<double> r2() const { return {p2, p3}; }

  static RBScalar from_pair(std::complex<double> r1, std::complex<double> r2) {
    return {r1.real(), r1.imag(), r2.real(), r2.imag()};
  }

  friend constexpr RBScalar operator+(const RBScalar& a, const RBScalar& b) {
    return {a.p0 + b.p0, a.p1 + b.p1, a.p2 + b.p2, a.p3 + b.p3};
  }
  friend constexpr RBScalar operator-(const RBScalar& a, const RBScalar& b) {
    return {a.p0 - b.p0, a.p1 - b.p1, a.p2 - b.p2, a.p3 - b.p3};
  }
  friend constexpr RBScalar operator-(const RBScalar& a) {
    return {-a.p0, -a.p1, -a.p2, -a.p3};
  }
  friend constexpr bool operator==(const RBScalar& a, const RBScalar& b) {
    return a.p0 == b.p0 && a.p1 == b.p1 && a.p2 == b.p2 && a.p3 == b.p3;
  }
};

/// Product under the commutative multiplication table. Terms are grouped in
/// (a, b)-symmetric pairs, so rb_mul(a, b) and rb_mul(b, a) evaluate bitwise
/// identically.
constexpr RBScalar rb_mul(const RBScalar& a, const RBScalar& b) {
  return {(a.p0 * b.p0 - a.p1 * b.p1) + (a.p2 * b.p2 - a.p3 * b.p3),
          (a.p0 * b.p1 + a.p1 * b.p0) + (a.p2 * b.p3 + a.p3 * b.p2),
          (a.p0 * b.p2 + a.p2 * b.p0) - (a.p1 * b.p3 + a.p3 * b.p1),
          (a.p0 * b.p3 + a.p3 * b.p0) + (a.p1 * b.p2 + a.p2 * b.p1)};
}

constexpr RBScalar operator*(const RBScalar& a, const RBScalar& b) {
  return rb_mul(a, b);
}

/// sqrt(p0^2 + p1^2 + p2^2 + p3^2), equal to sqrt(|r1|^2 + |r2|^2).
inline double rb_norm(const RBScalar& a) {
  return std::sqrt(a.p0 * a.p0 + a.p1 * a.p1 + a.p2 * a.p2 + a.p3 * a.p3);
}

}  // namespace rblse
