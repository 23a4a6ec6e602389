#pragma once

#include <Eigen/Dense>

#include <complex>

namespace rblse {

using Index = Eigen::Index;
using Complex = std::complex<double>;

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace rblse
