#pragma once

#include <stdexcept>
#include <string>

namespace rblse {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A structured matrix does not exhibit the expected block pattern.
class StructureViolation : public Error {
 public:
  using Error::Error;
};

/// The constraint matrix fails the numerical full-row-rank check.
class RankDeficientConstraint : public Error {
 public:
  using Error::Error;
};

/// A documented solver precondition does not hold for the given problem.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// A perturbed constraint stack lost full row rank.
class RankLostUnderPerturbation : public Error {
 public:
  using Error::Error;
};

/// File is malformed, shape-inconsistent, or has an unknown format version.
class IOError : public Error {
 public:
  using Error::Error;
};

}  // namespace rblse
