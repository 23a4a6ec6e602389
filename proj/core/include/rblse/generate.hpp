#pragma once

#include <cstdint>

#include "rblse/solvers.hpp"

namespace rblse {

/// Dimension schedule used by all experiments: m = 30t, n = 10t, p = 2t,
/// d = 2. Every t >= 1 satisfies m >= n + d, 4p <= n, and 2p <= n.
struct ProblemDims {
  Index m, n, p, d;
};
ProblemDims dims_for_scale(int t);

/// Random problem with all sixteen component planes uniform on [0, 1),
/// drawn from per-matrix streams under the given seed. The constraint
/// stacks are rank-checked; on failure the generation retries with seed + 1
/// (at most 8 times, then PreconditionViolated). retries, when non-null,
/// receives the number of retries taken.
RBLSEProblem generate_random_problem(int t, std::uint64_t seed,
                                     int* retries = nullptr);

struct ConsistentProblem {
  RBLSEProblem problem;
  SolveMode mode = SolveMode::Real;
  RealMatrix x_real;        // exact solution in Real mode
  ComplexMatrix x_complex;  // exact solution in Complex mode
};

/// Consistent problem with a known exact solution: A and C are random, X is
/// a random real (Real mode) or complex (Complex mode) n x d matrix, and
/// B = A X, D = C X are formed with reduced biquaternion products.
ConsistentProblem generate_consistent_problem(int t, std::uint64_t seed,
                                              SolveMode mode);

}  // namespace rblse
