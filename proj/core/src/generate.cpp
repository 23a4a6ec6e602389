#include "rblse/generate.hpp"

#include <string>

#include "rblse/errors.hpp"
#include "rblse/random.hpp"

namespace rblse {

namespace {

constexpr int kMaxRetries = 8;

bool stacks_have_full_rank(const RBLSEProblem& prob) {
  if (4 * prob.p() <= prob.n() &&
      !rank_check<double>(real_rep_col(prob.C))) {
    return false;
  }
  if (2 * prob.p() <= prob.n() &&
      !rank_check<Complex>(complex_rep_col(prob.C))) {
    return false;
  }
  return true;
}

}  // namespace

ProblemDims dims_for_scale(int t) {
  if (t < 1) throw PreconditionViolated("scale parameter t must be >= 1");
  return {30 * static_cast<Index>(t), 10 * static_cast<Index>(t),
          2 * static_cast<Index>(t), 2};
}

RBLSEProblem generate_random_problem(int t, std::uint64_t seed, int* retries) {
  const ProblemDims dims = dims_for_scale(t);
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    RBLSEProblem prob;
    prob.A = rng::Stream(s, rng::kStreamA).uniform_rb_matrix(dims.m, dims.n);
    prob.B = rng::Stream(s, rng::kStreamB).uniform_rb_matrix(dims.m, dims.d);
    prob.C = rng::Stream(s, rng::kStreamC).uniform_rb_matrix(dims.p, dims.n);
    prob.D = rng::Stream(s, rng::kStreamD).uniform_rb_matrix(dims.p, dims.d);
    if (stacks_have_full_rank(prob)) {
      if (retries) *retries = attempt;
      return prob;
    }
  }
  throw PreconditionViolated("failed to generate a full-rank constraint in " +
                             std::to_string(kMaxRetries + 1) + " attempts");
}

ConsistentProblem generate_consistent_problem(int t, std::uint64_t seed,
                                              SolveMode mode) {
  const ProblemDims dims = dims_for_scale(t);
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    ConsistentProblem out;
    out.mode = mode;
    out.problem.A =
        rng::Stream(s, rng::kStreamA).uniform_rb_matrix(dims.m, dims.n);
    out.problem.C =
        rng::Stream(s, rng::kStreamC).uniform_rb_matrix(dims.p, dims.n);

    RBMatrix x_rb;
    const RealMatrix x0 =
        rng::Stream(s, rng::kStreamX0).uniform_matrix(dims.n, dims.d);
    if (mode == SolveMode::Real) {
      out.x_real = x0;
      x_rb = RBMatrix::from_real(x0);
    } else {
      const RealMatrix x1 =
          rng::Stream(s, rng::kStreamX1).uniform_matrix(dims.n, dims.d);
      out.x_complex = x0 + Complex(0, 1) * x1;
      x_rb = RBMatrix::from_complex(out.x_complex);
    }
    out.problem.B = out.problem.A * x_rb;
    out.problem.D = out.problem.C * x_rb;
    if (stacks_have_full_rank(out.problem)) return out;
  }
  throw PreconditionViolated("failed to generate a full-rank constraint in " +
                             std::to_string(kMaxRetries + 1) + " attempts");
}

}  // namespace rblse
