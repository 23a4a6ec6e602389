#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "rblse/solvers.hpp"

namespace rblse {

/// JSON schemas. All numbers round-trip bit-exactly for values representable
/// in double precision.
///
/// RBMatrix:
///   { "m": <rows>, "n": <cols>,
///     "planes": { "r": [[..]], "i": [[..]], "j": [[..]], "k": [[..]] } }
/// with each plane a row-major array of m arrays of n numbers.
///
/// Problem file (format "rblse-problem", version 1):
///   { "format", "version", "meta": { "m","n","p","d","t","seed","generator" },
///     "A": <RBMatrix>, "B": ..., "C": ..., "D": ... }
///
/// Solution file (format "rblse-solution", version 1):
///   { "format", "version", "mode": "real"|"complex",
///     "x": { "rows", "cols", "real": [[..]], "imag": [[..]] (complex only) },
///     "metrics": { "eps_residual", "eps_constraint", "solve_seconds" } }

std::string rbmatrix_to_json(const RBMatrix& m);
RBMatrix rbmatrix_from_json(const std::string& text);

struct ProblemFile {
  RBLSEProblem problem;
  int t = 0;
  std::uint64_t seed = 0;
  std::string generator;
};

std::string problem_to_json(const ProblemFile& pf);
ProblemFile problem_from_json(const std::string& text);
void write_problem(const std::filesystem::path& path, const ProblemFile& pf);
ProblemFile read_problem(const std::filesystem::path& path);

std::string solution_to_json(const RBLSESolution& sol);
RBLSESolution solution_from_json(const std::string& text);
void write_solution(const std::filesystem::path& path,
                    const RBLSESolution& sol);
RBLSESolution read_solution(const std::filesystem::path& path);

}  // namespace rblse
