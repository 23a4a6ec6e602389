#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rblse/generate.hpp"
#include "rblse/perturbation.hpp"

namespace rblse {

enum class OutputFormat { Text, Csv, Json };

struct ExperimentConfig {
  std::vector<int> t_values{1, 3, 5, 7, 9};
  int trials = 5;
  std::uint64_t base_seed = 1;
  std::vector<double> eps_targets{1e-13, 1e-10, 1e-7};
  std::optional<SolveMode> mode;  // both modes when unset
};

/// Tabular experiment result. Cells are preformatted with locale-independent
/// shortest round-trip number formatting; notes carry the seed, software
/// version, and any flags. Per-row seeds are listed in a seed column: row
/// seed = derive_seed(base_seed, t), trial seed = derive_seed(row seed,
/// trial index), so any row replays exactly from its recorded seed.
struct ResultTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  bool assertion_failed = false;  // e.g. a forward-error bound violation
};

/// Random problems per t, both solvers, worst-case accuracy metrics over the
/// trials plus mean solve times.
ResultTable run_accuracy(const ExperimentConfig& config);

/// For each (t, eps) cell: solve, compute the forward-error bound, then
/// perturb / re-solve per trial and compare. Rows report per-cell max and
/// mean forward errors against the bound; a violation in any trial sets
/// assertion_failed. eps = 0 cells are flagged and excluded from the check.
ResultTable run_perturbation(const ExperimentConfig& config);

/// Consistent problems with known exact solutions; reports worst-case
/// recovery error per t for both modes.
ResultTable run_recovery(const ExperimentConfig& config);

/// Times both solvers over the configured trials (one warm-up solve per
/// mode excluded), reporting mean and median seconds plus the closed-form
/// flop estimates.
ResultTable run_benchmark(const ExperimentConfig& config);

std::string format_table(const ResultTable& table, OutputFormat format);
void write_table(const std::filesystem::path& path, const ResultTable& table,
                 OutputFormat format);

/// Shortest round-trip decimal representation, locale independent.
std::string format_double(double v);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Compact self-check across the whole library: scalar algebra laws,
/// representation identities, block operators, kernel properties, solver
/// transfer identities, and perturbation-bound sanity.
std::vector<CheckResult> run_verify(std::uint64_t seed);

}  // namespace rblse
