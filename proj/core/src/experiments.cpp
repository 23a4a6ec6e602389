#include "rblse/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "rblse/errors.hpp"
#include "rblse/random.hpp"
#include "rblse/version.hpp"

namespace rblse {

namespace {

std::string fmt_u64(std::uint64_t v) { return std::to_string(v); }
std::string fmt_int(long long v) { return std::to_string(v); }

std::uint64_t row_seed(const ExperimentConfig& config, int t) {
  return rng::derive_seed(config.base_seed, static_cast<std::uint64_t>(t));
}

std::uint64_t trial_seed(std::uint64_t row, int trial) {
  return rng::derive_seed(row, static_cast<std::uint64_t>(trial));
}

std::vector<SolveMode> selected_modes(const ExperimentConfig& config) {
  if (config.mode) return {*config.mode};
  return {SolveMode::Real, SolveMode::Complex};
}

bool has_mode(const ExperimentConfig& config, SolveMode mode) {
  return !config.mode || *config.mode == mode;
}

void stamp_notes(ResultTable& table, const ExperimentConfig& config) {
  table.notes.push_back("version: rblse-" + std::string(kVersion));
  table.notes.push_back("base_seed: " + fmt_u64(config.base_seed));
  table.notes.push_back("trials: " + fmt_int(config.trials));
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  if (v.size() % 2 == 1) return v[mid];
  return 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

ResultTable run_accuracy(const ExperimentConfig& config) {
  ResultTable table;
  table.title = "accuracy";
  table.columns = {"t", "seed"};
  if (has_mode(config, SolveMode::Real)) {
    table.columns.insert(table.columns.end(),
                         {"eps_res_real", "eps_con_real", "mean_s_real"});
  }
  if (has_mode(config, SolveMode::Complex)) {
    table.columns.insert(table.columns.end(), {"eps_res_complex",
                                               "eps_con_complex",
                                               "mean_s_complex"});
  }
  stamp_notes(table, config);

  for (int t : config.t_values) {
    const std::uint64_t rs = row_seed(config, t);
    double worst_res_r = -std::numeric_limits<double>::infinity();
    double worst_con_r = worst_res_r;
    double worst_res_c = worst_res_r;
    double worst_con_c = worst_res_r;
    std::vector<double> secs_r, secs_c;
    for (int trial = 0; trial < config.trials; ++trial) {
      const RBLSEProblem prob =
          generate_random_problem(t, trial_seed(rs, trial));
      if (has_mode(config, SolveMode::Real)) {
        const RBLSESolution sol = solve_real(prob);
        worst_res_r = std::max(worst_res_r, sol.eps_residual);
        worst_con_r = std::max(worst_con_r, sol.eps_constraint);
        secs_r.push_back(sol.solve_seconds);
      }
      if (has_mode(config, SolveMode::Complex)) {
        const RBLSESolution sol = solve_complex(prob);
        worst_res_c = std::max(worst_res_c, sol.eps_residual);
        worst_con_c = std::max(worst_con_c, sol.eps_constraint);
        secs_c.push_back(sol.solve_seconds);
      }
    }
    std::vector<std::string> row{fmt_int(t), fmt_u64(rs)};
    if (has_mode(config, SolveMode::Real)) {
      row.push_back(format_double(worst_res_r));
      row.push_back(format_double(worst_con_r));
      row.push_back(format_double(mean(secs_r)));
    }
    if (has_mode(config, SolveMode::Complex)) {
      row.push_back(format_double(worst_res_c));
      row.push_back(format_double(worst_con_c));
      row.push_back(format_double(mean(secs_c)));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

ResultTable run_recovery(const ExperimentConfig& config) {
  ResultTable table;
  table.title = "recovery";
  table.columns = {"t", "seed"};
  if (has_mode(config, SolveMode::Real)) {
    table.columns.push_back("recover_err_real");
  }
  if (has_mode(config, SolveMode::Complex)) {
    table.columns.push_back("recover_err_complex");
  }
  stamp_notes(table, config);

  for (int t : config.t_values) {
    const std::uint64_t rs = row_seed(config, t);
    double worst_r = 0.0, worst_c = 0.0;
    for (int trial = 0; trial < config.trials; ++trial) {
      const std::uint64_t ts = trial_seed(rs, trial);
      if (has_mode(config, SolveMode::Real)) {
        const ConsistentProblem gen =
            generate_consistent_problem(t, ts, SolveMode::Real);
        const RBLSESolution sol = solve_real(gen.problem);
        worst_r = std::max(worst_r, (sol.x_real - gen.x_real).norm());
      }
      if (has_mode(config, SolveMode::Complex)) {
        const ConsistentProblem gen =
            generate_consistent_problem(t, ts, SolveMode::Complex);
        const RBLSESolution sol = solve_complex(gen.problem);
        worst_c = std::max(worst_c, (sol.x_complex - gen.x_complex).norm());
      }
    }
    std::vector<std::string> row{fmt_int(t), fmt_u64(rs)};
    if (has_mode(config, SolveMode::Real)) {
      row.push_back(format_double(worst_r));
    }
    if (has_mode(config, SolveMode::Complex)) {
      row.push_back(format_double(worst_c));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

struct PerturbCell {
  double fwd_max = 0.0;
  double fwd_mean = 0.0;
  double bound = 0.0;
  int violations = 0;
};

template <typename XMat, typename Solve>
PerturbCell perturb_cell(const RBLSEProblem& prob, const XMat& x, double eps,
                         std::uint64_t cell_seed, int trials, bool check,
                         const PerturbationReport& report, Solve&& re_solve) {
  PerturbCell cell;
  cell.bound = report.bound;
  const double x_norm = x.norm();
  std::vector<double> errors;
  errors.reserve(static_cast<std::size_t>(trials));
  for (int trial = 0; trial < trials; ++trial) {
    const PerturbationSpec spec{eps, trial_seed(cell_seed, trial)};
    const RBLSEProblem pert = perturb(prob, spec);
    const XMat x_hat = re_solve(pert);
    double err = (x_hat - x).norm();
    if (!report.forward_error_absolute) err /= x_norm;
    errors.push_back(err);
    if (check && !(err <= report.bound)) ++cell.violations;
  }
  cell.fwd_max = errors.empty() ? 0.0 : *std::max_element(errors.begin(),
                                                          errors.end());
  cell.fwd_mean = mean(errors);
  return cell;
}

}  // namespace

ResultTable run_perturbation(const ExperimentConfig& config) {
  ResultTable table;
  table.title = "perturbation";
  table.columns = {"t", "eps_target", "seed", "eps_measured"};
  if (has_mode(config, SolveMode::Real)) {
    table.columns.insert(table.columns.end(),
                         {"fwd_max_real", "fwd_mean_real", "bound_real",
                          "margin_real", "viol_real"});
  }
  if (has_mode(config, SolveMode::Complex)) {
    table.columns.insert(table.columns.end(),
                         {"fwd_max_complex", "fwd_mean_complex",
                          "bound_complex", "margin_complex", "viol_complex"});
  }
  stamp_notes(table, config);

  for (int t : config.t_values) {
    const std::uint64_t rs = row_seed(config, t);
    const RBLSEProblem prob = generate_random_problem(t, rs);
    RBLSESolution sol_r, sol_c;
    if (has_mode(config, SolveMode::Real)) sol_r = solve_real(prob);
    if (has_mode(config, SolveMode::Complex)) sol_c = solve_complex(prob);

    for (std::size_t ei = 0; ei < config.eps_targets.size(); ++ei) {
      const double eps = config.eps_targets[ei];
      const std::uint64_t cell_seed = rng::derive_seed(rs, ei + 1);
      const bool degenerate = eps == 0.0;
      if (degenerate) {
        table.notes.push_back("cell t=" + fmt_int(t) +
                              " eps=0 flagged: excluded from the bound check");
      }
      // Measured level equals the target by construction; verified per cell.
      double eps_measured = 0.0;

      std::vector<std::string> row{fmt_int(t), format_double(eps),
                                   fmt_u64(cell_seed)};
      std::string measured_cell;
      PerturbCell cr, cc;
      if (has_mode(config, SolveMode::Real)) {
        const PerturbationReport rep = bound_real(prob, sol_r.x_real, eps);
        cr = perturb_cell(prob, sol_r.x_real, eps, cell_seed, config.trials,
                          !degenerate, rep, [](const RBLSEProblem& p) {
                            return solve_real(p).x_real;
                          });
      }
      if (has_mode(config, SolveMode::Complex)) {
        const PerturbationReport rep = bound_complex(prob, sol_c.x_complex,
                                                     eps);
        cc = perturb_cell(prob, sol_c.x_complex, eps, cell_seed,
                          config.trials, !degenerate, rep,
                          [](const RBLSEProblem& p) {
                            return solve_complex(p).x_complex;
                          });
      }
      {
        const PerturbationSpec spec{eps, trial_seed(cell_seed, 0)};
        eps_measured = measure_eps(prob, perturb(prob, spec));
      }
      row.push_back(format_double(eps_measured));
      const auto push_cell = [&](const PerturbCell& cell) {
        row.push_back(format_double(cell.fwd_max));
        row.push_back(format_double(cell.fwd_mean));
        row.push_back(format_double(cell.bound));
        row.push_back(format_double(
            cell.fwd_max > 0.0
                ? cell.bound / cell.fwd_max
                : std::numeric_limits<double>::infinity()));
        row.push_back(fmt_int(cell.violations));
        if (cell.violations > 0) table.assertion_failed = true;
      };
      if (has_mode(config, SolveMode::Real)) push_cell(cr);
      if (has_mode(config, SolveMode::Complex)) push_cell(cc);
      table.rows.push_back(std::move(row));
    }
  }
  if (table.assertion_failed) {
    table.notes.push_back("ASSERTION FAILED: forward error exceeded its bound");
  }
  return table;
}

ResultTable run_benchmark(const ExperimentConfig& config) {
  ResultTable table;
  table.title = "benchmark";
  table.columns = {"t", "seed", "trials"};
  if (has_mode(config, SolveMode::Real)) {
    table.columns.insert(table.columns.end(),
                         {"mean_s_real", "median_s_real", "flops_real"});
  }
  if (has_mode(config, SolveMode::Complex)) {
    table.columns.insert(table.columns.end(), {"mean_s_complex",
                                               "median_s_complex",
                                               "flops_complex"});
  }
  stamp_notes(table, config);

  for (int t : config.t_values) {
    const std::uint64_t rs = row_seed(config, t);
    const ProblemDims dims = dims_for_scale(t);
    std::vector<double> secs_r, secs_c;
    // Warm-up solves are excluded from the statistics.
    {
      const RBLSEProblem warm = generate_random_problem(t, rs);
      if (has_mode(config, SolveMode::Real)) solve_real(warm);
      if (has_mode(config, SolveMode::Complex)) solve_complex(warm);
    }
    for (int trial = 0; trial < config.trials; ++trial) {
      const RBLSEProblem prob =
          generate_random_problem(t, trial_seed(rs, trial));
      if (has_mode(config, SolveMode::Real)) {
        secs_r.push_back(solve_real(prob).solve_seconds);
      }
      if (has_mode(config, SolveMode::Complex)) {
        secs_c.push_back(solve_complex(prob).solve_seconds);
      }
    }
    std::vector<std::string> row{fmt_int(t), fmt_u64(rs),
                                 fmt_int(config.trials)};
    if (has_mode(config, SolveMode::Real)) {
      row.push_back(format_double(mean(secs_r)));
      row.push_back(format_double(median(secs_r)));
      row.push_back(format_double(
          flop_estimate(SolveMode::Real, dims.m, dims.n, dims.p, dims.d)));
    }
    if (has_mode(config, SolveMode::Complex)) {
      row.push_back(format_double(mean(secs_c)));
      row.push_back(format_double(median(secs_c)));
      row.push_back(format_double(
          flop_estimate(SolveMode::Complex, dims.m, dims.n, dims.p, dims.d)));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

std::string format_text(const ResultTable& table) {
  std::ostringstream out;
  out << "== " << table.title << " ==\n";
  for (const auto& note : table.notes) out << "# " << note << "\n";
  std::vector<std::size_t> widths(table.columns.size());
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    widths[i] = table.columns[i].size();
  }
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  const auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << "  ";
      out << cells[i];
      for (std::size_t pad = cells[i].size(); pad < widths[i]; ++pad) {
        out << ' ';
      }
    }
    out << "\n";
  };
  emit(table.columns);
  for (const auto& row : table.rows) emit(row);
  return out.str();
}

std::string format_csv(const ResultTable& table) {
  std::ostringstream out;
  out << "# table: " << table.title << "\n";
  for (const auto& note : table.notes) out << "# " << note << "\n";
  const auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ",";
      out << cells[i];
    }
    out << "\n";
  };
  emit(table.columns);
  for (const auto& row : table.rows) emit(row);
  return out.str();
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "\\u%04x", c);
      out += buf;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string format_json(const ResultTable& table) {
  std::ostringstream out;
  const auto emit_list = [&](const std::vector<std::string>& cells) {
    out << "[";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ",";
      out << '"' << json_escape(cells[i]) << '"';
    }
    out << "]";
  };
  out << "{\"title\":\"" << json_escape(table.title) << "\",\"columns\":";
  emit_list(table.columns);
  out << ",\"rows\":[";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (i) out << ",";
    emit_list(table.rows[i]);
  }
  out << "],\"notes\":";
  emit_list(table.notes);
  out << ",\"assertion_failed\":"
      << (table.assertion_failed ? "true" : "false") << "}\n";
  return out.str();
}

}  // namespace

std::string format_table(const ResultTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text:
      return format_text(table);
    case OutputFormat::Csv:
      return format_csv(table);
    case OutputFormat::Json:
      return format_json(table);
  }
  return {};
}

void write_table(const std::filesystem::path& path, const ResultTable& table,
                 OutputFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot write " + path.string());
  out << format_table(table, format);
  if (!out) throw IOError("write failed for " + path.string());
}

}  // namespace rblse
