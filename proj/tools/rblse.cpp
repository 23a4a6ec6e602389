// Command line front end: seeded problem generation, the two solvers,
// experiment tables, and the library self-check.
//
// Exit codes: 0 success, 1 assertion failure (bound violation or failed
// self-check), 2 input error.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rblse/errors.hpp"
#include "rblse/experiments.hpp"
#include "rblse/io.hpp"
#include "rblse/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitInput = 2;

rblse::OutputFormat parse_format(const std::string& name) {
  if (name == "text") return rblse::OutputFormat::Text;
  if (name == "csv") return rblse::OutputFormat::Csv;
  if (name == "json") return rblse::OutputFormat::Json;
  throw rblse::IOError("unknown format " + name);
}

std::optional<rblse::SolveMode> parse_mode(const std::string& name) {
  if (name.empty() || name == "both") return std::nullopt;
  if (name == "real") return rblse::SolveMode::Real;
  if (name == "complex") return rblse::SolveMode::Complex;
  throw rblse::IOError("unknown mode " + name);
}

struct TableArgs {
  std::vector<int> t_values;
  int trials = 0;
  std::uint64_t seed = 1;
  std::vector<double> eps_targets;
  std::string mode;
  std::string out;
  std::string format = "text";
};

void add_table_options(CLI::App* cmd, TableArgs& args,
                       std::vector<int> default_t, int default_trials,
                       bool with_eps) {
  args.t_values = std::move(default_t);
  args.trials = default_trials;
  cmd->add_option("--t", args.t_values, "scale parameters (m=30t n=10t p=2t d=2)")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--trials", args.trials, "trials per table cell")
      ->capture_default_str();
  cmd->add_option("--seed", args.seed, "base seed")->capture_default_str();
  if (with_eps) {
    args.eps_targets = {1e-13, 1e-10, 1e-7};
    cmd->add_option("--eps", args.eps_targets,
                    "normwise perturbation levels")
        ->delimiter(',')
        ->capture_default_str();
  }
  cmd->add_option("--mode", args.mode, "real, complex, or both")
      ->check(CLI::IsMember({"real", "complex", "both"}))
      ->capture_default_str();
  cmd->add_option("--out", args.out, "output file (stdout when omitted)");
  cmd->add_option("--format", args.format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

rblse::ExperimentConfig to_config(const TableArgs& args) {
  rblse::ExperimentConfig config;
  config.t_values = args.t_values;
  config.trials = args.trials;
  config.base_seed = args.seed;
  if (!args.eps_targets.empty()) config.eps_targets = args.eps_targets;
  config.mode = parse_mode(args.mode);
  return config;
}

int emit_table(const rblse::ResultTable& table, const TableArgs& args) {
  const rblse::OutputFormat format = parse_format(args.format);
  if (args.out.empty()) {
    std::cout << rblse::format_table(table, format);
  } else {
    rblse::write_table(args.out, table, format);
    std::cout << "wrote " << args.out << "\n";
  }
  return table.assertion_failed ? kExitAssertion : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduced biquaternion equality-constrained least squares"};
  app.set_version_flag("--version", std::string("rblse ") + rblse::kVersion);
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a seeded random problem");
  int gen_t = 1;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--t", gen_t, "scale parameter")->capture_default_str();
  gen->add_option("--seed", gen_seed, "seed")->capture_default_str();
  gen->add_option("--out", gen_out, "problem file path")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "solve a problem file");
  std::string solve_in, solve_mode = "real", solve_out;
  solve->add_option("input", solve_in, "problem file")->required();
  solve->add_option("--mode", solve_mode, "real or complex")
      ->check(CLI::IsMember({"real", "complex"}))
      ->capture_default_str();
  solve->add_option("--out", solve_out, "solution file path");

  // experiment tables
  TableArgs acc_args, pert_args, rec_args, bench_args;
  auto* acc = app.add_subcommand("accuracy",
                                 "residual / constraint accuracy table");
  add_table_options(acc, acc_args, {1, 3, 5, 7, 9}, 5, false);
  auto* pert = app.add_subcommand(
      "perturbation", "forward error vs first-order bound table");
  add_table_options(pert, pert_args, {1, 5, 9}, 50, true);
  auto* rec = app.add_subcommand("recovery",
                                 "known-solution recovery error table");
  add_table_options(rec, rec_args, {1, 3, 5, 7, 9}, 5, false);
  auto* bench = app.add_subcommand("benchmark", "solver timing table");
  add_table_options(bench, bench_args, {1, 3, 5, 7, 9}, 50, false);

  // verify
  auto* verify = app.add_subcommand("verify", "run the invariant self-check");
  std::uint64_t verify_seed = 1;
  verify->add_option("--seed", verify_seed, "seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitInput;
  }

  try {
    if (gen->parsed()) {
      rblse::ProblemFile pf;
      pf.problem = rblse::generate_random_problem(gen_t, gen_seed);
      pf.t = gen_t;
      pf.seed = gen_seed;
      rblse::write_problem(gen_out, pf);
      std::cout << "wrote " << gen_out << " (m=" << pf.problem.m()
                << " n=" << pf.problem.n() << " p=" << pf.problem.p()
                << " d=" << pf.problem.d() << ")\n";
      return kExitOk;
    }

    if (solve->parsed()) {
      const rblse::ProblemFile pf = rblse::read_problem(solve_in);
      const rblse::RBLSESolution sol =
          solve_mode == "real" ? rblse::solve_real(pf.problem)
                               : rblse::solve_complex(pf.problem);
      std::cout << "mode: " << rblse::to_string(sol.mode)
                << "\nlog10 residual self-consistency: "
                << rblse::format_double(sol.eps_residual)
                << "\nlog10 constraint violation: "
                << rblse::format_double(sol.eps_constraint)
                << "\nsolve seconds: "
                << rblse::format_double(sol.solve_seconds) << "\n";
      if (!solve_out.empty()) {
        rblse::write_solution(solve_out, sol);
        std::cout << "wrote " << solve_out << "\n";
      }
      return kExitOk;
    }

    if (acc->parsed()) return emit_table(rblse::run_accuracy(to_config(acc_args)), acc_args);
    if (pert->parsed()) {
      return emit_table(rblse::run_perturbation(to_config(pert_args)),
                        pert_args);
    }
    if (rec->parsed()) return emit_table(rblse::run_recovery(to_config(rec_args)), rec_args);
    if (bench->parsed()) {
      return emit_table(rblse::run_benchmark(to_config(bench_args)),
                        bench_args);
    }

    if (verify->parsed()) {
      const auto results = rblse::run_verify(verify_seed);
      bool all_pass = true;
      for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << "\n";
        all_pass = all_pass && r.pass;
      }
      std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
      return all_pass ? kExitOk : kExitAssertion;
    }
  } catch (const rblse::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
