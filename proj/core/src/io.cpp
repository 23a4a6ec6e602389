#include "rblse/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rblse/errors.hpp"
#include "rblse/version.hpp"

namespace rblse {

namespace {

using nlohmann::json;

json matrix_rows(const RealMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

RealMatrix matrix_from_rows(const json& rows, Index m, Index n,
                            const char* what) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != m) {
    throw IOError(std::string(what) + ": expected " + std::to_string(m) +
                  " rows");
  }
  RealMatrix out(m, n);
  for (Index i = 0; i < m; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      throw IOError(std::string(what) + ": expected " + std::to_string(n) +
                    " columns in every row");
    }
    for (Index j = 0; j < n; ++j) {
      const json& cell = row[static_cast<std::size_t>(j)];
      if (!cell.is_number()) {
        throw IOError(std::string(what) + ": non-numeric entry");
      }
      out(i, j) = cell.get<double>();
    }
  }
  return out;
}

json rbmatrix_to_value(const RBMatrix& m) {
  return json{{"m", m.rows()},
              {"n", m.cols()},
              {"planes",
               {{"r", matrix_rows(m.comp(0))},
                {"i", matrix_rows(m.comp(1))},
                {"j", matrix_rows(m.comp(2))},
                {"k", matrix_rows(m.comp(3))}}}};
}

RBMatrix rbmatrix_from_value(const json& v, const char* what) {
  if (!v.is_object() || !v.contains("m") || !v.contains("n") ||
      !v.contains("planes")) {
    throw IOError(std::string(what) + ": missing m/n/planes");
  }
  const Index m = v.at("m").get<Index>();
  const Index n = v.at("n").get<Index>();
  if (m < 0 || n < 0) throw IOError(std::string(what) + ": negative shape");
  const json& planes = v.at("planes");
  const char* keys[4] = {"r", "i", "j", "k"};
  std::array<RealMatrix, 4> comps;
  for (int idx = 0; idx < 4; ++idx) {
    if (!planes.contains(keys[idx])) {
      throw IOError(std::string(what) + ": missing plane " + keys[idx]);
    }
    comps[idx] = matrix_from_rows(planes.at(keys[idx]), m, n, what);
  }
  return RBMatrix(std::move(comps[0]), std::move(comps[1]),
                  std::move(comps[2]), std::move(comps[3]));
}

json parse(const std::string& text) {
  json v = json::parse(text, nullptr, false);
  if (v.is_discarded()) throw IOError("malformed JSON");
  return v;
}

void check_header(const json& v, const char* format) {
  if (!v.is_object() || !v.contains("format") || !v.contains("version")) {
    throw IOError("missing format header");
  }
  if (v.at("format") != format) {
    throw IOError("unexpected format, wanted " + std::string(format));
  }
  if (v.at("version") != 1) {
    throw IOError("unknown format version");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot write " + path.string());
  out << text;
  if (!out) throw IOError("write failed for " + path.string());
}

}  // namespace

std::string rbmatrix_to_json(const RBMatrix& m) {
  return rbmatrix_to_value(m).dump();
}

RBMatrix rbmatrix_from_json(const std::string& text) {
  return rbmatrix_from_value(parse(text), "matrix");
}

std::string problem_to_json(const ProblemFile& pf) {
  json v{{"format", "rblse-problem"},
         {"version", 1},
         {"meta",
          {{"m", pf.problem.m()},
           {"n", pf.problem.n()},
           {"p", pf.problem.p()},
           {"d", pf.problem.d()},
           {"t", pf.t},
           {"seed", pf.seed},
           {"generator", pf.generator.empty()
                             ? std::string("rblse-") + kVersion
                             : pf.generator}}},
         {"A", rbmatrix_to_value(pf.problem.A)},
         {"B", rbmatrix_to_value(pf.problem.B)},
         {"C", rbmatrix_to_value(pf.problem.C)},
         {"D", rbmatrix_to_value(pf.problem.D)}};
  return v.dump(2);
}

ProblemFile problem_from_json(const std::string& text) {
  const json v = parse(text);
  check_header(v, "rblse-problem");
  for (const char* key : {"meta", "A", "B", "C", "D"}) {
    if (!v.contains(key)) {
      throw IOError(std::string("missing field ") + key);
    }
  }
  ProblemFile pf;
  pf.problem.A = rbmatrix_from_value(v.at("A"), "A");
  pf.problem.B = rbmatrix_from_value(v.at("B"), "B");
  pf.problem.C = rbmatrix_from_value(v.at("C"), "C");
  pf.problem.D = rbmatrix_from_value(v.at("D"), "D");
  try {
    pf.problem.check_shapes();
  } catch (const DimensionMismatch& e) {
    throw IOError(std::string("inconsistent operand shapes: ") + e.what());
  }
  const json& meta = v.at("meta");
  if (meta.contains("t")) pf.t = meta.at("t").get<int>();
  if (meta.contains("seed")) pf.seed = meta.at("seed").get<std::uint64_t>();
  if (meta.contains("generator")) {
    pf.generator = meta.at("generator").get<std::string>();
  }
  const auto meta_dim = [&](const char* key, Index actual) {
    if (meta.contains(key) && meta.at(key).get<Index>() != actual) {
      throw IOError(std::string("meta dimension ") + key +
                    " disagrees with operand shapes");
    }
  };
  meta_dim("m", pf.problem.m());
  meta_dim("n", pf.problem.n());
  meta_dim("p", pf.problem.p());
  meta_dim("d", pf.problem.d());
  return pf;
}

void write_problem(const std::filesystem::path& path, const ProblemFile& pf) {
  write_file(path, problem_to_json(pf));
}

ProblemFile read_problem(const std::filesystem::path& path) {
  return problem_from_json(read_file(path));
}

std::string solution_to_json(const RBLSESolution& sol) {
  const bool real = sol.mode == SolveMode::Real;
  json x{{"rows", real ? sol.x_real.rows() : sol.x_complex.rows()},
         {"cols", real ? sol.x_real.cols() : sol.x_complex.cols()}};
  if (real) {
    x["real"] = matrix_rows(sol.x_real);
  } else {
    x["real"] = matrix_rows(sol.x_complex.real());
    x["imag"] = matrix_rows(sol.x_complex.imag());
  }
  json v{{"format", "rblse-solution"},
         {"version", 1},
         {"mode", to_string(sol.mode)},
         {"x", std::move(x)},
         {"metrics",
          {{"eps_residual", sol.eps_residual},
           {"eps_constraint", sol.eps_constraint},
           {"solve_seconds", sol.solve_seconds}}}};
  return v.dump(2);
}

RBLSESolution solution_from_json(const std::string& text) {
  const json v = parse(text);
  check_header(v, "rblse-solution");
  if (!v.contains("mode") || !v.contains("x") || !v.contains("metrics")) {
    throw IOError("missing mode/x/metrics");
  }
  RBLSESolution sol;
  const std::string mode = v.at("mode").get<std::string>();
  if (mode == "real") {
    sol.mode = SolveMode::Real;
  } else if (mode == "complex") {
    sol.mode = SolveMode::Complex;
  } else {
    throw IOError("unknown mode " + mode);
  }
  const json& x = v.at("x");
  const Index rows = x.at("rows").get<Index>();
  const Index cols = x.at("cols").get<Index>();
  const RealMatrix re = matrix_from_rows(x.at("real"), rows, cols, "x.real");
  if (sol.mode == SolveMode::Real) {
    sol.x_real = re;
  } else {
    if (!x.contains("imag")) throw IOError("complex solution missing x.imag");
    sol.x_complex =
        re + Complex(0, 1) * matrix_from_rows(x.at("imag"), rows, cols,
                                              "x.imag");
  }
  const json& metrics = v.at("metrics");
  sol.eps_residual = metrics.at("eps_residual").get<double>();
  sol.eps_constraint = metrics.at("eps_constraint").get<double>();
  sol.solve_seconds = metrics.at("solve_seconds").get<double>();
  return sol;
}

void write_solution(const std::filesystem::path& path,
                    const RBLSESolution& sol) {
  write_file(path, solution_to_json(sol));
}

RBLSESolution read_solution(const std::filesystem::path& path) {
  return solution_from_json(read_file(path));
}

}  // namespace rblse
