#include <cmath>
#include <sstream>

#include "rblse/experiments.hpp"
#include "rblse/random.hpp"

namespace rblse {

namespace {

struct Checker {
  std::vector<CheckResult> results;

  void add(const std::string& name, bool pass, const std::string& detail) {
    results.push_back({name, pass, detail});
  }

  void add_max(const std::string& name, double worst, double tol) {
    std::ostringstream detail;
    detail << "max deviation " << worst << " (tolerance " << tol << ")";
    add(name, worst <= tol, detail.str());
  }
};

RBMatrix random_rb(rng::Stream& s, Index rows, Index cols) {
  return s.uniform_rb_matrix(rows, cols);
}

double rel_err(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

void check_scalar_algebra(Checker& c, std::uint64_t seed) {
  const RBScalar j{0, 0, 1, 0};
  const bool table_ok = (j * j == RBScalar::one()) &&
                        (RBScalar::e1() * RBScalar::e2() == RBScalar()) &&
                        (RBScalar::e1() * RBScalar::e1() == RBScalar::e1()) &&
                        (RBScalar::e2() * RBScalar::e2() == RBScalar::e2());
  c.add("scalar multiplication table", table_ok,
        "j^2 = 1, e1 e2 = 0, e1/e2 idempotent");

  rng::Stream s(seed, 100);
  double worst_comm = 0.0, worst_assoc = 0.0, worst_norm = 0.0;
  for (int i = 0; i < 200; ++i) {
    const RBScalar a{s.uniform01(), s.uniform01(), s.uniform01(),
                     s.uniform01()};
    const RBScalar b{s.uniform01(), s.uniform01(), s.uniform01(),
                     s.uniform01()};
    const RBScalar d{s.uniform01(), s.uniform01(), s.uniform01(),
                     s.uniform01()};
    if (!(a * b == b * a)) worst_comm = 1.0;
    const RBScalar lhs = (a * b) * d;
    const RBScalar rhs = a * (b * d);
    worst_assoc = std::max(worst_assoc,
                           rb_norm(lhs - rhs) / std::max(rb_norm(lhs), 1e-30));
    const double via_pairs =
        std::sqrt(std::norm(a.r1()) + std::norm(a.r2()));
    worst_norm = std::max(worst_norm, rel_err(via_pairs, rb_norm(a)));
  }
  c.add("scalar commutativity (bitwise)", worst_comm == 0.0, "200 pairs");
  c.add_max("scalar associativity", worst_assoc, 1e-14);
  c.add_max("scalar norm formulas agree", worst_norm, 1e-15);
}

void check_representations(Checker& c, std::uint64_t seed) {
  rng::Stream s(seed, 200);
  double worst_hom = 0.0, worst_norm = 0.0, worst_concat = 0.0;
  bool round_trip_ok = true, violation_ok = true;
  for (int i = 0; i < 25; ++i) {
    const RBMatrix p = random_rb(s, 4, 3);
    const RBMatrix q = random_rb(s, 4, 3);
    const RBMatrix r = random_rb(s, 3, 5);

    const double scale_r = real_rep(p * r).norm();
    worst_hom = std::max(worst_hom, (real_rep(p * r) -
                                     real_rep(p) * real_rep(r)).norm() /
                                        scale_r);
    worst_hom = std::max(worst_hom, (complex_rep(p * r) -
                                     complex_rep(p) * complex_rep(r)).norm() /
                                        complex_rep(p * r).norm());
    worst_hom = std::max(
        worst_hom,
        (real_rep(p + q) - (real_rep(p) + real_rep(q))).norm() /
            std::max(real_rep(p + q).norm(), 1e-30));

    const double fn = frobenius_norm(p);
    worst_norm = std::max(worst_norm,
                          std::abs(fn - 0.5 * real_rep(p).norm()) / fn);
    worst_norm = std::max(
        worst_norm,
        std::abs(fn - complex_rep(p).norm() / std::sqrt(2.0)) / fn);
    worst_norm = std::max(worst_norm,
                          std::abs(fn - real_rep_col(p).norm()) / fn);
    worst_norm = std::max(worst_norm,
                          std::abs(fn - complex_rep_col(p).norm()) / fn);

    worst_concat = std::max(
        worst_concat,
        std::abs(real_rep(p).norm() - 2.0 * real_rep_col(p).norm()) /
            real_rep(p).norm());

    round_trip_ok = round_trip_ok && (from_real_rep(real_rep(p)) == p) &&
                    (from_complex_rep(complex_rep(p)) == p);
  }
  {
    rng::Stream s2(seed, 201);
    RealMatrix bad = real_rep(random_rb(s2, 2, 2));
    bad(0, 3) += 0.5;  // corrupt an off-pattern block
    try {
      from_real_rep(bad);
      violation_ok = false;
    } catch (const StructureViolation&) {
    }
  }
  c.add_max("representation homomorphisms", worst_hom, 1e-12);
  c.add_max("representation norm identities", worst_norm, 1e-12);
  c.add_max("stacked-column concatenation norms", worst_concat, 1e-12);
  c.add("representation round trips exact", round_trip_ok, "25 cases");
  c.add("representation structure validation", violation_ok,
        "corrupted block rejected");
}

void check_block_operators(Checker& c) {
  const Index m = 3;
  double worst = 0.0;
  for (BlockOpKind kind : {BlockOpKind::MulI, BlockOpKind::MulJ,
                           BlockOpKind::MulK, BlockOpKind::MulJPair}) {
    const BlockOperator op{kind, m};
    const RealMatrix dense = op.dense();
    worst = std::max(
        worst, (dense.transpose() * dense -
                RealMatrix::Identity(op.dim(), op.dim())).norm());
    rng::Stream s(7, static_cast<std::uint64_t>(kind));
    const RealMatrix x = s.uniform_matrix(op.dim(), 2);
    worst = std::max(worst, (apply_block_operator(op, x) - dense * x).norm());
  }
  rng::Stream s(8, 1);
  const ComplexMatrix x =
      s.uniform_matrix(6, 2) + Complex(0, 1) * s.uniform_matrix(6, 2);
  const BlockOperator pj{BlockOpKind::MulJPair, 3};
  worst = std::max(
      worst,
      (apply_block_operator(pj, apply_block_operator(pj, x)) - x).norm());
  c.add_max("block operators orthogonal / involutive", worst, 1e-14);
}

template <typename Scalar>
void check_kernel(Checker& c, std::uint64_t seed, const char* label) {
  rng::Stream s(seed, 300);
  const auto rand_mat = [&](Index r, Index col) {
    DenseMatrix<Scalar> out(r, col);
    for (Index i = 0; i < r; ++i) {
      for (Index j = 0; j < col; ++j) {
        if constexpr (std::is_same_v<Scalar, double>) {
          out(i, j) = s.uniform01();
        } else {
          out(i, j) = Complex(s.uniform01(), s.uniform01());
        }
      }
    }
    return out;
  };

  double worst_qr = 0.0, worst_pinv = 0.0, worst_agree = 0.0,
         worst_feas = 0.0, worst_stat = 0.0;
  for (int i = 0; i < 10; ++i) {
    const DenseMatrix<Scalar> m = rand_mat(8, 5);
    const auto qr = qr_full<Scalar>(m);
    worst_qr = std::max(
        worst_qr, (qr.Q.adjoint() * qr.Q -
                   DenseMatrix<Scalar>::Identity(8, 8)).norm());
    worst_qr = std::max(worst_qr, (qr.Q * qr.R - m).norm() / m.norm());
    for (Index k = 0; k < 5; ++k) {
      if (Eigen::numext::real(qr.R(k, k)) < 0 ||
          std::abs(Eigen::numext::imag(qr.R(k, k))) > 1e-13) {
        worst_qr = 1.0;
      }
    }

    const DenseMatrix<Scalar> mp = pinv<Scalar>(m);
    worst_pinv = std::max(worst_pinv, (m * mp * m - m).norm() / m.norm());
    worst_pinv = std::max(worst_pinv, (mp * m * mp - mp).norm() / mp.norm());
    worst_pinv = std::max(
        worst_pinv,
        DenseMatrix<Scalar>(m * mp - (m * mp).adjoint()).norm() / m.norm());

    LSEInstance<Scalar> inst{rand_mat(10, 6), rand_mat(10, 2), rand_mat(2, 6),
                             rand_mat(2, 2)};
    const auto sol = solve_lse(inst);
    const auto oracle = lse_oracle(inst);
    worst_agree = std::max(worst_agree,
                           (sol.X - oracle).norm() / sol.X.norm());
    worst_feas = std::max(worst_feas,
                          (inst.C * sol.X - inst.D).norm() / inst.D.norm());
    worst_stat = std::max(
        worst_stat,
        DenseMatrix<Scalar>(sol.P2.adjoint() * (inst.A * sol.X - inst.B))
                .norm() /
            (inst.A.norm() * inst.B.norm()));
  }
  c.add_max(std::string("qr factors (") + label + ")", worst_qr, 1e-13);
  c.add_max(std::string("pseudoinverse identities (") + label + ")",
            worst_pinv, 1e-10);
  c.add_max(std::string("kernel vs nullspace oracle (") + label + ")",
            worst_agree, 1e-9);
  c.add_max(std::string("kernel feasibility (") + label + ")", worst_feas,
            1e-10);
  c.add_max(std::string("kernel stationarity (") + label + ")", worst_stat,
            1e-10);
}

void check_solvers(Checker& c, std::uint64_t seed) {
  const RBLSEProblem prob = generate_random_problem(1, seed);

  rng::Stream s(seed, 400);
  double worst_transfer = 0.0;
  for (int i = 0; i < 20; ++i) {
    const RealMatrix xr = s.uniform_matrix(prob.n(), prob.d());
    const double rb_res =
        frobenius_norm(prob.A * RBMatrix::from_real(xr) - prob.B);
    const LSEInstance<double> inst = stack_real(prob);
    worst_transfer =
        std::max(worst_transfer, std::abs(rb_res - (inst.A * xr - inst.B)
                                                       .norm()) /
                                     frobenius_norm(prob.B));
    const ComplexMatrix xc =
        s.uniform_matrix(prob.n(), prob.d()) +
        Complex(0, 1) * s.uniform_matrix(prob.n(), prob.d());
    const double rb_res_c =
        frobenius_norm(prob.A * RBMatrix::from_complex(xc) - prob.B);
    const LSEInstance<Complex> instc = stack_complex(prob);
    worst_transfer = std::max(
        worst_transfer, std::abs(rb_res_c - (instc.A * xc - instc.B).norm()) /
                            frobenius_norm(prob.B));
  }
  c.add_max("residual transfer identity", worst_transfer, 1e-12);

  const RBLSESolution a = solve_real(prob);
  const RBLSESolution b = solve_real(prob);
  c.add("solver determinism (bitwise)", a.x_real == b.x_real, "repeat solve");

  const RBLSESolution cx = solve_complex(prob);
  const double real_residual =
      frobenius_norm(prob.A * RBMatrix::from_real(a.x_real) - prob.B);
  const double complex_residual =
      frobenius_norm(prob.A * RBMatrix::from_complex(cx.x_complex) - prob.B);
  c.add("solution-space nesting", complex_residual <= real_residual + 1e-10,
        "complex optimum <= real optimum residual");
}

void check_perturbation(Checker& c, std::uint64_t seed) {
  const RBLSEProblem prob = generate_random_problem(1, seed);
  // Round-trip accuracy is limited by the representation noise of M + Delta,
  // roughly machine eps / eps; check at a level where 1e-14 is attainable.
  const PerturbationSpec spec{1e-3, rng::derive_seed(seed, 55)};
  const RBLSEProblem pert = perturb(prob, spec);
  c.add_max("perturbation level round trip",
            rel_err(measure_eps(prob, pert), spec.eps), 1e-14);

  const RBLSESolution sol = solve_real(prob);
  const PerturbationReport rep1 = bound_real(prob, sol.x_real, 1e-9);
  const PerturbationReport rep2 = bound_real(prob, sol.x_real, 2e-9);
  c.add_max("bound linearity in eps", rel_err(rep2.bound / rep1.bound, 2.0),
            1e-10);
  c.add("zero perturbation gives zero bound",
        bound_real(prob, sol.x_real, 0.0).bound == 0.0, "eps = 0");

  const RealMatrix& proj = rep1.projector_real;
  const double idem = (proj * proj - proj).norm();
  const double herm = (proj - proj.transpose()).norm();
  c.add_max("projector idempotent and symmetric", std::max(idem, herm),
            1e-12);

  const PerturbationSpec small{1e-9, rng::derive_seed(seed, 56)};
  const RBLSEProblem pert_small = perturb(prob, small);
  const RBLSESolution pert_sol = solve_real(pert_small);
  const PerturbationReport rep = bound_real(prob, sol.x_real, small.eps);
  const double fwd =
      (pert_sol.x_real - sol.x_real).norm() / sol.x_real.norm();
  std::ostringstream detail;
  detail << "forward error " << fwd << " vs bound " << rep.bound;
  c.add("forward error within bound", fwd <= rep.bound, detail.str());
}

}  // namespace

std::vector<CheckResult> run_verify(std::uint64_t seed) {
  Checker c;
  check_scalar_algebra(c, seed);
  check_representations(c, seed);
  check_block_operators(c);
  check_kernel<double>(c, seed, "real");
  check_kernel<Complex>(c, seed, "complex");
  check_solvers(c, seed);
  check_perturbation(c, seed);
  return c.results;
}

}  // namespace rblse
