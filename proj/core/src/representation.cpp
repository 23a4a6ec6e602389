#include "rblse/representation.hpp"

#include <string>

#include "rblse/errors.hpp"

namespace rblse {

RealMatrix real_rep(const RBMatrix& m) {
  const Index r = m.rows(), c = m.cols();
  const RealMatrix& m0 = m.comp(0);
  const RealMatrix& m1 = m.comp(1);
  const RealMatrix& m2 = m.comp(2);
  const RealMatrix& m3 = m.comp(3);
  RealMatrix out(4 * r, 4 * c);
  out << m0, -m1, m2, -m3,
         m1,  m0, m3,  m2,
         m2, -m3, m0, -m1,
         m3,  m2, m1,  m0;
  return out;
}

RealMatrix real_rep_col(const RBMatrix& m) {
  const Index r = m.rows();
  RealMatrix out(4 * r, m.cols());
  out.middleRows(0 * r, r) = m.comp(0);
  out.middleRows(1 * r, r) = m.comp(1);
  out.middleRows(2 * r, r) = m.comp(2);
  out.middleRows(3 * r, r) = m.comp(3);
  return out;
}

ComplexMatrix complex_rep(const RBMatrix& m) {
  const ComplexMatrix n1 = m.n1();
  const ComplexMatrix n2 = m.n2();
  ComplexMatrix out(2 * m.rows(), 2 * m.cols());
  out << n1, n2,
         n2, n1;
  return out;
}

ComplexMatrix complex_rep_col(const RBMatrix& m) {
  const Index r = m.rows();
  ComplexMatrix out(2 * r, m.cols());
  out.topRows(r) = m.n1();
  out.bottomRows(r) = m.n2();
  return out;
}

namespace {

template <typename Mat>
Mat apply_impl(const BlockOperator& op, const Mat& x) {
  if (x.rows() != op.dim()) {
    throw DimensionMismatch("block operator of dimension " +
                            std::to_string(op.dim()) + " applied to " +
                            std::to_string(x.rows()) + " rows");
  }
  const Index m = op.block;
  Mat out(x.rows(), x.cols());
  const auto blk = [&](Index i) { return x.middleRows(i * m, m); };
  switch (op.kind) {
    case BlockOpKind::MulI:
      out << -blk(1), blk(0), -blk(3), blk(2);
      break;
    case BlockOpKind::MulJ:
      out << blk(2), blk(3), blk(0), blk(1);
      break;
    case BlockOpKind::MulK:
      out << -blk(3), blk(2), -blk(1), blk(0);
      break;
    case BlockOpKind::MulJPair:
      out << blk(1), blk(0);
      break;
  }
  return out;
}

}  // namespace

RealMatrix apply_block_operator(const BlockOperator& op, const RealMatrix& x) {
  return apply_impl(op, x);
}

ComplexMatrix apply_block_operator(const BlockOperator& op,
                                   const ComplexMatrix& x) {
  return apply_impl(op, x);
}

RealMatrix BlockOperator::dense() const {
  const Index n = dim();
  const RealMatrix eye = RealMatrix::Identity(n, n);
  return apply_impl(*this, eye);
}

RealMatrix expand_real_col(const RealMatrix& col) {
  if (col.rows() % 4 != 0) {
    throw StructureViolation("stacked row count " + std::to_string(col.rows()) +
                             " not divisible by 4");
  }
  const Index m = col.rows() / 4;
  RealMatrix out(col.rows(), 4 * col.cols());
  const Index c = col.cols();
  out.middleCols(0 * c, c) = col;
  out.middleCols(1 * c, c) =
      apply_block_operator({BlockOpKind::MulI, m}, col);
  out.middleCols(2 * c, c) =
      apply_block_operator({BlockOpKind::MulJ, m}, col);
  out.middleCols(3 * c, c) =
      apply_block_operator({BlockOpKind::MulK, m}, col);
  return out;
}

ComplexMatrix expand_complex_col(const ComplexMatrix& col) {
  if (col.rows() % 2 != 0) {
    throw StructureViolation("stacked row count " + std::to_string(col.rows()) +
                             " not divisible by 2");
  }
  const Index m = col.rows() / 2;
  ComplexMatrix out(col.rows(), 2 * col.cols());
  out.leftCols(col.cols()) = col;
  out.rightCols(col.cols()) =
      apply_block_operator({BlockOpKind::MulJPair, m}, col);
  return out;
}

namespace {

void require_pattern(double deviation, double tau) {
  if (!(deviation <= tau)) {
    throw StructureViolation("representation deviates from block pattern by " +
                             std::to_string(deviation) + " (tolerance " +
                             std::to_string(tau) + ")");
  }
}

}  // namespace

RBMatrix from_real_rep(const RealMatrix& rep, double tau) {
  if (rep.rows() % 4 != 0 || rep.cols() % 4 != 0) {
    throw StructureViolation("real representation shape must be 4m x 4n");
  }
  const Index m = rep.rows() / 4;
  const Index n = rep.cols() / 4;
  // Reconstruction reads only the first block column.
  RBMatrix out(rep.block(0 * m, 0, m, n), rep.block(1 * m, 0, m, n),
               rep.block(2 * m, 0, m, n), rep.block(3 * m, 0, m, n));
  require_pattern((rep - expand_real_col(rep.leftCols(n))).norm(), tau);
  return out;
}

RBMatrix from_complex_rep(const ComplexMatrix& rep, double tau) {
  if (rep.rows() % 2 != 0 || rep.cols() % 2 != 0) {
    throw StructureViolation("complex representation shape must be 2m x 2n");
  }
  const Index m = rep.rows() / 2;
  const Index n = rep.cols() / 2;
  RBMatrix out =
      RBMatrix::from_complex_pair(rep.block(0, 0, m, n), rep.block(m, 0, m, n));
  require_pattern((rep - expand_complex_col(rep.leftCols(n))).norm(), tau);
  return out;
}

}  // namespace rblse
