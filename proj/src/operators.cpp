#include "lazard/bch.hpp"

namespace lazard {

LinearOperator LinearOperator::compose(const LinearOperator& o) const {
  if (ctx != o.ctx) throw Error(ErrorKind::InvalidArgument, "operators over different rings");
  return {ctx, multiply(ctx, matrix, o.matrix)};
}

bool LinearOperator::operator==(const LinearOperator& o) const {
  return ctx == o.ctx && matrix.rows() == o.matrix.rows() && matrix.cols() == o.matrix.cols() &&
         reduced(ctx, matrix) == reduced(o.ctx, o.matrix);
}

namespace {

void require_square(const LinearOperator& op) {
  if (op.matrix.rows() != op.matrix.cols())
    throw Error(ErrorKind::DimensionMismatch, "operator must be square");
}

}  // namespace

LinearOperator truncated_log(const LinearOperator& u) {
  require_square(u);
  const auto& ctx = u.ctx;
  const Index n = u.dim();
  const Matrix x = reduced(ctx, Matrix(u.matrix - Matrix::Identity(n, n)));
  if (!power(ctx, x, static_cast<int>(ctx.p())).isZero())
    throw Error(ErrorKind::NotUnipotent, "not unipotent of class <= p: (U - 1)^p != 0");
  Matrix result = Matrix::Zero(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (Scalar i = 1; i < ctx.p(); ++i) {
    term = multiply(ctx, term, x);
    Scalar c = unit_inverse(ctx, i);
    if (i % 2 == 0) c = ctx.neg(c);
    result = reduced(ctx, Matrix(result + c * term));
  }
  return {ctx, result};
}

LinearOperator truncated_exp(const LinearOperator& nop) {
  require_square(nop);
  const auto& ctx = nop.ctx;
  const Index n = nop.dim();
  const Matrix x = reduced(ctx, nop.matrix);
  if (!power(ctx, x, static_cast<int>(ctx.p())).isZero())
    throw Error(ErrorKind::NotNilpotent, "not nilpotent of class < p: N^p != 0");
  Matrix result = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  Scalar fact = 1;
  for (Scalar i = 1; i < ctx.p(); ++i) {
    term = multiply(ctx, term, x);
    fact = ctx.mul(fact, i);
    result = reduced(ctx, Matrix(result + unit_inverse(ctx, fact) * term));
  }
  return {ctx, result};
}

LinearOperator conjugation_operator(const LieAlgebra& g, const Vector& sigma, const Submodule& h) {
  const auto& ctx = g.context();
  const Matrix basis = h.free_basis();
  const Index d = basis.rows();
  Matrix ad(d, d);
  for (Index j = 0; j < d; ++j) {
    Vector image = g.bracket(sigma, basis.row(j).transpose());
    if (!h.contains(image))
      throw Error(ErrorKind::InvalidArgument, "ad(sigma) does not preserve the submodule");
    ad.col(j) = coordinates_in(ctx, basis, image);
  }
  if (!power(ctx, ad, static_cast<int>(ctx.p())).isZero())
    throw Error(ErrorKind::ExponentialNotExact,
                "exponential not exact at this precision: (ad sigma)^p != 0 mod p^k");
  return truncated_exp({ctx, ad});
}

}  // namespace lazard
