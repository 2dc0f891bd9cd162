#include "lazard/modarith.hpp"

#include <algorithm>

namespace lazard {

SmithDecomposition smith_normal_form(const ModMatrix& m) {
  return smith_normal_form(m.context(), m.to_dense());
}

SmithDecomposition smith_normal_form(const PrimeContext& ctx, const Matrix& input) {
  const Index rows = input.rows(), cols = input.cols();
  Matrix a = reduced(ctx, input);
  // Invariant: L * input * R = a, with U = L^{-1}, V = R^{-1} tracked alongside.
  Matrix L = Matrix::Identity(rows, rows), U = Matrix::Identity(rows, rows);
  Matrix R = Matrix::Identity(cols, cols), V = Matrix::Identity(cols, cols);

  auto add_row = [&](Index dst, Index src, Scalar c) {  // row dst += c * row src
    if (c == 0) return;
    a.row(dst) = reduced(ctx, Vector((a.row(dst) + c * a.row(src)).transpose())).transpose();
    L.row(dst) = reduced(ctx, Vector((L.row(dst) + c * L.row(src)).transpose())).transpose();
    U.col(src) = reduced(ctx, Vector(U.col(src) - c * U.col(dst)));
  };
  auto add_col = [&](Index dst, Index src, Scalar c) {  // col dst += c * col src
    if (c == 0) return;
    a.col(dst) = reduced(ctx, Vector(a.col(dst) + c * a.col(src)));
    R.col(dst) = reduced(ctx, Vector(R.col(dst) + c * R.col(src)));
    V.row(src) = reduced(ctx, Vector((V.row(src) - c * V.row(dst)).transpose())).transpose();
  };
  auto scale_row = [&](Index i, Scalar u) {
    const Scalar inv = unit_inverse(ctx, u);
    a.row(i) = reduced(ctx, Vector((a.row(i) * u).transpose())).transpose();
    L.row(i) = reduced(ctx, Vector((L.row(i) * u).transpose())).transpose();
    U.col(i) = reduced(ctx, Vector(U.col(i) * inv));
  };

  const Index diag = std::min(rows, cols);
  SmithDecomposition out;
  out.exponents.assign(static_cast<std::size_t>(diag), ctx.k());
  for (Index t = 0; t < diag; ++t) {
    // pivot of minimal valuation, lowest (row, col) in row-major order
    int best = ctx.k();
    Index bi = -1, bj = -1;
    for (Index i = t; i < rows && best > 0; ++i)
      for (Index j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        int v = ctx.valuation(a(i, j));
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (bi < 0) break;
    if (bi != t) {
      a.row(t).swap(a.row(bi));
      L.row(t).swap(L.row(bi));
      U.col(t).swap(U.col(bi));
    }
    if (bj != t) {
      a.col(t).swap(a.col(bj));
      R.col(t).swap(R.col(bj));
      V.row(t).swap(V.row(bj));
    }
    const Scalar pa = ctx.power_of_p(best);
    scale_row(t, unit_inverse(ctx, a(t, t) / pa));
    for (Index i = t + 1; i < rows; ++i)
      if (a(i, t) != 0) add_row(i, t, ctx.neg(a(i, t) / pa));
    for (Index j = t + 1; j < cols; ++j)
      if (a(t, j) != 0) add_col(j, t, ctx.neg(a(t, j) / pa));
    out.exponents[t] = best;
  }
  out.D = a;
  out.U = U;
  out.V = V;
  out.U_inverse = L;
  out.V_inverse = R;
  return out;
}

}  // namespace lazard
