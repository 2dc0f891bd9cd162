#include <bit>
#include <string>

#include "lazard/cohomology.hpp"

namespace lazard {

namespace {

void require_field(const CochainComplex& c, const char* what) {
  if (!c.context().is_field())
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs a GF(p) complex");
}

std::vector<FieldEchelon::Entry> column_entries(const ModMatrix& t, Index row) {
  // t is a transposed matrix; its rows are the original columns
  std::vector<FieldEchelon::Entry> e;
  for (ModMatrix::Storage::InnerIterator it(t.storage(), row); it; ++it) e.emplace_back(it.col(), it.value());
  return e;
}

}  // namespace

CohomologySpace::CohomologySpace(Scalar p, Index cochain_dim)
    : p_(p), cocycle_test_(PrimeContext(p, 1), 0, cochain_dim), boundaries_(p, cochain_dim) {}

CohomologySpace cocycle_representatives(const CochainComplex& complex, int n) {
  require_field(complex, "cocycle_representatives");
  if (n < 0 || n > complex.top_degree())
    throw Error(ErrorKind::InvalidArgument, "degree out of range");
  const PrimeContext& ctx = complex.context();
  const Index dim = complex.cochain_dim(n);
  CohomologySpace h(ctx.p(), dim);
  h.degree_ = n;
  h.cocycle_test_ = complex.differential(n);
  if (n > 0) {
    ModMatrix bt = complex.differential(n - 1).transpose();
    for (Index r = 0; r < bt.rows(); ++r) {
      auto e = column_entries(bt, r);
      if (!e.empty()) h.boundaries_.insert(e);
    }
  }
  const Matrix kernel = rank_kernel(complex.differential(n)).kernel;
  FieldEchelon combined = h.boundaries_;
  std::vector<Index> chosen;
  for (Index j = 0; j < kernel.cols(); ++j)
    if (combined.insert(Vector(kernel.col(j)))) chosen.push_back(j);
  const Index hd = static_cast<Index>(chosen.size());
  h.reps_ = Matrix(dim, hd);
  for (Index i = 0; i < hd; ++i) h.reps_.col(i) = kernel.col(chosen[i]);

  // Gauss-Jordan on the reduced representatives, tracking the transform.
  Matrix red(hd, dim);
  for (Index i = 0; i < hd; ++i) red.row(i) = h.boundaries_.reduce(Vector(h.reps_.col(i))).transpose();
  Matrix t = Matrix::Identity(hd, hd);
  Index row = 0;
  for (Index c = 0; c < dim && row < hd; ++c) {
    Index piv = row;
    while (piv < hd && red(piv, c) == 0) ++piv;
    if (piv == hd) continue;
    red.row(row).swap(red.row(piv));
    t.row(row).swap(t.row(piv));
    const Scalar s = unit_inverse(ctx, red(row, c));
    red.row(row) = reduced(ctx, Vector((red.row(row) * s).transpose())).transpose();
    t.row(row) = reduced(ctx, Vector((t.row(row) * s).transpose())).transpose();
    for (Index r = 0; r < hd; ++r) {
      if (r == row || red(r, c) == 0) continue;
      const Scalar f = red(r, c);
      red.row(r) = reduced(ctx, Vector((red.row(r) - f * red.row(row)).transpose())).transpose();
      t.row(r) = reduced(ctx, Vector((t.row(r) - f * t.row(row)).transpose())).transpose();
    }
    h.pivots_.push_back(c);
    ++row;
  }
  if (row != hd) throw Error(ErrorKind::InvalidArgument, "representatives are dependent modulo coboundaries");
  h.reduced_basis_ = red;
  h.transform_ = t;
  return h;
}

Vector CohomologySpace::coordinates(const Vector& cocycle) const {
  const PrimeContext ctx(p_, 1);
  if (cocycle.size() != cocycle_test_.cols())
    throw Error(ErrorKind::DimensionMismatch, "cochain has the wrong length");
  Vector z = reduced(ctx, cocycle);
  if (!is_zero_mod(ctx, Vector(cocycle_test_ * z)))
    throw Error(ErrorKind::InvalidArgument, "not a cocycle");
  const Vector zr = boundaries_.reduce(z);
  const Index hd = dim();
  Vector alpha(hd);
  for (Index i = 0; i < hd; ++i) alpha[i] = zr[pivots_[i]];
  Vector rest = zr;
  for (Index i = 0; i < hd; ++i) rest -= alpha[i] * reduced_basis_.row(i).transpose();
  if (!is_zero_mod(ctx, rest)) throw Error(ErrorKind::InvalidArgument, "cocycle outside the representative span");
  return reduced(ctx, Vector(transform_.transpose() * alpha));
}

// ------------------------------------------------------------ maps

namespace {

bool preserves_bracket(const LieAlgebra& g, const AlgebraMap& phi) {
  const PrimeContext& ctx = g.context();
  const Matrix& a = phi.matrix;
  for (Index i = 0; i < g.rank(); ++i)
    for (Index j = i + 1; j < g.rank(); ++j) {
      Vector lhs = multiply(ctx, a, g.structure(i, j));
      Vector rhs;
      if (phi.kind == AlgebraMap::Kind::automorphism)
        rhs = g.bracket(Vector(a.col(i)), Vector(a.col(j)));
      else
        rhs = g.bracket(Vector(a.col(i)), g.basis_vector(j)) + g.bracket(g.basis_vector(i), Vector(a.col(j)));
      if (!is_zero_mod(ctx, Vector(lhs - rhs))) return false;
    }
  return true;
}

}  // namespace

Matrix cochain_action(const CochainComplex& complex, const AlgebraMap& phi, int n) {
  if (!complex.module().is_trivial() || complex.module().dim() != 1)
    throw Error(ErrorKind::InvalidArgument, "induced maps need the trivial one-dimensional module");
  const PrimeContext& ctx = complex.context();
  const int r = complex.top_degree();
  if (phi.matrix.rows() != r || phi.matrix.cols() != r)
    throw Error(ErrorKind::DimensionMismatch, "map has the wrong size");
  const Index dim = binomial(r, n);
  Matrix m = Matrix::Zero(dim, dim);
  const auto sets = subsets(r, n);
  if (phi.kind == AlgebraMap::Kind::automorphism) {
    auto inv = inverse(ctx, phi.matrix);
    if (!inv) throw Error(ErrorKind::InvalidArgument, "map is not invertible");
    for (Mask s : sets) {
      // wedge of the columns of A^{-1} indexed by s
      std::vector<std::pair<Mask, Scalar>> w{{0, 1}};
      for (Mask x = s; x; x &= x - 1) {
        const int col = std::countr_zero(x);
        std::vector<std::pair<Mask, Scalar>> next;
        for (auto [mask, c] : w)
          for (int t = 0; t < r; ++t) {
            const Scalar a = (*inv)(t, col);
            if (a == 0 || (mask >> t & 1u)) continue;
            const int above = std::popcount(mask >> (t + 1));
            next.emplace_back(mask | (Mask{1} << t), ctx.reduce((above % 2 ? -1 : 1) * c * a));
          }
        w = std::move(next);
      }
      const Index si = subset_rank(s);
      for (auto [mask, c] : w) m(si, subset_rank(mask)) = ctx.add(m(si, subset_rank(mask)), c);
    }
  } else {
    const Matrix& d = phi.matrix;
    std::vector<int> elems;
    for (Mask s : sets) {
      elems.clear();
      for (Mask x = s; x; x &= x - 1) elems.push_back(std::countr_zero(x));
      const Index si = subset_rank(s);
      for (int i = 0; i < n; ++i) {
        const Mask rest = s & ~(Mask{1} << elems[i]);
        for (int t = 0; t < r; ++t) {
          const Scalar c = ctx.reduce(d(t, elems[i]));
          if (c == 0 || (rest >> t & 1u)) continue;
          const int pos = std::popcount(rest & ((Mask{1} << t) - 1));
          const Mask target = rest | (Mask{1} << t);
          const Scalar sign = ((i - pos) % 2) ? -1 : 1;
          // M_{S,T} = -(D_n)_{T,S}
          const Index ti = subset_rank(target);
          m(si, ti) = ctx.sub(m(si, ti), sign * c);
        }
      }
    }
  }
  return m;
}

Matrix induced_map(const CochainComplex& complex, const CohomologySpace& h, const AlgebraMap& phi) {
  require_field(complex, "induced_map");
  const PrimeContext& ctx = complex.context();
  const int n = h.degree();
  if (!preserves_bracket(complex.algebra(), phi))
    throw Error(ErrorKind::InvalidArgument, phi.kind == AlgebraMap::Kind::automorphism
                                                 ? "map is not a Lie algebra automorphism"
                                                 : "map is not a derivation");
  const Matrix m = cochain_action(complex, phi, n);
  const ModMatrix& dn = complex.differential(n);
  Matrix out(h.dim(), h.dim());
  for (Index j = 0; j < h.dim(); ++j) {
    Vector w = multiply(ctx, m, Vector(h.representatives().col(j)));
    if (!is_zero_mod(ctx, Vector(dn * w)))
      throw Error(ErrorKind::CocyclesNotPreserved, "image of a cocycle is not a cocycle");
    out.col(j) = h.coordinates(w);
  }
  if (n > 0) {
    const Matrix b = complex.differential(n - 1).to_dense();
    for (Index j = 0; j < b.cols(); ++j) {
      if (b.col(j).isZero()) continue;
      if (!h.is_coboundary(multiply(ctx, m, Vector(b.col(j)))))
        throw Error(ErrorKind::CocyclesNotPreserved, "image of a coboundary is not a coboundary");
    }
  }
  return out;
}

Matrix induced_map(const CochainComplex& complex, const AlgebraMap& phi, int n) {
  return induced_map(complex, cocycle_representatives(complex, n), phi);
}

// ------------------------------------------------------------ products

Vector wedge(int rank, int m, const Vector& a, int n, const Vector& b, Scalar p) {
  const PrimeContext ctx(p, 1);
  if (a.size() != binomial(rank, m) || b.size() != binomial(rank, n))
    throw Error(ErrorKind::DimensionMismatch, "cochain has the wrong length");
  Vector out = Vector::Zero(binomial(rank, m + n));
  if (m + n > rank) return out;
  const auto sa = subsets(rank, m), sb = subsets(rank, n);
  for (Mask x : sa) {
    const Scalar ca = ctx.reduce(a[subset_rank(x)]);
    if (ca == 0) continue;
    for (Mask y : sb) {
      if (x & y) continue;
      const Scalar cb = ctx.reduce(b[subset_rank(y)]);
      if (cb == 0) continue;
      int inv = 0;
      for (Mask yy = y; yy; yy &= yy - 1) inv += std::popcount(x >> (std::countr_zero(yy) + 1));
      const Index k = subset_rank(x | y);
      out[k] = ctx.add(out[k], ctx.reduce((inv % 2 ? -1 : 1) * ca * cb));
    }
  }
  return out;
}

Vector cup_product(const CochainComplex& complex, const CohomologySpace& hm, const Vector& a,
                   const CohomologySpace& hn, const Vector& b, const CohomologySpace& hmn) {
  require_field(complex, "cup_product");
  const PrimeContext& ctx = complex.context();
  const int m = hm.degree(), n = hn.degree(), r = complex.top_degree();
  if (m + n > r) return Vector::Zero(0);
  if (hmn.degree() != m + n) throw Error(ErrorKind::InvalidArgument, "target degree must be m + n");
  if (!complex.module().is_trivial() || complex.module().dim() != 1)
    throw Error(ErrorKind::InvalidArgument, "cup products need trivial coefficients");
  const Vector za = multiply(ctx, hm.representatives(), a);
  const Vector zb = multiply(ctx, hn.representatives(), b);
  return hmn.coordinates(wedge(r, m, za, n, zb, ctx.p()));
}

}  // namespace lazard
