#include "lazard/liecore.hpp"

#include <string>

namespace lazard {

LieAlgebra::LieAlgebra(const PrimeContext& ctx, Index rank)
    : ctx_(ctx), rank_(rank), table_(static_cast<std::size_t>(rank * rank), Vector::Zero(rank)) {
  if (rank < 0) throw Error(ErrorKind::InvalidArgument, "rank must be nonnegative");
}

LieAlgebra LieAlgebra::from_brackets(const PrimeContext& ctx, Index rank,
                                     const std::vector<Bracket>& brackets, std::string name) {
  LieAlgebra g(ctx, rank);
  g.name_ = std::move(name);
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j >= rank || b.i >= b.j || b.m < 0 || b.m >= rank)
      throw Error(ErrorKind::InvalidArgument, "bracket record index out of range");
    Vector v = g.structure(b.i, b.j);
    v[b.m] = ctx.add(v[b.m], b.c);
    g.set_structure(b.i, b.j, v);
  }
  return g;
}

void LieAlgebra::set_structure(Index i, Index j, const Vector& value) {
  if (i == j) {
    if (!is_zero_mod(ctx_, value))
      throw Error(ErrorKind::InvalidArgument, "[e_i, e_i] must vanish");
    return;
  }
  Vector v = reduced(ctx_, value);
  table_[i * rank_ + j] = v;
  table_[j * rank_ + i] = reduced(ctx_, Vector(-v));
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != rank_ || y.size() != rank_)
    throw Error(ErrorKind::DimensionMismatch, "bracket arguments must have length rank");
  Vector out = Vector::Zero(rank_);
  for (Index i = 0; i < rank_; ++i) {
    const Scalar xi = ctx_.reduce(x[i]);
    if (xi == 0) continue;
    for (Index j = 0; j < rank_; ++j) {
      const Scalar yj = ctx_.reduce(y[j]);
      if (yj == 0 || i == j) continue;
      out += ctx_.mul(xi, yj) * table_[i * rank_ + j];
    }
    out = reduced(ctx_, out);
  }
  return reduced(ctx_, out);
}

Vector LieAlgebra::basis_vector(Index i) const {
  Vector e = Vector::Zero(rank_);
  e[i] = 1;
  return e;
}

std::vector<LieAlgebra::Bracket> LieAlgebra::brackets() const {
  std::vector<Bracket> out;
  for (Index i = 0; i < rank_; ++i)
    for (Index j = i + 1; j < rank_; ++j)
      for (Index m = 0; m < rank_; ++m)
        if (Scalar c = structure(i, j)[m]; c != 0) out.push_back({i, j, m, c});
  return out;
}

bool LieAlgebra::operator==(const LieAlgebra& o) const {
  return ctx_ == o.ctx_ && rank_ == o.rank_ && table_ == o.table_;
}

std::optional<JacobiViolation> validate(const LieAlgebra& g) {
  const Index r = g.rank();
  const auto& ctx = g.context();
  for (Index i = 0; i < r; ++i)
    for (Index j = i + 1; j < r; ++j)
      for (Index m = j + 1; m < r; ++m) {
        const Vector ei = g.basis_vector(i), ej = g.basis_vector(j), em = g.basis_vector(m);
        Vector res = g.bracket(g.structure(i, j), em) + g.bracket(g.structure(j, m), ei) +
                     g.bracket(g.structure(m, i), ej);
        res = reduced(ctx, res);
        if (!res.isZero()) return JacobiViolation{i, j, m, res};
      }
  return std::nullopt;
}

LieAlgebra reduce_mod_p(const LieAlgebra& g) {
  const PrimeContext f = g.context().residue_field();
  LieAlgebra out(f, g.rank());
  out.set_name(g.name());
  for (Index i = 0; i < g.rank(); ++i)
    for (Index j = i + 1; j < g.rank(); ++j) out.set_structure(i, j, reduced(f, g.structure(i, j)));
  return out;
}

Matrix adjoint(const LieAlgebra& g, const Vector& x) {
  Matrix ad(g.rank(), g.rank());
  for (Index j = 0; j < g.rank(); ++j) ad.col(j) = g.bracket(x, g.basis_vector(j));
  return ad;
}

Submodule bracket_span(const LieAlgebra& g, const Submodule& h1, const Submodule& h2) {
  const Matrix& a = h1.basis();
  const Matrix& b = h2.basis();
  Matrix gens(a.rows() * b.rows(), g.rank());
  Index n = 0;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.rows(); ++j)
      gens.row(n++) = g.bracket(a.row(i).transpose(), b.row(j).transpose()).transpose();
  return Submodule::span(g.context(), g.rank(), gens);
}

bool is_ideal(const LieAlgebra& g, const Submodule& h) {
  return h.contains(bracket_span(g, h, Submodule::whole(g.context(), g.rank())));
}

Vector coordinates_in(const PrimeContext& ctx, const Matrix& basis_rows, const Vector& v) {
  // Pivot column of each row: the column where that row has a 1 and all
  // other rows have 0.
  Vector coords = Vector::Zero(basis_rows.rows());
  for (Index i = 0; i < basis_rows.rows(); ++i) {
    Index pivot = -1;
    for (Index c = 0; c < basis_rows.cols() && pivot < 0; ++c) {
      if (ctx.reduce(basis_rows(i, c)) != 1) continue;
      bool clean = true;
      for (Index t = 0; t < basis_rows.rows(); ++t)
        if (t != i && ctx.reduce(basis_rows(t, c)) != 0) clean = false;
      if (clean) pivot = c;
    }
    if (pivot < 0) throw Error(ErrorKind::InvalidArgument, "basis is not in free-basis form");
    coords[i] = ctx.reduce(v[pivot]);
  }
  Vector back = reduced(ctx, Vector(basis_rows.transpose() * coords));
  if (back != reduced(ctx, v))
    throw Error(ErrorKind::InvalidArgument, "vector does not lie in the span of the basis");
  return coords;
}

LieAlgebra subalgebra(const LieAlgebra& g, const Matrix& basis_rows) {
  const auto& ctx = g.context();
  const Index s = basis_rows.rows();
  LieAlgebra k(ctx, s);
  for (Index i = 0; i < s; ++i)
    for (Index j = i + 1; j < s; ++j) {
      Vector b = g.bracket(basis_rows.row(i).transpose(), basis_rows.row(j).transpose());
      k.set_structure(i, j, coordinates_in(ctx, basis_rows, b));
    }
  return k;
}

}  // namespace lazard
