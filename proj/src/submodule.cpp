#include "lazard/liecore.hpp"

#include <vector>

namespace lazard {

namespace {

using Row = std::vector<Scalar>;

bool is_zero_row(const Row& r) {
  for (Scalar x : r)
    if (x) return false;
  return true;
}

// Howell form over the local ring Z/p^k.
Matrix howell_form(const PrimeContext& ctx, Index n, const Matrix& gens) {
  std::vector<Row> work;
  for (Index i = 0; i < gens.rows(); ++i) {
    Row r(static_cast<std::size_t>(n));
    for (Index c = 0; c < n; ++c) r[c] = ctx.reduce(gens(i, c));
    if (!is_zero_row(r)) work.push_back(std::move(r));
  }
  std::vector<Row> out;
  std::vector<Index> lead;
  std::vector<int> val;
  for (Index c = 0; c < n && !work.empty(); ++c) {
    int best = ctx.k();
    std::size_t bi = 0;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i][c] == 0) continue;
      int v = ctx.valuation(work[i][c]);
      if (v < best) {
        best = v;
        bi = i;
      }
    }
    if (best == ctx.k()) continue;
    Row h = std::move(work[bi]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(bi));
    const Scalar pa = ctx.power_of_p(best);
    const Scalar u = unit_inverse(ctx, h[c] / pa);
    for (auto& x : h) x = ctx.mul(x, u);
    for (auto& w : work) {
      if (w[c] == 0) continue;
      const Scalar f = w[c] / pa;
      for (Index j = c; j < n; ++j) w[j] = ctx.sub(w[j], f * h[j]);
    }
    if (best > 0) {
      Row extra(h);
      const Scalar s = ctx.power_of_p(ctx.k() - best);
      for (auto& x : extra) x = ctx.mul(x, s);
      if (!is_zero_row(extra)) work.push_back(std::move(extra));
    }
    std::erase_if(work, is_zero_row);
    out.push_back(std::move(h));
    lead.push_back(c);
    val.push_back(best);
  }
  // reduce entries above each pivot into [0, p^a)
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Index c = lead[i];
    const Scalar pa = ctx.power_of_p(val[i]);
    for (std::size_t j = 0; j < i; ++j) {
      const Scalar q = out[j][c] / pa;
      if (q == 0) continue;
      for (Index t = c; t < n; ++t) out[j][t] = ctx.sub(out[j][t], q * out[i][t]);
    }
  }
  Matrix m(static_cast<Index>(out.size()), n);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Index c = 0; c < n; ++c) m(static_cast<Index>(i), c) = out[i][c];
  return m;
}

}  // namespace

Submodule::Submodule(const PrimeContext& ctx, Index ambient_dim)
    : ctx_(ctx), ambient_(ambient_dim), rows_(0, ambient_dim) {}

Submodule Submodule::span(const PrimeContext& ctx, Index ambient_dim, const Matrix& generator_rows) {
  if (generator_rows.rows() > 0 && generator_rows.cols() != ambient_dim)
    throw Error(ErrorKind::DimensionMismatch, "generator length differs from ambient dimension");
  Submodule s(ctx, ambient_dim);
  s.rows_ = howell_form(ctx, ambient_dim, generator_rows);
  return s;
}

Submodule Submodule::whole(const PrimeContext& ctx, Index ambient_dim) {
  return span(ctx, ambient_dim, Matrix::Identity(ambient_dim, ambient_dim));
}

bool Submodule::contains(const Vector& v) const {
  if (v.size() != ambient_)
    throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  Vector w = reduced(ctx_, v);
  Index r = 0;
  for (Index c = 0; c < ambient_; ++c) {
    const bool pivot = r < rows_.rows() && rows_(r, c) != 0 && [&] {
      for (Index t = 0; t < c; ++t)
        if (rows_(r, t) != 0) return false;
      return true;
    }();
    if (!pivot) {
      if (w[c] != 0) return false;
      continue;
    }
    const Scalar pa = rows_(r, c);
    if (w[c] % pa != 0) return false;
    const Scalar q = w[c] / pa;
    for (Index t = c; t < ambient_; ++t) w[t] = ctx_.sub(w[t], q * rows_(r, t));
    ++r;
  }
  return true;
}

bool Submodule::contains(const Submodule& other) const {
  for (Index i = 0; i < other.rows_.rows(); ++i)
    if (!contains(Vector(other.rows_.row(i).transpose()))) return false;
  return true;
}

bool Submodule::operator==(const Submodule& other) const {
  return ctx_ == other.ctx_ && ambient_ == other.ambient_ && rows_.rows() == other.rows_.rows() &&
         rows_ == other.rows_;
}

Submodule Submodule::operator+(const Submodule& other) const {
  Matrix g(rows_.rows() + other.rows_.rows(), ambient_);
  g << rows_, other.rows_;
  return span(ctx_, ambient_, g);
}

Submodule Submodule::scaled(Scalar c) const {
  return span(ctx_, ambient_, reduced(ctx_, Matrix(rows_ * ctx_.reduce(c))));
}

Matrix Submodule::free_basis() const {
  std::vector<Row> work;
  for (Index i = 0; i < rows_.rows(); ++i) {
    Row r(static_cast<std::size_t>(ambient_));
    for (Index c = 0; c < ambient_; ++c) r[c] = rows_(i, c);
    work.push_back(std::move(r));
  }
  std::vector<bool> used(work.size(), false);
  std::vector<std::pair<Index, std::size_t>> pivots;  // column, row
  for (Index c = 0; c < ambient_; ++c) {
    std::size_t pick = work.size();
    for (std::size_t i = 0; i < work.size(); ++i)
      if (!used[i] && ctx_.is_unit(work[i][c])) {
        pick = i;
        break;
      }
    if (pick == work.size()) continue;
    used[pick] = true;
    const Scalar u = unit_inverse(ctx_, work[pick][c]);
    for (auto& x : work[pick]) x = ctx_.mul(x, u);
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i == pick || work[i][c] == 0) continue;
      const Scalar f = work[i][c];
      for (Index t = 0; t < ambient_; ++t) work[i][t] = ctx_.sub(work[i][t], f * work[pick][t]);
    }
    pivots.emplace_back(c, pick);
  }
  for (std::size_t i = 0; i < work.size(); ++i)
    if (!used[i] && !is_zero_row(work[i]))
      throw Error(ErrorKind::InvalidArgument, "submodule is not a free direct summand");
  Matrix out(static_cast<Index>(pivots.size()), ambient_);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (Index t = 0; t < ambient_; ++t) out(static_cast<Index>(i), t) = work[pivots[i].second][t];
  return out;
}

bool Submodule::is_free_summand() const {
  try {
    (void)free_basis();
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace lazard
