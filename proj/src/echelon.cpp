#include "lazard/echelon.hpp"

#include <algorithm>

namespace lazard {

namespace {

Scalar inverse_mod_prime(Scalar a, Scalar p) {
  Scalar result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

FieldEchelon::FieldEchelon(Scalar p, Index cols)
    : p_(p), cols_(cols), pivot_of_(static_cast<std::size_t>(cols), -1),
      scratch_(static_cast<std::size_t>(cols), 0) {}

void FieldEchelon::eliminate(std::vector<Scalar>& acc, Index lo, Index& hi) const {
  for (Index c = lo; c <= hi; ++c) {
    Scalar f = acc[c];
    if (f == 0) continue;
    Index r = pivot_of_[c];
    if (r < 0) continue;
    const PivotRow& row = rows_[r];
    Scalar m = p_ - f;  // acc += m * row kills column c
    if (row.dense) {
      const Index n = static_cast<Index>(row.vals.size());
      for (Index j = 0; j < n; ++j)
        if (row.vals[j]) acc[c + j] = (acc[c + j] + m * row.vals[j]) % p_;
      hi = std::max(hi, c + n - 1);
    } else {
      for (std::size_t j = 0; j < row.cols.size(); ++j)
        acc[row.cols[j]] = (acc[row.cols[j]] + m * row.vals[j]) % p_;
      if (!row.cols.empty()) hi = std::max(hi, row.cols.back());
    }
  }
}

void FieldEchelon::store(std::vector<Scalar>& acc, Index lo, Index hi) {
  Index lead = -1;
  Index nnz = 0;
  for (Index c = lo; c <= hi; ++c)
    if (acc[c]) {
      if (lead < 0) lead = c;
      ++nnz;
    }
  if (lead < 0) return;
  Scalar inv = inverse_mod_prime(acc[lead], p_);
  PivotRow row;
  row.lead = lead;
  row.dense = 2 * nnz > (cols_ - lead);
  if (row.dense) {
    row.vals.assign(static_cast<std::size_t>(hi - lead + 1), 0);
    for (Index c = lead; c <= hi; ++c) row.vals[c - lead] = acc[c] * inv % p_;
  } else {
    row.cols.reserve(nnz);
    row.vals.reserve(nnz);
    for (Index c = lead; c <= hi; ++c)
      if (acc[c]) {
        row.cols.push_back(c);
        row.vals.push_back(acc[c] * inv % p_);
      }
  }
  pivot_of_[lead] = static_cast<Index>(rows_.size());
  rows_.push_back(std::move(row));
}

bool FieldEchelon::insert(std::span<const Entry> row) {
  if (row.empty()) return false;
  Index lo = cols_, hi = -1;
  for (auto [c, v] : row) {
    Scalar r = v % p_;
    if (r < 0) r += p_;
    if (r == 0) continue;
    scratch_[c] = (scratch_[c] + r) % p_;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  if (hi < 0) return false;
  eliminate(scratch_, lo, hi);
  const Index before = rank();
  store(scratch_, lo, hi);
  std::fill(scratch_.begin() + lo, scratch_.begin() + hi + 1, 0);
  return rank() > before;
}

bool FieldEchelon::insert(const Vector& row) {
  std::vector<Entry> entries;
  for (Index c = 0; c < row.size(); ++c)
    if (row[c] % p_ != 0) entries.emplace_back(c, row[c]);
  return insert(std::span<const Entry>(entries));
}

Vector FieldEchelon::reduce(const Vector& v) const {
  std::vector<Scalar> acc(static_cast<std::size_t>(cols_), 0);
  Index hi = -1;
  for (Index c = 0; c < cols_; ++c) {
    Scalar r = v[c] % p_;
    acc[c] = r < 0 ? r + p_ : r;
    if (acc[c]) hi = c;
  }
  if (hi >= 0) eliminate(acc, 0, hi);
  Vector out(cols_);
  for (Index c = 0; c < cols_; ++c) out[c] = acc[c];
  return out;
}

bool FieldEchelon::contains(const Vector& v) const { return reduce(v).isZero(); }

std::vector<Index> FieldEchelon::pivot_columns() const {
  std::vector<Index> cols;
  for (const auto& r : rows_) cols.push_back(r.lead);
  std::sort(cols.begin(), cols.end());
  return cols;
}

Matrix FieldEchelon::rref() const {
  std::vector<Index> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Index>(i);
  std::sort(order.begin(), order.end(),
            [&](Index a, Index b) { return rows_[a].lead < rows_[b].lead; });
  Matrix out = Matrix::Zero(rank(), cols_);
  for (Index i = 0; i < rank(); ++i) {
    const PivotRow& row = rows_[order[i]];
    if (row.dense) {
      for (std::size_t j = 0; j < row.vals.size(); ++j) out(i, row.lead + j) = row.vals[j];
    } else {
      for (std::size_t j = 0; j < row.cols.size(); ++j) out(i, row.cols[j]) = row.vals[j];
    }
  }
  // back substitution, last pivot first
  for (Index i = rank() - 1; i >= 0; --i) {
    const Index lead = rows_[order[i]].lead;
    for (Index j = 0; j < i; ++j) {
      Scalar f = out(j, lead);
      if (f == 0) continue;
      for (Index c = lead; c < cols_; ++c)
        if (out(i, c)) out(j, c) = ((out(j, c) - f * out(i, c)) % p_ + p_) % p_;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void require_field(const ModMatrix& m) {
  if (!m.context().is_field())
    throw Error(ErrorKind::InvalidArgument, "operation requires a GF(p) matrix (k = 1)");
}

FieldEchelon row_echelon(const ModMatrix& m) {
  FieldEchelon e(m.context().p(), m.cols());
  std::vector<FieldEchelon::Entry> row;
  const auto& s = m.storage();
  for (int r = 0; r < s.outerSize(); ++r) {
    row.clear();
    for (ModMatrix::Storage::InnerIterator it(s, r); it; ++it) row.emplace_back(it.col(), it.value());
    e.insert(std::span<const FieldEchelon::Entry>(row));
  }
  return e;
}

}  // namespace

Index rank(const ModMatrix& m) {
  require_field(m);
  // Eliminating along the shorter side keeps the accumulator small.
  if (m.rows() > m.cols()) return row_echelon(m.transpose()).rank();
  return row_echelon(m).rank();
}

RankKernel rank_kernel(const ModMatrix& m) {
  require_field(m);
  const Scalar p = m.context().p();
  FieldEchelon e = row_echelon(m);
  Matrix r = e.rref();
  std::vector<Index> pivots = e.pivot_columns();
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index c : pivots) is_pivot[c] = true;

  RankKernel out;
  out.rank = e.rank();
  out.kernel = Matrix::Zero(m.cols(), m.cols() - out.rank);
  Index col = 0;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    out.kernel(f, col) = 1;
    for (Index i = 0; i < r.rows(); ++i) out.kernel(pivots[i], col) = (p - r(i, f)) % p;
    ++col;
  }
  return out;
}

std::optional<Vector> solve(const ModMatrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw Error(ErrorKind::DimensionMismatch, "right-hand side has wrong length");
  const PrimeContext& ctx = m.context();
  if (ctx.is_field()) {
    const Scalar p = ctx.p();
    // echelonize [M | b]; inconsistent iff a pivot lands in the last column
    Matrix aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m.to_dense();
    aug.col(m.cols()) = reduced(ctx, b);
    FieldEchelon e(p, m.cols() + 1);
    for (Index i = 0; i < aug.rows(); ++i) e.insert(Vector(aug.row(i).transpose()));
    Matrix r = e.rref();
    std::vector<Index> pivots = e.pivot_columns();
    Vector x = Vector::Zero(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (pivots[i] == m.cols()) return std::nullopt;
      x[pivots[i]] = r(static_cast<Index>(i), m.cols());
    }
    return x;
  }
  SmithDecomposition snf = smith_normal_form(m);
  Vector y = multiply(ctx, snf.U_inverse, b);
  Vector z = Vector::Zero(m.cols());
  for (Index i = 0; i < y.size(); ++i) {
    const int a = i < static_cast<Index>(snf.exponents.size()) ? snf.exponents[i] : ctx.k();
    if (a >= ctx.k()) {
      if (y[i] != 0) return std::nullopt;
      continue;
    }
    const Scalar pa = ctx.power_of_p(a);
    if (y[i] % pa != 0) return std::nullopt;
    z[i] = y[i] / pa;
  }
  return multiply(ctx, snf.V_inverse, z);
}

}  // namespace lazard
