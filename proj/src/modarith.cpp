#include "lazard/modarith.hpp"

#include <string>

namespace lazard {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::NotAUnit: return "not a unit";
    case ErrorKind::DegreeTooHigh: return "degree exceeds p-1";
    case ErrorKind::ClassTooLarge: return "class >= p";
    case ErrorKind::ExponentialNotExact: return "exponential not exact at this precision";
    case ErrorKind::NotUnipotent: return "not unipotent of class <= p";
    case ErrorKind::NotNilpotent: return "not nilpotent of class < p";
    case ErrorKind::AbelianizationTorsion: return "abelianization torsion at this precision";
    case ErrorKind::NotSolvable: return "not solvable";
    case ErrorKind::ModuleAxiom: return "module axiom violation";
    case ErrorKind::CocyclesNotPreserved: return "does not preserve cocycles";
    case ErrorKind::MalformedChain: return "malformed chain";
    case ErrorKind::Parse: return "parse error";
  }
  return "unknown";
}

bool is_prime(Scalar n) {
  if (n < 2) return false;
  for (Scalar d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeContext::PrimeContext(Scalar p, int k) : p_(p), k_(k), modulus_(1) {
  if (p < 5 || !is_prime(p))
    throw Error(ErrorKind::InvalidArgument, "p must be a prime >= 5, got " + std::to_string(p));
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "precision k must be >= 1");
  for (int i = 0; i < k; ++i) {
    modulus_ *= p;
    if (modulus_ > kMaxModulus)
      throw Error(ErrorKind::InvalidArgument, "p^k exceeds the supported modulus 2^24");
  }
}

int PrimeContext::valuation(Scalar a) const {
  a = reduce(a);
  if (a == 0) return k_;
  int v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

Scalar PrimeContext::power_of_p(int e) const {
  if (e >= k_) return 0;
  Scalar r = 1;
  for (int i = 0; i < e; ++i) r *= p_;
  return r;
}

Scalar unit_inverse(const PrimeContext& ctx, Scalar a) {
  a = ctx.reduce(a);
  if (a % ctx.p() == 0)
    throw Error(ErrorKind::NotAUnit, std::to_string(a) + " is not a unit mod " +
                                         std::to_string(ctx.modulus()));
  // extended Euclid on (a, m)
  Scalar old_r = a, r = ctx.modulus();
  Scalar old_s = 1, s = 0;
  while (r != 0) {
    Scalar q = old_r / r;
    Scalar t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return ctx.reduce(old_s);
}

Vector reduced(const PrimeContext& ctx, const Vector& v) {
  return v.unaryExpr([&](Scalar x) { return ctx.reduce(x); });
}

Matrix reduced(const PrimeContext& ctx, const Matrix& m) {
  return m.unaryExpr([&](Scalar x) { return ctx.reduce(x); });
}

Matrix multiply(const PrimeContext& ctx, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "matrix product dimensions disagree");
  return reduced(ctx, (reduced(ctx, a) * reduced(ctx, b)).eval());
}

Vector multiply(const PrimeContext& ctx, const Matrix& a, const Vector& v) {
  if (a.cols() != v.size())
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector dimensions disagree");
  return reduced(ctx, (reduced(ctx, a) * reduced(ctx, v)).eval());
}

Matrix power(const PrimeContext& ctx, const Matrix& a, int e) {
  Matrix result = Matrix::Identity(a.rows(), a.cols());
  Matrix base = reduced(ctx, a);
  while (e > 0) {
    if (e & 1) result = multiply(ctx, result, base);
    e >>= 1;
    if (e) base = multiply(ctx, base, base);
  }
  return result;
}

bool is_zero_mod(const PrimeContext& ctx, const Matrix& a) {
  return reduced(ctx, a).isZero();
}

std::optional<Matrix> inverse(const PrimeContext& ctx, const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const Index n = a.rows();
  Matrix m = reduced(ctx, a);
  Matrix inv = Matrix::Identity(n, n);
  for (Index c = 0; c < n; ++c) {
    Index piv = c;
    while (piv < n && !ctx.is_unit(m(piv, c))) ++piv;
    if (piv == n) return std::nullopt;
    m.row(c).swap(m.row(piv));
    inv.row(c).swap(inv.row(piv));
    const Scalar s = unit_inverse(ctx, m(c, c));
    m.row(c) = reduced(ctx, Vector((m.row(c) * s).transpose())).transpose();
    inv.row(c) = reduced(ctx, Vector((inv.row(c) * s).transpose())).transpose();
    for (Index r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      const Scalar f = m(r, c);
      m.row(r) = reduced(ctx, Vector((m.row(r) - f * m.row(c)).transpose())).transpose();
      inv.row(r) = reduced(ctx, Vector((inv.row(r) - f * inv.row(c)).transpose())).transpose();
    }
  }
  return inv;
}

bool is_zero_mod(const PrimeContext& ctx, const Vector& v) {
  return reduced(ctx, v).isZero();
}

// ---------------------------------------------------------------------------

ModMatrix::ModMatrix(const PrimeContext& ctx, Index rows, Index cols)
    : ctx_(ctx), storage_(rows, cols) {}

ModMatrix::ModMatrix(const PrimeContext& ctx, Storage storage)
    : ctx_(ctx), storage_(std::move(storage)) {
  normalize();
}

void ModMatrix::normalize() {
  for (int r = 0; r < storage_.outerSize(); ++r)
    for (Storage::InnerIterator it(storage_, r); it; ++it) it.valueRef() = ctx_.reduce(it.value());
  storage_.prune(Scalar{0});
  storage_.makeCompressed();
}

ModMatrix ModMatrix::from_triplets(const PrimeContext& ctx, Index rows, Index cols,
                                   const std::vector<Triplet>& triplets) {
  Storage s(rows, cols);
  s.setFromTriplets(triplets.begin(), triplets.end(),
                    [&](Scalar a, Scalar b) { return ctx.add(a, b); });
  return ModMatrix(ctx, std::move(s));
}

ModMatrix ModMatrix::from_dense(const PrimeContext& ctx, const Matrix& dense) {
  std::vector<Triplet> t;
  for (Index i = 0; i < dense.rows(); ++i)
    for (Index j = 0; j < dense.cols(); ++j)
      if (Scalar v = ctx.reduce(dense(i, j)); v != 0)
        t.emplace_back(static_cast<int>(i), static_cast<int>(j), v);
  return from_triplets(ctx, dense.rows(), dense.cols(), t);
}

ModMatrix ModMatrix::identity(const PrimeContext& ctx, Index n) {
  std::vector<Triplet> t;
  for (Index i = 0; i < n; ++i) t.emplace_back(static_cast<int>(i), static_cast<int>(i), 1);
  return from_triplets(ctx, n, n, t);
}

Matrix ModMatrix::to_dense() const { return Matrix(storage_); }

ModMatrix ModMatrix::transpose() const {
  return ModMatrix(ctx_, Storage(storage_.transpose()));
}

ModMatrix ModMatrix::operator*(const ModMatrix& other) const {
  if (cols() != other.rows())
    throw Error(ErrorKind::DimensionMismatch, "sparse product dimensions disagree");
  return ModMatrix(ctx_, Storage(storage_ * other.storage_));
}

Vector ModMatrix::operator*(const Vector& v) const {
  if (cols() != v.size())
    throw Error(ErrorKind::DimensionMismatch, "sparse matrix-vector dimensions disagree");
  return reduced(ctx_, (storage_ * reduced(ctx_, v)).eval());
}

ModMatrix ModMatrix::mod_p() const {
  PrimeContext f = ctx_.residue_field();
  return ModMatrix(f, storage_);
}

}  // namespace lazard
