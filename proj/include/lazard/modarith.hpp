#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "lazard/error.hpp"

namespace lazard {

using Scalar = std::int64_t;
using Index = Eigen::Index;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// The coefficient ring Z/p^k for an odd prime p >= 5.
///
/// The modulus is capped at 2^24 so that a dense product of reduced
/// residues can be accumulated in 64 bits for any dimension this library
/// handles (up to 2^15 terms per entry).
class PrimeContext {
 public:
  static constexpr Scalar kMaxModulus = Scalar{1} << 24;

  PrimeContext(Scalar p, int k);

  Scalar p() const { return p_; }
  int k() const { return k_; }
  Scalar modulus() const { return modulus_; }
  bool is_field() const { return k_ == 1; }
  PrimeContext residue_field() const { return PrimeContext(p_, 1); }
  PrimeContext with_precision(int k) const { return PrimeContext(p_, k); }

  Scalar reduce(Scalar a) const {
    Scalar r = a % modulus_;
    return r < 0 ? r + modulus_ : r;
  }
  Scalar add(Scalar a, Scalar b) const { return reduce(a + b); }
  Scalar sub(Scalar a, Scalar b) const { return reduce(a - b); }
  Scalar mul(Scalar a, Scalar b) const { return reduce(a * b); }
  Scalar neg(Scalar a) const { return reduce(-a); }

  /// p-adic valuation of a residue; k for zero.
  int valuation(Scalar a) const;
  bool is_unit(Scalar a) const { return reduce(a) % p_ != 0; }
  /// p^e reduced; p^k is zero.
  Scalar power_of_p(int e) const;

  bool operator==(const PrimeContext& o) const { return p_ == o.p_ && k_ == o.k_; }
  bool operator!=(const PrimeContext& o) const { return !(*this == o); }

 private:
  Scalar p_;
  int k_;
  Scalar modulus_;
};

bool is_prime(Scalar n);

/// Inverse of a unit modulo p^k. Throws NotAUnit when p divides a.
Scalar unit_inverse(const PrimeContext& ctx, Scalar a);

Vector reduced(const PrimeContext& ctx, const Vector& v);
Matrix reduced(const PrimeContext& ctx, const Matrix& m);

Matrix multiply(const PrimeContext& ctx, const Matrix& a, const Matrix& b);
Vector multiply(const PrimeContext& ctx, const Matrix& a, const Vector& v);
Matrix power(const PrimeContext& ctx, const Matrix& a, int e);
bool is_zero_mod(const PrimeContext& ctx, const Matrix& a);
/// Inverse over Z/p^k, or nullopt when the matrix is singular mod p.
std::optional<Matrix> inverse(const PrimeContext& ctx, const Matrix& a);
bool is_zero_mod(const PrimeContext& ctx, const Vector& v);

/// Sparse matrix over Z/p^k. Entries are kept reduced to [0, p^k) and
/// explicit zeros are pruned, so (row, col) keys are unique.
class ModMatrix {
 public:
  using Storage = Eigen::SparseMatrix<Scalar, Eigen::RowMajor, int>;
  using Triplet = Eigen::Triplet<Scalar, int>;

  ModMatrix(const PrimeContext& ctx, Index rows, Index cols);
  ModMatrix(const PrimeContext& ctx, Storage storage);

  /// Duplicate keys are summed.
  static ModMatrix from_triplets(const PrimeContext& ctx, Index rows, Index cols,
                                 const std::vector<Triplet>& triplets);
  static ModMatrix from_dense(const PrimeContext& ctx, const Matrix& dense);
  static ModMatrix identity(const PrimeContext& ctx, Index n);

  const PrimeContext& context() const { return ctx_; }
  Index rows() const { return storage_.rows(); }
  Index cols() const { return storage_.cols(); }
  Index nonzeros() const { return storage_.nonZeros(); }
  const Storage& storage() const { return storage_; }

  Matrix to_dense() const;
  ModMatrix transpose() const;
  ModMatrix operator*(const ModMatrix& other) const;
  Vector operator*(const Vector& v) const;
  bool is_zero() const { return storage_.nonZeros() == 0; }
  /// Reduce entries modulo p (k = 1 context).
  ModMatrix mod_p() const;

 private:
  void normalize();

  PrimeContext ctx_;
  Storage storage_;
};

struct RankKernel {
  Index rank = 0;
  /// Kernel basis as columns, one per free column of the reduced echelon
  /// form: 1 in that column, 0 in the other free columns.
  Matrix kernel;
};

/// Rank and kernel over GF(p). Requires a k = 1 context.
RankKernel rank_kernel(const ModMatrix& m);
/// Rank over GF(p) without building the kernel.
Index rank(const ModMatrix& m);

/// A particular solution of M x = b, or nullopt when b is not in the image.
/// Over GF(p) free variables are set to zero; over Z/p^k the solution is
/// read off the Smith decomposition.
std::optional<Vector> solve(const ModMatrix& m, const Vector& b);

/// M = U * D * V with U, V invertible over Z/p^k and D "diagonal" with
/// entries p^{a_i}, a_i nondecreasing; a_i = k stands for a zero entry.
struct SmithDecomposition {
  Matrix U, D, V;
  Matrix U_inverse, V_inverse;
  std::vector<int> exponents;  // length min(rows, cols)
};

SmithDecomposition smith_normal_form(const ModMatrix& m);
SmithDecomposition smith_normal_form(const PrimeContext& ctx, const Matrix& m);

}  // namespace lazard
