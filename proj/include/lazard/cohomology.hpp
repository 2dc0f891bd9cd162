#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lazard/echelon.hpp"
#include "lazard/liecore.hpp"

namespace lazard {

// ------------------------------------------------------ exterior indexing

using Mask = std::uint32_t;

Index binomial(int n, int k);
/// n-subsets of {0, ..., r-1} in increasing bitmask order.
std::vector<Mask> subsets(int r, int n);
/// Position of a subset among the subsets of the same size (bitmask order).
Index subset_rank(Mask s);

// ------------------------------------------------------------- modules

/// Finite module over a Lie algebra: one action matrix per basis vector.
class LieModule {
 public:
  LieModule(const PrimeContext& ctx, std::vector<Matrix> action);
  static LieModule trivial(const PrimeContext& ctx, Index algebra_rank, Index dim = 1);

  const PrimeContext& context() const { return ctx_; }
  Index dim() const { return dim_; }
  Index algebra_rank() const { return static_cast<Index>(action_.size()); }
  const Matrix& action(Index i) const { return action_[i]; }
  bool is_trivial() const;

 private:
  PrimeContext ctx_;
  Index dim_;
  std::vector<Matrix> action_;
};

struct ModuleViolation {
  Index i, j;
  Matrix residual;  // rho([e_i, e_j]) - [rho(e_i), rho(e_j)]
};

std::optional<ModuleViolation> validate(const LieAlgebra& g, const LieModule& v);

// -------------------------------------------------------------- complex

/// Cochains C^n = Hom(Lambda^n g, V) with coordinates (subset, module index),
/// index = subset_rank * dim V + a. The differential is
///   (d f)(x_0..x_n) = sum_i (-1)^i x_i f(..^x_i..)
///                   + sum_{i<j} (-1)^{i+j} f([x_i, x_j], ..^x_i..^x_j..).
class CochainComplex {
 public:
  CochainComplex(LieAlgebra g, LieModule v, std::vector<ModMatrix> differentials);

  const LieAlgebra& algebra() const { return g_; }
  const LieModule& module() const { return v_; }
  const PrimeContext& context() const { return g_.context(); }
  int top_degree() const { return static_cast<int>(g_.rank()); }
  Index cochain_dim(int n) const;
  /// d^n : C^n -> C^{n+1}; for n = top degree this is the zero map to 0.
  const ModMatrix& differential(int n) const { return d_[n]; }

 private:
  LieAlgebra g_;
  LieModule v_;
  std::vector<ModMatrix> d_;
};

/// d^n with no module or Jacobi checks.
ModMatrix ce_differential(const LieAlgebra& g, const LieModule& v, int n);

/// Builds the complex and checks d o d = 0 in every degree.
CochainComplex ce_complex(const LieAlgebra& g, const LieModule& v);
CochainComplex ce_complex(const LieAlgebra& g);

/// b_0 .. b_r over GF(p). Degrees are computed concurrently, capped by
/// LAZARD_THREADS (0 or unset = hardware concurrency).
std::vector<Index> betti(const CochainComplex& complex);
std::vector<Index> betti(const LieAlgebra& g, const LieModule& v);
std::vector<Index> betti(const LieAlgebra& g);

Index euler_characteristic(const std::vector<Index>& betti_numbers);

// ---------------------------------------------------------- cohomology

/// H^n with a fixed choice of representative cocycles and the data needed to
/// read off the class of an arbitrary cocycle.
class CohomologySpace {
 public:
  int degree() const { return degree_; }
  Index dim() const { return reps_.cols(); }
  /// Representative cocycles as columns.
  const Matrix& representatives() const { return reps_; }
  /// Class coordinates of a cocycle. Throws if v is not a cocycle.
  Vector coordinates(const Vector& cocycle) const;
  bool is_coboundary(const Vector& v) const { return boundaries_.contains(v); }

 private:
  friend CohomologySpace cocycle_representatives(const CochainComplex&, int);
  CohomologySpace(Scalar p, Index cochain_dim);

  Scalar p_;
  int degree_ = 0;
  Matrix reps_;
  ModMatrix cocycle_test_;
  FieldEchelon boundaries_;
  Matrix reduced_basis_;       // rows: RREF of reps reduced modulo boundaries
  std::vector<Index> pivots_;  // pivot column of each reduced row
  Matrix transform_;           // reduced_basis_ = transform_ * (reps mod B)
};

CohomologySpace cocycle_representatives(const CochainComplex& complex, int n);

struct AlgebraMap {
  enum class Kind { automorphism, derivation };
  Kind kind;
  Matrix matrix;  // column j = image of e_j
};

/// Action on cochains C^n (trivial coefficients): f -> f o Lambda^n(A^{-1})
/// for an automorphism A, f -> -f o D_n for a derivation D.
Matrix cochain_action(const CochainComplex& complex, const AlgebraMap& phi, int n);

/// Matrix of the induced map on H^n in the representative basis. Verifies
/// that phi is an automorphism or derivation, and that cocycles and
/// coboundaries are preserved.
Matrix induced_map(const CochainComplex& complex, const AlgebraMap& phi, int n);
Matrix induced_map(const CochainComplex& complex, const CohomologySpace& h, const AlgebraMap& phi);

/// Wedge of an m-cochain and an n-cochain (trivial coefficients).
Vector wedge(int rank, int m, const Vector& a, int n, const Vector& b, Scalar p);

/// Class of a ⌣ b in H^{m+n}, given class coordinates; zero past the top.
Vector cup_product(const CochainComplex& complex, const CohomologySpace& hm, const Vector& a,
                   const CohomologySpace& hn, const Vector& b, const CohomologySpace& hmn);

// ---------------------------------------------------- integral cohomology

/// H^n(g; Z/p^k) as a Z/p^k-module: cyclic summands Z/p^e, e in [1, k].
/// Summands with e = k are free at this precision; the rest are torsion.
struct IntegralCohomology {
  int degree = 0;
  std::vector<int> summands;  // nondecreasing exponents
  Index free_rank = 0;
  std::vector<int> torsion;   // exponents < k
};

IntegralCohomology integral_cohomology(const LieAlgebra& g, int n);
std::vector<IntegralCohomology> integral_cohomology(const LieAlgebra& g);

/// Smith exponents of each CE differential over Z/p^k.
std::vector<std::vector<int>> differential_profile(const LieAlgebra& g);

/// b_n(g/pg) = f_n + t_n + t_{n-1}, where from the Smith exponents of d^n
/// over Z/p^k, t_n counts exponents in (0, k) and f_n = c_n - r_n - r_{n-1}
/// with r counting exponents < k. The Betti numbers come from GF(p)
/// elimination on the reduced algebra, an independent route.
struct UniversalCoefficientReport {
  bool ok = true;
  std::vector<Index> betti_mod_p;
  std::vector<Index> free_part;
  std::vector<Index> torsion_from_differential;  // t_n
};

UniversalCoefficientReport universal_coefficient_check(const LieAlgebra& g);

/// Betti numbers of g over Z/p^k with GF(p) coefficients V, against those of
/// g/pg with V. For trivial V the left side comes from Smith forms over
/// Z/p^k; otherwise from the complex built with Z/p^k structure constants.
bool eckmann_shapiro_check(const LieAlgebra& g, const LieModule& v);
bool eckmann_shapiro_check(const LieAlgebra& g);

}  // namespace lazard
