#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lazard/modarith.hpp"

namespace lazard {

/// Submodule of (Z/p^k)^n in Howell form: rows ordered by pivot column, each
/// pivot a power of p, entries above a pivot p^a reduced to [0, p^a), and
/// closed under the "multiply by p^{k-a}" step. This form is canonical, so
/// equality of submodules is equality of bases.
class Submodule {
 public:
  Submodule(const PrimeContext& ctx, Index ambient_dim);

  static Submodule span(const PrimeContext& ctx, Index ambient_dim, const Matrix& generator_rows);
  static Submodule whole(const PrimeContext& ctx, Index ambient_dim);

  const PrimeContext& context() const { return ctx_; }
  Index ambient_dim() const { return ambient_; }
  const Matrix& basis() const { return rows_; }
  Index size() const { return rows_.rows(); }
  bool is_zero() const { return rows_.rows() == 0; }

  bool contains(const Vector& v) const;
  bool contains(const Submodule& other) const;
  bool operator==(const Submodule& other) const;

  Submodule operator+(const Submodule& other) const;
  Submodule scaled(Scalar c) const;

  /// Basis with an identity block on some column set, available exactly when
  /// the submodule is a free direct summand. Throws InvalidArgument otherwise.
  Matrix free_basis() const;
  bool is_free_summand() const;

 private:
  PrimeContext ctx_;
  Index ambient_;
  Matrix rows_;
};

class LieAlgebra {
 public:
  struct Bracket {
    Index i, j, m;  // 0-based, i < j
    Scalar c;
  };

  LieAlgebra(const PrimeContext& ctx, Index rank);
  static LieAlgebra from_brackets(const PrimeContext& ctx, Index rank,
                                  const std::vector<Bracket>& brackets, std::string name = {});

  const PrimeContext& context() const { return ctx_; }
  Index rank() const { return rank_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// [e_i, e_j]
  const Vector& structure(Index i, Index j) const { return table_[i * rank_ + j]; }
  void set_structure(Index i, Index j, const Vector& value);

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector basis_vector(Index i) const;

  /// Nonzero structure constants with i < j, in (i, j, m) order.
  std::vector<Bracket> brackets() const;

  bool operator==(const LieAlgebra& o) const;

 private:
  PrimeContext ctx_;
  Index rank_;
  std::vector<Vector> table_;
  std::string name_;
};

struct JacobiViolation {
  Index i, j, m;  // 0-based basis triple
  Vector residual;
};

/// Checks the Jacobi identity on all basis triples.
std::optional<JacobiViolation> validate(const LieAlgebra& g);

LieAlgebra reduce_mod_p(const LieAlgebra& g);

Matrix adjoint(const LieAlgebra& g, const Vector& x);

/// Span of [a, b] for a in h1, b in h2.
Submodule bracket_span(const LieAlgebra& g, const Submodule& h1, const Submodule& h2);
bool is_ideal(const LieAlgebra& g, const Submodule& h);

Submodule derived_subalgebra(const LieAlgebra& g);
/// g, g', g'', ... ending at the first repeated term.
std::vector<Submodule> derived_series(const LieAlgebra& g);

struct Solvability {
  bool solvable = false;
  int derived_length = 0;
};
Solvability is_solvable(const LieAlgebra& g);

/// gamma_1 = g, gamma_{i+1} = [gamma_i, g], ending at the first repeat.
std::vector<Submodule> lower_central_series(const LieAlgebra& g);
/// Nilpotency class at the working precision, or nullopt if not nilpotent.
std::optional<int> nilpotency_class(const LieAlgebra& g);

/// Saturation {x : p^m x in h} of h, computed at precision k from the Smith
/// form of a generator matrix (exponents equal to k count as zero).
Submodule isolator(const LieAlgebra& g, const Submodule& h);

/// The algebra spanned by the rows of a free basis, in that basis.
LieAlgebra subalgebra(const LieAlgebra& g, const Matrix& basis_rows);

/// Coordinates of v in a free basis with identity on its pivot columns.
Vector coordinates_in(const PrimeContext& ctx, const Matrix& basis_rows, const Vector& v);

/// g = k_0 > k_1 > ... > k_n = 0, each k_{i+1} a saturated ideal of k_i with
/// k_i / k_{i+1} free of rank one, generated by the image of t_i.
struct SolvableChain {
  struct Link {
    Matrix ideal;      // free basis of k_i (rows, ambient coordinates)
    Vector generator;  // t_i, ambient coordinates
  };
  std::vector<Link> links;  // links[i] describes k_i and t_i, i < n
  Index length() const { return static_cast<Index>(links.size()); }
  /// Free basis of k_i for 0 <= i <= n (k_n = 0).
  Matrix ideal(Index i) const;
};

SolvableChain solvable_chain(const LieAlgebra& g);

struct FiltrationChain {
  std::vector<Submodule> ideals;  // n_1 ⊇ n_2 ⊇ ... ⊇ n_N
};

/// The chain n_i = sum_j p^j gamma_{i - j c}(g) for a nilpotent algebra of
/// class c; the horizon is chosen so the last member vanishes.
FiltrationChain canonical_filtration(const LieAlgebra& g);

struct PfReport {
  bool ok = true;
  std::string condition;  // "ii", "iii", "iv", "v" when !ok
  Index index = 0;        // 1-based i of n_i at which the failure occurs
  Vector witness;         // an offending element
  std::string message;
};

/// Finite-horizon check of conditions ii-v for a chain of ideals; the
/// intersection condition becomes n_N ⊆ p^k g, i.e. n_N = 0 at precision k.
/// Throws MalformedChain if a member is not an ideal of g.
PfReport verify_pf_chain(const LieAlgebra& g, const FiltrationChain& chain);

}  // namespace lazard
