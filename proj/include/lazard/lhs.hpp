#pragma once

#include <string>
#include <vector>

#include "lazard/bch.hpp"
#include "lazard/cohomology.hpp"
#include "lazard/liecore.hpp"

namespace lazard {

enum class Side { group, lie };

const char* to_string(Side side);

/// dim ker(A - I) on the group side, dim ker A on the Lie side (over GF(p)).
Index invariants_dim(const LinearOperator& a, Side side);
/// dim V - rank(A - I), or dim V - rank A.
Index coinvariants_dim(const LinearOperator& a, Side side);

/// E_2 of an extension with rank-one quotient. Only the columns r = 0, 1
/// are stored; every other entry is zero.
struct SpectralPage {
  Side side = Side::lie;
  std::vector<Index> column0;  // E^{0,s}
  std::vector<Index> column1;  // E^{1,s}
  std::vector<Matrix> operators;  // action on H^s(k) in the representative basis

  Index entry(int r, int s) const;
  /// b_n = E^{0,n} + E^{1,n-1}, n = 0 .. top + 1.
  std::vector<Index> totals() const;
};

/// Page for the ideal k (free basis rows, ambient coordinates of g) with the
/// quotient generator t. The action on H^s(k/pk) is induced by ad t (Lie) or
/// exp(ad t) (group); each operator is checked to be unipotent of class <= p.
SpectralPage two_column_page(const LieAlgebra& g, const Matrix& ideal_rows, const Vector& t, Side side);

/// Dimension content of the comparison between H^*(Q; V) and H^*(q; V) for
/// U acting on V with N = truncated_log(U). Requires (U - I)^p = 0.
bool lemma_abelian_check(const LinearOperator& u);

struct RecursionLevel {
  Index ideal_rank = 0;           // rank of k_{i+1}
  std::vector<Index> ce_betti;    // direct CE Betti numbers of k_{i+1} / p
  std::vector<Index> expected;    // totals carried up from the level below
  SpectralPage page;
};

struct SolvableRun {
  Side side = Side::lie;
  std::vector<Index> betti;
  std::vector<RecursionLevel> levels;  // levels[i]: k_i from k_{i+1}
  bool consistent = true;              // ce_betti == expected at every level
};

SolvableRun solvable_run(const LieAlgebra& g, Side side);
/// Betti numbers of g/pg assembled through the chain k_0 ⊃ ... ⊃ k_n = 0.
std::vector<Index> solvable_betti(const LieAlgebra& g, Side side);

struct ComparisonReport {
  std::string algebra;
  std::vector<Index> group, lie, direct;
  bool recursion_consistent = true;
  bool operators_compatible = true;
  bool pass = false;
};

ComparisonReport main_theorem_check(const LieAlgebra& g);

}  // namespace lazard
