#pragma once

#include <string>
#include <vector>

#include "lazard/liecore.hpp"

namespace lazard {

LieAlgebra abelian(const PrimeContext& ctx, int n);
/// Basis x_1..x_n, y_1..y_n, z with [x_i, y_i] = z.
LieAlgebra heisenberg_gen(const PrimeContext& ctx, int n);
/// [e_1, e_i] = e_{i+1} for 2 <= i < n.
LieAlgebra filiform(const PrimeContext& ctx, int n);
/// Basis t, x with [t, x] = p x. Needs k >= 2.
LieAlgebra solvable_px(const PrimeContext& ctx);
/// Strictly upper triangular n x n matrices, basis E_ij (i < j) in lex order.
/// Needs n - 1 < p.
LieAlgebra ut(const PrimeContext& ctx, int n);

struct CorpusEntry {
  std::string name;
  std::string signature;  // e.g. "ut(n)"
  std::string description;
};

const std::vector<CorpusEntry>& corpus_entries();

/// Builds an entry from "name(arg, ...)" or a bare name.
LieAlgebra corpus(const std::string& call, const PrimeContext& ctx);

}  // namespace lazard
