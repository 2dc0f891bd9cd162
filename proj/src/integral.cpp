#include <algorithm>

#include "lazard/cohomology.hpp"

namespace lazard {

namespace {

// Exponents padded to the column count: a column past the diagonal is free.
std::vector<int> column_exponents(const PrimeContext& ctx, const SmithDecomposition& s, Index cols) {
  std::vector<int> e = s.exponents;
  e.resize(static_cast<std::size_t>(cols), ctx.k());
  return e;
}

}  // namespace

IntegralCohomology integral_cohomology(const LieAlgebra& g, int n) {
  const PrimeContext& ctx = g.context();
  const int r = static_cast<int>(g.rank());
  if (n < 0 || n > r) throw Error(ErrorKind::InvalidArgument, "degree out of range");
  const LieModule triv = LieModule::trivial(ctx, g.rank());
  const ModMatrix dn = ce_differential(g, triv, n);
  const Index cn = dn.cols();
  const SmithDecomposition s = smith_normal_form(dn);
  const std::vector<int> a = column_exponents(ctx, s, cn);

  // cocycle generators z_i = V^{-1} p^{k - a_i} e_i of order p^{a_i}
  std::vector<Index> gens;
  for (Index i = 0; i < cn; ++i)
    if (a[i] > 0) gens.push_back(i);
  const Index ng = static_cast<Index>(gens.size());

  Matrix rel;
  if (n > 0) {
    const Matrix b = ce_differential(g, triv, n - 1).to_dense();
    const Matrix y = multiply(ctx, s.V, b);
    rel = Matrix::Zero(ng, ng + b.cols());
    for (Index t = 0; t < ng; ++t) {
      const Index i = gens[t];
      rel(t, t) = ctx.power_of_p(a[i]);
      const Scalar div = ctx.power_of_p(ctx.k() - a[i]);
      for (Index j = 0; j < b.cols(); ++j) {
        if (y(i, j) % div != 0) throw Error(ErrorKind::InvalidArgument, "coboundary outside the cocycles");
        rel(t, ng + j) = ctx.reduce(y(i, j) / div);
      }
    }
  } else {
    rel = Matrix::Zero(ng, ng);
    for (Index t = 0; t < ng; ++t) rel(t, t) = ctx.power_of_p(a[gens[t]]);
  }

  IntegralCohomology out;
  out.degree = n;
  std::vector<int> ex;
  if (ng > 0) {
    const SmithDecomposition q = smith_normal_form(ctx, rel);
    ex = q.exponents;
    ex.resize(static_cast<std::size_t>(ng), ctx.k());
  }
  for (int e : ex) {
    if (e == 0) continue;
    out.summands.push_back(e);
    if (e == ctx.k())
      ++out.free_rank;
    else
      out.torsion.push_back(e);
  }
  std::sort(out.summands.begin(), out.summands.end());
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

std::vector<IntegralCohomology> integral_cohomology(const LieAlgebra& g) {
  std::vector<IntegralCohomology> out;
  for (int n = 0; n <= static_cast<int>(g.rank()); ++n) out.push_back(integral_cohomology(g, n));
  return out;
}

std::vector<std::vector<int>> differential_profile(const LieAlgebra& g) {
  const LieModule triv = LieModule::trivial(g.context(), g.rank());
  std::vector<std::vector<int>> out;
  for (int n = 0; n <= static_cast<int>(g.rank()); ++n) {
    const ModMatrix d = ce_differential(g, triv, n);
    out.push_back(d.rows() == 0 ? std::vector<int>{} : smith_normal_form(d).exponents);
  }
  return out;
}

UniversalCoefficientReport universal_coefficient_check(const LieAlgebra& g) {
  const PrimeContext& ctx = g.context();
  const int r = static_cast<int>(g.rank());
  const auto prof = differential_profile(g);
  UniversalCoefficientReport rep;
  rep.betti_mod_p = betti(reduce_mod_p(g));
  std::vector<Index> below_k(r + 1, 0), torsion(r + 1, 0);
  for (int n = 0; n <= r; ++n)
    for (int e : prof[n]) {
      if (e < ctx.k()) ++below_k[n];
      if (e > 0 && e < ctx.k()) ++torsion[n];
    }
  for (int n = 0; n <= r; ++n) {
    const Index c = binomial(r, n);
    const Index f = c - below_k[n] - (n > 0 ? below_k[n - 1] : 0);
    rep.free_part.push_back(f);
    rep.torsion_from_differential.push_back(torsion[n]);
    if (rep.betti_mod_p[n] != f + torsion[n] + (n > 0 ? torsion[n - 1] : 0)) rep.ok = false;
  }
  return rep;
}

bool eckmann_shapiro_check(const LieAlgebra& g) {
  const int r = static_cast<int>(g.rank());
  const auto prof = differential_profile(g);
  const auto right = betti(reduce_mod_p(g));
  std::vector<Index> units(r + 1, 0);
  for (int n = 0; n <= r; ++n) units[n] = std::count(prof[n].begin(), prof[n].end(), 0);
  for (int n = 0; n <= r; ++n)
    if (binomial(r, n) - units[n] - (n > 0 ? units[n - 1] : 0) != right[n]) return false;
  return true;
}

bool eckmann_shapiro_check(const LieAlgebra& g, const LieModule& v) {
  if (v.context() != g.context().residue_field())
    throw Error(ErrorKind::InvalidArgument, "coefficient module must be over GF(p)");
  if (v.is_trivial() && v.dim() == 1) return eckmann_shapiro_check(g);
  const int r = static_cast<int>(g.rank());
  std::vector<Matrix> lifted;
  for (Index i = 0; i < v.algebra_rank(); ++i) lifted.push_back(v.action(i));
  const LieModule lv(g.context(), lifted);
  std::vector<Index> ranks(r + 1, 0);
  for (int n = 0; n <= r; ++n) {
    const ModMatrix d = ce_differential(g, lv, n).mod_p();
    ranks[n] = d.is_zero() ? 0 : rank(d);
  }
  const auto right = betti(reduce_mod_p(g), v);
  for (int n = 0; n <= r; ++n)
    if (binomial(r, n) * v.dim() - ranks[n] - (n > 0 ? ranks[n - 1] : 0) != right[n]) return false;
  return true;
}

}  // namespace lazard
