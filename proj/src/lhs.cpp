#include "lazard/lhs.hpp"

#include <string>

namespace lazard {

const char* to_string(Side side) { return side == Side::group ? "group" : "lie"; }

namespace {

Index field_rank(const PrimeContext& ctx, const Matrix& a) {
  const PrimeContext f = ctx.residue_field();
  if (a.size() == 0) return 0;
  return rank(ModMatrix::from_dense(f, reduced(f, a)));
}

Matrix shifted(const LinearOperator& a, Side side) {
  if (a.matrix.rows() != a.matrix.cols()) throw Error(ErrorKind::DimensionMismatch, "operator must be square");
  if (side == Side::lie) return a.matrix;
  return a.matrix - Matrix::Identity(a.dim(), a.dim());
}

}  // namespace

Index invariants_dim(const LinearOperator& a, Side side) {
  return a.dim() - field_rank(a.ctx, shifted(a, side));
}

Index coinvariants_dim(const LinearOperator& a, Side side) {
  return a.dim() - field_rank(a.ctx, shifted(a, side));
}

Index SpectralPage::entry(int r, int s) const {
  if (s < 0 || r < 0 || r > 1) return 0;
  const auto& col = r == 0 ? column0 : column1;
  return s < static_cast<int>(col.size()) ? col[s] : 0;
}

std::vector<Index> SpectralPage::totals() const {
  std::vector<Index> b(column0.size() + 1, 0);
  for (std::size_t n = 0; n < b.size(); ++n)
    b[n] = entry(0, static_cast<int>(n)) + entry(1, static_cast<int>(n) - 1);
  return b;
}

SpectralPage two_column_page(const LieAlgebra& g, const Matrix& ideal_rows, const Vector& t, Side side) {
  const PrimeContext& ctx = g.context();
  const PrimeContext f = ctx.residue_field();
  const Index s = ideal_rows.rows();
  const LieAlgebra k = subalgebra(g, ideal_rows);
  Matrix d(s, s);
  for (Index j = 0; j < s; ++j)
    d.col(j) = coordinates_in(ctx, ideal_rows, g.bracket(t, Vector(ideal_rows.row(j).transpose())));

  AlgebraMap phi;
  if (side == Side::lie) {
    phi = {AlgebraMap::Kind::derivation, reduced(f, d)};
  } else {
    const LinearOperator c = truncated_exp(LinearOperator{ctx, d});
    phi = {AlgebraMap::Kind::automorphism, reduced(f, c.matrix)};
  }
  const LieAlgebra kbar = reduce_mod_p(k);
  const CochainComplex complex = ce_complex(kbar);

  SpectralPage page;
  page.side = side;
  for (int deg = 0; deg <= complex.top_degree(); ++deg) {
    const CohomologySpace h = cocycle_representatives(complex, deg);
    LinearOperator op{f, induced_map(complex, h, phi)};
    const Index n = op.dim();
    const Matrix nil = side == Side::lie ? op.matrix : Matrix(op.matrix - Matrix::Identity(n, n));
    if (n > 0 && !is_zero_mod(f, power(f, nil, static_cast<int>(f.p()))))
      throw Error(ErrorKind::NotUnipotent,
                  "action on H^" + std::to_string(deg) + " is not unipotent of class <= p");
    page.column0.push_back(invariants_dim(op, side));
    page.column1.push_back(coinvariants_dim(op, side));
    page.operators.push_back(op.matrix);
  }
  return page;
}

bool lemma_abelian_check(const LinearOperator& u) {
  const PrimeContext f = u.ctx.residue_field();
  const LinearOperator uf{f, reduced(f, u.matrix)};
  const LinearOperator n = truncated_log(uf);
  return invariants_dim(uf, Side::group) == invariants_dim(n, Side::lie) &&
         coinvariants_dim(uf, Side::group) == coinvariants_dim(n, Side::lie);
}

SolvableRun solvable_run(const LieAlgebra& g, Side side) {
  const SolvableChain chain = solvable_chain(g);
  SolvableRun run;
  run.side = side;
  std::vector<Index> below{1};
  for (Index i = chain.length() - 1; i >= 0; --i) {
    RecursionLevel level;
    const Matrix ideal = chain.ideal(i + 1);
    level.ideal_rank = ideal.rows();
    level.expected = below;
    level.page = two_column_page(g, ideal, chain.links[i].generator, side);
    for (const Matrix& op : level.page.operators) level.ce_betti.push_back(op.rows());
    if (level.ce_betti != level.expected) run.consistent = false;
    below = level.page.totals();
    run.levels.insert(run.levels.begin(), std::move(level));
  }
  run.betti = below;
  return run;
}

std::vector<Index> solvable_betti(const LieAlgebra& g, Side side) { return solvable_run(g, side).betti; }

ComparisonReport main_theorem_check(const LieAlgebra& g) {
  ComparisonReport rep;
  rep.algebra = g.name();
  const SolvableRun grp = solvable_run(g, Side::group);
  const SolvableRun lie = solvable_run(g, Side::lie);
  rep.group = grp.betti;
  rep.lie = lie.betti;
  rep.direct = betti(reduce_mod_p(g));
  rep.recursion_consistent = grp.consistent && lie.consistent;
  const PrimeContext f = g.context().residue_field();
  for (std::size_t i = 0; i < grp.levels.size(); ++i) {
    const auto& gu = grp.levels[i].page.operators;
    const auto& ln = lie.levels[i].page.operators;
    for (std::size_t s = 0; s < gu.size(); ++s) {
      const LinearOperator u{f, gu[s]}, n{f, ln[s]};
      if (!lemma_abelian_check(u)) rep.operators_compatible = false;
      if (n.dim() > 0 && is_zero_mod(f, power(f, n.matrix, static_cast<int>(f.p()))) &&
          !(truncated_exp(n) == u))
        rep.operators_compatible = false;
    }
  }
  rep.pass = rep.group == rep.lie && rep.lie == rep.direct && rep.recursion_consistent;
  return rep;
}

}  // namespace lazard
