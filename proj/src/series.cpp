#include "lazard/liecore.hpp"

#include <algorithm>
#include <string>

namespace lazard {

Submodule derived_subalgebra(const LieAlgebra& g) {
  Submodule whole = Submodule::whole(g.context(), g.rank());
  return bracket_span(g, whole, whole);
}

std::vector<Submodule> derived_series(const LieAlgebra& g) {
  std::vector<Submodule> series{Submodule::whole(g.context(), g.rank())};
  while (true) {
    Submodule next = bracket_span(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

Solvability is_solvable(const LieAlgebra& g) {
  std::vector<Submodule> s = derived_series(g);
  Solvability out;
  out.solvable = s.back().is_zero();
  out.derived_length = static_cast<int>(s.size()) - 1;
  return out;
}

std::vector<Submodule> lower_central_series(const LieAlgebra& g) {
  Submodule whole = Submodule::whole(g.context(), g.rank());
  std::vector<Submodule> series{whole};
  while (true) {
    Submodule next = bracket_span(g, series.back(), whole);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<int> nilpotency_class(const LieAlgebra& g) {
  std::vector<Submodule> s = lower_central_series(g);
  if (!s.back().is_zero()) return std::nullopt;
  return static_cast<int>(s.size()) - 1;
}

Submodule isolator(const LieAlgebra& g, const Submodule& h) {
  const auto& ctx = g.context();
  if (h.is_zero()) return h;
  // generators as columns: h = U D V, saturation = span{U e_i : a_i < k}
  SmithDecomposition snf = smith_normal_form(ctx, Matrix(h.basis().transpose()));
  std::vector<Index> cols;
  for (std::size_t i = 0; i < snf.exponents.size(); ++i)
    if (snf.exponents[i] < ctx.k()) cols.push_back(static_cast<Index>(i));
  Matrix gens(static_cast<Index>(cols.size()), g.rank());
  for (std::size_t i = 0; i < cols.size(); ++i)
    gens.row(static_cast<Index>(i)) = snf.U.col(cols[i]).transpose();
  return Submodule::span(ctx, g.rank(), gens);
}

Matrix SolvableChain::ideal(Index i) const {
  if (i < length()) return links[i].ideal;
  Index ambient = links.empty() ? 0 : links.front().ideal.cols();
  return Matrix(0, ambient);
}

SolvableChain solvable_chain(const LieAlgebra& g) {
  const auto& ctx = g.context();
  if (g.rank() == 0) throw Error(ErrorKind::InvalidArgument, "solvable_chain needs a nonzero algebra");
  if (!is_solvable(g).solvable) throw Error(ErrorKind::NotSolvable, "algebra is not solvable");

  SolvableChain chain;
  Matrix current = Matrix::Identity(g.rank(), g.rank());
  while (current.rows() > 0) {
    const Index s = current.rows();
    LieAlgebra k = subalgebra(g, current);
    Submodule derived = derived_subalgebra(k);
    Submodule saturated = isolator(k, derived);
    if (saturated.size() == s && saturated == Submodule::whole(ctx, s))
      throw Error(ErrorKind::AbelianizationTorsion,
                  "abelianization torsion at this precision (level " +
                      std::to_string(chain.length()) + ")");
    // The saturation is a free summand; its unit pivots leave the standard
    // coordinate vectors on the other columns as a complement. The lowest
    // such column generates the quotient.
    Matrix sat_basis = saturated.free_basis();
    std::vector<bool> pivot(static_cast<std::size_t>(s), false);
    for (Index i = 0; i < sat_basis.rows(); ++i) {
      for (Index c = 0; c < s; ++c)
        if (ctx.reduce(sat_basis(i, c)) == 1) {
          bool clean = true;
          for (Index t = 0; t < sat_basis.rows(); ++t)
            if (t != i && ctx.reduce(sat_basis(t, c)) != 0) clean = false;
          if (clean) {
            pivot[c] = true;
            break;
          }
        }
    }
    Index chosen = -1;
    std::vector<Index> complement;
    for (Index c = 0; c < s; ++c) {
      if (pivot[c]) continue;
      if (chosen < 0)
        chosen = c;
      else
        complement.push_back(c);
    }
    Matrix next_local(sat_basis.rows() + static_cast<Index>(complement.size()), s);
    next_local.topRows(sat_basis.rows()) = sat_basis;
    for (std::size_t i = 0; i < complement.size(); ++i) {
      next_local.row(sat_basis.rows() + static_cast<Index>(i)).setZero();
      next_local(sat_basis.rows() + static_cast<Index>(i), complement[i]) = 1;
    }
    SolvableChain::Link link;
    link.ideal = current;
    link.generator = current.row(chosen).transpose();
    chain.links.push_back(std::move(link));

    Matrix next_ambient = reduced(ctx, Matrix(next_local * current));
    if (next_ambient.rows() == 0) break;
    current = Submodule::span(ctx, g.rank(), next_ambient).free_basis();
  }
  return chain;
}

FiltrationChain canonical_filtration(const LieAlgebra& g) {
  const auto& ctx = g.context();
  std::optional<int> cls = nilpotency_class(g);
  if (!cls) throw Error(ErrorKind::InvalidArgument, "canonical filtration needs a nilpotent algebra");
  const int c = std::max(*cls, 1);
  std::vector<Submodule> gamma = lower_central_series(g);  // gamma[i] = gamma_{i+1}
  auto gamma_at = [&](int m) -> Submodule {
    if (m <= 1) return gamma[0];
    if (m - 1 < static_cast<int>(gamma.size())) return gamma[m - 1];
    return Submodule(ctx, g.rank());
  };
  FiltrationChain chain;
  const int horizon = ctx.k() * c + 1;
  for (int i = 1; i <= horizon; ++i) {
    Submodule n(ctx, g.rank());
    for (int j = 0; j < ctx.k(); ++j) n = n + gamma_at(i - j * c).scaled(ctx.power_of_p(j));
    chain.ideals.push_back(std::move(n));
  }
  return chain;
}

namespace {

// First generator of `inner` outside `outer`, as a witness.
Vector first_outside(const Submodule& inner, const Submodule& outer) {
  for (Index i = 0; i < inner.size(); ++i) {
    Vector v = inner.basis().row(i).transpose();
    if (!outer.contains(v)) return v;
  }
  return Vector();
}

}  // namespace

PfReport verify_pf_chain(const LieAlgebra& g, const FiltrationChain& chain) {
  const auto& ctx = g.context();
  const Submodule whole = Submodule::whole(ctx, g.rank());
  const auto& n = chain.ideals;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i].ambient_dim() != g.rank() || n[i].context() != ctx)
      throw Error(ErrorKind::MalformedChain, "chain member " + std::to_string(i + 1) +
                                                 " does not live in the algebra");
    if (!is_ideal(g, n[i]))
      throw Error(ErrorKind::MalformedChain,
                  "chain member " + std::to_string(i + 1) + " is not an ideal");
  }
  PfReport report;
  auto fail = [&](std::string cond, std::size_t i, Vector w, std::string msg) {
    report.ok = false;
    report.condition = std::move(cond);
    report.index = static_cast<Index>(i + 1);
    report.witness = std::move(w);
    report.message = std::move(msg);
    return report;
  };
  for (std::size_t i = 0; i + 1 < n.size(); ++i) {
    if (!n[i].contains(n[i + 1]))
      return fail("ii", i, first_outside(n[i + 1], n[i]), "n_{i+1} is not contained in n_i");
    Submodule commutator = bracket_span(g, n[i], whole);
    if (!n[i + 1].contains(commutator))
      return fail("iv", i, first_outside(commutator, n[i + 1]), "[n_i, g] is not contained in n_{i+1}");
    Submodule iterated = n[i];
    for (Scalar t = 0; t + 1 < ctx.p(); ++t) iterated = bracket_span(g, iterated, whole);
    Submodule target = n[i + 1].scaled(ctx.p());
    if (!target.contains(iterated))
      return fail("v", i, first_outside(iterated, target),
                  "[n_i, g, ..., g] ((p-1)-fold) is not contained in p n_{i+1}");
  }
  if (!n.empty() && !n.back().is_zero())
    return fail("iii", n.size() - 1, n.back().basis().row(0).transpose(),
                "horizon member is not contained in p^k g");
  return report;
}

}  // namespace lazard
