#include <random>

#include <gtest/gtest.h>

#include "lazard/corpus.hpp"
#include "lazard/liecore.hpp"
#include "oracles.hpp"

using namespace lazard;

namespace {

Vector vec(std::initializer_list<Scalar> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (Scalar x : xs) v[i++] = x;
  return v;
}

Submodule span(const PrimeContext& c, Index dim, std::initializer_list<std::initializer_list<Scalar>> rows) {
  Matrix m(static_cast<Index>(rows.size()), dim);
  Index i = 0;
  for (auto r : rows) m.row(i++) = vec(r).transpose();
  return Submodule::span(c, dim, m);
}

std::vector<LieAlgebra> nilpotent_corpus(const PrimeContext& c) {
  std::vector<LieAlgebra> out{abelian(c, 3), heisenberg_gen(c, 1), heisenberg_gen(c, 2), filiform(c, 4),
                              filiform(c, 5), ut(c, 4)};
  return out;
}

}  // namespace

TEST(Validate, AcceptsCorpus) {
  for (auto [p, k] : {std::pair{5, 1}, {5, 2}, {7, 2}}) {
    PrimeContext c(p, k);
    for (const auto& g : nilpotent_corpus(c)) EXPECT_FALSE(validate(g)) << g.name();
    if (k >= 2) EXPECT_FALSE(validate(solvable_px(c)));
  }
}

TEST(Validate, ReportsViolatingTriple) {
  PrimeContext c(5, 1);
  auto g = LieAlgebra::from_brackets(c, 3, {{0, 1, 0, 1}, {0, 2, 1, 1}});
  auto bad = validate(g);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->i, 0);
  EXPECT_EQ(bad->j, 1);
  EXPECT_EQ(bad->m, 2);
  EXPECT_FALSE(bad->residual.isZero());
}

TEST(Validate, RejectsRandomPerturbations) {
  std::mt19937_64 rng(21);
  PrimeContext c(5, 1);
  const LieAlgebra base = ut(c, 4);
  std::uniform_int_distribution<Index> idx(0, base.rank() - 1);
  std::uniform_int_distribution<Scalar> coef(1, 4);
  int rejected = 0, tried = 0;
  while (tried < 100) {
    LieAlgebra g = base;
    Index i = idx(rng), j = idx(rng), m = idx(rng);
    if (i == j) continue;
    Vector v = g.structure(i, j);
    v[m] = c.add(v[m], coef(rng));
    g.set_structure(i, j, v);
    // re-check with an independent evaluation of the Jacobi sum
    bool broken = false;
    for (Index a = 0; a < g.rank() && !broken; ++a)
      for (Index b = 0; b < g.rank() && !broken; ++b)
        for (Index d = 0; d < g.rank() && !broken; ++d) {
          Vector ea = g.basis_vector(a), eb = g.basis_vector(b), ed = g.basis_vector(d);
          Vector s = g.bracket(g.bracket(ea, eb), ed) + g.bracket(g.bracket(eb, ed), ea) +
                     g.bracket(g.bracket(ed, ea), eb);
          broken = !is_zero_mod(c, s);
        }
    if (!broken) continue;
    ++tried;
    rejected += validate(g).has_value();
  }
  EXPECT_EQ(rejected, 100);
}

TEST(Bracket, Examples) {
  PrimeContext c(5, 2);
  auto h = heisenberg_gen(c, 1);
  EXPECT_EQ(h.bracket(h.basis_vector(0), h.basis_vector(1)), vec({0, 0, 1}));
  Vector x = vec({3, 7, 11});
  EXPECT_TRUE(is_zero_mod(c, h.bracket(x, x)));
  auto s = solvable_px(c);
  EXPECT_EQ(s.bracket(s.basis_vector(0), s.basis_vector(1)), vec({0, 5}));
}

TEST(ReduceModP, Examples) {
  PrimeContext c(5, 2);
  auto s = reduce_mod_p(solvable_px(c));
  EXPECT_TRUE(s.context().is_field());
  EXPECT_TRUE(s.brackets().empty());
  EXPECT_EQ(reduce_mod_p(heisenberg_gen(c, 1)), heisenberg_gen(c.residue_field(), 1));
}

TEST(Series, DerivedSubalgebraExamples) {
  PrimeContext c(5, 2);
  EXPECT_TRUE(derived_subalgebra(abelian(c, 3)).is_zero());
  EXPECT_EQ(derived_subalgebra(heisenberg_gen(c, 1)), span(c, 3, {{0, 0, 1}}));
  auto d = derived_subalgebra(solvable_px(c));
  EXPECT_EQ(d, span(c, 2, {{0, 5}}));
  EXPECT_FALSE(d.is_free_summand());
  EXPECT_TRUE(is_ideal(solvable_px(c), d));
}

TEST(Series, SolvabilityAndClass) {
  PrimeContext c(5, 2);
  EXPECT_EQ(is_solvable(abelian(c, 3)).derived_length, 1);
  EXPECT_EQ(is_solvable(heisenberg_gen(c, 1)).derived_length, 2);
  PrimeContext f7(7, 1);
  auto sl2 = LieAlgebra::from_brackets(f7, 3, {{0, 1, 1, 2}, {0, 2, 2, 5}, {1, 2, 0, 1}});
  ASSERT_FALSE(validate(sl2));
  EXPECT_FALSE(is_solvable(sl2).solvable);
  EXPECT_EQ(nilpotency_class(ut(c, 4)), 3);
  EXPECT_EQ(nilpotency_class(filiform(c, 5)), 4);
  EXPECT_EQ(nilpotency_class(heisenberg_gen(c, 2)), 2);
  // p x, p^2 x = 0 at k = 2
  EXPECT_EQ(nilpotency_class(solvable_px(c)), 2);
  EXPECT_FALSE(nilpotency_class(solvable_px(PrimeContext(5, 3))) == 1);
}

TEST(Isolator, Examples) {
  PrimeContext c(5, 2);
  auto a = abelian(c, 2);
  EXPECT_EQ(isolator(a, span(c, 2, {{5, 0}})), span(c, 2, {{1, 0}}));
  auto s = solvable_px(c);
  EXPECT_EQ(isolator(s, derived_subalgebra(s)), span(c, 2, {{0, 1}}));
  auto h = heisenberg_gen(c, 1);
  auto z = span(c, 3, {{0, 0, 1}});
  EXPECT_EQ(isolator(h, z), z);
}

TEST(Isolator, IdempotentMonotoneSaturated) {
  // At precision k the inclusion h ⊆ h' only lifts up to p^k, so the
  // saturations agree modulo p^(k - a) with a the largest exponent of h.
  std::mt19937_64 rng(4);
  PrimeContext c(5, 3);
  auto g = abelian(c, 4);
  std::uniform_int_distribution<Scalar> coef(0, c.modulus() - 1);
  for (int t = 0; t < 40; ++t) {
    Matrix m(2, 4);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 4; ++j) m(i, j) = c.mul(coef(rng), 5);
    Submodule h = Submodule::span(c, 4, m);
    Matrix extra(3, 4);
    extra << m, Matrix::Zero(1, 4);
    for (Index j = 0; j < 4; ++j) extra(2, j) = coef(rng);
    Submodule h2 = Submodule::span(c, 4, extra);
    auto i1 = isolator(g, h);
    EXPECT_TRUE(i1.contains(h));
    EXPECT_EQ(isolator(g, i1), i1);
    EXPECT_TRUE(i1.is_free_summand());
    int a = 0;
    for (int e : smith_normal_form(c, Matrix(m.transpose())).exponents)
      if (e < c.k()) a = std::max(a, e);
    Submodule slack = Submodule::whole(c, 4).scaled(c.power_of_p(c.k() - a));
    EXPECT_TRUE((isolator(g, h2) + slack).contains(i1));
  }
}

TEST(SolvableChain, HeisenbergAndSolvablePx) {
  PrimeContext c(5, 2);
  auto ch = solvable_chain(heisenberg_gen(c, 1));
  ASSERT_EQ(ch.length(), 3);
  EXPECT_EQ(ch.links[0].generator, vec({1, 0, 0}));
  EXPECT_EQ(ch.links[1].generator, vec({0, 1, 0}));
  EXPECT_EQ(ch.links[2].generator, vec({0, 0, 1}));
  EXPECT_EQ(Submodule::span(c, 3, ch.ideal(1)), span(c, 3, {{0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(Submodule::span(c, 3, ch.ideal(2)), span(c, 3, {{0, 0, 1}}));
  EXPECT_EQ(ch.ideal(3).rows(), 0);

  auto s = solvable_chain(solvable_px(c));
  ASSERT_EQ(s.length(), 2);
  EXPECT_EQ(s.links[0].generator, vec({1, 0}));
  EXPECT_EQ(Submodule::span(c, 2, s.ideal(1)), span(c, 2, {{0, 1}}));
}

TEST(SolvableChain, AbelianizationTorsion) {
  // p times a simple algebra: solvable at precision 2, but g' = p g
  PrimeContext c(5, 2);
  auto g = LieAlgebra::from_brackets(c, 3, {{0, 1, 2, 5}, {1, 2, 0, 5}, {0, 2, 1, 20}});
  ASSERT_FALSE(validate(g));
  ASSERT_TRUE(is_solvable(g).solvable);
  try {
    solvable_chain(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AbelianizationTorsion);
  }
  auto sl2 = LieAlgebra::from_brackets(PrimeContext(7, 1), 3, {{0, 1, 1, 2}, {0, 2, 2, 5}, {1, 2, 0, 1}});
  try {
    solvable_chain(sl2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSolvable);
  }
}

TEST(SolvableChain, PropertiesOnCorpus) {
  for (auto [p, k] : {std::pair{5, 2}, {7, 2}, {5, 3}}) {
    PrimeContext c(p, k);
    auto algebras = nilpotent_corpus(c);
    algebras.push_back(solvable_px(c));
    for (const auto& g : algebras) {
      auto ch = solvable_chain(g);
      EXPECT_EQ(ch.length(), g.rank()) << g.name();
      for (Index i = 0; i < ch.length(); ++i) {
        const Matrix ki = ch.ideal(i), kn = ch.ideal(i + 1);
        const auto sub = subalgebra(g, ki);
        Matrix kn_in = Matrix::Zero(kn.rows(), ki.rows());
        for (Index r = 0; r < kn.rows(); ++r) kn_in.row(r) = coordinates_in(c, ki, Vector(kn.row(r).transpose())).transpose();
        Submodule ideal = Submodule::span(c, ki.rows(), kn_in);
        EXPECT_TRUE(is_ideal(sub, ideal)) << g.name() << " level " << i;
        EXPECT_EQ(isolator(sub, ideal), ideal);
        EXPECT_EQ(ki.rows(), kn.rows() + 1);
        // t_i and k_{i+1} together span k_i, with a unit Smith diagonal
        Matrix both(kn.rows() + 1, g.rank());
        both << kn, ch.links[i].generator.transpose();
        auto s = smith_normal_form(c, both);
        for (int e : s.exponents) EXPECT_EQ(e, 0);
        EXPECT_EQ(Submodule::span(c, g.rank(), both), Submodule::span(c, g.rank(), ki));
      }
    }
  }
}

TEST(PfChain, ScaledAbelianAndHeisenberg) {
  PrimeContext c(5, 2);
  auto a = abelian(c, 2);
  FiltrationChain ch{{Submodule::whole(c, 2), Submodule::whole(c, 2).scaled(5), Submodule(c, 2)}};
  EXPECT_TRUE(verify_pf_chain(a, ch).ok);

  auto h = heisenberg_gen(c, 1);
  Submodule n1 = Submodule::whole(c, 3);
  Submodule n2 = span(c, 3, {{5, 0, 0}, {0, 5, 0}, {0, 0, 1}});
  FiltrationChain hc{{n1, n2, n1.scaled(5), n2.scaled(5), n1.scaled(25)}};
  auto r = verify_pf_chain(h, hc);
  EXPECT_TRUE(r.ok) << r.message;
}

TEST(PfChain, ConditionFourWitness) {
  PrimeContext c(5, 2);
  auto h = heisenberg_gen(c, 1);
  Submodule n1 = Submodule::whole(c, 3);
  FiltrationChain bad{{n1, n1.scaled(5), Submodule(c, 3)}};
  auto r = verify_pf_chain(h, bad);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.condition, "iv");
  EXPECT_EQ(r.index, 1);
  EXPECT_FALSE(n1.scaled(5).contains(r.witness));
}

TEST(PfChain, NonIdealMemberIsMalformed) {
  PrimeContext c(5, 2);
  auto h = heisenberg_gen(c, 1);
  FiltrationChain bad{{Submodule::whole(c, 3), span(c, 3, {{1, 0, 0}})}};
  try {
    verify_pf_chain(h, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedChain);
  }
}

TEST(PfChain, CanonicalChainOfSmallClassPasses) {
  for (auto [p, k] : {std::pair{5, 2}, {7, 2}, {5, 3}}) {
    PrimeContext c(p, k);
    for (const auto& g : nilpotent_corpus(c)) {
      auto r = verify_pf_chain(g, canonical_filtration(g));
      EXPECT_TRUE(r.ok) << g.name() << ": " << r.message;
    }
  }
}

TEST(Adjoint, JacobiInOperatorForm) {
  std::mt19937_64 rng(2);
  PrimeContext c(7, 2);
  std::vector<LieAlgebra> algebras = nilpotent_corpus(c);
  algebras.push_back(solvable_px(c));
  for (const auto& g : algebras) {
    std::uniform_int_distribution<Scalar> coef(0, c.modulus() - 1);
    Vector x(g.rank()), y(g.rank());
    for (Index i = 0; i < g.rank(); ++i) {
      x[i] = coef(rng);
      y[i] = coef(rng);
    }
    Matrix ax = adjoint(g, x), ay = adjoint(g, y);
    EXPECT_EQ(adjoint(g, g.bracket(x, y)), reduced(c, Matrix(multiply(c, ax, ay) - multiply(c, ay, ax)))) << g.name();
    EXPECT_EQ(multiply(c, ax, y), g.bracket(x, y));
  }
  auto h = heisenberg_gen(c, 1);
  Matrix e = adjoint(h, h.basis_vector(0));
  Matrix expect = Matrix::Zero(3, 3);
  expect(2, 1) = 1;
  EXPECT_EQ(e, expect);
  EXPECT_TRUE(adjoint(h, Vector::Zero(3)).isZero());
  auto s = solvable_px(c);
  EXPECT_EQ(adjoint(s, s.basis_vector(0))(1, 1), 7);
}
