// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "lazard/cli.hpp"
#include "lazard/corpus.hpp"
#include "lazard/io.hpp"
#include "lazard/lhs.hpp"
#include "oracles.hpp"

using namespace lazard;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<LieAlgebra> main_corpus() {
  std::vector<LieAlgebra> out;
  for (Scalar p : {5, 7}) {
    PrimeContext c(p, 2);
    for (int n = 1; n <= 6; ++n) out.push_back(abelian(c, n));
    for (int n = 1; n <= 2; ++n) out.push_back(heisenberg_gen(c, n));
    for (int n = 2; n <= 5; ++n) out.push_back(filiform(c, n));
    out.push_back(ut(c, 4));
    if (p == 7) out.push_back(ut(c, 5));
    out.push_back(solvable_px(c));
  }
  return out;
}

std::string label(const LieAlgebra& g) {
  return g.name() + " p=" + std::to_string(g.context().p()) + " k=" + std::to_string(g.context().k());
}

Index power_of(Scalar p, Index e) {
  Index out = 1;
  while (e-- > 0) out *= p;
  return out;
}

Vector random_vector(Index n, Scalar modulus, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> coef(0, modulus - 1);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = coef(rng);
  return v;
}

// Kernel of the functional H^2 -> H^3, a -> x ⌣ a, for a two-dimensional H^2.
Vector annihilator(const CochainComplex& c, const CohomologySpace& h1, const Vector& x, const CohomologySpace& h2,
                   const CohomologySpace& h3) {
  const PrimeContext& f = c.context();
  const Scalar a = cup_product(c, h1, x, h2, Vector::Unit(2, 0), h3)[0];
  const Scalar b = cup_product(c, h1, x, h2, Vector::Unit(2, 1), h3)[0];
  Vector v(2);
  if (b == 0)
    v << 0, 1;
  else
    v << 1, f.neg(f.mul(a, unit_inverse(f, b)));
  return v;
}

Check heisenberg_reproduction() {
  Check r;
  for (Scalar p : {5, 7, 11}) {
    std::ostringstream out, err;
    const int status = run({"compare", "--algebra", "heisenberg_gen(1)", "--p", std::to_string(p), "--k", "2"}, out, err);
    const Json doc = Json::parse(out.str());
    const Json expected = Json::parse("[1,2,2,1]");
    r.require(status == kExitPass && doc["group"] == expected && doc["lie"] == expected && doc["direct"] == expected,
              "compare columns at p=" + std::to_string(p));

    const PrimeContext f(p, 1);
    const auto c = ce_complex(reduce_mod_p(heisenberg_gen(PrimeContext(p, 2), 1)));
    const auto h1 = cocycle_representatives(c, 1), h2 = cocycle_representatives(c, 2),
               h3 = cocycle_representatives(c, 3);
    const Vector x = Vector::Unit(2, 0), y = Vector::Unit(2, 1);
    const Vector X = annihilator(c, h1, x, h2, h3), Y = annihilator(c, h1, y, h2, h3);
    Matrix xy(2, 2);
    xy << X, Y;
    r.require(oracle::rank(xy, p) == 2, "X, Y do not span H^2");
    r.require(cup_product(c, h1, x, h1, y, h2).isZero(), "x y != 0");
    r.require(cup_product(c, h1, x, h2, X, h3).isZero(), "x X != 0");
    r.require(cup_product(c, h1, y, h2, Y, h3).isZero(), "y Y != 0");
    r.require(cup_product(c, h2, X, h2, Y, h3).size() == 0, "X Y lands below the top degree");
    const Vector xY = cup_product(c, h1, x, h2, Y, h3), yX = cup_product(c, h1, y, h2, X, h3);
    r.require(xY[0] != 0 && yX[0] != 0, "x Y or y X vanishes");
  }
  return r;
}

Check main_theorem_suite() {
  Check r;
  for (const auto& g : main_corpus()) {
    const auto rep = main_theorem_check(g);
    r.require(rep.pass && rep.group == rep.direct && rep.lie == rep.direct, "mismatch on " + label(g));
  }
  return r;
}

Check lemma_abelian_suite() {
  Check r;
  std::mt19937_64 rng(20240601);
  for (Scalar p : {5, 7}) {
    const PrimeContext f(p, 1);
    for (Index n = 2; n <= 12; ++n)
      for (int t = 0; t < 200; ++t) {
        const auto sample = oracle::random_unipotent(n, p, rng);
        const LinearOperator u{f, sample.u};
        const LinearOperator log = truncated_log(u);
        const std::string where = " (p=" + std::to_string(p) + ", dim " + std::to_string(n) + ")";
        r.require(lemma_abelian_check(u), "lemma" + where);
        r.require(invariants_dim(u, Side::group) == invariants_dim(log, Side::lie), "invariants" + where);
        r.require(coinvariants_dim(u, Side::group) == coinvariants_dim(log, Side::lie), "coinvariants" + where);
        r.require(truncated_exp(log) == u, "exp(log U) != U" + where);
      }
  }
  return r;
}

Check ce_correctness() {
  Check r;
  auto check = [&](const LieAlgebra& g, bool nilpotent) {
    const auto c = ce_complex(g);
    for (int n = 0; n + 1 <= c.top_degree(); ++n)
      r.require((c.differential(n + 1) * c.differential(n)).is_zero(), "d d != 0 on " + label(g));
    const auto b = betti(c);
    r.require(euler_characteristic(b) == 0, "Euler characteristic on " + label(g));
    if (nilpotent)
      for (std::size_t n = 0; n < b.size(); ++n)
        r.require(b[n] == b[b.size() - 1 - n], "Poincare duality on " + label(g));
  };
  for (const auto& g : main_corpus()) {
    const auto gbar = reduce_mod_p(g);
    check(gbar, nilpotency_class(gbar).has_value());
  }
  std::mt19937_64 rng(77);
  const PrimeContext f(5, 1);
  const auto u5 = ut(f, 5);
  for (int t = 0; t < 50; ++t) {
    const auto g = oracle::random_ut_subalgebra(u5, 2 + t % 3, rng);
    r.require(!validate(g), "random subalgebra violates Jacobi");
    check(g, true);
  }
  return r;
}

Check bch_certification() {
  Check r;
  for (Scalar p : {5, 7}) {
    const int D = static_cast<int>(p) - 1;
    const auto table = bch_table(PrimeContext(p, 1), D);
    oracle::Poly assembled;
    for (Index e = 0; e < table.basis().size(); ++e)
      if (table.coefficients()[e] != 0)
        assembled = oracle::add(assembled, oracle::expand_hall(table.basis(), e), table.coefficients()[e]);
    r.require(assembled == oracle::bch_words(D), "table differs from exp/log expansion at p=" + std::to_string(p));
    for (const auto& t : table.terms()) {
      r.require(boost::multiprecision::denominator(t.coefficient) % p != 0, "denominator divisible by p");
      if (t.degree == 2) r.require(t.coefficient == Rational(1, 2), "degree-2 coefficient is not 1/2");
    }
  }
  std::mt19937_64 rng(5);
  for (const auto& g : main_corpus()) {
    if (!nilpotency_class(g)) continue;
    const Scalar m = g.context().modulus();
    for (int t = 0; t < 50; ++t) {
      const Vector x = random_vector(g.rank(), m, rng), y = random_vector(g.rank(), m, rng),
                   z = random_vector(g.rank(), m, rng);
      r.require(group_mul(g, group_mul(g, x, y), z) == group_mul(g, x, group_mul(g, y, z)),
                "associativity on " + label(g));
    }
  }
  return r;
}

Check dim_one_base_cases() {
  Check r;
  std::mt19937_64 rng(11);
  for (Scalar p : {5, 7}) {
    const PrimeContext f(p, 1);
    std::uniform_int_distribution<Scalar> coef(0, p - 1);
    std::uniform_int_distribution<Index> dim(1, 6);
    for (int t = 0; t < 20; ++t) {
      const Index n = dim(rng);
      // Lie side: V with an arbitrary endomorphism S
      Matrix s(n, n);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) s(i, j) = coef(rng) * (coef(rng) % 2);
      const auto b = betti(abelian(f, 1), LieModule(f, {s}));
      const Index rs = oracle::rank(s, p);
      r.require(b.size() == 2, "rank-one complex has cochains above degree 1");
      r.require(power_of(p, b[0]) == oracle::count_kernel(s, p), "Lie H^0 != V^g");
      r.require(b[1] == n - rs, "Lie H^1 != V/SV");
      r.require(invariants_dim({f, s}, Side::lie) == b[0] && coinvariants_dim({f, s}, Side::lie) == b[1],
                "Lie page entries");

      // group side: V with a unipotent generator sigma
      const auto u = oracle::random_unipotent(n, p, rng);
      const Matrix shifted = u.u - Matrix::Identity(n, n);
      r.require(power_of(p, invariants_dim({f, u.u}, Side::group)) == oracle::count_kernel(shifted, p), "group H^0 != V^G");
      r.require(coinvariants_dim({f, u.u}, Side::group) == n - oracle::rank(shifted, p), "group H^1 != V/(s-1)V");
    }
  }
  // H^{>=2} vanishes: a rank-one extension page has two columns only
  const auto g = solvable_px(PrimeContext(5, 2));
  Matrix k(1, 2);
  k << 0, 1;
  for (Side side : {Side::group, Side::lie}) {
    const auto page = two_column_page(g, k, g.basis_vector(0), side);
    for (int s = 0; s <= 1; ++s) r.require(page.entry(2, s) == 0, "E^{2,s} nonzero");
  }
  return r;
}

Check eckmann_shapiro() {
  Check r;
  for (int k : {2, 3}) {
    for (const auto& g0 : main_corpus()) {
      const auto g = g0.context().k() == k ? g0 : corpus(g0.name(), g0.context().with_precision(k));
      r.require(eckmann_shapiro_check(g), "Eckmann-Shapiro on " + label(g));
      const auto uct = universal_coefficient_check(g);
      r.require(uct.ok, "universal coefficients on " + label(g));
      const auto h = integral_cohomology(g);
      // torsion in H^n comes from the kernel of d^n and the cokernel of d^{n-1}
      for (std::size_t n = 0; n < h.size(); ++n) {
        const Index t = uct.torsion_from_differential[n] + (n ? uct.torsion_from_differential[n - 1] : 0);
        r.require(h[n].free_rank == uct.free_part[n] && static_cast<Index>(h[n].torsion.size()) == t &&
                      static_cast<Index>(h[n].summands.size()) == uct.betti_mod_p[n],
                  "integral cohomology disagrees with Smith profile on " + label(g));
      }
    }
  }
  return r;
}

Check scale() {
  Check r;
  using clock = std::chrono::steady_clock;
  auto timed = [&](const LieAlgebra& g, double limit) {
    const auto t0 = clock::now();
    const auto b = betti(g);
    const double s = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("       %s rank %ld: %.3f s (limit %.0f s)\n", g.name().c_str(), static_cast<long>(g.rank()), s, limit);
    r.require(s < limit, g.name() + " too slow");
    r.require(euler_characteristic(b) == 0, g.name() + " Euler characteristic");
  };
  const PrimeContext f(5, 1);
  timed(ut(f, 5), 5.0);
  timed(filiform(f, 14), 120.0);
  // strictly upper triangular 6 x 6 without E_12: a rank-14 ideal
  const auto u6 = ut(PrimeContext(7, 1), 6);
  auto ideal = subalgebra(u6, Matrix::Identity(15, 15).bottomRows(14));
  ideal.set_name("ut(6) without E_12");
  timed(ideal, 120.0);
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    const char* tolerance;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"Heisenberg reproduction", "exact, < 1 s", heisenberg_reproduction},
      {"Main-theorem suite", "exact, < 30 s", main_theorem_suite},
      {"Lemma-abelian property suite", "exact", lemma_abelian_suite},
      {"CE correctness", "exact", ce_correctness},
      {"BCH certification", "exact", bch_certification},
      {"Dim-one base cases", "exact", dim_one_base_cases},
      {"Eckmann-Shapiro cross-check", "exact", eckmann_shapiro},
      {"Scale/runtime", "rank 10 < 5 s, rank 14 < 120 s", scale},
  };
  const double limits[] = {1.0, 30.0, 0, 0, 0, 0, 0, 0};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limits[i] > 0 && s >= limits[i]) c.require(false, "exceeded time limit");
    std::printf("%s [%zu] %s (%s): %.2f s%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                criteria[i].tolerance, s, c.ok ? "" : " - ", c.detail.c_str());
    std::fflush(stdout);
    failures += !c.ok;
  }
  return failures == 0 ? 0 : 1;
}
