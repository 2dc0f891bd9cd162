#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>

#include "lazard/cohomology.hpp"

namespace lazard {

Index binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Index r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Mask> subsets(int r, int n) {
  std::vector<Mask> out;
  if (n < 0 || n > r) return out;
  if (n == 0) return {0};
  Mask s = (Mask{1} << n) - 1;
  const Mask limit = Mask{1} << r;
  while (s < limit) {
    out.push_back(s);
    // Gosper's hack: next larger integer with the same popcount
    Mask c = s & (~s + 1);
    Mask t = s + c;
    s = (((t ^ s) >> 2) / c) | t;
    if (t == 0) break;
  }
  return out;
}

Index subset_rank(Mask s) {
  Index rank = 0;
  int i = 1;
  while (s) {
    int b = std::countr_zero(s);
    rank += binomial(b, i++);
    s &= s - 1;
  }
  return rank;
}

// ---------------------------------------------------------------------------

LieModule::LieModule(const PrimeContext& ctx, std::vector<Matrix> action)
    : ctx_(ctx), dim_(action.empty() ? 0 : action.front().rows()), action_(std::move(action)) {
  for (auto& a : action_) {
    if (a.rows() != dim_ || a.cols() != dim_)
      throw Error(ErrorKind::DimensionMismatch, "module action matrices must be square of one size");
    a = reduced(ctx_, a);
  }
}

LieModule LieModule::trivial(const PrimeContext& ctx, Index algebra_rank, Index dim) {
  LieModule m(ctx, std::vector<Matrix>(static_cast<std::size_t>(algebra_rank), Matrix::Zero(dim, dim)));
  m.dim_ = dim;
  return m;
}

bool LieModule::is_trivial() const {
  for (const auto& a : action_)
    if (!a.isZero()) return false;
  return true;
}

std::optional<ModuleViolation> validate(const LieAlgebra& g, const LieModule& v) {
  if (v.algebra_rank() != g.rank())
    throw Error(ErrorKind::DimensionMismatch, "module has the wrong number of action matrices");
  const auto& ctx = v.context();
  for (Index i = 0; i < g.rank(); ++i)
    for (Index j = i + 1; j < g.rank(); ++j) {
      Matrix lhs = Matrix::Zero(v.dim(), v.dim());
      const Vector& c = g.structure(i, j);
      for (Index m = 0; m < g.rank(); ++m)
        if (Scalar cm = ctx.reduce(c[m]); cm) lhs = reduced(ctx, Matrix(lhs + cm * v.action(m)));
      Matrix rhs = multiply(ctx, v.action(i), v.action(j)) - multiply(ctx, v.action(j), v.action(i));
      Matrix res = reduced(ctx, Matrix(lhs - rhs));
      if (!res.isZero()) return ModuleViolation{i, j, res};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

CochainComplex::CochainComplex(LieAlgebra g, LieModule v, std::vector<ModMatrix> differentials)
    : g_(std::move(g)), v_(std::move(v)), d_(std::move(differentials)) {}

Index CochainComplex::cochain_dim(int n) const {
  return binomial(static_cast<int>(g_.rank()), n) * v_.dim();
}

ModMatrix ce_differential(const LieAlgebra& g, const LieModule& v, int n) {
  const PrimeContext& ctx = g.context();
  const int r = static_cast<int>(g.rank());
  const Index d = v.dim();
  const Index rows = binomial(r, n + 1) * d, cols = binomial(r, n) * d;
  std::vector<ModMatrix::Triplet> t;
  if (n >= r) return ModMatrix(ctx, rows, cols);
  const bool trivial = v.is_trivial();
  std::vector<int> elems;
  for (Mask s : subsets(r, n + 1)) {
    const Index row_base = subset_rank(s) * d;
    elems.clear();
    for (Mask x = s; x; x &= x - 1) elems.push_back(std::countr_zero(x));
    const int len = static_cast<int>(elems.size());
    if (!trivial) {
      for (int i = 0; i < len; ++i) {
        const Mask rest = s & ~(Mask{1} << elems[i]);
        const Index col_base = subset_rank(rest) * d;
        const Matrix& rho = v.action(elems[i]);
        const Scalar sign = (i % 2) ? -1 : 1;
        for (Index a = 0; a < d; ++a)
          for (Index b = 0; b < d; ++b)
            if (rho(a, b))
              t.emplace_back(static_cast<int>(row_base + a), static_cast<int>(col_base + b),
                             ctx.reduce(sign * rho(a, b)));
      }
    }
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j) {
        const Mask rest = s & ~(Mask{1} << elems[i]) & ~(Mask{1} << elems[j]);
        const Vector& br = g.structure(elems[i], elems[j]);
        const Scalar sign = ((i + j) % 2) ? -1 : 1;
        for (int m = 0; m < r; ++m) {
          const Scalar c = ctx.reduce(br[m]);
          if (c == 0 || (rest >> m & 1u)) continue;
          const int below = std::popcount(rest & ((Mask{1} << m) - 1));
          const Scalar s2 = (below % 2) ? -sign : sign;
          const Index col_base = subset_rank(rest | (Mask{1} << m)) * d;
          for (Index a = 0; a < d; ++a)
            t.emplace_back(static_cast<int>(row_base + a), static_cast<int>(col_base + a),
                           ctx.reduce(s2 * c));
        }
      }
  }
  return ModMatrix::from_triplets(ctx, rows, cols, t);
}

CochainComplex ce_complex(const LieAlgebra& g, const LieModule& v) {
  if (g.rank() > 24) throw Error(ErrorKind::InvalidArgument, "rank too large for bitmask indexing");
  if (v.context() != g.context())
    throw Error(ErrorKind::InvalidArgument, "module and algebra live over different rings");
  if (auto bad = validate(g, v))
    throw Error(ErrorKind::ModuleAxiom, "module axiom fails for basis pair (" +
                                            std::to_string(bad->i + 1) + ", " +
                                            std::to_string(bad->j + 1) + ")");
  const int r = static_cast<int>(g.rank());
  std::vector<ModMatrix> d;
  for (int n = 0; n <= r; ++n) d.push_back(ce_differential(g, v, n));
  for (int n = 0; n + 1 < r; ++n)
    if (!(d[n + 1] * d[n]).is_zero())
      throw Error(ErrorKind::InvalidArgument, "d o d != 0 in degree " + std::to_string(n) +
                                                  " (Jacobi identity fails?)");
  return CochainComplex(g, v, std::move(d));
}

CochainComplex ce_complex(const LieAlgebra& g) {
  return ce_complex(g, LieModule::trivial(g.context(), g.rank()));
}

namespace {

unsigned thread_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LAZARD_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return hw;
}

}  // namespace

std::vector<Index> betti(const CochainComplex& complex) {
  if (!complex.context().is_field())
    throw Error(ErrorKind::InvalidArgument, "betti needs a GF(p) complex; reduce mod p first");
  const int r = complex.top_degree();
  std::vector<Index> ranks(static_cast<std::size_t>(r + 1), 0);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int n; (n = next++) <= r;)
      ranks[n] = complex.differential(n).is_zero() ? 0 : rank(complex.differential(n));
  };
  const unsigned threads = std::min<unsigned>(thread_cap(), static_cast<unsigned>(r + 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  std::vector<Index> b(static_cast<std::size_t>(r + 1));
  for (int n = 0; n <= r; ++n) b[n] = complex.cochain_dim(n) - ranks[n] - (n > 0 ? ranks[n - 1] : 0);
  return b;
}

std::vector<Index> betti(const LieAlgebra& g, const LieModule& v) { return betti(ce_complex(g, v)); }

std::vector<Index> betti(const LieAlgebra& g) { return betti(ce_complex(g)); }

Index euler_characteristic(const std::vector<Index>& b) {
  Index e = 0;
  for (std::size_t n = 0; n < b.size(); ++n) e += (n % 2 ? -1 : 1) * b[n];
  return e;
}

}  // namespace lazard
