#include <functional>
#include <map>
#include <mutex>

#include "lazard/bch.hpp"

namespace lazard {

namespace {

Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Word coefficients of the degree-n part of log(exp X exp Y):
//   sum over k and blocks (r_i, s_i), r_i + s_i >= 1, sum = n, of
//   (-1)^{k-1} / k * prod 1 / (r_i! s_i!) * X^{r_1} Y^{s_1} ... X^{r_k} Y^{s_k}.
WordPolynomial log_exp_words(int n) {
  WordPolynomial out(2, n);
  std::vector<Rational> inv_fact(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) inv_fact[i] = Rational(1) / factorial(i);
  std::function<void(int, std::size_t, int, const Rational&)> rec =
      [&](int remaining, std::size_t code, int blocks, const Rational& weight) {
        if (remaining == 0) {
          Rational c = weight / blocks;
          if (blocks % 2 == 0) c = -c;
          out.coeff[code] += c;
          return;
        }
        for (int r = 0; r <= remaining; ++r)
          for (int s = 0; r + s <= remaining; ++s) {
            if (r + s == 0) continue;
            std::size_t next = code;
            for (int i = 0; i < r; ++i) next = next * 2;
            for (int i = 0; i < s; ++i) next = next * 2 + 1;
            rec(remaining - r - s, next, blocks + 1, weight * inv_fact[r] * inv_fact[s]);
          }
      };
  rec(n, 0, 0, Rational(1));
  return out;
}

// Right-nested bracketing [w_1, [w_2, [..., w_n]]] of every word, linearly.
WordPolynomial right_nested(const WordPolynomial& p) {
  const int n = p.degree;
  WordPolynomial out(2, n);
  for (std::size_t code = 0; code < p.coeff.size(); ++code) {
    if (p.coeff[code] == 0) continue;
    std::vector<int> letters(static_cast<std::size_t>(n));
    std::size_t c = code;
    for (int i = n - 1; i >= 0; --i) {
      letters[i] = static_cast<int>(c % 2);
      c /= 2;
    }
    WordPolynomial acc = WordPolynomial::letter(2, letters[n - 1]);
    for (int i = n - 2; i >= 0; --i) acc = commutator(WordPolynomial::letter(2, letters[i]), acc);
    acc *= p.coeff[code];
    out += acc;
  }
  return out;
}

const std::vector<Rational>& cached_dynkin(int max_degree) {
  static std::mutex mutex;
  static std::map<int, std::vector<Rational>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(max_degree);
  if (it == cache.end()) it = cache.emplace(max_degree, dynkin_series(HallBasis(2, max_degree))).first;
  return it->second;
}

}  // namespace

std::vector<Rational> dynkin_series(const HallBasis& basis) {
  if (basis.generators() != 2)
    throw Error(ErrorKind::InvalidArgument, "the BCH series lives in the free Lie algebra on X, Y");
  std::vector<Rational> coeffs(static_cast<std::size_t>(basis.size()), Rational(0));
  coeffs[0] = 1;
  coeffs[1] = 1;
  for (int n = 2; n <= basis.max_degree(); ++n) {
    WordPolynomial phi = right_nested(log_exp_words(n));
    phi *= Rational(1, n);
    std::vector<Rational> coords = hall_coordinates(basis, phi);
    std::vector<Index> elems = basis.of_degree(n);
    for (std::size_t i = 0; i < elems.size(); ++i) coeffs[elems[i]] = coords[i];
  }
  return coeffs;
}

BchTable::BchTable(const PrimeContext& ctx, int max_degree)
    : ctx_(ctx), basis_(2, max_degree), coefficients_(cached_dynkin(max_degree)) {
  using boost::multiprecision::cpp_int;
  residues_.assign(coefficients_.size(), 0);
  for (Index i = 0; i < basis_.size(); ++i) {
    const Rational& c = coefficients_[i];
    if (c == 0) continue;
    const cpp_int num = boost::multiprecision::numerator(c);
    const cpp_int den = boost::multiprecision::denominator(c);
    const Scalar m = ctx.modulus();
    Scalar n_mod = static_cast<Scalar>(((num % m) + m) % m);
    Scalar d_mod = static_cast<Scalar>(den % m);
    if (d_mod % ctx.p() == 0)
      throw Error(ErrorKind::DegreeTooHigh, "BCH denominator divisible by p at degree " +
                                                std::to_string(basis_[i].degree));
    residues_[i] = ctx.mul(n_mod, unit_inverse(ctx, d_mod));
    terms_.push_back({i, basis_[i].degree, basis_.word(i), c, residues_[i]});
  }
}

Vector BchTable::evaluate(const LieAlgebra& g, const Vector& x, const Vector& y,
                          int max_degree) const {
  const auto& ctx = g.context();
  if (ctx != ctx_) throw Error(ErrorKind::InvalidArgument, "BCH table built for another ring");
  std::vector<Vector> value(static_cast<std::size_t>(basis_.size()));
  Vector out = Vector::Zero(g.rank());
  for (Index i = 0; i < basis_.size(); ++i) {
    const HallElement& e = basis_[i];
    if (e.degree > max_degree) break;
    if (e.letter == 0)
      value[i] = reduced(ctx, x);
    else if (e.letter == 1)
      value[i] = reduced(ctx, y);
    else
      value[i] = g.bracket(value[e.left], value[e.right]);
    if (residues_[i] != 0) out = reduced(ctx, Vector(out + residues_[i] * value[i]));
  }
  return out;
}

BchTable bch_table(const PrimeContext& ctx, int max_degree) {
  if (max_degree < 1) throw Error(ErrorKind::InvalidArgument, "BCH degree must be >= 1");
  if (max_degree > ctx.p() - 1)
    throw Error(ErrorKind::DegreeTooHigh, "degree exceeds p-1: " + std::to_string(max_degree));
  return BchTable(ctx, max_degree);
}

namespace {

const BchTable& cached_table(const PrimeContext& ctx) {
  static std::mutex mutex;
  static std::map<std::pair<Scalar, int>, BchTable> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(ctx.p(), ctx.k());
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, bch_table(ctx, static_cast<int>(ctx.p() - 1))).first;
  return it->second;
}

int class_below_p(const LieAlgebra& g) {
  std::optional<int> c = nilpotency_class(g);
  if (!c || *c >= g.context().p())
    throw Error(ErrorKind::ClassTooLarge,
                "class >= p: the lower central series does not vanish at step p mod p^k");
  return *c;
}

}  // namespace

Vector group_mul(const LieAlgebra& g, const Vector& x, const Vector& y) {
  if (x.size() != g.rank() || y.size() != g.rank())
    throw Error(ErrorKind::DimensionMismatch, "group_mul arguments must have length rank");
  const int c = class_below_p(g);
  return cached_table(g.context()).evaluate(g, x, y, std::max(c, 1));
}

Vector group_inverse(const LieAlgebra& g, const Vector& x) {
  (void)class_below_p(g);
  return reduced(g.context(), Vector(-x));
}

Vector group_pow(const LieAlgebra& g, const Vector& x, Scalar lambda) {
  (void)class_below_p(g);
  return reduced(g.context(), Vector(g.context().reduce(lambda) * reduced(g.context(), x)));
}

}  // namespace lazard
