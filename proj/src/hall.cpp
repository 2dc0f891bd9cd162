#include <map>
#include <mutex>

#include "lazard/bch.hpp"

namespace lazard {

namespace {

int moebius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Index int_pow(Index b, int e) {
  Index r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

Index witt_dimension(int generators, int degree) {
  Index sum = 0;
  for (int d = 1; d <= degree; ++d)
    if (degree % d == 0) sum += moebius(d) * int_pow(generators, degree / d);
  return sum / degree;
}

HallBasis::HallBasis(int generators, int max_degree)
    : generators_(generators), max_degree_(max_degree) {
  if (generators < 1 || max_degree < 1)
    throw Error(ErrorKind::InvalidArgument, "Hall basis needs m >= 1 and D >= 1");
  for (int a = 0; a < generators; ++a) elements_.push_back({1, a, -1, -1});
  for (int n = 2; n <= max_degree; ++n) {
    const Index before = size();
    for (Index v = 0; v < before; ++v) {
      const HallElement ev = elements_[v];
      for (Index u = 0; u < v; ++u) {
        if (elements_[u].degree + ev.degree != n) continue;
        if (ev.letter < 0 && ev.left > u) continue;
        elements_.push_back({n, -1, u, v});
      }
    }
  }
}

HallBasis hall_basis(int generators, int max_degree) { return HallBasis(generators, max_degree); }

Index HallBasis::count(int degree) const {
  Index c = 0;
  for (const auto& e : elements_) c += e.degree == degree;
  return c;
}

std::vector<Index> HallBasis::of_degree(int degree) const {
  std::vector<Index> out;
  for (Index i = 0; i < size(); ++i)
    if (elements_[i].degree == degree) out.push_back(i);
  return out;
}

std::string HallBasis::word(Index i) const {
  const HallElement& e = elements_[i];
  if (e.letter >= 0) return std::string(1, static_cast<char>('X' + e.letter));
  return "[" + word(e.left) + "," + word(e.right) + "]";
}

// ---------------------------------------------------------------------------

WordPolynomial::WordPolynomial(int letters_, int degree_)
    : letters(letters_), degree(degree_),
      coeff(static_cast<std::size_t>(int_pow(letters_, degree_)), Rational(0)) {}

WordPolynomial WordPolynomial::letter(int letters, int which) {
  WordPolynomial w(letters, 1);
  w.coeff[which] = 1;
  return w;
}

WordPolynomial& WordPolynomial::operator+=(const WordPolynomial& o) {
  if (o.degree != degree || o.letters != letters)
    throw Error(ErrorKind::DimensionMismatch, "adding polynomials of different degree");
  for (std::size_t i = 0; i < coeff.size(); ++i)
    if (o.coeff[i] != 0) coeff[i] += o.coeff[i];
  return *this;
}

WordPolynomial& WordPolynomial::operator*=(const Rational& c) {
  for (auto& x : coeff)
    if (x != 0) x *= c;
  return *this;
}

bool WordPolynomial::is_zero() const {
  for (const auto& x : coeff)
    if (x != 0) return false;
  return true;
}

WordPolynomial product(const WordPolynomial& a, const WordPolynomial& b) {
  WordPolynomial out(a.letters, a.degree + b.degree);
  const std::size_t shift = static_cast<std::size_t>(int_pow(a.letters, b.degree));
  for (std::size_t i = 0; i < a.coeff.size(); ++i) {
    if (a.coeff[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeff.size(); ++j)
      if (b.coeff[j] != 0) out.coeff[i * shift + j] += a.coeff[i] * b.coeff[j];
  }
  return out;
}

WordPolynomial commutator(const WordPolynomial& a, const WordPolynomial& b) {
  WordPolynomial ab = product(a, b);
  WordPolynomial ba = product(b, a);
  ba *= Rational(-1);
  ab += ba;
  return ab;
}

WordPolynomial expand(const HallBasis& basis, Index element) {
  const HallElement& e = basis[element];
  if (e.letter >= 0) return WordPolynomial::letter(basis.generators(), e.letter);
  return commutator(expand(basis, e.left), expand(basis, e.right));
}

namespace {

struct Projection {
  std::vector<Index> elements;     // Hall elements of this degree
  std::vector<std::size_t> rows;   // chosen word indices, square system
  std::vector<std::vector<Rational>> inverse;  // inverse of the square system
  std::vector<WordPolynomial> expansions;
};

Projection build_projection(const HallBasis& basis, int degree) {
  Projection pr;
  pr.elements = basis.of_degree(degree);
  const std::size_t h = pr.elements.size();
  for (Index e : pr.elements) pr.expansions.push_back(expand(basis, e));
  const std::size_t words = pr.expansions.empty() ? 0 : pr.expansions[0].coeff.size();

  // Pick h independent word rows by elimination mod a large prime; a system
  // that is invertible mod q is invertible over Q.
  constexpr std::int64_t q = 2147483647;
  auto modq = [&](const Rational& r) {
    std::int64_t v = static_cast<std::int64_t>(boost::multiprecision::numerator(r) % q);
    return v < 0 ? v + q : v;
  };
  auto inv_q = [&](std::int64_t a) {
    std::int64_t r = 1, b = a, e = q - 2;
    while (e) {
      if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % q);
      b = static_cast<std::int64_t>((__int128)b * b % q);
      e >>= 1;
    }
    return r;
  };
  std::vector<std::vector<std::int64_t>> basis_rows;  // reduced rows (length h) with pivots
  std::vector<std::size_t> pivot_col;
  for (std::size_t w = 0; w < words && pr.rows.size() < h; ++w) {
    std::vector<std::int64_t> row(h);
    bool nonzero = false;
    for (std::size_t c = 0; c < h; ++c) {
      row[c] = modq(pr.expansions[c].coeff[w]);
      nonzero |= row[c] != 0;
    }
    if (!nonzero) continue;
    for (std::size_t r = 0; r < basis_rows.size(); ++r) {
      const std::int64_t f = row[pivot_col[r]];
      if (!f) continue;
      for (std::size_t c = 0; c < h; ++c)
        row[c] = static_cast<std::int64_t>(((__int128)row[c] - (__int128)f * basis_rows[r][c]) % q + q) % q;
    }
    std::size_t lead = h;
    for (std::size_t c = 0; c < h; ++c)
      if (row[c]) {
        lead = c;
        break;
      }
    if (lead == h) continue;
    const std::int64_t inv = inv_q(row[lead]);
    for (auto& x : row) x = static_cast<std::int64_t>((__int128)x * inv % q);
    basis_rows.push_back(std::move(row));
    pivot_col.push_back(lead);
    pr.rows.push_back(w);
  }
  if (pr.rows.size() != h)
    throw Error(ErrorKind::InvalidArgument, "Hall expansions are not independent");

  // invert the h x h rational system A[i][c] = expansion_c(word rows[i])
  std::vector<std::vector<Rational>> a(h, std::vector<Rational>(2 * h, Rational(0)));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t c = 0; c < h; ++c) a[i][c] = pr.expansions[c].coeff[pr.rows[i]];
    a[i][h + i] = 1;
  }
  for (std::size_t c = 0; c < h; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    const Rational inv = Rational(1) / a[c][c];
    for (auto& x : a[c])
      if (x != 0) x *= inv;
    for (std::size_t r = 0; r < h; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t t = c; t < 2 * h; ++t)
        if (a[c][t] != 0) a[r][t] -= f * a[c][t];
    }
  }
  pr.inverse.assign(h, std::vector<Rational>(h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) pr.inverse[i][j] = a[i][h + j];
  return pr;
}

const Projection& cached_projection(const HallBasis& basis, int degree) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, Projection> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(basis.generators(), degree);
  auto it = cache.find(key);
  if (it == cache.end()) {
    // the projection depends only on (m, degree); rebuild in a basis of
    // exactly that degree so element numbering is local
    it = cache.emplace(key, build_projection(HallBasis(basis.generators(), degree), degree)).first;
  }
  return it->second;
}

}  // namespace

std::vector<Rational> hall_coordinates(const HallBasis& basis, const WordPolynomial& lie_element) {
  const int degree = lie_element.degree;
  if (degree < 1 || degree > basis.max_degree())
    throw Error(ErrorKind::InvalidArgument, "degree outside the Hall basis range");
  const Projection& pr = cached_projection(basis, degree);
  const std::size_t h = pr.elements.size();
  std::vector<Rational> coords(h, Rational(0));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      if (pr.inverse[i][j] != 0) coords[i] += pr.inverse[i][j] * lie_element.coeff[pr.rows[j]];
  // the remaining words must agree as well
  WordPolynomial check(lie_element.letters, degree);
  for (std::size_t i = 0; i < h; ++i) {
    if (coords[i] == 0) continue;
    WordPolynomial term = pr.expansions[i];
    term *= coords[i];
    check += term;
  }
  if (check.coeff != lie_element.coeff)
    throw Error(ErrorKind::InvalidArgument, "polynomial is not a Lie element");
  return coords;
}

}  // namespace lazard
