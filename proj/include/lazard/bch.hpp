#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lazard/liecore.hpp"
#include "lazard/modarith.hpp"

namespace lazard {

using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------- Hall basis

struct HallElement {
  int degree = 1;
  int letter = -1;  // >= 0 for generators
  Index left = -1, right = -1;
};

/// Hall basis of the free Lie algebra on m generators up to degree D.
///
/// Elements are ordered by degree; within a degree [u, v] is listed by
/// increasing v, then increasing u. [u, v] is a basis element when u < v and
/// either v is a generator or v = [a, b] with a <= u.
class HallBasis {
 public:
  HallBasis(int generators, int max_degree);

  int generators() const { return generators_; }
  int max_degree() const { return max_degree_; }
  Index size() const { return static_cast<Index>(elements_.size()); }
  const HallElement& operator[](Index i) const { return elements_[i]; }
  const std::vector<HallElement>& elements() const { return elements_; }
  Index count(int degree) const;
  /// Indices of the elements of one degree.
  std::vector<Index> of_degree(int degree) const;
  /// Bracketed word such as "[X,[X,Y]]"; generators are X, Y, Z, ...
  std::string word(Index i) const;

 private:
  int generators_;
  int max_degree_;
  std::vector<HallElement> elements_;
};

HallBasis hall_basis(int generators, int max_degree);

/// Dimension of the degree-n part of the free Lie algebra on m generators.
Index witt_dimension(int generators, int degree);

// ------------------------------------------------- free associative algebra

/// Homogeneous element of the free associative algebra; words are encoded in
/// base `letters` with the first letter most significant.
struct WordPolynomial {
  int letters = 2;
  int degree = 0;
  std::vector<Rational> coeff;

  WordPolynomial() = default;
  WordPolynomial(int letters, int degree);
  static WordPolynomial letter(int letters, int which);

  WordPolynomial& operator+=(const WordPolynomial& o);
  WordPolynomial& operator*=(const Rational& c);
  bool is_zero() const;
};

WordPolynomial product(const WordPolynomial& a, const WordPolynomial& b);
WordPolynomial commutator(const WordPolynomial& a, const WordPolynomial& b);

/// Expansion of a Hall element as a noncommutative polynomial.
WordPolynomial expand(const HallBasis& basis, Index element);

/// Coordinates (one per Hall element of that degree) of a homogeneous Lie
/// polynomial. Throws InvalidArgument if the polynomial is not Lie.
std::vector<Rational> hall_coordinates(const HallBasis& basis, const WordPolynomial& lie_element);

// ------------------------------------------------------------------ the BCH

/// Coefficients of log(exp X exp Y) in the two-generator Hall basis, one per
/// Hall element, through the basis' maximal degree. Built from Dynkin's
/// formula: the degree-n part is (1/n) times the right-nested bracketing of
/// the word expansion.
std::vector<Rational> dynkin_series(const HallBasis& basis);

struct BchTerm {
  Index hall_index;
  int degree;
  std::string word;
  Rational coefficient;
  Scalar residue;  // coefficient mod p^k
};

class BchTable {
 public:
  BchTable(const PrimeContext& ctx, int max_degree);

  const PrimeContext& context() const { return ctx_; }
  int max_degree() const { return basis_.max_degree(); }
  const HallBasis& basis() const { return basis_; }
  /// Nonzero terms in Hall order.
  const std::vector<BchTerm>& terms() const { return terms_; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  /// Phi(x, y) in g, dropping Hall elements of degree above max_degree.
  Vector evaluate(const LieAlgebra& g, const Vector& x, const Vector& y, int max_degree) const;

 private:
  PrimeContext ctx_;
  HallBasis basis_;
  std::vector<Rational> coefficients_;
  std::vector<Scalar> residues_;
  std::vector<BchTerm> terms_;
};

/// The BCH table to degree D <= p - 1. Throws DegreeTooHigh beyond that.
BchTable bch_table(const PrimeContext& ctx, int max_degree);

// --------------------------------------------------------- group structure

/// Group law x * y = Phi(x, y) on an algebra whose lower central series
/// vanishes at step p at the working precision. Throws ClassTooLarge.
Vector group_mul(const LieAlgebra& g, const Vector& x, const Vector& y);
Vector group_inverse(const LieAlgebra& g, const Vector& x);
/// x^lambda, which in Lazard coordinates is the scalar multiple lambda x.
Vector group_pow(const LieAlgebra& g, const Vector& x, Scalar lambda);

struct LinearOperator {
  PrimeContext ctx;
  Matrix matrix;

  Index dim() const { return matrix.rows(); }
  LinearOperator compose(const LinearOperator& o) const;  // this * o
  bool operator==(const LinearOperator& o) const;
};

/// exp(ad sigma) restricted to h, written in the free basis of h.
/// Throws ExponentialNotExact unless (ad sigma)^p vanishes on h mod p^k.
LinearOperator conjugation_operator(const LieAlgebra& g, const Vector& sigma, const Submodule& h);

/// sum_{i=1}^{p-1} (-1)^{i+1} (U - 1)^i / i. Requires (U - 1)^p = 0.
LinearOperator truncated_log(const LinearOperator& u);
/// sum_{i=0}^{p-1} N^i / i!. Requires N^p = 0.
LinearOperator truncated_exp(const LinearOperator& n);

}  // namespace lazard
