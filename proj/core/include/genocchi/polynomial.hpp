#pragma once

#include <genocchi/rational.hpp>

#include <cstddef>
#include <vector>

namespace genocchi {

/// Dense univariate polynomial over Rational in the monomial basis;
/// index i holds the coefficient of X^i. Normalized so the highest-index
/// coefficient is nonzero; the zero polynomial has an empty list and
/// degree() == -1.
class RationalPolynomial {
public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  static RationalPolynomial constant(const Rational& c);
  /// c * X^k.
  static RationalPolynomial monomial(std::size_t k, const Rational& c = Rational(1));
  /// C(X, k) = X(X-1)...(X-k+1)/k!.
  static RationalPolynomial binomial_basis(std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of X^i; zero beyond the degree.
  Rational coeff(std::size_t i) const;

  /// Horner evaluation.
  Rational operator()(const Rational& x) const;

  /// P(X + 1).
  RationalPolynomial shifted_by_one() const;

  friend RationalPolynomial operator+(const RationalPolynomial& p, const RationalPolynomial& q);
  friend RationalPolynomial operator-(const RationalPolynomial& p, const RationalPolynomial& q);
  friend RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q);
  friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p);

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
  std::vector<Rational> coeffs_;
};

/// P*: the coefficient list reversed over 0..deg P, so that
/// P*(X) = X^{deg P} P(1/X). The zero polynomial maps to itself.
RationalPolynomial poly_reciprocal(const RationalPolynomial& p);

/// k-fold forward difference, (delta P)(X) = P(X+1) - P(X).
RationalPolynomial forward_difference(const RationalPolynomial& p, unsigned k = 1);

}  // namespace genocchi
