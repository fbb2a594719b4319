#include <genocchi/polynomial.hpp>

#include <doctest.h>

#include <vector>

using genocchi::Rational;
using genocchi::RationalPolynomial;

namespace {

RationalPolynomial make(std::vector<long> coeffs) {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (long c : coeffs) out.emplace_back(c);
  return RationalPolynomial(std::move(out));
}

}  // namespace

TEST_CASE("normalization strips trailing zeros") {
  CHECK(make({1, 2, 0, 0}).degree() == 1);
  CHECK(make({0, 0, 0}).is_zero());
  CHECK(RationalPolynomial().degree() == -1);
}

TEST_CASE("coefficient reversal") {
  // (2X^3 + 5X^2 + 7X + 3)* = 3X^3 + 7X^2 + 5X + 2
  CHECK(genocchi::poly_reciprocal(make({3, 7, 5, 2})) == make({2, 5, 7, 3}));
  CHECK(genocchi::poly_reciprocal(make({4})) == make({4}));
  CHECK(genocchi::poly_reciprocal(RationalPolynomial()).is_zero());
  // low-order zeros become trailing zeros and drop from the degree
  CHECK(genocchi::poly_reciprocal(make({0, 1})) == make({1}));
}

TEST_CASE("reversal is an involution away from zero constant terms") {
  const auto p = make({3, 0, -2, 7});
  CHECK(genocchi::poly_reciprocal(genocchi::poly_reciprocal(p)) == p);
  const RationalPolynomial q({Rational(1, 6), Rational(-1, 2), Rational(1, 3)});
  CHECK(genocchi::poly_reciprocal(genocchi::poly_reciprocal(q)) == q);
}

TEST_CASE("reversal identity P*(X) = X^deg P(1/X) on a sample") {
  const auto p = make({3, 7, 5, 2});
  const auto star = genocchi::poly_reciprocal(p);
  for (long x : {1L, 2L, 3L, -1L, 5L}) {
    CHECK(star(Rational(x)) ==
          Rational(x * x * x) * p(Rational(1, x)));
  }
}

TEST_CASE("forward difference") {
  CHECK(genocchi::forward_difference(make({0, 0, 1})) == make({1, 2}));  // delta X^2 = 2X + 1
  const auto p = make({4, -2, 0, 9});
  CHECK(genocchi::forward_difference(p, 4).is_zero());
  CHECK(genocchi::forward_difference(p, 0) == p);
  for (std::size_t k = 1; k <= 8; ++k) {
    CHECK(genocchi::forward_difference(RationalPolynomial::binomial_basis(k)) ==
          RationalPolynomial::binomial_basis(k - 1));
  }
}

TEST_CASE("degree drops by exactly one per difference") {
  auto p = make({1, 1, 1, 1, 1});
  for (int d = 4; d >= 0; --d) {
    CHECK(p.degree() == d);
    p = genocchi::forward_difference(p);
  }
  CHECK(p.is_zero());
}

TEST_CASE("evaluation and shift") {
  const auto p = make({1, -2, 1});  // (X-1)^2
  CHECK(p(Rational(1)) == Rational(0));
  CHECK(p(Rational(4)) == Rational(9));
  CHECK(p(Rational(1, 2)) == Rational(1, 4));
  CHECK(p.shifted_by_one() == make({0, 0, 1}));  // X^2
}

TEST_CASE("ring operations") {
  const auto p = make({1, 1});
  CHECK(p * p == make({1, 2, 1}));
  CHECK(p + make({-1, -1}) == RationalPolynomial());
  CHECK(p - p == RationalPolynomial());
  CHECK(Rational(3) * make({1, 0, 2}) == make({3, 0, 6}));
  CHECK((p * RationalPolynomial()).is_zero());
}

TEST_CASE("binomial basis polynomials") {
  CHECK(RationalPolynomial::binomial_basis(0) == make({1}));
  CHECK(RationalPolynomial::binomial_basis(1) == make({0, 1}));
  // C(X,3) = (X^3 - 3X^2 + 2X)/6
  const RationalPolynomial c3({Rational(0), Rational(1, 3), Rational(-1, 2), Rational(1, 6)});
  CHECK(RationalPolynomial::binomial_basis(3) == c3);
  for (long x = -4; x <= 8; ++x) {
    CHECK(RationalPolynomial::binomial_basis(4)(Rational(x)).is_integer());
  }
}

TEST_CASE("monomial and constant constructors") {
  CHECK(RationalPolynomial::monomial(3) == make({0, 0, 0, 1}));
  CHECK(RationalPolynomial::monomial(2, Rational(-5)) == make({0, 0, -5}));
  CHECK(RationalPolynomial::constant(Rational(0)).is_zero());
  CHECK(make({0, 0, 1}).coeff(7) == Rational(0));
}
