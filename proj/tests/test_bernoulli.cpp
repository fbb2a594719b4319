#include <genocchi/bernoulli.hpp>

#include <genocchi/numtheory.hpp>

#include <doctest.h>

#include <stdexcept>
#include <vector>

using genocchi::BernoulliCache;
using genocchi::Integer;
using genocchi::Rational;

namespace {

// Test-local oracle: B_n = -1/(n+1) sum_{k<n} C(n+1,k) B_k.
std::vector<Rational> recurrence_oracle(std::size_t max_n) {
  std::vector<Rational> b(max_n + 1);
  b[0] = Rational(1);
  for (std::size_t n = 1; n <= max_n; ++n) {
    Rational acc;
    for (std::size_t k = 0; k < n; ++k) {
      acc += Rational(genocchi::binomial(n + 1, k)) * b[k];
    }
    b[n] = -(acc / Rational(static_cast<long>(n) + 1));
  }
  return b;
}

}  // namespace

TEST_CASE("first Bernoulli numbers") {
  BernoulliCache cache(14);
  CHECK(cache.at(0) == Rational(1));
  CHECK(cache.at(1) == Rational(-1, 2));
  CHECK(cache.at(2) == Rational(1, 6));
  CHECK(cache.at(3) == Rational(0));
  CHECK(cache.at(4) == Rational(-1, 30));
  CHECK(cache.at(6) == Rational(1, 42));
  CHECK(cache.at(8) == Rational(-1, 30));
  CHECK(cache.at(10) == Rational(5, 66));
  CHECK(cache.at(12) == Rational(-691, 2730));
  CHECK(cache.at(14) == Rational(7, 6));
  CHECK(genocchi::denominator_of(cache.at(6)) == 42);
}

TEST_CASE("series route agrees with the recurrence oracle up to 64") {
  BernoulliCache cache(64);
  const auto oracle = recurrence_oracle(64);
  for (std::size_t n = 0; n <= 64; ++n) {
    CHECK(cache.at(n) == oracle[n]);
  }
}

TEST_CASE("odd Bernoulli numbers vanish from 3 on") {
  BernoulliCache cache(63);
  for (std::size_t n = 3; n <= 63; n += 2) {
    CHECK(cache.at(n).is_zero());
  }
}

TEST_CASE("cache is grow-only and bounds-checked") {
  BernoulliCache cache(4);
  const Rational b4 = cache.at(4);
  CHECK_THROWS_AS(cache.at(5), std::out_of_range);
  cache.ensure(12);
  CHECK(cache.at(4) == b4);
  CHECK(cache.at(12) == Rational(-691, 2730));
  CHECK(cache.size() == 13);
}

TEST_CASE("bernoulli polynomials") {
  BernoulliCache cache(30);
  CHECK(genocchi::bernoulli_polynomial(0, cache) ==
        genocchi::RationalPolynomial::constant(Rational(1)));
  CHECK(genocchi::bernoulli_polynomial(1, cache) ==
        genocchi::RationalPolynomial({Rational(-1, 2), Rational(1)}));
  for (std::size_t n = 0; n <= 30; ++n) {
    const auto b = genocchi::bernoulli_polynomial(n, cache);
    CHECK(b.degree() == static_cast<int>(n));
    CHECK(b(Rational(0)) == cache.at(n));
  }
}

TEST_CASE("classical Genocchi numbers via -2(2^n - 1) B_n") {
  const auto g = genocchi::classical_genocchi(10);
  const std::vector<long> expected = {0, 1, -1, 0, 1, 0, -3, 0, 17, 0, -155};
  REQUIRE(g.size() == expected.size());
  for (std::size_t n = 0; n < g.size(); ++n) {
    CHECK(g[n] == Integer(expected[n]));
  }
}

TEST_CASE("von Staudt-Clausen") {
  BernoulliCache cache(64);
  CHECK(genocchi::von_staudt_clausen_check(2, cache));
  CHECK(genocchi::von_staudt_clausen_check(4, cache));
  CHECK(genocchi::von_staudt_clausen_check(12, cache));
  for (std::size_t n = 2; n <= 64; n += 2) {
    CHECK(genocchi::von_staudt_clausen_check(n, cache));
  }
  CHECK_THROWS_AS(genocchi::von_staudt_clausen_check(3, cache), std::invalid_argument);
  CHECK_THROWS_AS(genocchi::von_staudt_clausen_check(0, cache), std::invalid_argument);
}
