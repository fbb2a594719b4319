#include <genocchi/genocchi_numbers.hpp>

#include <genocchi/bernoulli.hpp>

#include <doctest.h>

#include <stdexcept>
#include <vector>

using genocchi::GenocchiTable;
using genocchi::Integer;
using genocchi::Rational;

namespace {

void check_values(const GenocchiTable& table, const std::vector<long>& expected) {
  REQUIRE(table.values.size() == expected.size());
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(table.values[n] == Rational(expected[n]));
  }
}

}  // namespace

TEST_CASE("boundary values G_{0,a} = 0 and G_{1,a} = 1") {
  for (unsigned long a = 2; a <= 9; ++a) {
    const auto series = genocchi::genocchi_by_series(a, 1);
    const auto recurrence = genocchi::genocchi_by_recurrence(a, 1);
    CHECK(series.values[0].is_zero());
    CHECK(series.values[1] == Rational(1));
    CHECK(recurrence.values[0].is_zero());
    CHECK(recurrence.values[1] == Rational(1));
  }
}

TEST_CASE("hand-evaluated small cases") {
  CHECK(genocchi::genocchi_by_recurrence(2, 2).values[2] == Rational(-1));
  CHECK(genocchi::genocchi_by_series(3, 2).values[2] == Rational(-2));
}

TEST_CASE("tables for a = 3, 4, 6 up to n = 8") {
  check_values(genocchi::genocchi_by_series(3, 8), {0, 1, -2, 1, 4, -5, -26, 49, 328});
  check_values(genocchi::genocchi_by_series(4, 8), {0, 1, -3, 3, 9, -25, -99, 427, 2193});
  check_values(genocchi::genocchi_by_recurrence(6, 8),
               {0, 1, -5, 10, 25, -170, -575, 6370, 28225});
}

TEST_CASE("a = 2 reproduces the classical Genocchi numbers") {
  const auto table = genocchi::genocchi_by_series(2, 8);
  const auto classical = genocchi::classical_genocchi(8);
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(table.values[n] == Rational(classical[n]));
  }
}

TEST_CASE("both routes agree") {
  for (unsigned long a : {2ul, 3ul, 5ul, 12ul}) {
    const auto series = genocchi::genocchi_by_series(a, 24);
    const auto recurrence = genocchi::genocchi_by_recurrence(a, 24);
    CHECK(series.values == recurrence.values);
  }
}

TEST_CASE("a must be at least 2") {
  CHECK_THROWS_AS(genocchi::genocchi_by_series(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(genocchi::genocchi_by_recurrence(0, 4), std::invalid_argument);
}

TEST_CASE("denominator certificate den(G) | a^{n-1}") {
  for (unsigned long a : {2ul, 6ul}) {
    const auto cert = genocchi::denominator_certificate(a, 40);
    for (std::size_t n = 0; n <= 40; ++n) {
      CHECK(cert[n]);
    }
  }
  // n = 1 checks den | a^0 = 1
  CHECK(genocchi::denominator_certificate(7, 1)[1]);
}

TEST_CASE("valuation certificates") {
  const auto table = genocchi::genocchi_by_series(2, 40);
  for (std::size_t n = 1; n <= 40; ++n) {
    CHECK(genocchi::valuation_certificate(table, n, 2).at_least(0));
    CHECK(genocchi::valuation_certificate(table, n, 3).at_least(0));
  }
  for (unsigned long a = 2; a <= 6; ++a) {
    const auto v = genocchi::valuation_certificate(a, 1, 5);
    CHECK(v == genocchi::PAdicValuation::finite(0));  // G_{1,a} = 1
  }
  CHECK_THROWS_AS(genocchi::valuation_certificate(2, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(genocchi::valuation_certificate(2, 4, 4), std::invalid_argument);
}

TEST_CASE("v_p(a^k/(k+1)) >= 0 for p | a") {
  CHECK(genocchi::recurrence_terms_p_integral(2, 2, 64));
  CHECK(genocchi::recurrence_terms_p_integral(6, 3, 64));
  CHECK(genocchi::recurrence_terms_p_integral(6, 2, 0));  // k = 0 alone: v_p(1/1) = 0
  CHECK_THROWS_AS(genocchi::recurrence_terms_p_integral(6, 5, 8), std::invalid_argument);
  CHECK_THROWS_AS(genocchi::recurrence_terms_p_integral(9, 2, 8), std::invalid_argument);
}

TEST_CASE("sweep primes cover max(a, n)") {
  CHECK(genocchi::sweep_primes(12, 40).back() == 37);
  CHECK(genocchi::sweep_primes(50, 3).back() == 47);
  CHECK(genocchi::sweep_primes(2, 2) == std::vector<std::uint64_t>{2});
}

TEST_CASE("raw rational pipeline keeps exact intermediates") {
  // the unreduced series route never assumes integrality: check that the
  // inverted series itself carries genuine denominators
  const auto b = genocchi::EGFSeries::geometric_sum(10, 6).reciprocal();
  CHECK(b.coeff(0) == Rational(1, 10));
  CHECK(!b.coeff(0).is_integer());
}
