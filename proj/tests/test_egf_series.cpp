#include <genocchi/egf_series.hpp>

#include <genocchi/numtheory.hpp>

#include <doctest.h>

#include <stdexcept>
#include <vector>

using genocchi::EGFSeries;
using genocchi::Integer;
using genocchi::Rational;

namespace {

EGFSeries make(std::vector<long> values) {
  std::vector<Rational> coeffs;
  coeffs.reserve(values.size());
  for (long v : values) coeffs.emplace_back(v);
  return EGFSeries(std::move(coeffs));
}

// Independent product oracle: multiply ordinary Taylor coefficients a_n/n!
// with a plain double loop, then rescale back to differential coefficients.
EGFSeries naive_product(const EGFSeries& f, const EGFSeries& g) {
  const std::size_t size = f.order() + 1;
  std::vector<Rational> ordinary_f(size), ordinary_g(size), ordinary_out(size);
  for (std::size_t n = 0; n < size; ++n) {
    ordinary_f[n] = f.coeff(n) / Rational(genocchi::factorial(n));
    ordinary_g[n] = g.coeff(n) / Rational(genocchi::factorial(n));
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; i + j < size; ++j) {
      ordinary_out[i + j] += ordinary_f[i] * ordinary_g[j];
    }
  }
  std::vector<Rational> out(size);
  for (std::size_t n = 0; n < size; ++n) {
    out[n] = ordinary_out[n] * Rational(genocchi::factorial(n));
  }
  return EGFSeries(std::move(out));
}

}  // namespace

TEST_CASE("exponential series") {
  CHECK(EGFSeries::exponential(Rational(1), 3) == make({1, 1, 1, 1}));
  CHECK(EGFSeries::exponential(Rational(0), 3) == make({1, 0, 0, 0}));
  CHECK(EGFSeries::exponential(Rational(2), 3) == make({1, 2, 4, 8}));
}

TEST_CASE("geometric sum of exponentials") {
  CHECK(EGFSeries::geometric_sum(2, 2) == make({2, 1, 1}));
  CHECK(EGFSeries::geometric_sum(3, 2) == make({3, 3, 5}));
  for (unsigned long a = 2; a <= 9; ++a) {
    CHECK(EGFSeries::geometric_sum(a, 4).coeff(0) == Rational(Integer(a)));
  }
  CHECK_THROWS_AS(EGFSeries::geometric_sum(1, 4), std::invalid_argument);
}

TEST_CASE("addition") {
  CHECK(make({1, 1}) + make({1, -1}) == make({2, 0}));
  const EGFSeries f = make({4, -3, 2, 7});
  CHECK(f + EGFSeries::zero(3) == f);
  CHECK(EGFSeries::exponential(Rational(1), 2) + EGFSeries::exponential(Rational(-1), 2) ==
        make({2, 0, 2}));
}

TEST_CASE("binomial-convolution product") {
  CHECK(EGFSeries::exponential(Rational(1), 4) * EGFSeries::exponential(Rational(1), 4) ==
        make({1, 2, 4, 8, 16}));
  const EGFSeries f = make({5, -1, 3, 0});
  CHECK(f * EGFSeries::one(3) == f);

  const EGFSeries t = make({0, 1, 0, 0});
  const EGFSeries product = t * EGFSeries::geometric_sum(2, 3);
  CHECK(product == naive_product(t, EGFSeries::geometric_sum(2, 3)));
  CHECK(product == make({0, 2, 2, 3}));
}

TEST_CASE("product matches the naive oracle on mixed rational series") {
  const EGFSeries f({Rational(2), Rational(1, 3), Rational(-5, 7), Rational(0), Rational(9, 2)});
  const EGFSeries g({Rational(-1, 2), Rational(4), Rational(1, 6), Rational(11), Rational(-3)});
  CHECK(f * g == naive_product(f, g));
}

TEST_CASE("orders must match") {
  CHECK_THROWS_AS(make({1, 2}) + make({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(make({1, 2}) * make({1, 2, 3}), std::invalid_argument);
}

TEST_CASE("reciprocal by the triangular recurrence") {
  CHECK(EGFSeries::exponential(Rational(1), 6).reciprocal() ==
        EGFSeries::exponential(Rational(-1), 6));
  CHECK(EGFSeries::one(4).reciprocal() == EGFSeries::one(4));
  CHECK_THROWS_AS(make({0, 1, 2}).reciprocal(), std::domain_error);

  // den(b_n) | a_0^{n+1} for the inverted geometric sum with a_0 = 2
  const EGFSeries b = EGFSeries::geometric_sum(2, 5).reciprocal();
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(genocchi::divides(genocchi::denominator_of(b.coeff(n)),
                            genocchi::int_pow(Integer(2), n + 1)));
  }
}

TEST_CASE("reciprocal round-trips against the product") {
  const EGFSeries f = make({3, 1, 4, 1, 5, 9});
  CHECK(f * f.reciprocal() == EGFSeries::one(5));
}

TEST_CASE("argument scaling") {
  CHECK(EGFSeries::exponential(Rational(1), 5).scale_argument(Rational(2)) ==
        EGFSeries::exponential(Rational(2), 5));
  CHECK(make({7, 1, 2, 3}).scale_argument(Rational(0)) == make({7, 0, 0, 0}));

  // a_0/f(a_0 t) is integral when f is: here via (1/a_0) f(a_0 t) and its inverse
  const EGFSeries f = EGFSeries::geometric_sum(3, 4);
  const EGFSeries unit_scaled = Rational(1, 3) * f.scale_argument(Rational(3));
  CHECK(genocchi::idc_check(unit_scaled).is_idc);
  CHECK(genocchi::idc_check(unit_scaled.reciprocal()).is_idc);
}

TEST_CASE("idc_check reports the first violation") {
  CHECK(genocchi::idc_check(EGFSeries::exponential(Rational(1), 8)).is_idc);

  const EGFSeries bad({Rational(1), Rational(1, 2)});
  const auto cert = genocchi::idc_check(bad);
  CHECK(!cert.is_idc);
  REQUIRE(cert.first_violation.has_value());
  CHECK(cert.first_violation->first == 1);
  CHECK(cert.first_violation->second == Rational(1, 2));

  const EGFSeries scaled = Rational(1, 2) * EGFSeries::geometric_sum(2, 6).scale_argument(Rational(2));
  CHECK(genocchi::idc_check(scaled.reciprocal()).is_idc);
}

TEST_CASE("display form") {
  CHECK(make({2, 1, 0, -3}).str() == "2 + 1*t^1/1! - 3*t^3/3!");
  CHECK(EGFSeries::zero(2).str() == "0");
}
