#include <genocchi/genocchi_numbers.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace genocchi {

namespace {

void require_a(unsigned long a) {
  if (a < 2) {
    throw std::invalid_argument("generalized Genocchi numbers need a >= 2, got " +
                                std::to_string(a));
  }
}

}  // namespace

GenocchiTable genocchi_by_series(unsigned long a, std::size_t max_n) {
  require_a(a);
  GenocchiTable table{a, GenocchiMethod::series, std::vector<Rational>(max_n + 1)};
  if (max_n == 0) return table;
  const EGFSeries inverted = EGFSeries::geometric_sum(a, max_n - 1).reciprocal();
  for (std::size_t n = 1; n <= max_n; ++n) {
    // G_{n,a} = a n b_{n-1}
    table.values[n] = Rational(Integer(a) * Integer(n)) * inverted.coeff(n - 1);
  }
  return table;
}

GenocchiTable genocchi_by_recurrence(unsigned long a, std::size_t max_n) {
  require_a(a);
  GenocchiTable table{a, GenocchiMethod::recurrence, std::vector<Rational>(max_n + 1)};
  if (max_n == 0) return table;
  table.values[1] = Rational(1);
  for (std::size_t n = 2; n <= max_n; ++n) {
    Rational acc(1);
    for (std::size_t k = 1; k <= n - 1; ++k) {
      acc -= Rational(binomial(n, k) * int_pow(Integer(a), k), Integer(k + 1)) *
             table.values[n - k];
    }
    table.values[n] = acc;
  }
  return table;
}

std::vector<bool> denominator_certificate(const GenocchiTable& table) {
  std::vector<bool> out(table.values.size());
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    const Integer bound = int_pow(Integer(table.a), n <= 1 ? 0 : n - 1);
    out[n] = divides(denominator_of(table.values[n]), bound);
  }
  return out;
}

std::vector<bool> denominator_certificate(unsigned long a, std::size_t max_n) {
  return denominator_certificate(genocchi_by_series(a, max_n));
}

PAdicValuation valuation_certificate(const GenocchiTable& table, std::size_t n, std::uint64_t p) {
  if (n == 0 || n >= table.values.size()) {
    throw std::invalid_argument("valuation_certificate: n = " + std::to_string(n) +
                                " outside the table range");
  }
  return padic_valuation(p, table.values[n]);
}

PAdicValuation valuation_certificate(unsigned long a, std::size_t n, std::uint64_t p) {
  if (n == 0) {
    throw std::invalid_argument("valuation_certificate: requires n >= 1");
  }
  return valuation_certificate(genocchi_by_recurrence(a, n), n, p);
}

bool recurrence_terms_p_integral(unsigned long a, std::uint64_t p, std::size_t max_k) {
  require_a(a);
  if (!is_prime(p) || a % p != 0) {
    throw std::invalid_argument("recurrence_terms_p_integral: p = " + std::to_string(p) +
                                " must be a prime divisor of a = " + std::to_string(a));
  }
  for (std::size_t k = 0; k <= max_k; ++k) {
    const Rational term(int_pow(Integer(a), k), Integer(k + 1));
    if (!padic_valuation(p, term).at_least(0)) return false;
  }
  return true;
}

std::vector<std::uint64_t> sweep_primes(unsigned long a, std::size_t max_n) {
  return primes_up_to(std::max<std::uint64_t>(a, max_n));
}

}  // namespace genocchi
