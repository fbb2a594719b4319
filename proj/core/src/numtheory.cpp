#include <genocchi/numtheory.hpp>

#include <stdexcept>

namespace genocchi {

std::int64_t PAdicValuation::value() const {
  if (infinite_) {
    throw std::logic_error("PAdicValuation: value() on the infinite valuation");
  }
  return value_;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("padic_valuation: p = " + std::to_string(p) + " is not prime");
  }
}

std::int64_t remove_factor(const Integer& n, std::uint64_t p) {
  Integer reduced;
  const Integer prime(static_cast<unsigned long>(p));
  return static_cast<std::int64_t>(
      mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace

PAdicValuation padic_valuation(std::uint64_t p, const Integer& n) {
  require_prime(p);
  if (sgn(n) == 0) return PAdicValuation::infinite();
  return PAdicValuation::finite(remove_factor(n, p));
}

PAdicValuation padic_valuation(std::uint64_t p, const Rational& x) {
  require_prime(p);
  if (x.is_zero()) return PAdicValuation::infinite();
  return PAdicValuation::finite(remove_factor(x.numerator(), p) -
                                remove_factor(x.denominator(), p));
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer int_pow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

bool divides(const Integer& d, const Integer& n) {
  if (sgn(d) == 0) {
    throw std::domain_error("divides: zero divisor");
  }
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace genocchi
