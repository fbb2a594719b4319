#pragma once

#include <genocchi/rational.hpp>

#include <cstdint>
#include <vector>

namespace genocchi {

/// The p-adic valuation of a rational number: a finite integer for nonzero
/// arguments and "infinite" exactly for 0, so the valuation inequalities
/// stay total.
class PAdicValuation {
public:
  static PAdicValuation infinite() { return PAdicValuation(true, 0); }
  static PAdicValuation finite(std::int64_t v) { return PAdicValuation(false, v); }

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error when infinite.
  std::int64_t value() const;

  bool at_least(std::int64_t bound) const { return infinite_ || value_ >= bound; }

  friend PAdicValuation operator+(const PAdicValuation& a, const PAdicValuation& b) {
    if (a.infinite_ || b.infinite_) return infinite();
    return finite(a.value_ + b.value_);
  }
  friend PAdicValuation min(const PAdicValuation& a, const PAdicValuation& b) {
    if (a.infinite_) return b;
    if (b.infinite_) return a;
    return finite(a.value_ < b.value_ ? a.value_ : b.value_);
  }
  friend bool operator==(const PAdicValuation&, const PAdicValuation&) = default;
  /// Infinite compares greater than every finite valuation.
  friend bool operator>=(const PAdicValuation& a, const PAdicValuation& b) {
    if (a.infinite_) return true;
    if (b.infinite_) return false;
    return a.value_ >= b.value_;
  }

private:
  PAdicValuation(bool inf, std::int64_t v) : infinite_(inf), value_(v) {}
  bool infinite_;
  std::int64_t value_;
};

/// Deterministic trial-division primality test, adequate for p <= 10^6.
bool is_prime(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// v_p(n) for an integer n; infinite for n = 0.
/// Throws std::invalid_argument unless p is prime.
PAdicValuation padic_valuation(std::uint64_t p, const Integer& n);
/// v_p(x) = v_p(num) - v_p(den); infinite for x = 0.
PAdicValuation padic_valuation(std::uint64_t p, const Rational& x);

/// C(n, k); zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

Integer int_pow(const Integer& base, unsigned long exp);
Integer factorial(unsigned long n);

/// True when d divides n exactly (sign ignored); d must be nonzero.
bool divides(const Integer& d, const Integer& n);

}  // namespace genocchi
