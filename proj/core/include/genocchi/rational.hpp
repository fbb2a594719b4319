#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace genocchi {

/// Arbitrary-precision integer. Every integer quantity in the library uses
/// this type; fixed-width overflow is a correctness bug, not an option.
using Integer = mpz_class;

/// Exact rational scalar.
///
/// Invariants: the denominator is always positive, gcd(|num|, den) = 1, and
/// zero is stored as 0/1. Values are immutable in the sense that every
/// operation produces a fresh normalized value; concurrent reads need no
/// synchronization.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(const Integer& n) : value_(n) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "p/q" or a bare integer "p"; normalizes to lowest terms.
  /// Throws std::invalid_argument on malformed input or a zero denominator.
  static Rational parse(const std::string& text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const;
  int sign() const { return sgn(value_); }

  /// "p/q", with "/q" omitted when the denominator is 1.
  std::string str() const { return value_.get_str(); }

  Rational operator-() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws std::domain_error on 0

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return mpq_equal(lhs.value_.get_mpq_t(), rhs.value_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

private:
  mpq_class value_;
};

/// den(r): the smallest positive integer d with d*r an integer. Equals the
/// stored denominator because values are kept in lowest terms.
Integer denominator_of(const Rational& x);

}  // namespace genocchi
