#include <genocchi/rational.hpp>

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace genocchi {

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (sgn(den) == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) {
    throw std::invalid_argument("Rational::parse: empty input");
  }
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    Integer n;
    if (mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0) {
      throw std::invalid_argument("Rational::parse: malformed integer '" + text + "'");
    }
    return Rational(n);
  }
  if (s.find('/', slash + 1) != std::string::npos) {
    throw std::invalid_argument("Rational::parse: multiple '/' in '" + text + "'");
  }
  Integer num, den;
  const std::string num_part = s.substr(0, slash);
  const std::string den_part = s.substr(slash + 1);
  if (num_part.empty() || den_part.empty() ||
      mpz_set_str(num.get_mpz_t(), num_part.c_str(), 10) != 0 ||
      mpz_set_str(den.get_mpz_t(), den_part.c_str(), 10) != 0) {
    throw std::invalid_argument("Rational::parse: malformed rational '" + text + "'");
  }
  if (sgn(den) == 0) {
    throw std::invalid_argument("Rational::parse: zero denominator in '" + text + "'");
  }
  return Rational(num, den);
}

bool Rational::is_integer() const {
  return mpz_cmp_ui(mpq_denref(value_.get_mpq_t()), 1) == 0;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.value_;
}

Integer denominator_of(const Rational& x) { return x.denominator(); }

}  // namespace genocchi
