#include <genocchi/polynomial.hpp>

#include <genocchi/numtheory.hpp>

#include <algorithm>
#include <stdexcept>

namespace genocchi {

namespace {

void strip_trailing_zeros(std::vector<Rational>& coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  strip_trailing_zeros(coeffs_);
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial({c});
}

RationalPolynomial RationalPolynomial::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial RationalPolynomial::binomial_basis(std::size_t k) {
  RationalPolynomial p = constant(Rational(1));
  for (std::size_t j = 0; j < k; ++j) {
    // multiply by (X - j)
    p = p * RationalPolynomial({Rational(-static_cast<long>(j)), Rational(1)});
  }
  return Rational(Integer(1), factorial(k)) * p;
}

Rational RationalPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::shifted_by_one() const {
  // coefficient j of P(X+1) is sum_{i >= j} C(i,j) p_i
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    Rational acc;
    for (std::size_t i = j; i < coeffs_.size(); ++i) {
      acc += Rational(binomial(i, j)) * coeffs_[i];
    }
    out[j] = acc;
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator+(const RationalPolynomial& p, const RationalPolynomial& q) {
  std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = p.coeff(i) + q.coeff(i);
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& p, const RationalPolynomial& q) {
  std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = p.coeff(i) - q.coeff(i);
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return RationalPolynomial();
  std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p) {
  std::vector<Rational> out(p.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = c * p.coeffs_[i];
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial poly_reciprocal(const RationalPolynomial& p) {
  std::vector<Rational> out(p.coeffs().rbegin(), p.coeffs().rend());
  return RationalPolynomial(std::move(out));
}

RationalPolynomial forward_difference(const RationalPolynomial& p, unsigned k) {
  RationalPolynomial out = p;
  for (unsigned i = 0; i < k; ++i) {
    out = out.shifted_by_one() - out;
  }
  return out;
}

}  // namespace genocchi
