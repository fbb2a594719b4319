#include <genocchi/egf_series.hpp>

#include <genocchi/numtheory.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace genocchi {

namespace {

void require_equal_orders(const EGFSeries& f, const EGFSeries& g, const char* op) {
  if (f.order() != g.order()) {
    throw std::invalid_argument(std::string("EGFSeries: ") + op + " requires equal orders, got " +
                                std::to_string(f.order()) + " and " + std::to_string(g.order()));
  }
}

}  // namespace

EGFSeries::EGFSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("EGFSeries: needs at least the order-0 coefficient");
  }
}

EGFSeries EGFSeries::zero(std::size_t order) {
  return EGFSeries(std::vector<Rational>(order + 1));
}

EGFSeries EGFSeries::one(std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = Rational(1);
  return EGFSeries(std::move(c));
}

EGFSeries EGFSeries::exponential(const Rational& c, std::size_t order) {
  std::vector<Rational> out(order + 1);
  Rational power(1);
  for (std::size_t n = 0; n <= order; ++n) {
    out[n] = power;
    power *= c;
  }
  return EGFSeries(std::move(out));
}

EGFSeries EGFSeries::geometric_sum(unsigned long a, std::size_t order) {
  if (a < 2) {
    throw std::invalid_argument("EGFSeries::geometric_sum: requires a >= 2, got " +
                                std::to_string(a));
  }
  std::vector<Rational> out(order + 1);
  out[0] = Rational(Integer(a));
  for (std::size_t n = 1; n <= order; ++n) {
    Integer sum(0);
    for (unsigned long j = 1; j < a; ++j) {
      sum += int_pow(Integer(j), n);
    }
    out[n] = Rational(sum);
  }
  return EGFSeries(std::move(out));
}

const Rational& EGFSeries::coeff(std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw std::out_of_range("EGFSeries::coeff: index " + std::to_string(n) +
                            " beyond order " + std::to_string(order()));
  }
  return coeffs_[n];
}

EGFSeries EGFSeries::reciprocal() const {
  if (coeffs_[0].is_zero()) {
    throw std::domain_error("EGFSeries::reciprocal: constant term is zero");
  }
  std::vector<Rational> b(coeffs_.size());
  const Rational inv_a0 = Rational(1) / coeffs_[0];
  b[0] = inv_a0;
  for (std::size_t n = 1; n < b.size(); ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k) {
      acc += Rational(binomial(n, k)) * coeffs_[k] * b[n - k];
    }
    b[n] = -(inv_a0 * acc);
  }
  return EGFSeries(std::move(b));
}

EGFSeries EGFSeries::scale_argument(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  Rational power(1);
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = power * coeffs_[n];
    power *= c;
  }
  return EGFSeries(std::move(out));
}

EGFSeries operator+(const EGFSeries& f, const EGFSeries& g) {
  require_equal_orders(f, g, "addition");
  std::vector<Rational> out(f.coeffs_.size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = f.coeffs_[n] + g.coeffs_[n];
  }
  return EGFSeries(std::move(out));
}

EGFSeries operator*(const EGFSeries& f, const EGFSeries& g) {
  require_equal_orders(f, g, "multiplication");
  std::vector<Rational> out(f.coeffs_.size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    Rational acc;
    for (std::size_t k = 0; k <= n; ++k) {
      acc += Rational(binomial(n, k)) * f.coeffs_[k] * g.coeffs_[n - k];
    }
    out[n] = acc;
  }
  return EGFSeries(std::move(out));
}

EGFSeries operator*(const Rational& c, const EGFSeries& f) {
  std::vector<Rational> out(f.coeffs_.size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = c * f.coeffs_[n];
  }
  return EGFSeries(std::move(out));
}

std::string EGFSeries::str() const {
  std::ostringstream os;
  os << coeffs_[0].str();
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    if (coeffs_[n].is_zero()) continue;
    const Rational& a = coeffs_[n];
    os << (a.sign() < 0 ? " - " : " + ") << (a.sign() < 0 ? -a : a).str()
       << "*t^" << n << "/" << n << "!";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const EGFSeries& f) {
  return os << f.str();
}

IdcCertificate idc_check(const EGFSeries& f) {
  for (std::size_t n = 0; n <= f.order(); ++n) {
    if (!f.coeff(n).is_integer()) {
      return IdcCertificate{false, std::make_pair(n, f.coeff(n))};
    }
  }
  return IdcCertificate{true, std::nullopt};
}

}  // namespace genocchi
