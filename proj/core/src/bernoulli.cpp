#include <genocchi/bernoulli.hpp>

#include <genocchi/egf_series.hpp>
#include <genocchi/numtheory.hpp>

#include <stdexcept>
#include <string>

namespace genocchi {

void BernoulliCache::ensure(std::size_t max_n) {
  if (values_.size() > max_n) return;

  // Route 1: invert (e^t - 1)/t, whose differential coefficients are 1/(n+1).
  std::vector<Rational> base;
  base.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    base.emplace_back(Rational(1, static_cast<long>(n) + 1));
  }
  const EGFSeries inverted = EGFSeries(std::move(base)).reciprocal();

  // Route 2: the classical recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0.
  std::vector<Rational> rec(max_n + 1);
  rec[0] = Rational(1);
  for (std::size_t n = 1; n <= max_n; ++n) {
    Rational acc;
    for (std::size_t k = 0; k < n; ++k) {
      acc += Rational(binomial(n + 1, k)) * rec[k];
    }
    rec[n] = -(acc / Rational(static_cast<long>(n) + 1));
  }

  for (std::size_t n = 0; n <= max_n; ++n) {
    if (inverted.coeff(n) != rec[n]) {
      throw std::logic_error("BernoulliCache: series and recurrence routes disagree at n = " +
                             std::to_string(n) + " (" + inverted.coeff(n).str() + " vs " +
                             rec[n].str() + ")");
    }
  }
  values_ = std::move(rec);
}

const Rational& BernoulliCache::at(std::size_t n) const {
  if (n >= values_.size()) {
    throw std::out_of_range("BernoulliCache: index " + std::to_string(n) +
                            " beyond computed range " + std::to_string(values_.size()));
  }
  return values_[n];
}

BernoulliCache bernoulli_numbers(std::size_t max_n) { return BernoulliCache(max_n); }

RationalPolynomial bernoulli_polynomial(std::size_t n, BernoulliCache& cache) {
  cache.ensure(n);
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    coeffs[n - k] = Rational(binomial(n, k)) * cache.at(k);
  }
  return RationalPolynomial(std::move(coeffs));
}

std::vector<Integer> classical_genocchi(std::size_t max_n, BernoulliCache& cache) {
  cache.ensure(max_n);
  std::vector<Integer> out;
  out.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    const Rational g = Rational(-2) * Rational(int_pow(Integer(2), n) - 1) * cache.at(n);
    if (!g.is_integer()) {
      throw std::logic_error("classical_genocchi: non-integer value at n = " +
                             std::to_string(n) + ": " + g.str());
    }
    out.push_back(g.numerator());
  }
  return out;
}

std::vector<Integer> classical_genocchi(std::size_t max_n) {
  BernoulliCache cache(max_n);
  return classical_genocchi(max_n, cache);
}

bool von_staudt_clausen_check(std::size_t n, BernoulliCache& cache) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("von_staudt_clausen_check: requires even n >= 2, got " +
                                std::to_string(n));
  }
  cache.ensure(n);
  Rational sum = cache.at(n);
  for (std::uint64_t p : primes_up_to(n + 1)) {
    if (n % (p - 1) == 0) {
      sum += Rational(1, static_cast<long>(p));
    }
  }
  return sum.is_integer();
}

}  // namespace genocchi
