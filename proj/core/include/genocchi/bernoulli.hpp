#pragma once

#include <genocchi/polynomial.hpp>
#include <genocchi/rational.hpp>

#include <cstddef>
#include <vector>

namespace genocchi {

/// Exact Bernoulli numbers B_0..B_max (convention B_1 = -1/2, forced by the
/// generating function t e^{Xt}/(e^t - 1) at X = 0).
///
/// The cache is grow-only: ensure() never changes an already computed value.
/// Every fill runs two independent routes -- inversion of the series
/// (e^t - 1)/t and the classical recurrence sum_k C(n+1,k) B_k = 0 -- and
/// throws std::logic_error if they ever disagree.
class BernoulliCache {
public:
  BernoulliCache() = default;
  explicit BernoulliCache(std::size_t max_n) { ensure(max_n); }

  void ensure(std::size_t max_n);
  /// Throws std::out_of_range beyond the computed range.
  const Rational& at(std::size_t n) const;
  std::size_t size() const { return values_.size(); }

private:
  std::vector<Rational> values_;
};

/// B_0..B_max by the dual-route procedure above.
BernoulliCache bernoulli_numbers(std::size_t max_n);

/// B_n(X) = sum_{k=0}^{n} C(n,k) B_k X^{n-k}; degree exactly n.
RationalPolynomial bernoulli_polynomial(std::size_t n, BernoulliCache& cache);

/// Classical Genocchi numbers G_n = -2 (2^n - 1) B_n, n = 0..max_n.
/// Throws std::logic_error if any value fails to be an integer (it never does).
std::vector<Integer> classical_genocchi(std::size_t max_n, BernoulliCache& cache);
std::vector<Integer> classical_genocchi(std::size_t max_n);

/// True iff B_n + sum_{(p-1) | n} 1/p is an integer (von Staudt-Clausen).
/// Requires even n >= 2; throws std::invalid_argument otherwise.
bool von_staudt_clausen_check(std::size_t n, BernoulliCache& cache);

}  // namespace genocchi
