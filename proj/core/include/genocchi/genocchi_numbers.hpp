#pragma once

#include <genocchi/egf_series.hpp>
#include <genocchi/numtheory.hpp>
#include <genocchi/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace genocchi {

enum class GenocchiMethod { series, recurrence };

/// G_{0,a}..G_{max_n,a}, the differential coefficients of
/// a t / (e^{(a-1)t} + ... + e^t + 1).
///
/// Values are kept as raw rationals: integrality is a theorem that the
/// certificates and verification suites assert, never an assumption baked
/// into the pipeline.
struct GenocchiTable {
  unsigned long a = 2;
  GenocchiMethod method = GenocchiMethod::series;
  std::vector<Rational> values;

  std::size_t max_n() const { return values.size() - 1; }
};

/// Series route: invert the geometric-sum series f and set
/// G_{n,a} = a n b_{n-1} (G_{0,a} = 0). Requires a >= 2.
GenocchiTable genocchi_by_series(unsigned long a, std::size_t max_n);

/// Recurrence route: G_{1,a} = 1, then
/// G_{n,a} = 1 - sum_{k=1}^{n-1} C(n,k) a^k/(k+1) G_{n-k,a}. Requires a >= 2.
GenocchiTable genocchi_by_recurrence(unsigned long a, std::size_t max_n);

/// Entry n is true iff den(G_{n,a}) divides a^{n-1} (a^0 for n <= 1),
/// checked on the raw rationals of the series route before any
/// integrality assertion.
std::vector<bool> denominator_certificate(unsigned long a, std::size_t max_n);
std::vector<bool> denominator_certificate(const GenocchiTable& table);

/// v_p(G_{n,a}); requires a >= 2, n >= 1 and p prime.
PAdicValuation valuation_certificate(unsigned long a, std::size_t n, std::uint64_t p);
PAdicValuation valuation_certificate(const GenocchiTable& table, std::size_t n, std::uint64_t p);

/// True iff v_p(a^k/(k+1)) >= 0 for all 0 <= k <= max_k.
/// Requires p prime and p | a; throws std::invalid_argument otherwise.
bool recurrence_terms_p_integral(unsigned long a, std::uint64_t p, std::size_t max_k);

/// Primes covered by the default valuation sweep: all p <= max(a, max_n).
/// Every prime divisor of a is <= a, so the set already contains them.
std::vector<std::uint64_t> sweep_primes(unsigned long a, std::size_t max_n);

}  // namespace genocchi
