#pragma once

#include <genocchi/bernoulli.hpp>
#include <genocchi/polynomial.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace genocchi {

/// Coefficients of P in the binomial basis: P = sum_k coeffs[k] * C(X,k),
/// with coeffs[k] = (delta^k P)(0). Integrality of every entry certifies
/// integer-valuedness. Empty for the zero polynomial.
struct NewtonExpansion {
  std::vector<Rational> coeffs;

  bool all_integral() const;
};

NewtonExpansion newton_expand(const RationalPolynomial& p);
RationalPolynomial newton_reconstruct(const NewtonExpansion& e);

enum class IvpMethod { newton_basis, consecutive_sampling };

/// Outcome of an integer-valuedness certification. When is_integer_valued is
/// false, witness holds an integer x with P(x) not an integer.
struct IvpCertificate {
  bool is_integer_valued = false;
  std::optional<Integer> witness;
  IvpMethod method = IvpMethod::newton_basis;
};

/// newton_basis: integer-valued iff all Newton coefficients are integers.
/// consecutive_sampling: evaluates at 0..deg P; integer values at deg P + 1
/// consecutive integers suffice. The two methods always agree.
IvpCertificate certify_integer_valued(const RationalPolynomial& p,
                                      IvpMethod method = IvpMethod::newton_basis);

/// The polynomial interpolating a -> G_{n,a}:
/// sum_{k=0}^{n-1} C(n,k) B_k X^k, which equals (B_n(X) - B_n)*.
/// Zero for n = 0; constant term 1 for n >= 1.
RationalPolynomial genocchi_interpolant(std::size_t n, BernoulliCache& cache);

/// n-1 when n is odd or n = 2, n-2 when n is even and n >= 4.
/// Requires n >= 1.
std::size_t genocchi_interpolant_degree(std::size_t n);

/// Certifies that B_n(X)* is integer-valued. Requires odd n >= 3 (where
/// B_n = 0, so B_n* coincides with the interpolating polynomial above).
IvpCertificate bernoulli_reciprocal_ivp_check(std::size_t n, BernoulliCache& cache);

/// The Faulhaber interpolant
/// sigma_n(X) = 1/(n+1) sum_{k=0}^{n} C(n+1,k) B_k X^{n+1-k} + X^n,
/// with sigma_n(a) = 0^n + 1^n + ... + a^n (0^0 = 1).
RationalPolynomial faulhaber_poly(std::size_t n, BernoulliCache& cache);

/// Certifies that (n+1) sigma_n*(X) is integer-valued, after asserting the
/// identity (n+1) sigma_n* = genocchi_interpolant(n+1) + (n+1) X
/// coefficientwise (std::logic_error on violation; it never fires).
IvpCertificate faulhaber_reciprocal_check(std::size_t n, BernoulliCache& cache);

/// Row n of the triangle: a_{n,k} = (delta^k of the interpolant)(0) for
/// 0 <= k <= its degree. Even rows n >= 4 are one entry shorter than odd
/// ones because the omitted top coefficient is zero.
struct TriangleRow {
  std::size_t n = 0;
  std::vector<Integer> entries;
};

/// Rows 1..max_n; throws std::logic_error if any entry fails to be an
/// integer (it never does). Requires max_n >= 1.
std::vector<TriangleRow> triangle(std::size_t max_n, BernoulliCache& cache);

/// Reports whether P is integer-valued and whether (deg P) * P* is.
/// witness: an integer where (deg P) * P* evaluates outside the integers,
/// when it does. Throws std::invalid_argument for the zero polynomial.
struct ReciprocalScaleProbe {
  bool p_ivp = false;
  bool scaled_reciprocal_ivp = false;
  std::optional<Integer> witness;
};

ReciprocalScaleProbe reciprocal_scale_probe(const RationalPolynomial& p);

}  // namespace genocchi
