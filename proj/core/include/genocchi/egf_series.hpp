#pragma once

#include <genocchi/rational.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace genocchi {

/// Truncated formal power series S(t) = sum_{n=0}^{N} a_n t^n/n!, stored by
/// its differential coefficients a_0..a_N (the n-th derivative at 0), never
/// by ordinary Taylor coefficients: the integrality bookkeeping is about the
/// a_n.
///
/// The truncation order N is an explicit construction parameter and all
/// binary operations demand equal orders instead of silently truncating.
class EGFSeries {
public:
  /// coeffs[n] = a_n; order = coeffs.size() - 1. Requires a nonempty list.
  explicit EGFSeries(std::vector<Rational> coeffs);

  static EGFSeries zero(std::size_t order);
  /// The multiplicative identity [1, 0, ..., 0].
  static EGFSeries one(std::size_t order);
  /// e^{ct}: a_n = c^n.
  static EGFSeries exponential(const Rational& c, std::size_t order);
  /// 1 + e^t + ... + e^{(a-1)t} for a >= 2: a_0 = a and
  /// a_n = 1^n + 2^n + ... + (a-1)^n for n >= 1.
  static EGFSeries geometric_sum(unsigned long a, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& coeff(std::size_t n) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Multiplicative inverse up to the truncation order, by the triangular
  /// recurrence b_0 = 1/a_0, b_n = -(1/a_0) sum_{k=1}^{n} C(n,k) a_k b_{n-k}.
  /// Throws std::domain_error when a_0 = 0.
  EGFSeries reciprocal() const;

  /// f(ct): a_n -> c^n a_n.
  EGFSeries scale_argument(const Rational& c) const;

  friend EGFSeries operator+(const EGFSeries& f, const EGFSeries& g);
  /// Binomial convolution c_n = sum_k C(n,k) a_k b_{n-k}.
  friend EGFSeries operator*(const EGFSeries& f, const EGFSeries& g);
  /// Pointwise scalar multiple.
  friend EGFSeries operator*(const Rational& c, const EGFSeries& f);

  friend bool operator==(const EGFSeries&, const EGFSeries&) = default;

  /// Display form "a0 + a1*t^1/1! + ...".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const EGFSeries& f);

private:
  std::vector<Rational> coeffs_;
};

/// Outcome of the integral-differential-coefficient check.
struct IdcCertificate {
  bool is_idc = false;
  /// Index and value of the first non-integral coefficient, when any.
  std::optional<std::pair<std::size_t, Rational>> first_violation;
};

IdcCertificate idc_check(const EGFSeries& f);

}  // namespace genocchi
