#include <genocchi/ivp.hpp>

#include <genocchi/numtheory.hpp>

#include <stdexcept>
#include <string>

namespace genocchi {

bool NewtonExpansion::all_integral() const {
  for (const Rational& c : coeffs) {
    if (!c.is_integer()) return false;
  }
  return true;
}

NewtonExpansion newton_expand(const RationalPolynomial& p) {
  NewtonExpansion out;
  if (p.is_zero()) return out;
  RationalPolynomial q = p;
  for (int k = 0; k <= p.degree(); ++k) {
    out.coeffs.push_back(q(Rational(0)));
    q = forward_difference(q);
  }
  return out;
}

RationalPolynomial newton_reconstruct(const NewtonExpansion& e) {
  RationalPolynomial out;
  for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
    out = out + e.coeffs[k] * RationalPolynomial::binomial_basis(k);
  }
  return out;
}

namespace {

// First x in {0, ..., deg P} with P(x) non-integral. Integer values at
// deg P + 1 consecutive integers would force integer-valuedness, so a
// non-integer-valued polynomial always fails somewhere in this range.
std::optional<Integer> sampling_witness(const RationalPolynomial& p) {
  const int d = p.degree() < 0 ? 0 : p.degree();
  for (int x = 0; x <= d; ++x) {
    if (!p(Rational(x)).is_integer()) return Integer(x);
  }
  return std::nullopt;
}

}  // namespace

IvpCertificate certify_integer_valued(const RationalPolynomial& p, IvpMethod method) {
  IvpCertificate cert;
  cert.method = method;
  if (method == IvpMethod::newton_basis) {
    cert.is_integer_valued = newton_expand(p).all_integral();
    if (!cert.is_integer_valued) {
      cert.witness = sampling_witness(p);
      if (!cert.witness) {
        throw std::logic_error("certify_integer_valued: Newton basis rejected a polynomial "
                               "that is integral on 0..deg");
      }
    }
  } else {
    cert.witness = sampling_witness(p);
    cert.is_integer_valued = !cert.witness.has_value();
  }
  return cert;
}

RationalPolynomial genocchi_interpolant(std::size_t n, BernoulliCache& cache) {
  if (n == 0) return RationalPolynomial();
  cache.ensure(n - 1);
  std::vector<Rational> coeffs(n);
  for (std::size_t k = 0; k < n; ++k) {
    coeffs[k] = Rational(binomial(n, k)) * cache.at(k);
  }
  return RationalPolynomial(std::move(coeffs));
}

std::size_t genocchi_interpolant_degree(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("genocchi_interpolant_degree: requires n >= 1");
  }
  if (n % 2 == 1 || n == 2) return n - 1;
  return n - 2;
}

IvpCertificate bernoulli_reciprocal_ivp_check(std::size_t n, BernoulliCache& cache) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("bernoulli_reciprocal_ivp_check: requires odd n >= 3, got " +
                                std::to_string(n));
  }
  return certify_integer_valued(poly_reciprocal(bernoulli_polynomial(n, cache)));
}

RationalPolynomial faulhaber_poly(std::size_t n, BernoulliCache& cache) {
  cache.ensure(n);
  std::vector<Rational> coeffs(n + 2);
  const Rational scale(1, static_cast<long>(n) + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    coeffs[n + 1 - k] += scale * Rational(binomial(n + 1, k)) * cache.at(k);
  }
  coeffs[n] += Rational(1);
  return RationalPolynomial(std::move(coeffs));
}

IvpCertificate faulhaber_reciprocal_check(std::size_t n, BernoulliCache& cache) {
  const Rational n_plus_1(static_cast<long>(n) + 1);
  const RationalPolynomial scaled = n_plus_1 * poly_reciprocal(faulhaber_poly(n, cache));
  const RationalPolynomial expected =
      genocchi_interpolant(n + 1, cache) + RationalPolynomial::monomial(1, n_plus_1);
  if (!(scaled == expected)) {
    throw std::logic_error("faulhaber_reciprocal_check: (n+1) sigma_n* identity violated at n = " +
                           std::to_string(n));
  }
  return certify_integer_valued(scaled);
}

std::vector<TriangleRow> triangle(std::size_t max_n, BernoulliCache& cache) {
  if (max_n == 0) {
    throw std::invalid_argument("triangle: requires max_n >= 1");
  }
  cache.ensure(max_n);
  std::vector<TriangleRow> rows;
  rows.reserve(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const NewtonExpansion e = newton_expand(genocchi_interpolant(n, cache));
    TriangleRow row{n, {}};
    row.entries.reserve(e.coeffs.size());
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
      if (!e.coeffs[k].is_integer()) {
        throw std::logic_error("triangle: non-integer entry at (n, k) = (" +
                               std::to_string(n) + ", " + std::to_string(k) +
                               "): " + e.coeffs[k].str());
      }
      row.entries.push_back(e.coeffs[k].numerator());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ReciprocalScaleProbe reciprocal_scale_probe(const RationalPolynomial& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("reciprocal_scale_probe: degree of the zero polynomial is undefined");
  }
  ReciprocalScaleProbe probe;
  probe.p_ivp = certify_integer_valued(p).is_integer_valued;
  const RationalPolynomial scaled = Rational(p.degree()) * poly_reciprocal(p);
  const IvpCertificate cert = certify_integer_valued(scaled);
  probe.scaled_reciprocal_ivp = cert.is_integer_valued;
  probe.witness = cert.witness;
  return probe;
}

}  // namespace genocchi
