#include <genocchi/verify.hpp>

#include <genocchi/bernoulli.hpp>
#include <genocchi/egf_series.hpp>
#include <genocchi/format.hpp>
#include <genocchi/genocchi_numbers.hpp>
#include <genocchi/ivp.hpp>
#include <genocchi/numtheory.hpp>
#include <genocchi/polynomial.hpp>
#include <genocchi/rational.hpp>

#include <algorithm>
#include <chrono>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

namespace genocchi {

namespace {

// FNV-1a over the suite name, mixed with the base seed; stable across runs
// so identical invocations replay identical instances.
std::uint64_t suite_seed(std::uint64_t base, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL ^ base;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

struct Recorder {
  VerifyReport report;

  void check(bool ok, const std::string& inputs, const std::string& offending) {
    ++report.cases;
    if (!ok) report.failures.push_back({inputs, offending});
  }
};

long rand_in(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Rational random_rational(std::mt19937_64& rng) {
  return Rational(rand_in(rng, -99, 99), rand_in(rng, 1, 30));
}

std::vector<Rational> random_integer_coeffs(std::mt19937_64& rng, std::size_t count,
                                            long lo, long hi) {
  std::vector<Rational> out(count);
  for (auto& c : out) c = Rational(rand_in(rng, lo, hi));
  return out;
}

std::string val_str(const PAdicValuation& v) {
  return v.is_infinite() ? "inf" : std::to_string(v.value());
}

// ---------------------------------------------------------------------------
// core-numerics: valuation laws, den/valuation consistency, Pascal identity
// ---------------------------------------------------------------------------

VerifyReport suite_core_numerics(const VerifyOptions& opt) {
  Recorder rec;
  std::mt19937_64 rng(suite_seed(opt.seed, "core-numerics"));
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};

  for (std::size_t i = 0; i < opt.property_instances; ++i) {
    const Rational x = random_rational(rng);
    const Rational y = random_rational(rng);
    const std::uint64_t p = primes[rand_in(rng, 0, 5)];
    const PAdicValuation vx = padic_valuation(p, x);
    const PAdicValuation vy = padic_valuation(p, y);
    const PAdicValuation vprod = padic_valuation(p, x * y);
    rec.check(vprod == vx + vy,
              "p=" + std::to_string(p) + " x=" + x.str() + " y=" + y.str(),
              "v(xy)=" + val_str(vprod) + " v(x)+v(y)=" + val_str(vx + vy));
    const PAdicValuation vsum = padic_valuation(p, x + y);
    rec.check(vsum >= min(vx, vy),
              "p=" + std::to_string(p) + " x=" + x.str() + " y=" + y.str(),
              "v(x+y)=" + val_str(vsum) + " min=" + val_str(min(vx, vy)));
  }

  for (std::size_t i = 0; i < opt.property_instances; ++i) {
    Rational x(rand_in(rng, 0, 1) == 0 ? 1 : -1);
    Integer expected_den(1);
    std::ostringstream desc;
    for (std::uint64_t p : primes) {
      const long e = rand_in(rng, -4, 4);
      desc << " " << p << "^" << e;
      if (e >= 0) {
        x *= Rational(int_pow(Integer(static_cast<unsigned long>(p)),
                              static_cast<unsigned long>(e)));
      } else {
        x /= Rational(int_pow(Integer(static_cast<unsigned long>(p)),
                              static_cast<unsigned long>(-e)));
        expected_den *= int_pow(Integer(static_cast<unsigned long>(p)),
                                static_cast<unsigned long>(-e));
      }
    }
    rec.check(denominator_of(x) == expected_den, "x =" + desc.str(),
              "den=" + denominator_of(x).get_str());
    Integer via_valuations(1);
    for (std::uint64_t p : primes) {
      const PAdicValuation v = padic_valuation(p, x);
      if (!v.is_infinite() && v.value() < 0) {
        via_valuations *= int_pow(Integer(static_cast<unsigned long>(p)),
                                  static_cast<unsigned long>(-v.value()));
      }
    }
    rec.check(via_valuations == denominator_of(x), "x =" + desc.str(),
              "prod p^{-v_p}=" + via_valuations.get_str());
  }

  for (unsigned long n = 1; n <= 64; ++n) {
    for (unsigned long k = 1; k <= n; ++k) {
      rec.check(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k),
                "Pascal n=" + std::to_string(n) + " k=" + std::to_string(k),
                binomial(n, k).get_str());
    }
  }

  return rec.report;
}

// ---------------------------------------------------------------------------
// egf-series: product closure, reciprocal integrality both directions,
// denominator bound, round-trip, scaling
// ---------------------------------------------------------------------------

VerifyReport suite_egf_series(const VerifyOptions& opt) {
  Recorder rec;
  std::mt19937_64 rng(suite_seed(opt.seed, "egf-series"));
  const std::size_t instances = opt.property_instances;

  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t order = rand_in(rng, 4, 16);
    const EGFSeries f(random_integer_coeffs(rng, order + 1, -9, 9));
    const EGFSeries g(random_integer_coeffs(rng, order + 1, -9, 9));
    const IdcCertificate cert = idc_check(f * g);
    rec.check(cert.is_idc, "product closure #" + std::to_string(i),
              cert.is_idc ? "" : (f * g).coeff(cert.first_violation->first).str());
  }

  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t order = rand_in(rng, 4, 32);
    auto coeffs = random_integer_coeffs(rng, order + 1, -9, 9);
    coeffs[0] = Rational(rand_in(rng, 0, 1) == 0 ? 1 : -1);
    const EGFSeries f(std::move(coeffs));
    rec.check(idc_check(f.reciprocal()).is_idc,
              "unit constant term, instance #" + std::to_string(i), f.str());
  }

  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t order = rand_in(rng, 2, 12);
    auto coeffs = random_integer_coeffs(rng, order + 1, -9, 9);
    const long a0 = (rand_in(rng, 0, 1) == 0 ? 1 : -1) * rand_in(rng, 2, 99);
    coeffs[0] = Rational(a0);
    const EGFSeries f(std::move(coeffs));
    const Rational b0 = f.reciprocal().coeff(0);
    rec.check(!b0.is_integer(), "a0=" + std::to_string(a0), "b0=" + b0.str());
  }

  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t order = rand_in(rng, 2, 16);
    auto coeffs = random_integer_coeffs(rng, order + 1, -9, 9);
    long a0 = rand_in(rng, -9, 9);
    if (a0 == 0) a0 = 3;
    coeffs[0] = Rational(a0);
    const EGFSeries f(std::move(coeffs));
    const EGFSeries b = f.reciprocal();
    for (std::size_t n = 0; n <= order; ++n) {
      rec.check(divides(denominator_of(b.coeff(n)),
                        int_pow(Integer(a0), static_cast<unsigned long>(n) + 1)),
                "a0=" + std::to_string(a0) + " n=" + std::to_string(n),
                "den(b_n)=" + denominator_of(b.coeff(n)).get_str());
    }
    rec.check(f * b == EGFSeries::one(order), "round trip #" + std::to_string(i),
              (f * b).str());
  }

  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t order = rand_in(rng, 2, 10);
    std::vector<Rational> coeffs(order + 1);
    for (auto& c : coeffs) c = random_rational(rng);
    const EGFSeries f(std::move(coeffs));
    const Rational c = random_rational(rng);
    const Rational d = random_rational(rng);
    rec.check(f.scale_argument(c).scale_argument(d) == f.scale_argument(c * d),
              "c=" + c.str() + " d=" + d.str(), f.str());
  }

  return rec.report;
}

// ---------------------------------------------------------------------------
// bernoulli: dual-route agreement, odd zeros, difference property,
// classical Genocchi bridge, von Staudt-Clausen
// ---------------------------------------------------------------------------

VerifyReport suite_bernoulli(const VerifyOptions& opt) {
  Recorder rec;
  const std::size_t max_n = 64;
  BernoulliCache cache(max_n);

  std::vector<Rational> oracle(max_n + 1);
  oracle[0] = Rational(1);
  for (std::size_t n = 1; n <= max_n; ++n) {
    Rational acc;
    for (std::size_t k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * oracle[k];
    oracle[n] = -(acc / Rational(static_cast<long>(n) + 1));
  }
  for (std::size_t n = 0; n <= max_n; ++n) {
    rec.check(cache.at(n) == oracle[n], "B_" + std::to_string(n),
              cache.at(n).str() + " vs " + oracle[n].str());
    if (n >= 3 && n % 2 == 1) {
      rec.check(cache.at(n).is_zero(), "odd B_" + std::to_string(n), cache.at(n).str());
    }
  }

  for (std::size_t n = 0; n <= max_n; ++n) {
    const RationalPolynomial b = bernoulli_polynomial(n, cache);
    const Rational diff = b(Rational(1)) - b(Rational(0));
    rec.check(diff == (n == 1 ? Rational(1) : Rational(0)),
              "B_n(1)-B_n(0), n=" + std::to_string(n), diff.str());
    rec.check(b.degree() == static_cast<int>(n), "deg B_n(X), n=" + std::to_string(n),
              std::to_string(b.degree()));
  }

  const std::size_t bridge_n = std::min<std::size_t>(40, opt.genocchi_max_n);
  const std::vector<Integer> classical = classical_genocchi(bridge_n, cache);
  const GenocchiTable table = genocchi_by_series(2, bridge_n);
  for (std::size_t n = 0; n <= bridge_n; ++n) {
    rec.check(table.values[n] == Rational(classical[n]),
              "G_{n,2} vs classical, n=" + std::to_string(n), table.values[n].str());
  }

  for (std::size_t n = 2; n <= max_n; n += 2) {
    rec.check(von_staudt_clausen_check(n, cache), "von Staudt-Clausen n=" + std::to_string(n),
              cache.at(n).str());
  }

  return rec.report;
}

// ---------------------------------------------------------------------------
// genocchi: cross-oracle equality, integrality, denominator and valuation
// certificates, reciprocal-coefficient audit, polynomial bridge
// ---------------------------------------------------------------------------

VerifyReport suite_genocchi(const VerifyOptions& opt) {
  Recorder rec;
  const std::size_t max_n = opt.genocchi_max_n;
  BernoulliCache cache(std::max<std::size_t>(max_n, 1));

  std::vector<RationalPolynomial> interpolants(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) interpolants[n] = genocchi_interpolant(n, cache);

  for (unsigned long a = 2; a <= opt.max_a; ++a) {
    const GenocchiTable series = genocchi_by_series(a, max_n);
    const GenocchiTable recurrence = genocchi_by_recurrence(a, max_n);
    const std::vector<bool> den_ok = denominator_certificate(series);
    for (std::size_t n = 0; n <= max_n; ++n) {
      const std::string where = "a=" + std::to_string(a) + " n=" + std::to_string(n);
      rec.check(series.values[n] == recurrence.values[n], "routes agree " + where,
                series.values[n].str() + " vs " + recurrence.values[n].str());
      rec.check(series.values[n].is_integer(), "integrality " + where,
                series.values[n].str());
      rec.check(den_ok[n], "den(G) | a^{n-1} " + where, series.values[n].str());
      rec.check(interpolants[n](Rational(Integer(a))) == series.values[n],
                "interpolant bridge " + where, interpolants[n](Rational(Integer(a))).str());
    }

    if (max_n >= 1) {
      const EGFSeries b = EGFSeries::geometric_sum(a, max_n - 1).reciprocal();
      for (std::size_t n = 0; n + 1 <= max_n; ++n) {
        rec.check(divides(denominator_of(b.coeff(n)),
                          int_pow(Integer(a), static_cast<unsigned long>(n) + 1)),
                  "den(b_n) | a^{n+1} a=" + std::to_string(a) + " n=" + std::to_string(n),
                  denominator_of(b.coeff(n)).get_str());
      }
    }

    for (std::uint64_t p : prime_divisors(a)) {
      rec.check(recurrence_terms_p_integral(a, p, 64),
                "v_p(a^k/(k+1)) >= 0, a=" + std::to_string(a) + " p=" + std::to_string(p), "");
    }

    for (std::uint64_t p : sweep_primes(a, max_n)) {
      for (std::size_t n = 1; n <= max_n; ++n) {
        const PAdicValuation v = valuation_certificate(series, n, p);
        rec.check(v.at_least(0),
                  "v_p(G) >= 0, a=" + std::to_string(a) + " n=" + std::to_string(n) +
                      " p=" + std::to_string(p),
                  val_str(v));
      }
    }
  }

  return rec.report;
}

// ---------------------------------------------------------------------------
// ivp-polynomials: the section-4 identities, certificates, triangle, and
// the randomized polynomial properties
// ---------------------------------------------------------------------------

const std::vector<std::vector<long>>& known_triangle_rows() {
  static const std::vector<std::vector<long>> rows = {
      {1},
      {1, -1},
      {1, -1, 1},
      {1, -1, 2},
      {1, -1, 1, -6, -4},
      {1, -1, -2, -18, -12},
      {1, -1, 1, 48, 232, 300, 120},
      {1, -1, 18, 276, 984, 1200, 480},
  };
  return rows;
}

VerifyReport suite_ivp(const VerifyOptions& opt) {
  Recorder rec;
  std::mt19937_64 rng(suite_seed(opt.seed, "ivp-polynomials"));
  const std::size_t instances = opt.property_instances;
  const std::size_t poly_n = opt.poly_max_n;
  BernoulliCache cache(std::max<std::size_t>(poly_n + 1, 22));

  for (std::size_t n = 0; n <= poly_n; ++n) {
    const RationalPolynomial direct = genocchi_interpolant(n, cache);
    const RationalPolynomial via_reciprocal = poly_reciprocal(
        bernoulli_polynomial(n, cache) - RationalPolynomial::constant(cache.at(n)));
    rec.check(direct == via_reciprocal, "closed form vs (B_n(X)-B_n)*, n=" + std::to_string(n),
              "");
    if (n >= 1) {
      rec.check(direct.degree() == static_cast<int>(genocchi_interpolant_degree(n)),
                "degree law n=" + std::to_string(n), std::to_string(direct.degree()));
      rec.check(direct(Rational(0)) == Rational(1), "value at 0, n=" + std::to_string(n),
                direct(Rational(0)).str());
    }
  }

  for (std::size_t k = 1; k <= 8; ++k) {
    rec.check(forward_difference(RationalPolynomial::binomial_basis(k)) ==
                  RationalPolynomial::binomial_basis(k - 1),
              "delta C(X,k) = C(X,k-1), k=" + std::to_string(k), "");
  }

  const auto rows = triangle(12, cache);
  const auto& expected = known_triangle_rows();
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto& row = rows[n - 1].entries;
    bool match = row.size() == expected[n - 1].size();
    for (std::size_t k = 0; match && k < row.size(); ++k) {
      match = row[k] == Integer(expected[n - 1][k]);
    }
    rec.check(match, "triangle row n=" + std::to_string(n), "");
  }
  for (std::size_t n = 9; n <= 12; ++n) {
    const auto& row = rows[n - 1].entries;
    std::ostringstream note;
    note << "row n=" << n << ": a_{n,0}=" << row[0] << ", a_{n,1}=" << row[1]
         << (row[0] == 1 && row[1] == -1 ? " (pattern persists)" : " (pattern breaks)");
    rec.report.notes.push_back(note.str());
  }

  for (std::size_t n = 0; n <= 12; ++n) {
    const RationalPolynomial g = genocchi_interpolant(n, cache);
    const IvpCertificate basis = certify_integer_valued(g, IvpMethod::newton_basis);
    const IvpCertificate sampling = certify_integer_valued(g, IvpMethod::consecutive_sampling);
    rec.check(basis.is_integer_valued && sampling.is_integer_valued &&
                  basis.is_integer_valued == sampling.is_integer_valued,
              "interpolant integer-valued, n=" + std::to_string(n), "");
  }

  for (std::size_t n = 3; n <= 21; n += 2) {
    rec.check(bernoulli_reciprocal_ivp_check(n, cache).is_integer_valued,
              "B_n* integer-valued, n=" + std::to_string(n), "");
  }

  for (std::size_t n = 0; n <= 20; ++n) {
    bool ok = false;
    std::string detail;
    try {
      ok = faulhaber_reciprocal_check(n, cache).is_integer_valued;
    } catch (const std::logic_error& e) {
      detail = e.what();
    }
    rec.check(ok, "(n+1) sigma_n* check, n=" + std::to_string(n), detail);

    const ReciprocalScaleProbe probe = reciprocal_scale_probe(faulhaber_poly(n, cache));
    rec.check(probe.p_ivp && probe.scaled_reciprocal_ivp,
              "sigma probe n=" + std::to_string(n), "");
  }

  for (std::size_t n = 0; n <= 10; ++n) {
    const RationalPolynomial s = faulhaber_poly(n, cache);
    for (long a = 0; a <= 20; ++a) {
      Integer sum = n == 0 ? 1 : 0;  // 0^0 = 1
      for (long j = 1; j <= a; ++j) sum += int_pow(Integer(j), n);
      rec.check(s(Rational(a)) == Rational(sum),
                "power sum n=" + std::to_string(n) + " a=" + std::to_string(a),
                s(Rational(a)).str() + " vs " + sum.get_str());
    }
  }

  {
    const ReciprocalScaleProbe probe = reciprocal_scale_probe(RationalPolynomial::binomial_basis(3));
    bool witness_valid = false;
    if (probe.witness) {
      const RationalPolynomial scaled =
          Rational(3) * poly_reciprocal(RationalPolynomial::binomial_basis(3));
      witness_valid = !scaled(Rational(*probe.witness)).is_integer();
    }
    rec.check(probe.p_ivp && !probe.scaled_reciprocal_ivp && witness_valid,
              "C(X,3) counterexample probe", "");
    const ReciprocalScaleProbe linear = reciprocal_scale_probe(RationalPolynomial::monomial(1));
    rec.check(linear.p_ivp && linear.scaled_reciprocal_ivp, "X probe", "");
  }

  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t deg = rand_in(rng, 0, 16);
    std::vector<Rational> coeffs(deg + 1);
    for (auto& c : coeffs) c = random_rational(rng);
    const RationalPolynomial p(std::move(coeffs));
    rec.check(newton_reconstruct(newton_expand(p)) == p,
              "Newton round-trip #" + std::to_string(i), "");
  }

  for (std::size_t i = 0; i < instances; ++i) {
    RationalPolynomial p;
    if (i % 2 == 0) {
      const std::size_t deg = rand_in(rng, 0, 10);
      for (std::size_t k = 0; k <= deg; ++k) {
        p = p + Rational(rand_in(rng, -50, 50)) * RationalPolynomial::binomial_basis(k);
      }
    } else {
      const std::size_t deg = rand_in(rng, 0, 10);
      std::vector<Rational> coeffs(deg + 1);
      for (auto& c : coeffs) c = random_rational(rng);
      p = RationalPolynomial(std::move(coeffs));
    }
    const IvpCertificate basis = certify_integer_valued(p, IvpMethod::newton_basis);
    const IvpCertificate sampling = certify_integer_valued(p, IvpMethod::consecutive_sampling);
    bool ok = basis.is_integer_valued == sampling.is_integer_valued;
    if (ok && !basis.is_integer_valued) {
      ok = basis.witness && sampling.witness &&
           !p(Rational(*basis.witness)).is_integer() &&
           !p(Rational(*sampling.witness)).is_integer();
    }
    rec.check(ok, "certification agreement #" + std::to_string(i), "");
  }

  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t deg = rand_in(rng, 0, 8);
    const long shift = rand_in(rng, -10, 10);
    RationalPolynomial p;
    for (std::size_t k = 0; k <= deg; ++k) {
      // integer multiples of C(X - shift, k): integral at shift..shift+deg
      RationalPolynomial basis = RationalPolynomial::constant(Rational(1));
      for (std::size_t j = 0; j < k; ++j) {
        basis = basis * RationalPolynomial(
                            {Rational(-shift - static_cast<long>(j)), Rational(1)});
      }
      basis = Rational(Integer(1), factorial(k)) * basis;
      p = p + Rational(rand_in(rng, -99, 99)) * basis;
    }
    rec.check(certify_integer_valued(p, IvpMethod::newton_basis).is_integer_valued,
              "consecutive integrality implies IVP, #" + std::to_string(i),
              "shift=" + std::to_string(shift));
  }

  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t deg = rand_in(rng, 0, 12);
    std::vector<Rational> coeffs(deg + 1);
    for (auto& c : coeffs) c = random_rational(rng);
    if (coeffs[0].is_zero()) coeffs[0] = Rational(1);
    const RationalPolynomial p(std::move(coeffs));
    rec.check(poly_reciprocal(poly_reciprocal(p)) == p,
              "reciprocal involution #" + std::to_string(i), "");
  }

  return rec.report;
}

// ---------------------------------------------------------------------------
// cli: rendering determinism and p/q round-trips
// ---------------------------------------------------------------------------

VerifyReport suite_cli(const VerifyOptions& opt) {
  Recorder rec;
  std::mt19937_64 rng(suite_seed(opt.seed, "cli"));

  for (std::size_t i = 0; i < opt.property_instances; ++i) {
    const Rational x = random_rational(rng);
    rec.check(Rational::parse(x.str()) == x, "p/q round-trip", x.str());
  }

  Table table;
  table.columns = {"n", "value"};
  for (std::size_t i = 0; i < 24; ++i) {
    table.rows.push_back({std::to_string(i), random_rational(rng).str()});
  }
  for (OutputFormat fmt : {OutputFormat::markdown, OutputFormat::csv, OutputFormat::json}) {
    rec.check(render_table(table, fmt) == render_table(table, fmt),
              "render determinism", "");
  }

  for (std::size_t i = 0; i < opt.property_instances; ++i) {
    const std::size_t deg = rand_in(rng, 0, 8);
    std::vector<Rational> coeffs(deg + 1);
    for (auto& c : coeffs) c = random_rational(rng);
    const RationalPolynomial p(std::move(coeffs));
    rec.check(parse_polynomial(polynomial_to_string(p)) == p,
              "polynomial text round-trip", polynomial_to_string(p));
  }

  return rec.report;
}

using SuiteFn = VerifyReport (*)(const VerifyOptions&);

SuiteFn lookup_suite(const std::string& name) {
  if (name == "core-numerics") return suite_core_numerics;
  if (name == "egf-series") return suite_egf_series;
  if (name == "bernoulli") return suite_bernoulli;
  if (name == "genocchi") return suite_genocchi;
  if (name == "ivp-polynomials") return suite_ivp;
  if (name == "cli") return suite_cli;
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "core-numerics", "egf-series", "bernoulli", "genocchi", "ivp-polynomials", "cli"};
  return names;
}

VerifyReport run_verify_suite(const std::string& name, const VerifyOptions& options) {
  const SuiteFn fn = lookup_suite(name);
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  try {
    report = fn(options);
  } catch (const std::exception& e) {
    ++report.cases;
    report.failures.push_back({"suite aborted by exception", e.what()});
  }
  report.suite = name;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerifyReport> run_verify(std::vector<std::string> names,
                                     const VerifyOptions& options) {
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    names = verify_suite_names();
  }
  for (const auto& name : names) lookup_suite(name);  // reject unknown names up front

  std::vector<VerifyReport> reports;
  reports.reserve(names.size());
  if (!options.concurrent || names.size() == 1) {
    for (const auto& name : names) reports.push_back(run_verify_suite(name, options));
    return reports;
  }

  std::vector<std::future<VerifyReport>> futures;
  futures.reserve(names.size());
  for (const auto& name : names) {
    futures.push_back(std::async(std::launch::async, [name, options] {
      return run_verify_suite(name, options);
    }));
  }
  for (auto& f : futures) reports.push_back(f.get());
  return reports;
}

}  // namespace genocchi
