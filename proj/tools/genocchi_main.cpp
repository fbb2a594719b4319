// Command-line front end: exact tables, certificates, and the verification
// suites for generalized Genocchi numbers, Bernoulli polynomials, and the
// associated integer-valued polynomial families.

#include <genocchi/bernoulli.hpp>
#include <genocchi/format.hpp>
#include <genocchi/genocchi_numbers.hpp>
#include <genocchi/ivp.hpp>
#include <genocchi/numtheory.hpp>
#include <genocchi/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using genocchi::BernoulliCache;
using genocchi::Integer;
using genocchi::OutputFormat;
using genocchi::Rational;
using genocchi::Table;

std::string seconds_str(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", s);
  return buf;
}

int run_bernoulli(std::size_t max_n, OutputFormat format) {
  BernoulliCache cache(max_n);
  const std::vector<Integer> classical = genocchi::classical_genocchi(max_n, cache);
  Table table;
  table.columns = {"n", "B(n)", "G(n)"};
  for (std::size_t n = 0; n <= max_n; ++n) {
    table.rows.push_back({std::to_string(n), cache.at(n).str(), classical[n].get_str()});
  }
  std::cout << render_table(table, format);
  return 0;
}

int run_genocchi(unsigned long a, std::size_t max_n, const std::string& method,
                 bool certify, OutputFormat format) {
  genocchi::GenocchiTable table;
  if (method == "series") {
    table = genocchi::genocchi_by_series(a, max_n);
  } else if (method == "recurrence") {
    table = genocchi::genocchi_by_recurrence(a, max_n);
  } else {
    table = genocchi::genocchi_by_series(a, max_n);
    const genocchi::GenocchiTable other = genocchi::genocchi_by_recurrence(a, max_n);
    if (table.values != other.values) {
      throw std::logic_error("series and recurrence routes disagree for a = " +
                             std::to_string(a));
    }
  }

  if (certify) {
    const std::vector<bool> den_ok = genocchi::denominator_certificate(table);
    const std::vector<std::uint64_t> primes = genocchi::sweep_primes(a, max_n);
    nlohmann::ordered_json report = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n <= max_n; ++n) {
      nlohmann::ordered_json entry;
      entry["a"] = a;
      entry["n"] = n;
      entry["value"] = table.values[n].str();
      entry["den_bound_ok"] = static_cast<bool>(den_ok[n]);
      nlohmann::ordered_json valuations = nlohmann::ordered_json::object();
      for (std::uint64_t p : primes) {
        const genocchi::PAdicValuation v = genocchi::padic_valuation(p, table.values[n]);
        if (v.is_infinite()) {
          valuations[std::to_string(p)] = "inf";
        } else {
          valuations[std::to_string(p)] = v.value();
        }
      }
      entry["valuations"] = std::move(valuations);
      report.push_back(std::move(entry));
    }
    std::cout << report.dump(2) << "\n";
    return 0;
  }

  Table out;
  out.columns = {"n", "G(n,a)"};
  for (std::size_t n = 0; n <= max_n; ++n) {
    out.rows.push_back({std::to_string(n), table.values[n].str()});
  }
  std::cout << render_table(out, format);
  return 0;
}

int run_triangle(std::size_t max_n, bool pad_zeros, OutputFormat format) {
  BernoulliCache cache(max_n);
  std::vector<genocchi::TriangleRow> rows = genocchi::triangle(max_n, cache);
  if (pad_zeros) {
    for (auto& row : rows) {
      while (row.entries.size() < row.n) row.entries.emplace_back(0);
    }
  }
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.entries.size());

  Table table;
  table.columns.push_back("n");
  for (std::size_t k = 0; k < width; ++k) table.columns.push_back("k=" + std::to_string(k));
  for (const auto& row : rows) {
    std::vector<std::string> cells{std::to_string(row.n)};
    for (const Integer& e : row.entries) cells.push_back(e.get_str());
    table.rows.push_back(std::move(cells));
  }
  std::cout << render_table(table, format);
  return 0;
}

int run_sigma(std::size_t n, const std::optional<long>& eval_at, OutputFormat format) {
  BernoulliCache cache(n);
  const genocchi::RationalPolynomial sigma = genocchi::faulhaber_poly(n, cache);
  Table table;
  if (eval_at) {
    table.columns = {"n", "x", "value"};
    table.rows.push_back({std::to_string(n), std::to_string(*eval_at),
                          sigma(Rational(*eval_at)).str()});
  } else {
    table.columns = {"k", "coeff"};
    for (std::size_t k = 0; k < sigma.coeffs().size(); ++k) {
      table.rows.push_back({std::to_string(k), sigma.coeffs()[k].str()});
    }
  }
  std::cout << render_table(table, format);
  return 0;
}

int run_ivp_check(const std::string& poly_text, OutputFormat format) {
  const genocchi::RationalPolynomial p = genocchi::parse_polynomial(poly_text);
  const genocchi::NewtonExpansion newton = genocchi::newton_expand(p);
  const genocchi::IvpCertificate basis =
      genocchi::certify_integer_valued(p, genocchi::IvpMethod::newton_basis);
  const genocchi::IvpCertificate sampling =
      genocchi::certify_integer_valued(p, genocchi::IvpMethod::consecutive_sampling);

  Table table;
  table.columns = {"field", "value"};
  table.rows.push_back({"polynomial", genocchi::polynomial_to_string(p)});
  table.rows.push_back({"degree", std::to_string(p.degree())});
  for (std::size_t k = 0; k < newton.coeffs.size(); ++k) {
    table.rows.push_back({"newton[" + std::to_string(k) + "]", newton.coeffs[k].str()});
  }
  table.rows.push_back({"integer_valued(newton_basis)",
                        basis.is_integer_valued ? "true" : "false"});
  table.rows.push_back({"integer_valued(sampling)",
                        sampling.is_integer_valued ? "true" : "false"});
  table.rows.push_back({"witness", basis.witness ? basis.witness->get_str() : ""});
  if (!p.is_zero()) {
    const genocchi::ReciprocalScaleProbe probe = genocchi::reciprocal_scale_probe(p);
    table.rows.push_back({"scaled_reciprocal_integer_valued",
                          probe.scaled_reciprocal_ivp ? "true" : "false"});
    table.rows.push_back({"scaled_reciprocal_witness",
                          probe.witness ? probe.witness->get_str() : ""});
  }
  std::cout << render_table(table, format);
  return 0;
}

int run_verify_cmd(const std::string& suite, const genocchi::VerifyOptions& options,
                   OutputFormat format) {
  const std::vector<genocchi::VerifyReport> reports =
      genocchi::run_verify({suite}, options);

  if (format == OutputFormat::json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json entry;
      entry["suite"] = r.suite;
      entry["cases"] = r.cases;
      entry["failures"] = nlohmann::ordered_json::array();
      for (const auto& f : r.failures) {
        entry["failures"].push_back({{"inputs", f.inputs}, {"offending", f.offending}});
      }
      entry["notes"] = r.notes;
      entry["wall_seconds"] = seconds_str(r.wall_seconds);
      out.push_back(std::move(entry));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    Table table;
    table.columns = {"suite", "cases", "failures", "time_s"};
    for (const auto& r : reports) {
      table.rows.push_back({r.suite, std::to_string(r.cases),
                            std::to_string(r.failures.size()), seconds_str(r.wall_seconds)});
    }
    std::cout << render_table(table, format);
    for (const auto& r : reports) {
      for (const auto& note : r.notes) {
        std::cerr << "note [" << r.suite << "]: " << note << "\n";
      }
      for (const auto& f : r.failures) {
        std::cerr << "FAIL [" << r.suite << "] " << f.inputs;
        if (!f.offending.empty()) std::cerr << " -> " << f.offending;
        std::cerr << "\n";
      }
    }
  }

  for (const auto& r : reports) {
    if (!r.passed()) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized Genocchi numbers, Bernoulli polynomials, and "
               "integer-valued polynomial certificates"};
  app.require_subcommand(1);

  const auto format_check = CLI::IsMember({"markdown-table", "csv", "json"});

  auto* bern = app.add_subcommand("bernoulli",
                                  "Bernoulli numbers B_n and classical Genocchi numbers G_n");
  std::size_t bern_max_n = 30;
  std::string bern_format = "markdown-table";
  bern->add_option("--max-n", bern_max_n, "largest index n");
  bern->add_option("--format", bern_format, "output format")->check(format_check);

  auto* gen = app.add_subcommand("genocchi", "generalized Genocchi numbers G_{n,a}");
  unsigned long gen_a = 2;
  std::size_t gen_max_n = 40;
  std::string gen_method = "both";
  bool gen_certify = false;
  std::string gen_format = "markdown-table";
  gen->add_option("--a", gen_a, "parameter a >= 2")->required();
  gen->add_option("--max-n", gen_max_n, "largest index n");
  gen->add_option("--method", gen_method, "computation route")
      ->check(CLI::IsMember({"series", "recurrence", "both"}));
  gen->add_flag("--certify", gen_certify,
                "emit a JSON report with denominator bounds and p-adic valuations");
  gen->add_option("--format", gen_format, "output format")->check(format_check);

  auto* tri = app.add_subcommand("triangle",
                                 "Newton coefficients a_{n,k} of the interpolating polynomials");
  std::size_t tri_max_n = 8;
  bool tri_pad = false;
  std::string tri_format = "markdown-table";
  tri->add_option("--max-n", tri_max_n, "largest row n");
  tri->add_flag("--pad-zeros", tri_pad, "emit the omitted zero entries of even rows");
  tri->add_option("--format", tri_format, "output format")->check(format_check);

  auto* sig = app.add_subcommand("sigma", "Faulhaber power-sum interpolant sigma_n");
  std::size_t sig_n = 0;
  long sig_eval = 0;
  std::string sig_format = "markdown-table";
  sig->add_option("--n", sig_n, "power n")->required();
  auto* sig_eval_opt = sig->add_option("--eval", sig_eval, "evaluate at the integer x");
  sig->add_option("--format", sig_format, "output format")->check(format_check);

  auto* ivp = app.add_subcommand("ivp-check", "integer-valuedness certificate for a polynomial");
  std::string ivp_poly;
  std::string ivp_format = "markdown-table";
  ivp->add_option("--poly", ivp_poly,
                  "comma-separated rational coefficients, lowest degree first")
      ->required();
  ivp->add_option("--format", ivp_format, "output format")->check(format_check);

  auto* ver = app.add_subcommand("verify", "run the verification suites");
  std::string ver_suite = "all";
  genocchi::VerifyOptions ver_options;
  bool ver_sequential = false;
  std::string ver_format = "markdown-table";
  ver->add_option("--suite", ver_suite, "suite name or 'all'");
  ver->add_option("--seed", ver_options.seed, "seed for the randomized property suites");
  ver->add_option("--max-a", ver_options.max_a, "largest a for the Genocchi sweeps");
  ver->add_option("--max-n", ver_options.genocchi_max_n, "largest n for the Genocchi sweeps");
  ver->add_option("--poly-max-n", ver_options.poly_max_n,
                  "largest n for the polynomial identity sweeps");
  ver->add_option("--instances", ver_options.property_instances,
                  "instances per randomized property");
  ver->add_flag("--sequential", ver_sequential, "run suites one at a time");
  ver->add_option("--format", ver_format, "output format")->check(format_check);

  CLI11_PARSE(app, argc, argv);

  try {
    if (bern->parsed()) {
      return run_bernoulli(bern_max_n, genocchi::parse_output_format(bern_format));
    }
    if (gen->parsed()) {
      return run_genocchi(gen_a, gen_max_n, gen_method, gen_certify,
                          genocchi::parse_output_format(gen_format));
    }
    if (tri->parsed()) {
      return run_triangle(tri_max_n, tri_pad, genocchi::parse_output_format(tri_format));
    }
    if (sig->parsed()) {
      std::optional<long> eval_at;
      if (sig_eval_opt->count() > 0) eval_at = sig_eval;
      return run_sigma(sig_n, eval_at, genocchi::parse_output_format(sig_format));
    }
    if (ivp->parsed()) {
      return run_ivp_check(ivp_poly, genocchi::parse_output_format(ivp_format));
    }
    if (ver->parsed()) {
      ver_options.concurrent = !ver_sequential;
      return run_verify_cmd(ver_suite, ver_options, genocchi::parse_output_format(ver_format));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
