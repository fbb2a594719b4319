#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace genocchi {

struct VerifyFailure {
  std::string inputs;
  std::string offending;
};

/// Result of one verification suite. failures is empty iff the suite passed.
struct VerifyReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<VerifyFailure> failures;
  std::vector<std::string> notes;
  double wall_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

/// Desk-scale defaults: chosen to finish in seconds with exact arithmetic
/// while still exercising large denominators.
struct VerifyOptions {
  std::uint64_t seed = 54721;
  unsigned long max_a = 12;
  std::size_t genocchi_max_n = 40;
  std::size_t poly_max_n = 30;
  std::size_t property_instances = 200;
  bool concurrent = true;
};

/// Suite names in declaration order: core-numerics, egf-series, bernoulli,
/// genocchi, ivp-polynomials, cli.
const std::vector<std::string>& verify_suite_names();

/// Throws std::invalid_argument for an unknown suite name.
VerifyReport run_verify_suite(const std::string& name, const VerifyOptions& options);

/// Runs the named suites ("all" or an empty list means every suite),
/// concurrently when options.concurrent is set; reports always come back in
/// declaration order.
std::vector<VerifyReport> run_verify(std::vector<std::string> names, const VerifyOptions& options);

}  // namespace genocchi
