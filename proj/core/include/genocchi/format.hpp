#pragma once

#include <genocchi/polynomial.hpp>
#include <genocchi/rational.hpp>

#include <string>
#include <vector>

namespace genocchi {

enum class OutputFormat { markdown, csv, json };

/// Accepts "markdown-table", "csv", "json"; throws std::invalid_argument
/// otherwise.
OutputFormat parse_output_format(const std::string& name);

/// A rectangular table of pre-rendered cells. Ragged rows are allowed and
/// padded with empty cells up to the column count.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Deterministic rendering: identical input yields identical bytes.
/// JSON objects omit empty cells; markdown and CSV keep them as empty fields.
std::string render_table(const Table& table, OutputFormat format);

/// Comma-separated rational coefficients, lowest degree first ("1/6,-1/2,1/3").
RationalPolynomial parse_polynomial(const std::string& text);
/// Inverse of parse_polynomial; "0" for the zero polynomial.
std::string polynomial_to_string(const RationalPolynomial& p);

}  // namespace genocchi
