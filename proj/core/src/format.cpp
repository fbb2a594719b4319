#include <genocchi/format.hpp>

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace genocchi {

OutputFormat parse_output_format(const std::string& name) {
  if (name == "markdown-table") return OutputFormat::markdown;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format '" + name +
                              "' (expected markdown-table, csv, or json)");
}

namespace {

std::string cell_at(const Table& table, std::size_t row, std::size_t col) {
  const auto& cells = table.rows[row];
  return col < cells.size() ? cells[col] : std::string();
}

std::string render_markdown(const Table& table) {
  std::ostringstream os;
  os << '|';
  for (const auto& name : table.columns) os << ' ' << name << " |";
  os << '\n' << '|';
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << " --- |";
  os << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << '|';
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      os << ' ' << cell_at(table, r, c) << " |";
    }
    os << '\n';
  }
  return os.str();
}

std::string render_csv(const Table& table) {
  std::ostringstream os;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) os << ',';
    os << table.columns[c];
  }
  os << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) os << ',';
      os << cell_at(table, r, c);
    }
    os << '\n';
  }
  return os.str();
}

std::string render_json(const Table& table) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const std::string cell = cell_at(table, r, c);
      if (!cell.empty()) row[table.columns[c]] = cell;
    }
    out.push_back(std::move(row));
  }
  return out.dump(2) + "\n";
}

}  // namespace

std::string render_table(const Table& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::markdown: return render_markdown(table);
    case OutputFormat::csv: return render_csv(table);
    case OutputFormat::json: return render_json(table);
  }
  throw std::logic_error("render_table: unreachable");
}

RationalPolynomial parse_polynomial(const std::string& text) {
  std::vector<Rational> coeffs;
  std::string item;
  std::istringstream in(text);
  bool any = false;
  while (std::getline(in, item, ',')) {
    coeffs.push_back(Rational::parse(item));
    any = true;
  }
  if (!any) {
    throw std::invalid_argument("parse_polynomial: empty coefficient list");
  }
  return RationalPolynomial(std::move(coeffs));
}

std::string polynomial_to_string(const RationalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ',';
    out += p.coeffs()[i].str();
  }
  return out;
}

}  // namespace genocchi
