#pragma once

// Tables of ĥ_m(n) over m, one row per m or one row per gcd(m, n) class,
// with a symbolic rendering of each value in the primes of n.

#include "gcdft/gcd_dft.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace gcdft {

struct TableRow {
  BigInt index;  ///< m (equals the gcd class representative in compressed tables)
  BigInt gcd_value;
  ExactValue transform_value;
  std::string symbolic_form;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

enum class TableFormat { Text, Csv, Json };

inline TableFormat parse_table_format(std::string_view name) {
  if (name == "text") return TableFormat::Text;
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text, csv or json)");
}

/// Uncompressed tables list every m in 1..n; above this n they are refused.
inline constexpr std::uint64_t kMaxFullTableRows = 1'000'000;

namespace detail {

inline std::string prime_symbol(std::size_t i) {
  static constexpr std::string_view kSymbols[] = {"p", "q", "w", "x", "y", "z"};
  if (i < std::size(kSymbols)) return std::string(kSymbols[i]);
  return "p" + std::to_string(i + 1);
}

inline std::string power_symbol(const std::string& sym, long long e) {
  if (e == 0) return "1";
  if (e == 1) return sym;
  return sym + "^" + std::to_string(e);
}

// Factor for f = id: phi, (t+1)phi, or (s+1)phi + p^{s-1}.
inline std::string identity_factor(const std::string& p, unsigned s, unsigned t) {
  const std::string phi = "phi(" + power_symbol(p, s) + ")";
  if (t == 0) return phi;
  if (t < s) return std::to_string(t + 1) + phi;
  return "[" + std::to_string(s + 1) + phi + "+" + power_symbol(p, s - 1) + "]";
}

// Multiplicative-f factor, written with f's name.
inline std::string general_factor(const std::string& fn, const std::string& p, unsigned s, unsigned t) {
  auto f_at = [&](long long e) { return fn + "(" + power_symbol(p, e) + ")"; };
  if (t == 0) return "[" + f_at(s) + "-" + f_at(static_cast<long long>(s) - 1) + "]";
  const unsigned M = std::min(t, s);
  std::string out = "[" + f_at(s) + "+(" + p + "-1)sum_{b=1}^{" + std::to_string(M) + "}" + p + "^{b-1}" + fn + "(" +
                    p + "^{" + std::to_string(s) + "-b})";
  if (t < s) out += "-" + f_at(static_cast<long long>(s) - t - 1) + power_symbol(p, t);
  return out + "]";
}

}  // namespace detail

/// Symbolic product for ĥ_m(n) in the primes of n, named p, q, w, ...
/// General (non-multiplicative) f has no prime-factor form and renders as
/// the convolution.
inline std::string symbolic_form(const ArithmeticFunction& f, const Factorization& n, const BigInt& m) {
  if (n.is_one()) return "1";
  if (!f.is_multiplicative()) return f.name() + "*r_m(n)";
  const OrderDecomposition order = decompose_order(normalize_order(m, n.value()), n);
  std::string out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const std::string sym = detail::prime_symbol(i);
    out += catalog::is_identity(f) ? detail::identity_factor(sym, n.exponent(i), order.exponents[i])
                                  : detail::general_factor(f.name(), sym, n.exponent(i), order.exponents[i]);
  }
  return out;
}

/// Rows for m = 1..n, or one row per divisor d of n (m = d) when compressed.
/// The transform value depends on m only through gcd(m, n), so each class is
/// evaluated once.
inline std::vector<TableRow> build_table(const ArithmeticFunction& f, const Factorization& n, bool compress) {
  std::map<BigInt, TableRow> by_class;
  for (const BigInt& d : divisors(n)) {
    by_class.emplace(d, TableRow{d, d, dft_dispatch(f, n, d).value, symbolic_form(f, n, d)});
  }
  std::vector<TableRow> rows;
  if (compress) {
    for (auto& [d, row] : by_class) rows.push_back(row);
    return rows;
  }
  if (n.value() > kMaxFullTableRows) {
    throw DomainError("table: n = " + n.value().str() + " too large for an uncompressed table; use --compress");
  }
  const auto nn = n.value().convert_to<std::uint64_t>();
  rows.reserve(nn);
  for (std::uint64_t m = 1; m <= nn; ++m) {
    TableRow row = by_class.at(BigInt(std::gcd(m, nn)));
    row.index = m;
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string render_csv(const std::vector<TableRow>& rows) {
  std::string out = "index,gcd,value,symbolic\n";
  for (const auto& r : rows) {
    out += r.index.str() + "," + r.gcd_value.str() + "," + to_string(r.transform_value) + "," + r.symbolic_form + "\n";
  }
  return out;
}

inline std::vector<TableRow> parse_csv(std::string_view text) {
  std::vector<TableRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "index,gcd,value,symbolic") throw DomainError("csv: missing header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
      auto comma = line.find(',', start);
      if (comma == std::string::npos) throw DomainError("csv: short row '" + line + "'");
      cells.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    cells.push_back(line.substr(start));
    rows.push_back({parse_bigint(cells[0]), parse_bigint(cells[1]), parse_exact(cells[2]), cells[3]});
  }
  return rows;
}

inline nlohmann::json table_to_json(const ArithmeticFunction& f, const Factorization& n,
                                    const std::vector<TableRow>& rows) {
  nlohmann::json j;
  j["f"] = f.name();
  j["n"] = n.value().str();
  j["factorization"] = to_string(n);
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"index", r.index.str()},
                         {"gcd", r.gcd_value.str()},
                         {"value", to_string(r.transform_value)},
                         {"symbolic", r.symbolic_form}});
  }
  return j;
}

inline std::vector<TableRow> parse_json_rows(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<TableRow> rows;
  for (const auto& r : j.at("rows")) {
    rows.push_back({parse_bigint(r.at("index").get<std::string>()), parse_bigint(r.at("gcd").get<std::string>()),
                    parse_exact(r.at("value").get<std::string>()), r.at("symbolic").get<std::string>()});
  }
  return rows;
}

inline std::string render_text(const ArithmeticFunction& f, const Factorization& n, const std::vector<TableRow>& rows) {
  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"m", "gcd(m,n)", "value", "form"});
  for (const auto& r : rows) cells.push_back({r.index.str(), r.gcd_value.str(), to_string(r.transform_value), r.symbolic_form});
  std::array<std::size_t, 4> width{};
  for (const auto& c : cells) {
    for (std::size_t i = 0; i < 4; ++i) width[i] = std::max(width[i], c[i].size());
  }
  std::ostringstream out;
  out << "f = " << f.name() << ", n = " << n.value() << " = " << to_string(n) << "\n";
  for (std::size_t row = 0; row < cells.size(); ++row) {
    for (std::size_t i = 0; i < 4; ++i) {
      out << cells[row][i];
      if (i + 1 < 4) out << std::string(width[i] - cells[row][i].size() + 2, ' ');
    }
    out << "\n";
    if (row == 0) out << std::string(width[0] + width[1] + width[2] + width[3] + 6, '-') << "\n";
  }
  return out.str();
}

inline std::string render_table(const ArithmeticFunction& f, const Factorization& n, const std::vector<TableRow>& rows,
                                TableFormat format) {
  switch (format) {
    case TableFormat::Text: return render_text(f, n, rows);
    case TableFormat::Csv: return render_csv(rows);
    case TableFormat::Json: return table_to_json(f, n, rows).dump(2) + "\n";
  }
  return {};
}

}  // namespace gcdft
