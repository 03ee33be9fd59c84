#pragma once

// Exact value domain shared by every module: arbitrary-precision integers and
// reduced rationals, plus the error types thrown across the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gcdft {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always held in lowest terms with a positive
/// denominator.
using ExactValue = boost::multiprecision::cpp_rational;

/// Argument outside an operation's mathematical domain (gcd(0,0), factorize(0), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An arithmetic function has no rule for the requested argument.
class UndefinedValueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A floating-point oracle was asked to run above its supported scale.
class OracleScaleError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Two exact evaluation paths produced different values.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline BigInt numerator(const ExactValue& v) { return boost::multiprecision::numerator(v); }
inline BigInt denominator(const ExactValue& v) { return boost::multiprecision::denominator(v); }

inline bool is_integer(const ExactValue& v) { return denominator(v) == 1; }

/// base^exp by repeated squaring. 0^0 == 1.
template <typename T>
T power(T base, unsigned long long exp) {
  T result{1};
  while (exp > 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp > 0) base *= base;
  }
  return result;
}

/// Decimal string for integers, "num/den" otherwise.
inline std::string to_string(const ExactValue& v) {
  if (is_integer(v)) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal integer. Rejects empty input, stray
/// characters and leading '+' followed by nothing.
inline BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw DomainError("not an integer: '" + std::string(text) + "'");
  BigInt value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw DomainError("not an integer: '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

/// Inverse of to_string(ExactValue): "123", "-7", "3/4".
inline ExactValue parse_exact(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactValue(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator: '" + std::string(text) + "'");
  return ExactValue(num, den);
}

/// Nearest integer to a double; used to compare float oracles with exact values.
inline BigInt round_to_bigint(double x) { return BigInt(std::round(x)); }

inline double to_double(const ExactValue& v) { return v.convert_to<double>(); }

}  // namespace gcdft
