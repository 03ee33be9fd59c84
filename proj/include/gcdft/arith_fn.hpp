#pragma once

// Arithmetic functions with exact rational values: representation, a catalog
// of classical functions, Dirichlet convolution, sum functions and Möbius
// inversion.

#include "gcdft/core_arith.hpp"

#include <charconv>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcdft {

enum class FunctionKind { Multiplicative, CompletelyMultiplicative, General };

inline std::string_view to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::Multiplicative: return "multiplicative";
    case FunctionKind::CompletelyMultiplicative: return "completely-multiplicative";
    case FunctionKind::General: return "general";
  }
  return "?";
}

/// An arithmetic function f: N -> Q.
///
/// Multiplicative functions are given by a rule on prime powers p^e (e ≥ 1),
/// completely multiplicative ones by a rule on primes extended as
/// f(p^e) = f(p)^e, and general ones by a rule on arbitrary n. Rules return
/// std::nullopt where the function is undefined; evaluation then throws
/// UndefinedValueError. For the two multiplicative kinds f(1) = 1.
///
/// Values are immutable after construction and cheap to copy.
class ArithmeticFunction {
 public:
  using PrimePowerRule = std::function<std::optional<ExactValue>(const BigInt& p, unsigned e)>;
  using PrimeRule = std::function<std::optional<ExactValue>(const BigInt& p)>;
  using DirectRule = std::function<std::optional<ExactValue>(const BigInt& n)>;

  static ArithmeticFunction multiplicative(std::string name, PrimePowerRule rule, bool integer_valued = true) {
    ArithmeticFunction f(std::move(name), FunctionKind::Multiplicative, integer_valued);
    f.prime_power_rule_ = std::move(rule);
    return f;
  }

  static ArithmeticFunction completely_multiplicative(std::string name, PrimeRule rule, bool integer_valued = true) {
    ArithmeticFunction f(std::move(name), FunctionKind::CompletelyMultiplicative, integer_valued);
    f.prime_rule_ = std::move(rule);
    return f;
  }

  static ArithmeticFunction general(std::string name, DirectRule rule, bool integer_valued = true) {
    ArithmeticFunction f(std::move(name), FunctionKind::General, integer_valued);
    f.direct_rule_ = std::move(rule);
    return f;
  }

  const std::string& name() const { return name_; }
  FunctionKind kind() const { return kind_; }
  bool is_multiplicative() const { return kind_ != FunctionKind::General; }
  bool is_completely_multiplicative() const { return kind_ == FunctionKind::CompletelyMultiplicative; }
  /// Declared by the constructor; integrality checks rely on it.
  bool integer_valued() const { return integer_valued_; }

  /// f(p^e) for a prime p and e ≥ 0.
  ExactValue at_prime_power(const BigInt& p, unsigned e) const {
    switch (kind_) {
      case FunctionKind::Multiplicative:
        if (e == 0) return 1;
        return require(prime_power_rule_(p, e), [&] { return p.str() + "^" + std::to_string(e); });
      case FunctionKind::CompletelyMultiplicative:
        if (e == 0) return 1;
        return power(at_prime(p), e);
      case FunctionKind::General:
        return at(power(p, e));
    }
    return 0;
  }

  /// f(n) via the kind's rule.
  ExactValue operator()(const Factorization& n) const {
    if (kind_ == FunctionKind::General) return at(n.value());
    ExactValue out = 1;
    for (const auto& [p, e] : n.factors()) out *= at_prime_power(p, e);
    return out;
  }

 private:
  ArithmeticFunction(std::string name, FunctionKind kind, bool integer_valued)
      : name_(std::move(name)), kind_(kind), integer_valued_(integer_valued) {}

  ExactValue at_prime(const BigInt& p) const {
    return require(prime_rule_(p), [&] { return p.str(); });
  }

  ExactValue at(const BigInt& n) const {
    if (kind_ != FunctionKind::General) return (*this)(factorize(n));
    return require(direct_rule_(n), [&] { return n.str(); });
  }

  template <typename Describe>
  ExactValue require(std::optional<ExactValue> v, Describe describe) const {
    if (!v) throw UndefinedValueError(name_ + " is undefined at " + describe());
    return *std::move(v);
  }

  std::string name_;
  FunctionKind kind_;
  bool integer_valued_;
  PrimePowerRule prime_power_rule_;
  PrimeRule prime_rule_;
  DirectRule direct_rule_;
};

inline ExactValue evaluate(const ArithmeticFunction& f, const Factorization& n) { return f(n); }

/// (f ∗ g)(n) = Σ_{d|n} f(n/d) g(d).
inline ExactValue dirichlet_convolve(const ArithmeticFunction& f, const ArithmeticFunction& g,
                                     const Factorization& n) {
  ExactValue out = 0;
  for (const auto& d : divisor_factorizations(n)) out += f(quotient(n, d)) * g(d);
  return out;
}

/// S^t(n) = (1 ∗ t)(n) = Σ_{d|n} t(d), summed over the divisors.
inline ExactValue sum_function(const ArithmeticFunction& t, const Factorization& n) {
  ExactValue out = 0;
  for (const auto& d : divisor_factorizations(n)) out += t(d);
  return out;
}

/// S^t(n) as Π_i [1 + t(p_i) + ... + t(p_i^{s_i})]; t must be multiplicative.
inline ExactValue sum_function_product(const ArithmeticFunction& t, const Factorization& n) {
  if (!t.is_multiplicative()) throw DomainError("sum_function_product: " + t.name() + " is not multiplicative");
  ExactValue out = 1;
  for (const auto& [p, s] : n.factors()) {
    ExactValue local = 0;
    for (unsigned j = 0; j <= s; ++j) local += t.at_prime_power(p, j);
    out *= local;
  }
  return out;
}

/// (f ∗ μ)(n) = Π_i [f(p_i^{s_i}) − f(p_i^{s_i−1})] for multiplicative f.
/// Fed with a sum function S^t this recovers t.
inline ExactValue moebius_invert(const ArithmeticFunction& f, const Factorization& n) {
  if (!f.is_multiplicative()) throw DomainError("moebius_invert: " + f.name() + " is not multiplicative");
  ExactValue out = 1;
  for (const auto& [p, s] : n.factors()) out *= f.at_prime_power(p, s) - f.at_prime_power(p, s - 1);
  return out;
}

namespace catalog {

inline ArithmeticFunction one() {
  return ArithmeticFunction::completely_multiplicative("one", [](const BigInt&) { return ExactValue(1); });
}

inline ArithmeticFunction identity() {
  return ArithmeticFunction::completely_multiplicative("id", [](const BigInt& p) { return ExactValue(p); });
}

/// True for the catalog's identity function under either of its names.
inline bool is_identity(const ArithmeticFunction& f) { return f.name() == "id" || f.name() == "id_1"; }

/// id_k(n) = n^k.
inline ArithmeticFunction power_function(unsigned k) {
  return ArithmeticFunction::completely_multiplicative(
      "id_" + std::to_string(k), [k](const BigInt& p) { return ExactValue(power(p, k)); });
}

inline ArithmeticFunction euler_phi() {
  return ArithmeticFunction::multiplicative(
      "phi", [](const BigInt& p, unsigned e) { return ExactValue(power(p, e - 1) * (p - 1)); });
}

inline ArithmeticFunction moebius_mu() {
  return ArithmeticFunction::multiplicative("mu",
                                            [](const BigInt&, unsigned e) { return ExactValue(e == 1 ? -1 : 0); });
}

inline ArithmeticFunction jordan_function(unsigned k) {
  if (k == 0) throw DomainError("jordan_function: k must be positive");
  return ArithmeticFunction::multiplicative("J_" + std::to_string(k), [k](const BigInt& p, unsigned e) {
    BigInt pk = power(p, k);
    return ExactValue(power(pk, e - 1) * (pk - 1));
  });
}

/// τ(p^e) = e + 1.
inline ArithmeticFunction divisor_count() {
  return ArithmeticFunction::multiplicative("tau", [](const BigInt&, unsigned e) { return ExactValue(e + 1); });
}

/// σ(p^e) = (p^{e+1} − 1)/(p − 1).
inline ArithmeticFunction divisor_sum() {
  return ArithmeticFunction::multiplicative(
      "sigma", [](const BigInt& p, unsigned e) { return ExactValue((power(p, e + 1) - 1) / (p - 1)); });
}

inline ArithmeticFunction liouville() {
  return ArithmeticFunction::completely_multiplicative("lambda", [](const BigInt&) { return ExactValue(-1); });
}

/// Dirichlet unit ε(n) = [n = 1].
inline ArithmeticFunction dirichlet_unit() {
  return ArithmeticFunction::completely_multiplicative("eps", [](const BigInt&) { return ExactValue(0); });
}

/// S^t = 1 ∗ t as a function in its own right. Multiplicative when t is.
inline ArithmeticFunction sum_function_of(const ArithmeticFunction& t) {
  std::string name = "S[" + t.name() + "]";
  if (t.is_multiplicative()) {
    return ArithmeticFunction::multiplicative(
        std::move(name),
        [t](const BigInt& p, unsigned e) {
          ExactValue acc = 0;
          for (unsigned j = 0; j <= e; ++j) acc += t.at_prime_power(p, j);
          return std::optional<ExactValue>(acc);
        },
        t.integer_valued());
  }
  return ArithmeticFunction::general(
      std::move(name), [t](const BigInt& n) { return std::optional<ExactValue>(sum_function(t, factorize(n))); },
      t.integer_valued());
}

/// Names accepted by lookup(), excluding the parameterised families and S[...].
inline std::vector<std::string> names() {
  return {"one", "id", "id_0", "id_2", "id_3", "phi", "mu", "tau", "sigma", "J_2", "lambda", "eps"};
}

/// Resolves a catalog name: one, id, id_<k>, phi, mu, tau, sigma, lambda,
/// eps, J_<k>, S[<name>]. Throws std::invalid_argument for anything else.
inline ArithmeticFunction lookup(std::string_view name) {
  auto parse_index = [&](std::string_view digits) -> unsigned {
    unsigned k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || k > 64) {
      throw std::invalid_argument("unknown function '" + std::string(name) + "'");
    }
    return k;
  };
  if (name == "one") return one();
  if (name == "id") return identity();
  if (name == "phi") return euler_phi();
  if (name == "mu") return moebius_mu();
  if (name == "tau") return divisor_count();
  if (name == "sigma") return divisor_sum();
  if (name == "lambda") return liouville();
  if (name == "eps") return dirichlet_unit();
  if (name.starts_with("id_")) return power_function(parse_index(name.substr(3)));
  if (name.starts_with("J_")) {
    unsigned k = parse_index(name.substr(2));
    if (k == 0) throw std::invalid_argument("unknown function '" + std::string(name) + "'");
    return jordan_function(k);
  }
  if (name.starts_with("S[") && name.ends_with("]")) return sum_function_of(lookup(name.substr(2, name.size() - 3)));
  throw std::invalid_argument("unknown function '" + std::string(name) + "'");
}

}  // namespace catalog
}  // namespace gcdft
