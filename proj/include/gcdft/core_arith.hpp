#pragma once

// Integer primitives: gcd, primality, canonical factorization, divisor
// enumeration and the classical multiplicative functions (μ, φ, J_k).

#include "gcdft/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace gcdft {

/// Greatest common divisor of two nonnegative integers; gcd(a, 0) == a.
inline BigInt gcd(const BigInt& a, const BigInt& b) {
  if (a < 0 || b < 0) throw DomainError("gcd: arguments must be nonnegative");
  if (a == 0 && b == 0) throw DomainError("gcd(0, 0) is undefined");
  return boost::multiprecision::gcd(a, b);
}

namespace detail {

inline constexpr std::uint32_t kTrialBound = 10000;

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}
inline BigInt mul_mod(const BigInt& a, const BigInt& b, const BigInt& n) { return a * b % n; }

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % n);
}
inline BigInt add_mod(const BigInt& a, const BigInt& b, const BigInt& n) { return (a + b) % n; }

inline std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }
inline BigInt abs_diff(const BigInt& a, const BigInt& b) { return a > b ? BigInt(a - b) : BigInt(b - a); }

inline std::uint64_t gcd_of(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}
inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <typename Int>
Int pow_mod(Int base, Int exp, const Int& n) {
  Int result = 1;
  base %= n;
  while (exp > 0) {
    if ((exp & 1) != 0) result = mul_mod(result, base, n);
    exp >>= 1;
    base = mul_mod(base, base, n);
  }
  return result;
}

// One Miller–Rabin round; n odd, n > 3, n - 1 = d·2^r.
template <typename Int>
bool passes_witness(const Int& n, const Int& d, unsigned r, Int a) {
  a %= n;
  if (a == 0) return true;
  Int x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

template <typename Int>
void split_odd(const Int& n, Int& d, unsigned& r) {
  d = n - 1;
  r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
}

// Deterministic for every 64-bit n (Jaeschke / Sinclair base set).
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d;
  unsigned r;
  split_odd(n, d, r);
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (!passes_witness<std::uint64_t>(n, d, r, a)) return false;
  }
  return true;
}

inline constexpr unsigned kBigMillerRabinRounds = 40;

// Probabilistic above 2^64: a composite survives with probability ≤ 4^-40.
inline bool is_prime_big(const BigInt& n) {
  for (std::uint32_t p : small_primes()) {
    if (n % p == 0) return n == p;
  }
  BigInt d;
  unsigned r;
  split_odd(n, d, r);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (unsigned round = 0; round < kBigMillerRabinRounds; ++round) {
    BigInt a = BigInt(rng()) % (n - 3) + 2;
    if (!passes_witness<BigInt>(n, d, r, a)) return false;
  }
  return true;
}

inline bool fits_u64(const BigInt& n) { return n >= 0 && n <= std::numeric_limits<std::uint64_t>::max(); }

// Brent's variant of Pollard rho. n must be odd composite; returns a proper factor.
template <typename Int>
Int pollard_brent(const Int& n) {
  for (std::uint64_t c_seed = 1;; ++c_seed) {
    const Int c = Int(c_seed) % n;
    auto step = [&](const Int& v) { return add_mod(mul_mod(v, v, n), c, n); };
    Int y = Int(c_seed + 1) % n;
    Int x = y;
    Int ys = y;
    Int g = 1;
    Int q = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, abs_diff(x, y), n);
        }
        g = gcd_of(q, n);
        k += kBatch;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd_of(abs_diff(x, ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline bool is_prime_any(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(n.convert_to<std::uint64_t>());
  return is_prime_big(n);
}

inline void split_into(const BigInt& n, std::map<BigInt, unsigned>& acc) {
  if (n == 1) return;
  if (is_prime_any(n)) {
    ++acc[n];
    return;
  }
  BigInt d;
  if (fits_u64(n)) {
    d = BigInt(pollard_brent<std::uint64_t>(n.convert_to<std::uint64_t>()));
  } else {
    d = pollard_brent<BigInt>(n);
  }
  split_into(d, acc);
  split_into(n / d, acc);
}

}  // namespace detail

/// Primality test: deterministic below 2^64, Miller–Rabin with 40 rounds above.
inline bool is_prime(const BigInt& n) { return detail::is_prime_any(n); }

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime factorization: primes strictly increasing, exponents ≥ 1,
/// and the product of the prime powers equal to value(). value() == 1 has no
/// factors.
class Factorization {
 public:
  Factorization() = default;

  /// Validating constructor; throws DomainError if the list is not canonical.
  static Factorization from_prime_powers(std::vector<PrimePower> factors) {
    BigInt value = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& f = factors[i];
      if (f.exponent == 0) throw DomainError("factorization: zero multiplicity for " + f.prime.str());
      if (i > 0 && factors[i - 1].prime >= f.prime) throw DomainError("factorization: primes not strictly increasing");
      if (!is_prime(f.prime)) throw DomainError("factorization: " + f.prime.str() + " is not prime");
      value *= power(f.prime, f.exponent);
    }
    return Factorization(std::move(value), std::move(factors));
  }

  const BigInt& value() const { return value_; }
  std::span<const PrimePower> factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool is_one() const { return factors_.empty(); }
  const BigInt& prime(std::size_t i) const { return factors_[i].prime; }
  unsigned exponent(std::size_t i) const { return factors_[i].exponent; }

  std::vector<unsigned> exponents() const {
    std::vector<unsigned> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.exponent);
    return out;
  }

  /// The number Π p_i^{e_i} over this factorization's primes. Zero exponents
  /// drop the prime. exps.size() must equal size().
  Factorization with_exponents(std::span<const unsigned> exps) const {
    if (exps.size() != factors_.size()) throw DomainError("with_exponents: exponent count mismatch");
    std::vector<PrimePower> out;
    BigInt value = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (exps[i] == 0) continue;
      out.push_back({factors_[i].prime, exps[i]});
      value *= power(factors_[i].prime, exps[i]);
    }
    return Factorization(std::move(value), std::move(out));
  }

  /// Prime power p_i^e as a one-factor Factorization.
  Factorization prime_power(std::size_t i, unsigned e) const {
    if (e == 0) return Factorization{};
    return Factorization(power(factors_[i].prime, e), {{factors_[i].prime, e}});
  }

  friend bool operator==(const Factorization& a, const Factorization& b) { return a.factors_ == b.factors_; }

 private:
  Factorization(BigInt value, std::vector<PrimePower> factors) : value_(std::move(value)), factors_(std::move(factors)) {}

  BigInt value_ = 1;
  std::vector<PrimePower> factors_;

  friend Factorization factorize(const BigInt& n);
};

/// Trial division below 10^4, then Pollard–Brent rho on the cofactor.
inline Factorization factorize(const BigInt& n) {
  if (n < 1) throw DomainError("factorize: n must be positive, got " + n.str());
  std::map<BigInt, unsigned> acc;
  BigInt rest = n;
  for (std::uint32_t p : detail::small_primes()) {
    if (BigInt(p) * p > rest) break;
    while (rest % p == 0) {
      rest /= p;
      ++acc[BigInt(p)];
    }
  }
  if (rest > 1) {
    if (rest < BigInt(detail::kTrialBound) * detail::kTrialBound) {
      ++acc[rest];
    } else {
      detail::split_into(rest, acc);
    }
  }
  std::vector<PrimePower> factors;
  factors.reserve(acc.size());
  for (auto& [p, e] : acc) factors.push_back({p, e});
  return Factorization(n, std::move(factors));
}

inline std::string to_string(const Factorization& n) {
  if (n.is_one()) return "1";
  std::string out;
  for (const auto& [p, e] : n.factors()) {
    if (!out.empty()) out += " * ";
    out += p.str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

/// Every divisor of n as a Factorization over n's primes, ascending by value.
inline std::vector<Factorization> divisor_factorizations(const Factorization& n) {
  std::vector<Factorization> out;
  std::vector<unsigned> exps(n.size(), 0);
  while (true) {
    out.push_back(n.with_exponents(exps));
    std::size_t i = 0;
    for (; i < exps.size(); ++i) {
      if (exps[i] < n.exponent(i)) {
        ++exps[i];
        break;
      }
      exps[i] = 0;
    }
    if (i == exps.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value() < b.value(); });
  return out;
}

/// All divisors of n, ascending; Π(s_i + 1) entries.
inline std::vector<BigInt> divisors(const Factorization& n) {
  std::vector<BigInt> out;
  for (auto& d : divisor_factorizations(n)) out.push_back(d.value());
  return out;
}

/// n / d for a divisor d expressed over the same primes.
inline Factorization quotient(const Factorization& n, const Factorization& d) {
  std::vector<unsigned> exps = n.exponents();
  auto dfs = d.factors();
  std::size_t j = 0;
  for (std::size_t i = 0; i < n.size() && j < dfs.size(); ++i) {
    if (n.prime(i) != dfs[j].prime) continue;
    if (dfs[j].exponent > exps[i]) throw DomainError("quotient: not a divisor");
    exps[i] -= dfs[j].exponent;
    ++j;
  }
  if (j != dfs.size()) throw DomainError("quotient: not a divisor");
  return n.with_exponents(exps);
}

inline int moebius(const Factorization& n) {
  for (const auto& f : n.factors()) {
    if (f.exponent >= 2) return 0;
  }
  return n.size() % 2 == 0 ? 1 : -1;
}

inline BigInt totient(const Factorization& n) {
  BigInt out = 1;
  for (const auto& [p, s] : n.factors()) out *= power(p, s - 1) * (p - 1);
  return out;
}

/// Jordan totient J_k(n) = n^k Π (1 − p^{-k}); J_1 == φ.
inline BigInt jordan(unsigned k, const Factorization& n) {
  if (k == 0) throw DomainError("jordan: k must be positive");
  BigInt out = 1;
  for (const auto& [p, s] : n.factors()) {
    BigInt pk = power(p, k);
    out *= power(pk, s - 1) * (pk - 1);
  }
  return out;
}

}  // namespace gcdft
