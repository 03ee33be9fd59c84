#pragma once

// Ramanujan sums c_n(m) = Σ_{k ≤ n, gcd(k,n)=1} e^{2πikm/n}, three ways:
// the defining float sum, von Sterneck's closed form, and the divisor sum
// Σ_{d | gcd(m,n)} μ(n/d)·d. The last two are exact and act as mutual oracles.
//
// c_n(m) is real and even in m, so the sign of the exponent is immaterial;
// the DFT kernel elsewhere uses e^{-...} and the two agree.

#include "gcdft/core_arith.hpp"

#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

namespace gcdft {

/// Largest n the floating-point oracles accept.
inline constexpr std::uint64_t kOracleMaxN = 1'000'000;

struct RamanujanArgs {
  BigInt n;  ///< n ≥ 1
  BigInt m;  ///< any integer; only m mod n matters
};

/// m reduced into 1..n; a residue of 0 maps to n.
inline BigInt normalize_order(const BigInt& m, const BigInt& n) {
  if (n < 1) throw DomainError("order normalization: n must be positive");
  BigInt r = m % n;
  if (r < 0) r += n;
  return r == 0 ? n : r;
}

/// Multiplicity of each prime of n in gcd(m, n), i.e. min(t_i, s_i).
inline std::vector<unsigned> gcd_exponents(const Factorization& n, const BigInt& m) {
  const BigInt reduced = normalize_order(m, n.value());
  std::vector<unsigned> out;
  out.reserve(n.size());
  for (const auto& [p, s] : n.factors()) {
    BigInt rest = reduced;
    unsigned t = 0;
    while (t < s && rest % p == 0) {
      rest /= p;
      ++t;
    }
    out.push_back(t);
  }
  return out;
}

namespace detail {

inline void check_oracle_scale(const BigInt& n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": n must be positive");
  if (n > kOracleMaxN) {
    throw OracleScaleError(std::string(what) + ": n = " + n.str() + " exceeds oracle limit " +
                           std::to_string(kOracleMaxN));
  }
}

inline std::uint64_t reduced_u64(const BigInt& m, const BigInt& n) {
  BigInt r = m % n;
  if (r < 0) r += n;
  return r.convert_to<std::uint64_t>();
}

}  // namespace detail

/// Floating evaluation straight from the definition. n ≤ 10^6.
inline std::complex<double> ramanujan_definition(const RamanujanArgs& args) {
  detail::check_oracle_scale(args.n, "ramanujan_definition");
  const auto n = args.n.convert_to<std::uint64_t>();
  const std::uint64_t m = detail::reduced_u64(args.m, args.n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  std::complex<double> sum = 0.0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    const std::uint64_t phase = static_cast<std::uint64_t>(static_cast<unsigned __int128>(k) * m % n);
    sum += std::polar(1.0, step * static_cast<double>(phase));
  }
  return sum;
}

/// von Sterneck: c_n(m) = μ(n/g)·φ(n)/φ(n/g), g = gcd(m, n). Exact.
inline BigInt ramanujan_von_sterneck(const Factorization& n, const BigInt& m) {
  std::vector<unsigned> g = gcd_exponents(n, m);
  std::vector<unsigned> cofactor = n.exponents();
  for (std::size_t i = 0; i < g.size(); ++i) cofactor[i] -= g[i];
  Factorization n_over_g = n.with_exponents(cofactor);
  int mu = moebius(n_over_g);
  if (mu == 0) return 0;
  return mu * (totient(n) / totient(n_over_g));
}

inline BigInt ramanujan_von_sterneck(const RamanujanArgs& args) {
  return ramanujan_von_sterneck(factorize(args.n), args.m);
}

/// c_n(m) = Σ_{d | gcd(m,n)} μ(n/d)·d. Exact.
inline BigInt ramanujan_kluyver(const Factorization& n, const BigInt& m) {
  Factorization g = n.with_exponents(gcd_exponents(n, m));
  BigInt out = 0;
  for (const auto& d : divisor_factorizations(g)) {
    // d divides g, which divides n over the same primes.
    out += moebius(quotient(n, d)) * d.value();
  }
  return out;
}

inline BigInt ramanujan_kluyver(const RamanujanArgs& args) { return ramanujan_kluyver(factorize(args.n), args.m); }

}  // namespace gcdft
