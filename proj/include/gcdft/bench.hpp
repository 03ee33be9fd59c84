#pragma once

// Wall-clock comparison of the brute-force float transform against
// factorization plus the closed form.

#include "gcdft/gcd_dft.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gcdft {

struct BenchRow {
  BigInt n;
  std::string f;
  unsigned repetitions = 0;
  std::optional<double> brute_median_ns;  ///< empty above the oracle limit
  double closed_median_ns = 0;
  std::optional<double> speedup;
  std::optional<bool> spot_check;  ///< round(brute) == closed form, at m = 1
};

namespace detail {

template <typename Fn>
double median_ns(unsigned repetitions, Fn&& fn) {
  std::vector<double> samples;
  samples.reserve(repetitions);
  for (unsigned i = 0; i < repetitions; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
  }
  std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
  return samples[samples.size() / 2];
}

}  // namespace detail

/// Median wall time of each path at m = 1. The closed-form timing includes
/// factorizing n.
inline BenchRow bench_one(const ArithmeticFunction& f, const BigInt& n, unsigned repetitions) {
  if (repetitions < 1) throw DomainError("bench: repetitions must be at least 1");
  if (n < 1) throw DomainError("bench: n must be positive");
  BenchRow row{n, f.name(), repetitions, std::nullopt, 0, std::nullopt, std::nullopt};

  ExactValue closed = 0;
  row.closed_median_ns = detail::median_ns(repetitions, [&] { closed = dft_dispatch(f, n, BigInt(1)).value; });

  if (n <= kOracleMaxN) {
    std::complex<double> brute;
    row.brute_median_ns = detail::median_ns(repetitions, [&] { brute = dft_brute_float(f, n, BigInt(1)); });
    row.speedup = *row.brute_median_ns / std::max(row.closed_median_ns, 1.0);
    row.spot_check = std::abs(brute.imag()) < kFloatTolerance && std::abs(brute.real() - to_double(closed)) < kFloatTolerance;
  }
  return row;
}

inline std::string bench_csv_header() { return "n,f,repetitions,brute_median_ns,closed_median_ns,speedup,spot_check"; }

inline std::string to_csv(const BenchRow& r) {
  auto num = [](const std::optional<double>& v) { return v ? std::to_string(*v) : std::string("NA"); };
  std::string check = r.spot_check ? (*r.spot_check ? "ok" : "MISMATCH") : "NA";
  return r.n.str() + "," + r.f + "," + std::to_string(r.repetitions) + "," + num(r.brute_median_ns) + "," +
         std::to_string(r.closed_median_ns) + "," + num(r.speedup) + "," + check;
}

}  // namespace gcdft
