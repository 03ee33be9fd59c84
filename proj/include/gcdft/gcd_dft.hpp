#pragma once

// Discrete Fourier transform of a function of the gcd,
//
//   ĥ_m(n) = Σ_{k=1}^{n} f(gcd(k, n)) e^{-2πikm/n},
//
// evaluated by brute force, as the Dirichlet convolution f ∗ c_·(m), and by
// prime-factor products. Every path reduces m into 1..n first.

#include "gcdft/arith_fn.hpp"
#include "gcdft/ramanujan.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gcdft {

/// m = u · Π p_i^{t_i} against the primes p_i of n, with gcd(u, p_i) = 1.
struct OrderDecomposition {
  BigInt m;
  BigInt u;
  std::vector<unsigned> exponents;  ///< t_i, aligned with n.factors()
};

inline OrderDecomposition decompose_order(const BigInt& m, const Factorization& n) {
  if (m < 1) throw DomainError("decompose_order: m must be positive (reduce mod n first), got " + m.str());
  OrderDecomposition out{m, m, {}};
  out.exponents.reserve(n.size());
  for (const auto& [p, s] : n.factors()) {
    unsigned t = 0;
    while (out.u % p == 0) {
      out.u /= p;
      ++t;
    }
    out.exponents.push_back(t);
  }
  return out;
}

namespace detail {

// θ_{t,s}: 1 if t ≥ s.
inline bool theta(unsigned t, unsigned s) { return t >= s; }

inline OrderDecomposition decompose_reduced(const BigInt& m, const Factorization& n) {
  return decompose_order(normalize_order(m, n.value()), n);
}

}  // namespace detail

/// Brute-force float oracle for n ≤ 10^6. k is bucketed by d = gcd(k, n), so
/// f is evaluated once per divisor.
inline std::complex<double> dft_brute_float(const ArithmeticFunction& f, const BigInt& n, const BigInt& m) {
  detail::check_oracle_scale(n, "dft_brute_float");
  const Factorization nf = factorize(n);
  const auto nn = n.convert_to<std::uint64_t>();
  const std::uint64_t mm = detail::reduced_u64(m, n);

  const std::vector<Factorization> divs = divisor_factorizations(nf);
  std::vector<std::uint32_t> bucket_of(nn + 1, 0);
  for (std::size_t i = 0; i < divs.size(); ++i) {
    bucket_of[divs[i].value().convert_to<std::uint64_t>()] = static_cast<std::uint32_t>(i);
  }

  std::vector<std::complex<double>> buckets(divs.size(), 0.0);
  const double step = -2.0 * std::numbers::pi / static_cast<double>(nn);
  for (std::uint64_t k = 1; k <= nn; ++k) {
    const std::uint64_t phase = static_cast<std::uint64_t>(static_cast<unsigned __int128>(k) * mm % nn);
    buckets[bucket_of[std::gcd(k, nn)]] += std::polar(1.0, step * static_cast<double>(phase));
  }

  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    if (buckets[i] == 0.0) continue;
    sum += to_double(f(divs[i])) * buckets[i];
  }
  return sum;
}

/// Σ_{d|n} f(n/d)·c_d(m), with c from von Sterneck's formula. Exact, any kind of f.
inline ExactValue dft_exact_convolution(const ArithmeticFunction& f, const Factorization& n, const BigInt& m) {
  const BigInt reduced = normalize_order(m, n.value());
  ExactValue out = 0;
  for (const auto& d : divisor_factorizations(n)) {
    BigInt r = ramanujan_von_sterneck(d, reduced);
    if (r == 0) continue;
    out += f(quotient(n, d)) * ExactValue(r);
  }
  return out;
}

/// f = id: Π_i [(min(t_i,s_i) + 1)·φ(p_i^{s_i}) + θ_{t_i,s_i}·p_i^{s_i−1}].
inline BigInt dft_closed_form_gcd(const Factorization& n, const BigInt& m) {
  const OrderDecomposition order = detail::decompose_reduced(m, n);
  BigInt out = 1;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const BigInt& p = n.prime(i);
    const unsigned s = n.exponent(i);
    const unsigned t = order.exponents[i];
    const BigInt p_s1 = power(p, s - 1);
    BigInt factor = (std::min(t, s) + 1) * (p_s1 * (p - 1));
    if (detail::theta(t, s)) factor += p_s1;
    out *= factor;
  }
  return out;
}

namespace detail {

// Σ_{b=1}^{M} p^{b−1} f(p^{s−b})
inline ExactValue partial_sum(const ArithmeticFunction& f, const BigInt& p, unsigned s, unsigned M) {
  ExactValue acc = 0;
  BigInt p_b1 = 1;
  for (unsigned b = 1; b <= M; ++b) {
    acc += ExactValue(p_b1) * f.at_prime_power(p, s - b);
    p_b1 *= p;
  }
  return acc;
}

// f(p^{s−t−1})·p^t·(1 − θ_{t,s}); θ is tested first so f never sees a
// negative exponent.
inline ExactValue truncation_term(const ArithmeticFunction& f, const BigInt& p, unsigned s, unsigned t) {
  if (theta(t, s)) return 0;
  return f.at_prime_power(p, s - t - 1) * ExactValue(power(p, t));
}

inline void require_multiplicative(const ArithmeticFunction& f, const char* what) {
  if (!f.is_multiplicative()) throw DomainError(std::string(what) + ": " + f.name() + " is not multiplicative");
}

}  // namespace detail

/// Multiplicative f:
///   Π_i [f(p^s) + (p−1)·Σ_{b=1}^{min(t,s)} p^{b−1} f(p^{s−b}) − f(p^{s−t−1})·p^t·(1−θ_{t,s})].
inline ExactValue dft_closed_form_multiplicative(const ArithmeticFunction& f, const Factorization& n,
                                                 const BigInt& m) {
  detail::require_multiplicative(f, "dft_closed_form_multiplicative");
  const OrderDecomposition order = detail::decompose_reduced(m, n);
  ExactValue out = 1;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const BigInt& p = n.prime(i);
    const unsigned s = n.exponent(i);
    const unsigned t = order.exponents[i];
    const unsigned M = std::min(t, s);
    out *= f.at_prime_power(p, s) + ExactValue(p - 1) * detail::partial_sum(f, p, s, M) -
           detail::truncation_term(f, p, s, t);
  }
  return out;
}

/// Completely multiplicative f: the geometric series in the multiplicative
/// form summed in closed form,
///   (p−1)·f(p^{s−1})·(f(p^M) − p^M)/(f(p^M) − p·f(p^{M−1}))·(1 − δ_{0,t}),
/// M = min(t, s). Where the denominator vanishes (f(p) = p, or f(p) = 0 with
/// M ≥ 2) that factor falls back to the unsummed series.
inline ExactValue dft_closed_form_completely_mult(const ArithmeticFunction& f, const Factorization& n,
                                                  const BigInt& m) {
  if (!f.is_completely_multiplicative()) {
    throw DomainError("dft_closed_form_completely_mult: " + f.name() + " is not completely multiplicative");
  }
  const OrderDecomposition order = detail::decompose_reduced(m, n);
  ExactValue out = 1;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const BigInt& p = n.prime(i);
    const unsigned s = n.exponent(i);
    const unsigned t = order.exponents[i];
    ExactValue factor = f.at_prime_power(p, s) - detail::truncation_term(f, p, s, t);
    if (t != 0) {
      const unsigned M = std::min(t, s);
      const ExactValue f_pM = f.at_prime_power(p, M);
      const ExactValue den = f_pM - ExactValue(p) * f.at_prime_power(p, M - 1);
      if (den != 0) {
        factor += ExactValue(p - 1) * f.at_prime_power(p, s - 1) * (f_pM - ExactValue(power(p, M))) / den;
      } else {
        factor += ExactValue(p - 1) * detail::partial_sum(f, p, s, M);
      }
    }
    out *= factor;
  }
  return out;
}

/// Σ_{k=1}^{n} f(gcd(k, n)) as the m = n closed form (t_i = s_i).
inline ExactValue gcd_power_sum(const ArithmeticFunction& f, const Factorization& n) {
  detail::require_multiplicative(f, "gcd_power_sum");
  if (f.is_completely_multiplicative()) return dft_closed_form_completely_mult(f, n, n.value());
  return dft_closed_form_multiplicative(f, n, n.value());
}

/// Pillai's function Σ gcd(k, n) as Π_i [(α_i+1)p_i^{α_i} − α_i p_i^{α_i−1}].
inline BigInt pillai(const Factorization& n) {
  BigInt out = 1;
  for (const auto& [p, a] : n.factors()) out *= (a + 1) * power(p, a) - a * power(p, a - 1);
  return out;
}

enum class EvaluationPath { BruteFloat, ConvolutionExact, ClosedForm };

inline std::string_view to_string(EvaluationPath path) {
  switch (path) {
    case EvaluationPath::BruteFloat: return "brute-float";
    case EvaluationPath::ConvolutionExact: return "convolution";
    case EvaluationPath::ClosedForm: return "closed-form";
  }
  return "?";
}

enum class DispatchMode { Fast, Verify };

inline constexpr double kFloatTolerance = 1e-6;

struct DftReport {
  Factorization n = Factorization::from_prime_powers({});
  BigInt m_reduced;
  std::string f_name;
  ExactValue value = 0;
  EvaluationPath source = EvaluationPath::ClosedForm;  ///< path that produced value
  std::set<EvaluationPath> paths_agreeing;
  std::optional<ExactValue> closed_form;
  std::optional<ExactValue> convolution;
  std::optional<std::complex<double>> brute;
};

/// Closed form matching f's kind, or the convolution for general f. In
/// Verify mode every evaluable path runs; exact paths that disagree raise
/// InconsistencyError, a float mismatch only leaves BruteFloat out of
/// paths_agreeing.
inline DftReport dft_dispatch(const ArithmeticFunction& f, const Factorization& n, const BigInt& m,
                              DispatchMode mode = DispatchMode::Fast, double tolerance = kFloatTolerance) {
  DftReport report;
  report.n = n;
  report.m_reduced = normalize_order(m, n.value());
  report.f_name = f.name();

  if (f.is_completely_multiplicative()) {
    report.closed_form = dft_closed_form_completely_mult(f, n, report.m_reduced);
  } else if (f.is_multiplicative()) {
    report.closed_form = dft_closed_form_multiplicative(f, n, report.m_reduced);
  }

  if (mode == DispatchMode::Fast) {
    if (report.closed_form) {
      report.value = *report.closed_form;
      report.source = EvaluationPath::ClosedForm;
    } else {
      report.convolution = dft_exact_convolution(f, n, report.m_reduced);
      report.value = *report.convolution;
      report.source = EvaluationPath::ConvolutionExact;
    }
    report.paths_agreeing.insert(report.source);
    return report;
  }

  report.convolution = dft_exact_convolution(f, n, report.m_reduced);
  if (report.closed_form && *report.closed_form != *report.convolution) {
    throw InconsistencyError("dft_dispatch: closed form " + to_string(*report.closed_form) + " != convolution " +
                             to_string(*report.convolution) + " for f=" + f.name() + ", n=" + n.value().str() +
                             ", m=" + report.m_reduced.str());
  }
  report.value = *report.convolution;
  report.source = report.closed_form ? EvaluationPath::ClosedForm : EvaluationPath::ConvolutionExact;
  report.paths_agreeing.insert(EvaluationPath::ConvolutionExact);
  if (report.closed_form) report.paths_agreeing.insert(EvaluationPath::ClosedForm);

  if (n.value() <= kOracleMaxN) {
    report.brute = dft_brute_float(f, n.value(), report.m_reduced);
    if (std::abs(report.brute->imag()) < tolerance &&
        std::abs(report.brute->real() - to_double(report.value)) < tolerance) {
      report.paths_agreeing.insert(EvaluationPath::BruteFloat);
    }
  }
  return report;
}

inline DftReport dft_dispatch(const ArithmeticFunction& f, const BigInt& n, const BigInt& m,
                              DispatchMode mode = DispatchMode::Fast, double tolerance = kFloatTolerance) {
  if (n < 1) throw DomainError("dft: n must be positive, got " + n.str());
  return dft_dispatch(f, factorize(n), m, mode, tolerance);
}

}  // namespace gcdft
