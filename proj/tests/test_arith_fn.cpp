#include "gcdft/arith_fn.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <map>

using gcdft::ArithmeticFunction;
using gcdft::BigInt;
using gcdft::ExactValue;
using gcdft::factorize;
using gcdft::FunctionKind;
namespace catalog = gcdft::catalog;

namespace {

std::vector<ArithmeticFunction> multiplicative_catalog() {
  return {catalog::one(),      catalog::identity(),        catalog::power_function(2), catalog::power_function(3),
          catalog::euler_phi(), catalog::moebius_mu(),      catalog::divisor_count(),   catalog::divisor_sum(),
          catalog::jordan_function(2), catalog::liouville(), catalog::dirichlet_unit()};
}

}  // namespace

TEST(Evaluate, Examples) {
  EXPECT_EQ(gcdft::evaluate(catalog::identity(), factorize(12)), 12);
  EXPECT_EQ(gcdft::evaluate(catalog::power_function(2), factorize(6)), 36);
  EXPECT_EQ(gcdft::evaluate(catalog::euler_phi(), factorize(12)), ExactValue(gcdft::totient(factorize(12))));
  EXPECT_EQ(gcdft::evaluate(catalog::euler_phi(), factorize(12)), 4);
}

TEST(Evaluate, MultiplicativeKindsFixOne) {
  for (const auto& f : multiplicative_catalog()) EXPECT_EQ(f(factorize(1)), 1) << f.name();
}

TEST(Evaluate, CatalogMatchesBruteForce) {
  for (oracle::i64 n = 1; n <= 600; ++n) {
    const auto nf = factorize(n);
    ASSERT_EQ(catalog::one()(nf), 1);
    ASSERT_EQ(catalog::identity()(nf), n);
    ASSERT_EQ(catalog::power_function(0)(nf), 1);
    ASSERT_EQ(catalog::power_function(3)(nf), n * n * n);
    ASSERT_EQ(catalog::euler_phi()(nf), oracle::totient(n));
    ASSERT_EQ(catalog::moebius_mu()(nf), oracle::mobius(n));
    ASSERT_EQ(catalog::divisor_count()(nf), oracle::tau(n));
    ASSERT_EQ(catalog::divisor_sum()(nf), oracle::sigma(n));
    ASSERT_EQ(catalog::liouville()(nf), oracle::liouville(n));
    ASSERT_EQ(catalog::dirichlet_unit()(nf), n == 1 ? 1 : 0);
  }
  for (oracle::i64 n = 1; n <= 60; ++n) {
    ASSERT_EQ(catalog::jordan_function(2)(factorize(n)), oracle::jordan_count(2, n));
  }
}

TEST(Evaluate, CatalogKinds) {
  EXPECT_EQ(catalog::one().kind(), FunctionKind::CompletelyMultiplicative);
  EXPECT_EQ(catalog::identity().kind(), FunctionKind::CompletelyMultiplicative);
  EXPECT_EQ(catalog::power_function(2).kind(), FunctionKind::CompletelyMultiplicative);
  EXPECT_EQ(catalog::liouville().kind(), FunctionKind::CompletelyMultiplicative);
  EXPECT_EQ(catalog::euler_phi().kind(), FunctionKind::Multiplicative);
  EXPECT_EQ(catalog::moebius_mu().kind(), FunctionKind::Multiplicative);
  EXPECT_EQ(catalog::jordan_function(2).kind(), FunctionKind::Multiplicative);
  EXPECT_EQ(catalog::divisor_count().kind(), FunctionKind::Multiplicative);
  EXPECT_EQ(catalog::divisor_sum().kind(), FunctionKind::Multiplicative);
}

TEST(Evaluate, CompletelyMultiplicativePowersAndMultiplicativeProducts) {
  for (const auto& f : multiplicative_catalog()) {
    for (int p : {2, 3, 5, 7}) {
      for (unsigned e = 1; e <= 5; ++e) {
        const ExactValue direct = f(factorize(gcdft::power(BigInt(p), e)));
        ASSERT_EQ(direct, f.at_prime_power(p, e)) << f.name();
        if (f.is_completely_multiplicative()) {
          ASSERT_EQ(direct, gcdft::power(f.at_prime_power(p, 1), e)) << f.name();
        }
      }
    }
    for (oracle::i64 n = 1; n <= 400; ++n) {
      const auto nf = factorize(n);
      ExactValue product = 1;
      for (const auto& [p, e] : nf.factors()) product *= f.at_prime_power(p, e);
      ASSERT_EQ(f(nf), product) << f.name() << " n=" << n;
    }
  }
}

TEST(Evaluate, MissingRuleEntryIsUndefinedValue) {
  const std::map<int, int> table{{1, 1}, {2, 5}, {3, 7}};
  const auto partial = ArithmeticFunction::general("partial", [table](const BigInt& n) -> std::optional<ExactValue> {
    auto it = table.find(n.convert_to<int>());
    if (it == table.end()) return std::nullopt;
    return ExactValue(it->second);
  });
  EXPECT_EQ(partial(factorize(3)), 7);
  EXPECT_THROW(partial(factorize(4)), gcdft::UndefinedValueError);
  EXPECT_THROW(gcdft::dirichlet_convolve(partial, catalog::moebius_mu(), factorize(4)), gcdft::UndefinedValueError);

  const auto odd_only = ArithmeticFunction::multiplicative("odd-only", [](const BigInt& p, unsigned) {
    return p == 2 ? std::nullopt : std::optional<ExactValue>(1);
  });
  EXPECT_EQ(odd_only(factorize(45)), 1);
  EXPECT_THROW(odd_only(factorize(12)), gcdft::UndefinedValueError);
}

TEST(DirichletConvolve, Examples) {
  EXPECT_EQ(gcdft::dirichlet_convolve(catalog::identity(), catalog::moebius_mu(), factorize(12)), 4);
  EXPECT_EQ(gcdft::dirichlet_convolve(catalog::divisor_sum(), catalog::euler_phi(), factorize(1)), 1);
  EXPECT_EQ(gcdft::dirichlet_convolve(catalog::power_function(2), catalog::moebius_mu(), factorize(6)), 24);
  EXPECT_EQ(gcdft::dirichlet_convolve(catalog::power_function(2), catalog::moebius_mu(), factorize(6)),
            ExactValue(gcdft::jordan(2, factorize(6))));
}

TEST(DirichletConvolve, ClassicalIdentities) {
  for (oracle::i64 n = 1; n <= 1000; ++n) {
    const auto nf = factorize(n);
    // 1 ∗ μ = ε, 1 ∗ 1 = τ, 1 ∗ id = σ, φ ∗ 1 = id.
    ASSERT_EQ(gcdft::dirichlet_convolve(catalog::one(), catalog::moebius_mu(), nf), n == 1 ? 1 : 0);
    ASSERT_EQ(gcdft::dirichlet_convolve(catalog::one(), catalog::one(), nf), oracle::tau(n));
    ASSERT_EQ(gcdft::dirichlet_convolve(catalog::one(), catalog::identity(), nf), oracle::sigma(n));
    ASSERT_EQ(gcdft::dirichlet_convolve(catalog::euler_phi(), catalog::one(), nf), n);
  }
}

TEST(SumFunction, Examples) {
  EXPECT_EQ(gcdft::sum_function(catalog::euler_phi(), factorize(12)), 12);
  EXPECT_EQ(gcdft::sum_function(catalog::divisor_sum(), factorize(1)), 1);
  EXPECT_EQ(gcdft::sum_function(catalog::identity(), factorize(8)), 15);
}

TEST(SumFunction, DivisorSumPathMatchesProductPath) {
  for (const auto& t : multiplicative_catalog()) {
    for (oracle::i64 n = 1; n <= 2000; ++n) {
      const auto nf = factorize(n);
      ASSERT_EQ(gcdft::sum_function(t, nf), gcdft::sum_function_product(t, nf)) << t.name() << " n=" << n;
    }
  }
}

TEST(SumFunction, ProductPathNeedsMultiplicative) {
  const auto general = ArithmeticFunction::general("plus-one", [](const BigInt& n) { return ExactValue(n + 1); });
  EXPECT_THROW(gcdft::sum_function_product(general, factorize(6)), gcdft::DomainError);
  EXPECT_EQ(gcdft::sum_function(general, factorize(6)), 2 + 3 + 4 + 7);
}

TEST(MoebiusInvert, Examples) {
  EXPECT_EQ(gcdft::moebius_invert(catalog::identity(), factorize(12)), 4);
  EXPECT_EQ(gcdft::moebius_invert(catalog::divisor_sum(), factorize(1)), 1);
  EXPECT_EQ(gcdft::moebius_invert(catalog::power_function(2), factorize(6)), 24);
  EXPECT_EQ(gcdft::moebius_invert(catalog::power_function(2), factorize(6)),
            gcdft::dirichlet_convolve(catalog::power_function(2), catalog::moebius_mu(), factorize(6)));
}

TEST(MoebiusInvert, EqualsConvolutionWithMoebius) {
  const auto mu = catalog::moebius_mu();
  for (const auto& f : multiplicative_catalog()) {
    for (oracle::i64 n = 1; n <= 2000; ++n) {
      const auto nf = factorize(n);
      ASSERT_EQ(gcdft::moebius_invert(f, nf), gcdft::dirichlet_convolve(f, mu, nf)) << f.name() << " n=" << n;
    }
  }
}

TEST(MoebiusInvert, RecoversFunctionFromItsSumFunction) {
  for (const auto& t : {catalog::euler_phi(), catalog::identity(), catalog::moebius_mu(), catalog::jordan_function(2)}) {
    const auto s = catalog::sum_function_of(t);
    EXPECT_EQ(s.kind(), FunctionKind::Multiplicative);
    for (oracle::i64 n = 1; n <= 2000; ++n) {
      const auto nf = factorize(n);
      ASSERT_EQ(s(nf), gcdft::sum_function(t, nf)) << t.name() << " n=" << n;
      ASSERT_EQ(gcdft::moebius_invert(s, nf), t(nf)) << t.name() << " n=" << n;
    }
  }
}

TEST(MoebiusInvert, GeneralFunctionRoundTripsThroughConvolution) {
  // Non-multiplicative t: μ ∗ (1 ∗ t) = t via convolution only.
  const auto t = ArithmeticFunction::general("plus-one", [](const BigInt& n) { return ExactValue(n + 1); });
  const auto s = catalog::sum_function_of(t);
  EXPECT_EQ(s.kind(), FunctionKind::General);
  EXPECT_THROW(gcdft::moebius_invert(s, factorize(12)), gcdft::DomainError);
  for (oracle::i64 n = 1; n <= 300; ++n) {
    const auto nf = factorize(n);
    ASSERT_EQ(gcdft::dirichlet_convolve(s, catalog::moebius_mu(), nf), ExactValue(n + 1)) << n;
  }
}

TEST(Catalog, LookupByName) {
  for (const auto& name : catalog::names()) EXPECT_EQ(catalog::lookup(name).name(), name);
  EXPECT_EQ(catalog::lookup("id_7")(factorize(2)), 128);
  EXPECT_EQ(catalog::lookup("J_3")(factorize(2)), 7);
  EXPECT_EQ(catalog::lookup("S[phi]")(factorize(360)), 360);
  EXPECT_EQ(catalog::lookup("S[mu]")(factorize(360)), 0);
  EXPECT_THROW(catalog::lookup("nope"), std::invalid_argument);
  EXPECT_THROW(catalog::lookup("id_"), std::invalid_argument);
  EXPECT_THROW(catalog::lookup("J_0"), std::invalid_argument);
  EXPECT_THROW(catalog::lookup("id_x"), std::invalid_argument);
}

TEST(Catalog, RationalValuedFunction) {
  // f(p^e) = 1/p^e: completely multiplicative and rational.
  const auto inv = ArithmeticFunction::completely_multiplicative(
      "inv", [](const BigInt& p) { return ExactValue(BigInt(1), p); }, false);
  EXPECT_EQ(inv(factorize(12)), ExactValue(1, 12));
  EXPECT_EQ(gcdft::to_string(inv(factorize(12))), "1/12");
  EXPECT_EQ(gcdft::parse_exact("1/12"), ExactValue(1, 12));
  EXPECT_EQ(gcdft::parse_exact("-6/4"), ExactValue(-3, 2));
  EXPECT_THROW(gcdft::parse_exact("1/0"), gcdft::DomainError);
  EXPECT_THROW(gcdft::parse_bigint("12a"), gcdft::DomainError);
  EXPECT_THROW(gcdft::parse_bigint("-"), gcdft::DomainError);
}
