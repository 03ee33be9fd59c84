#include "gcdft/table.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using gcdft::BigInt;
using gcdft::ExactValue;
using gcdft::factorize;
namespace catalog = gcdft::catalog;

namespace {

std::vector<ExactValue> values(const std::vector<gcdft::TableRow>& rows) {
  std::vector<ExactValue> out;
  for (const auto& r : rows) out.push_back(r.transform_value);
  return out;
}

}  // namespace

TEST(Table, TwoPrimeCompressed) {
  // n = 15: classes 1, 3, 5, 15 give φ(n), (2p−1)(q−1), (p−1)(2q−1), (2p−1)(2q−1).
  const auto rows = gcdft::build_table(catalog::identity(), factorize(15), true);
  ASSERT_EQ(rows.size(), 4U);
  EXPECT_EQ(values(rows), (std::vector<ExactValue>{8, 20, 18, 45}));
  EXPECT_EQ(rows[0].gcd_value, 1);
  EXPECT_EQ(rows[1].gcd_value, 3);
  EXPECT_EQ(rows[2].gcd_value, 5);
  EXPECT_EQ(rows[3].gcd_value, 15);
  EXPECT_EQ(rows[0].symbolic_form, "phi(p)phi(q)");
  EXPECT_EQ(rows[1].symbolic_form, "[2phi(p)+1]phi(q)");
  EXPECT_EQ(rows[2].symbolic_form, "phi(p)[2phi(q)+1]");
  EXPECT_EQ(rows[3].symbolic_form, "[2phi(p)+1][2phi(q)+1]");
}

TEST(Table, TwoPrimeValuesMatchBruteForce) {
  for (oracle::i64 n : {6LL, 15LL, 35LL, 77LL}) {
    const auto rows = gcdft::build_table(catalog::identity(), factorize(n), false);
    ASSERT_EQ(rows.size(), static_cast<std::size_t>(n));
    for (const auto& r : rows) {
      const oracle::i64 m = r.index.convert_to<oracle::i64>();
      ASSERT_EQ(r.gcd_value, oracle::gcd(m, n));
      ASSERT_EQ(r.transform_value,
                oracle::round_real(oracle::dft([](oracle::i64 d) { return static_cast<long double>(d); }, n, m)));
    }
  }
}

TEST(Table, PrimePowerThreeBranches) {
  // n = p^3 = 27: t = 0, 0 < t < s, t ≥ s.
  const auto rows = gcdft::build_table(catalog::identity(), factorize(27), true);
  ASSERT_EQ(rows.size(), 4U);
  EXPECT_EQ(rows[0].symbolic_form, "phi(p^3)");
  EXPECT_EQ(rows[1].symbolic_form, "2phi(p^3)");
  EXPECT_EQ(rows[2].symbolic_form, "3phi(p^3)");
  EXPECT_EQ(rows[3].symbolic_form, "[4phi(p^3)+p^2]");
  // φ(27) = 18.
  EXPECT_EQ(values(rows), (std::vector<ExactValue>{18, 36, 54, 81}));
}

TEST(Table, NEqualsOne) {
  for (bool compress : {false, true}) {
    const auto rows = gcdft::build_table(catalog::identity(), factorize(1), compress);
    ASSERT_EQ(rows.size(), 1U);
    EXPECT_EQ(rows[0].index, 1);
    EXPECT_EQ(rows[0].gcd_value, 1);
    EXPECT_EQ(rows[0].transform_value, 1);
    EXPECT_EQ(rows[0].symbolic_form, "1");
  }
}

TEST(Table, ThreePrimeGolden) {
  // n = p^3 q^2 w with (p, q, w) = (2, 3, 5).
  const auto n = factorize(360);
  const auto rows = gcdft::build_table(catalog::identity(), n, true);
  ASSERT_EQ(rows.size(), 24U);
  std::map<BigInt, gcdft::TableRow> by_gcd;
  for (const auto& r : rows) by_gcd.emplace(r.gcd_value, r);

  EXPECT_EQ(by_gcd.at(1).transform_value, 96);  // φ(360)
  EXPECT_EQ(by_gcd.at(1).symbolic_form, "phi(p^3)phi(q^2)phi(w)");

  // m = p^2 q^2: t = (2, 2, 0).
  EXPECT_EQ(by_gcd.at(36).transform_value, 1008);
  EXPECT_EQ(by_gcd.at(36).symbolic_form, "3phi(p^3)[3phi(q^2)+q]phi(w)");

  EXPECT_EQ(by_gcd.at(360).transform_value, 3780);
  EXPECT_EQ(by_gcd.at(360).symbolic_form, "[4phi(p^3)+p^2][3phi(q^2)+q][2phi(w)+1]");

  // Every class against the brute-force sum.
  for (const auto& [g, r] : by_gcd) {
    const oracle::i64 m = g.convert_to<oracle::i64>();
    ASSERT_EQ(r.transform_value,
              oracle::round_real(oracle::dft([](oracle::i64 d) { return static_cast<long double>(d); }, 360, m)))
        << m;
  }

  // Uncompressed rows repeat the class values.
  const auto full = gcdft::build_table(catalog::identity(), n, false);
  ASSERT_EQ(full.size(), 360U);
  for (const auto& r : full) ASSERT_EQ(r.transform_value, by_gcd.at(r.gcd_value).transform_value);
}

TEST(Table, NonIdentitySymbolicForm) {
  const auto rows = gcdft::build_table(catalog::euler_phi(), factorize(12), true);
  EXPECT_EQ(rows.front().symbolic_form, "[phi(p^2)-phi(p)][phi(q)-phi(1)]");
  const auto general = gcdft::ArithmeticFunction::general("g", [](const BigInt& n) { return ExactValue(n); });
  EXPECT_EQ(gcdft::build_table(general, factorize(12), true).front().symbolic_form, "g*r_m(n)");
}

TEST(Table, RowCountEqualsDivisorCount) {
  for (oracle::i64 n = 1; n <= 10000; ++n) {
    const auto rows = gcdft::build_table(catalog::identity(), factorize(n), true);
    ASSERT_EQ(rows.size(), oracle::divisors(n).size()) << n;
  }
}

TEST(Table, DistinctClassesCanShareAValue) {
  // n = 24: gcd classes 6 and 8 both give 40.
  const auto rows = gcdft::build_table(catalog::identity(), factorize(24), true);
  ASSERT_EQ(rows.size(), 8U);
  EXPECT_EQ(values(rows), (std::vector<ExactValue>{8, 16, 20, 24, 40, 40, 60, 100}));
}

TEST(Table, CsvAndJsonRoundTrip) {
  const auto inv = gcdft::ArithmeticFunction::completely_multiplicative(
      "inv", [](const BigInt& p) { return ExactValue(BigInt(1), p); }, false);
  for (const auto& f : {catalog::identity(), catalog::moebius_mu(), catalog::liouville(), inv}) {
    for (oracle::i64 n : {1LL, 12LL, 360LL, 1001LL}) {
      const auto nf = factorize(n);
      for (bool compress : {true, false}) {
        const auto rows = gcdft::build_table(f, nf, compress);
        EXPECT_EQ(gcdft::parse_csv(gcdft::render_csv(rows)), rows) << f.name() << " " << n;
        EXPECT_EQ(gcdft::parse_json_rows(gcdft::table_to_json(f, nf, rows).dump()), rows) << f.name() << " " << n;
      }
    }
  }
  // Rational values serialize as num/den.
  const auto rows = gcdft::build_table(inv, factorize(4), true);
  EXPECT_NE(gcdft::render_csv(rows).find('/'), std::string::npos);
}

TEST(Table, Formats) {
  EXPECT_EQ(gcdft::parse_table_format("csv"), gcdft::TableFormat::Csv);
  EXPECT_EQ(gcdft::parse_table_format("json"), gcdft::TableFormat::Json);
  EXPECT_EQ(gcdft::parse_table_format("text"), gcdft::TableFormat::Text);
  EXPECT_THROW(gcdft::parse_table_format("xml"), std::invalid_argument);
  const auto nf = factorize(15);
  const auto rows = gcdft::build_table(catalog::identity(), nf, true);
  const std::string text = gcdft::render_table(catalog::identity(), nf, rows, gcdft::TableFormat::Text);
  EXPECT_NE(text.find("n = 15 = 3 * 5"), std::string::npos);
  EXPECT_NE(text.find("[2phi(p)+1][2phi(q)+1]"), std::string::npos);
  EXPECT_THROW(gcdft::parse_csv("m,value\n1,2\n"), gcdft::DomainError);
}

TEST(Table, LargeUncompressedRefused) {
  const auto nf = factorize(BigInt(1'000'003) * 2);
  EXPECT_THROW(gcdft::build_table(catalog::identity(), nf, false), gcdft::DomainError);
  EXPECT_EQ(gcdft::build_table(catalog::identity(), nf, true).size(), 4U);
}
