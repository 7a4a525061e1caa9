#include <gtest/gtest.h>

#include "brute.hpp"
#include "wordmap/group_spec.hpp"
#include "wordmap/numtheory.hpp"

using namespace wordmap;

TEST(GcdClosedForm, Examples) {
  EXPECT_EQ(zav_gcd(2, 6, 4, ZavKind::MinusMinus), 3);
  EXPECT_EQ(zav_gcd(2, 3, 5, ZavKind::PlusPlus), 3);
  EXPECT_EQ(zav_gcd(2, 4, 2, ZavKind::MinusPlus), 5);
  EXPECT_EQ(zav_gcd(3, 1, 1, ZavKind::MinusMinus), 2);
}

TEST(GcdClosedForm, MatchesDirectGcdExhaustively) {
  for (unsigned long a = 2; a <= 10; ++a) {
    for (unsigned long s = 1; s <= 12; ++s) {
      for (unsigned long t = 1; t <= 12; ++t) {
        const auto as = brute::pow(a, s), at = brute::pow(a, t);
        EXPECT_EQ(zav_gcd(a, s, t, ZavKind::MinusMinus), brute::gcd(as - 1, at - 1)) << a << " " << s << " " << t;
        EXPECT_EQ(zav_gcd(a, s, t, ZavKind::PlusPlus), brute::gcd(as + 1, at + 1)) << a << " " << s << " " << t;
        EXPECT_EQ(zav_gcd(a, s, t, ZavKind::MinusPlus), brute::gcd(as - 1, at + 1)) << a << " " << s << " " << t;
      }
    }
  }
}

TEST(GcdClosedForm, LargeExponents) {
  const mpz_class a = 7;
  const auto as = brute::pow(7, 180), at = brute::pow(7, 126);
  EXPECT_EQ(zav_gcd(a, 180, 126, ZavKind::MinusMinus), brute::gcd(as - 1, at - 1));
  EXPECT_EQ(zav_gcd(a, 180, 126, ZavKind::PlusPlus), brute::gcd(as + 1, at + 1));
  EXPECT_EQ(zav_gcd(a, 180, 126, ZavKind::MinusPlus), brute::gcd(as - 1, at + 1));
}

TEST(QPowEps, Examples) {
  EXPECT_EQ(qpow_eps(3, 2, Sign::minus()), 8);
  EXPECT_EQ(qpow_eps(2, 3, Sign::minus()), 9);
  EXPECT_EQ(qpow_eps(5, 1, Sign::plus()), 4);
  for (unsigned long q = 2; q <= 9; ++q) {
    for (unsigned k = 1; k <= 8; ++k) {
      EXPECT_GT(qpow_eps(q, k, Sign::minus()), 0);
      EXPECT_EQ(qpow_eps(q, k, Sign::plus()), brute::pow(q, k) - 1);
    }
  }
}

TEST(Stirling, Examples) {
  EXPECT_EQ(stirling_first_unsigned(4, 2), 11);
  EXPECT_EQ(stirling_first_unsigned(5, 1), 24);
  for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(stirling_first_unsigned(n, n), 1);
  EXPECT_THROW(stirling_first_unsigned(3, 4), std::invalid_argument);
}

TEST(Stirling, MatchesPermutationCycleCounts) {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto counts = brute::cycle_counts(n);
    for (unsigned k = 1; k <= n; ++k) EXPECT_EQ(stirling_first_unsigned(n, k), counts[k]) << n << " " << k;
  }
}

TEST(Stirling, RowSumsAreFactorials) {
  for (unsigned n = 0; n <= 12; ++n) {
    mpz_class sum = 0;
    for (const auto& v : stirling_first_row(n)) sum += v;
    EXPECT_EQ(sum, factorial(n));
  }
}

TEST(Harmonic, Examples) {
  EXPECT_EQ(harmonic(1), 1);
  EXPECT_EQ(harmonic(3), mpq_class(11, 6));
  EXPECT_EQ(harmonic(4), mpq_class(25, 12));
}

TEST(GroupOrder, Examples) {
  EXPECT_EQ(group_order(GroupSpec::sl(2, 3)), 24);
  EXPECT_EQ(group_order(GroupSpec::psl(2, 5)), 60);
  EXPECT_EQ(group_order(GroupSpec::su(2, 2)), 6);
  EXPECT_EQ(group_order(GroupSpec::psu(3, 2)), 72);
  EXPECT_EQ(group_order(GroupSpec::sl(3, 4)), 60480);
}

TEST(GroupOrder, LinearIsProjectiveTimesCentre) {
  for (unsigned n = 2; n <= 5; ++n) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      const unsigned long d = std::gcd<unsigned long>(n, q - 1);
      EXPECT_EQ(group_order(GroupSpec::sl(n, q)), group_order(GroupSpec::psl(n, q)) * d);
      const unsigned long du = std::gcd<unsigned long>(n, q + 1);
      EXPECT_EQ(group_order(GroupSpec::su(n, q)), group_order(GroupSpec::psu(n, q)) * du);
    }
  }
}

TEST(GroupSpec, RejectsRankOne) {
  EXPECT_THROW(GroupSpec(Sign::plus(), 1, PrimePower(2, 1), false), std::invalid_argument);
  EXPECT_EQ(GroupSpec::psu(3, 2).name(), "PSU_3(2)");
}

TEST(ExamplePrime, Examples) {
  EXPECT_EQ(find_example_prime(1, 2), 19u);
  EXPECT_EQ(find_example_prime(16, 2), 3u);  // p - 1 > 1 rules out 2
  EXPECT_EQ(find_example_prime(1, 3), 41u);  // p - 1 > 36 rules out 37
  EXPECT_THROW(find_example_prime(0, 2), std::invalid_argument);
}

TEST(ExamplePrime, IsSmallestAdmissiblePrime) {
  for (const mpq_class& c : {mpq_class(1), mpq_class(1, 2), mpq_class(3, 7), mpq_class(5)}) {
    for (unsigned n = 2; n <= 5; ++n) {
      const auto p = find_example_prime(c, n);
      const mpq_class threshold = mpq_class(4 * n * n) / c;
      EXPECT_TRUE(brute::is_prime(p));
      EXPECT_GT(mpq_class(p - 1), threshold);
      for (std::uint64_t r = 2; r < p; ++r) {
        EXPECT_FALSE(brute::is_prime(r) && mpq_class(r - 1) > threshold) << r;
      }
    }
  }
}

TEST(PrimePower, FactorsPrimePowers) {
  const auto q = PrimePower::from_q(243);
  EXPECT_EQ(q.p, 3u);
  EXPECT_EQ(q.e, 5u);
  EXPECT_EQ(q.q, 243);
  EXPECT_THROW(PrimePower::from_q(12), std::invalid_argument);
  EXPECT_THROW(PrimePower::from_q(1), std::invalid_argument);
  EXPECT_THROW(PrimePower(4, 1), std::invalid_argument);
}

TEST(Sign, Parses) {
  EXPECT_EQ(Sign::parse("+"), Sign::plus());
  EXPECT_EQ(Sign::parse("minus"), Sign::minus());
  EXPECT_EQ(Sign::parse("-1"), Sign::minus());
  EXPECT_THROW(Sign::parse("x"), std::invalid_argument);
  EXPECT_EQ(Sign::minus().pow(3), -1);
  EXPECT_EQ(Sign::minus().pow(4), 1);
}

TEST(ExactStrings, RenderAndParse) {
  EXPECT_EQ(to_exact_string(mpq_class(6, 4)), "3/2");
  EXPECT_EQ(to_exact_string(mpq_class(8, 4)), "2");
  EXPECT_EQ(parse_rational("1/2"), mpq_class(1, 2));
  EXPECT_EQ(parse_rational("-6/4"), mpq_class(-3, 2));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Primality, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 2000; ++n) EXPECT_EQ(is_prime(n), brute::is_prime(n)) << n;
}
