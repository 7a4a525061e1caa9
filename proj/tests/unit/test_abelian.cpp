#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "wordmap/abelian.hpp"
#include "wordmap/errors.hpp"

using namespace wordmap;

namespace {

AbelianInvariants inv(std::initializer_list<long> f) {
  std::vector<Integer> v;
  for (long x : f) v.emplace_back(x);
  return AbelianInvariants(v);
}

brute::Histogram histogram(const AbelianInvariants& a) {
  std::vector<std::uint64_t> m;
  for (const auto& d : a.factors()) m.push_back(d.get_ui());
  return brute::cyclic_product_histogram(m);
}

// Z^2 / L for a 2x2 lattice, by listing coset representatives in a box.
brute::Histogram quotient_histogram_2d(long a, long b, long c, long d, long box) {
  // Reduce (x, y) to a canonical representative using the Hermite form of the rows (a,b),(c,d)
  // with a > 0, c = 0, d > 0: y mod d, then x mod a after subtracting multiples of (a, b).
  EXPECT_EQ(c, 0);
  std::set<std::pair<long, long>> reps;
  auto reduce = [&](long x, long y) {
    const long k = (x >= 0 ? x / a : -((-x + a - 1) / a));
    x -= k * a;
    y -= k * b;
    y = ((y % d) + d) % d;
    return std::make_pair(x, y);
  };
  for (long x = 0; x < box; ++x)
    for (long y = 0; y < box; ++y) reps.insert(reduce(x, y));
  brute::Histogram h;
  for (auto [x, y] : reps) {
    long k = 1;
    while (reduce(k * x, k * y) != std::make_pair(0L, 0L)) ++k;
    ++h[static_cast<std::uint64_t>(k)];
  }
  return h;
}

}  // namespace

TEST(AbelianInvariants, NormalisesAndValidates) {
  EXPECT_EQ(inv({1, 2, 6}).factors().size(), 2u);
  EXPECT_THROW(inv({4, 6}), std::invalid_argument);
  EXPECT_EQ(AbelianInvariants::from_cyclic({2, 3}), inv({6}));
  EXPECT_EQ(AbelianInvariants::from_cyclic({4, 6, 10}), inv({2, 2, 60}));
  EXPECT_EQ(AbelianInvariants::from_cyclic({1, 1}), AbelianInvariants());
  EXPECT_EQ(inv({2, 6}).to_string(), "(2, 6)");
  EXPECT_EQ(AbelianInvariants().to_string(), "()");
  EXPECT_EQ(inv({2, 6}).order(), 12);
  EXPECT_EQ(inv({2, 6}).exponent(), 6);
}

TEST(AbelianInvariants, FromCyclicMatchesEnumeration) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> m(1, 30);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> moduli(1 + trial % 3);
    std::vector<Integer> big;
    for (auto& x : moduli) {
      x = m(rng);
      big.emplace_back(static_cast<unsigned long>(x));
    }
    EXPECT_EQ(histogram(AbelianInvariants::from_cyclic(big)), brute::cyclic_product_histogram(moduli));
  }
}

TEST(Smith, Examples) {
  EXPECT_EQ(smith_diagonal({2, {{2, 0}, {0, 6}}}), inv({2, 6}));
  EXPECT_EQ(smith_diagonal({2, {{2, 0}, {0, 3}}}), inv({6}));
  EXPECT_EQ(smith_diagonal({2, {{4, 2}, {0, 4}}}), inv({2, 8}));
  EXPECT_EQ(histogram(smith_diagonal({2, {{4, 2}, {0, 4}}})), quotient_histogram_2d(4, 2, 0, 4, 16));
}

TEST(Smith, InfiniteQuotientIsRejected) {
  EXPECT_THROW(smith_diagonal({2, {{2, 0}}}), NotFinite);
  EXPECT_THROW(smith_diagonal({2, {{1, 2}, {2, 4}}}), NotFinite);
}

TEST(Smith, InvariantUnderUnimodularTransformations) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<Integer>> rel(3, std::vector<Integer>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rel[i][j] = entry(rng);
    const auto base = smith_normal_diagonal(rel);
    auto mixed = rel;
    for (int step = 0; step < 6; ++step) {
      const int a = pick(rng), b = pick(rng), k = entry(rng);
      switch (step % 3) {
        case 0: std::swap(mixed[a], mixed[b]); break;
        case 1:
          for (int j = 0; j < 3; ++j) std::swap(mixed[j][a], mixed[j][b]);
          break;
        default:
          if (a != b)
            for (int j = 0; j < 3; ++j) mixed[a][j] += k * mixed[b][j];
      }
    }
    EXPECT_EQ(smith_normal_diagonal(mixed), base);
  }
}

TEST(PowerImage, Examples) {
  EXPECT_EQ(power_image(inv({2, 6}), 4), inv({3}));
  EXPECT_EQ(power_image(inv({9}), 1), inv({9}));
  EXPECT_EQ(power_image(inv({8}), 6), inv({4}));
  EXPECT_THROW(power_image(inv({8}), 0), std::invalid_argument);
}

TEST(PowerImage, IdentityAndExponentWords) {
  for (const auto& a : {inv({2, 6}), inv({3, 3, 9}), inv({4, 8, 40}), inv({5})}) {
    EXPECT_EQ(power_image(a, 1), a);
    EXPECT_TRUE(power_image(a, a.exponent()).is_trivial());
  }
}

TEST(PowerImage, MatchesEnumerationOnRandomGroups) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> m(1, 200), e(1, 50);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::uint64_t> moduli;
    std::uint64_t total;
    do {
      moduli.assign(1 + trial % 4, 0);
      total = 1;
      for (auto& x : moduli) total *= (x = m(rng));
    } while (total > 1'000'000);
    std::vector<Integer> big;
    for (auto x : moduli) big.emplace_back(static_cast<unsigned long>(x));
    const auto M = e(rng);
    const auto predicted = power_image(AbelianInvariants::from_cyclic(big), static_cast<unsigned long>(M));
    EXPECT_EQ(predicted.order(), enumerate_power_image_size(moduli, M));
  }
}

TEST(EnumeratePowerImage, Examples) {
  EXPECT_EQ(enumerate_power_image_size(inv({2, 6}), 4), 3u);
  EXPECT_EQ(enumerate_power_image_size(inv({5}), 5), 1u);
  EXPECT_EQ(enumerate_power_image_size(inv({7}), 3), 7u);
  EXPECT_THROW(enumerate_power_image_size(inv({1000, 2000}), 2), BudgetExceeded);
}

TEST(CharacterKernel, Examples) {
  const std::vector<Integer> m8{8}, c4{4}, m3{3, 3}, c11{1, 1}, m9{9}, c0{0};
  EXPECT_EQ(kernel_of_character(m8, c4, 8), inv({4}));
  EXPECT_EQ(kernel_of_character(m9, c0, 9), inv({9}));
  EXPECT_EQ(kernel_of_character(m3, c11, 3), inv({3}));
  EXPECT_THROW(kernel_of_character(m8, c4, 12), std::invalid_argument);
}

TEST(CharacterKernel, MatchesEnumeration) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> m(1, 24);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t s = 1 + trial % 3;
    std::vector<std::uint64_t> moduli(s), coeffs(s);
    std::vector<Integer> bm, bc;
    std::uint64_t L = 1;
    for (std::size_t i = 0; i < s; ++i) {
      moduli[i] = m(rng);
      coeffs[i] = std::uniform_int_distribution<std::uint64_t>(0, moduli[i])(rng);
      L = brute::lcm(L, moduli[i]);
      bm.emplace_back(static_cast<unsigned long>(moduli[i]));
      bc.emplace_back(static_cast<unsigned long>(coeffs[i]));
    }
    const auto k = kernel_of_character(bm, bc, static_cast<unsigned long>(L));
    const auto h = brute::kernel_histogram(moduli, coeffs, L);
    EXPECT_EQ(histogram(k), h);
    // First isomorphism theorem: |kernel| |image| = prod m_i.
    std::set<std::uint64_t> image;
    std::uint64_t total = 1;
    for (auto x : moduli) total *= x;
    std::vector<std::uint64_t> d(s, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < s; ++i) v = (v + d[i] * coeffs[i] % L * (L / moduli[i])) % L;
      image.insert(v);
      for (std::size_t i = s; i-- > 0;) {
        if (++d[i] < moduli[i]) break;
        d[i] = 0;
      }
    }
    EXPECT_EQ(k.order() * image.size(), total);
  }
}

TEST(Quotient, Examples) {
  const IntegerRelationPresentation z4{1, {{4}}};
  EXPECT_EQ(quotient_by_subgroup(z4, {{2}}), inv({2}));
  const IntegerRelationPresentation z2z4{2, {{2, 0}, {0, 4}}};
  EXPECT_EQ(quotient_by_subgroup(z2z4, {{1, 2}}), inv({4}));
  EXPECT_EQ(quotient_by_subgroup(z2z4, {}), inv({2, 4}));
}

TEST(ElementOrders, RecoverInvariants) {
  for (const auto& a : {inv({2, 6}), inv({2, 2, 4}), inv({3, 9, 18}), inv({60}), AbelianInvariants()}) {
    std::vector<std::uint64_t> orders;
    for (const auto& [o, c] : histogram(a)) orders.insert(orders.end(), c, o);
    EXPECT_EQ(invariants_from_element_orders(orders), a) << a.to_string();
  }
  EXPECT_THROW(invariants_from_element_orders(std::vector<std::uint64_t>{1, 2, 2}), std::invalid_argument);
}
