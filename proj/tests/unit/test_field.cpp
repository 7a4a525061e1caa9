#include <gtest/gtest.h>

#include "wordmap/errors.hpp"
#include "wordmap/finite_field.hpp"
#include "wordmap/polynomial.hpp"

using namespace wordmap;
using Elem = FiniteField::Elem;

namespace {

// Schoolbook arithmetic on digit vectors modulo the field's modulus.
std::vector<unsigned> digits(Elem a, unsigned p, unsigned e) {
  std::vector<unsigned> d(e);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

Elem code(const std::vector<unsigned>& d, unsigned p) {
  Elem c = 0;
  for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
  return c;
}

Elem naive_mul(Elem a, Elem b, unsigned p, unsigned e, const std::vector<std::uint32_t>& modulus) {
  const auto x = digits(a, p, e), y = digits(b, p, e);
  std::vector<unsigned> prod(2 * e, 0);
  for (unsigned i = 0; i < e; ++i)
    for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  for (unsigned k = 2 * e - 1; k >= e; --k) {
    const unsigned c = prod[k];
    if (!c) continue;
    for (unsigned i = 0; i <= e; ++i) prod[k - e + i] = (prod[k - e + i] + p * p - c * modulus[i] % p) % p;
  }
  prod.resize(e);
  return code(prod, p);
}

bool has_no_factor(const std::vector<unsigned>& f, unsigned p) {
  // Irreducibility of a monic polynomial of degree <= 3 is absence of roots; degree 4 also
  // needs a quadratic check, done here by trying all monic quadratics.
  const unsigned deg = static_cast<unsigned>(f.size()) - 1;
  for (unsigned r = 0; r < p; ++r) {
    unsigned v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * r + f[i]) % p;
    if (v == 0) return false;
  }
  if (deg < 4) return true;
  for (unsigned c0 = 0; c0 < p; ++c0) {
    for (unsigned c1 = 0; c1 < p; ++c1) {
      // Divide f by x^2 + c1 x + c0.
      std::vector<int> rem(f.begin(), f.end());
      for (int k = static_cast<int>(deg); k >= 2; --k) {
        const int c = rem[k] % static_cast<int>(p);
        rem[k] = 0;
        rem[k - 1] = (rem[k - 1] - c * static_cast<int>(c1)) % static_cast<int>(p);
        rem[k - 2] = (rem[k - 2] - c * static_cast<int>(c0)) % static_cast<int>(p);
      }
      if (rem[0] % static_cast<int>(p) == 0 && rem[1] % static_cast<int>(p) == 0) return false;
    }
  }
  return true;
}

// The least monic irreducible of degree e under the order of (c_0, ..., c_{e-1}).
std::vector<unsigned> least_irreducible(unsigned p, unsigned e) {
  unsigned total = 1;
  for (unsigned i = 0; i < e; ++i) total *= p;
  for (unsigned idx = 0; idx < total; ++idx) {
    std::vector<unsigned> f(e + 1);
    unsigned t = idx;
    for (unsigned i = e; i-- > 0;) {
      f[i] = t % p;  // c_0 is the most significant digit
      t /= p;
    }
    f[e] = 1;
    if (has_no_factor(f, p)) return f;
  }
  return {};
}

}  // namespace

TEST(FiniteField, Examples) {
  const auto f2 = FiniteField::build(2, 1);
  EXPECT_EQ(f2.size(), 2u);
  EXPECT_EQ(f2.primitive(), 1u);
  EXPECT_EQ(FiniteField::build(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(FiniteField::build(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_THROW(FiniteField::build(2, 14), BudgetExceeded);
  EXPECT_THROW(FiniteField::build(4, 1), std::invalid_argument);
}

TEST(FiniteField, ModulusIsLeastIrreducible) {
  for (auto [p, e] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}, {3u, 4u}, {5u, 2u}, {5u, 3u}, {7u, 2u}}) {
    const auto f = FiniteField::build(p, e);
    const auto expected = least_irreducible(p, e);
    ASSERT_EQ(f.modulus().size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(f.modulus()[i], expected[i]) << p << "^" << e;
  }
}

TEST(FiniteField, ArithmeticMatchesPolynomialModel) {
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 3u}, {3u, 2u}, {5u, 2u}, {2u, 5u}, {3u, 3u}, {7u, 1u}}) {
    const auto f = FiniteField::build(p, e);
    for (Elem a = 0; a < f.size(); ++a) {
      const auto da = digits(a, p, e);
      for (Elem b = 0; b < f.size(); ++b) {
        const auto db = digits(b, p, e);
        std::vector<unsigned> sum(e);
        for (unsigned i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p;
        EXPECT_EQ(f.add(a, b), code(sum, p));
        EXPECT_EQ(f.mul(a, b), naive_mul(a, b, p, e, f.modulus()));
        EXPECT_EQ(f.add(f.sub(a, b), b), a);
      }
      if (a) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      }
    }
    EXPECT_THROW(f.inv(0), std::domain_error);
  }
}

TEST(FiniteField, PrimitiveGeneratesUnits) {
  for (auto [p, e] : {std::pair{2u, 1u}, {2u, 4u}, {3u, 2u}, {5u, 2u}, {7u, 2u}, {11u, 1u}}) {
    const auto f = FiniteField::build(p, e);
    EXPECT_EQ(f.order(f.primitive()), f.size() - 1u);
    for (Elem a = 1; a < f.size(); ++a) {
      EXPECT_EQ(f.pow(a, f.size() - 1), 1u);
      EXPECT_EQ((f.size() - 1) % f.order(a), 0u);
    }
  }
}

TEST(FiniteField, FrobeniusAndConjugation) {
  for (auto [p, e] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 4u}, {5u, 2u}, {3u, 4u}}) {
    const auto f = FiniteField::build(p, e);
    std::uint32_t q = 1;
    for (unsigned i = 0; i < e / 2; ++i) q *= p;
    unsigned fixed = 0;
    for (Elem a = 0; a < f.size(); ++a) {
      EXPECT_EQ(f.conjugate(f.conjugate(a)), a);
      EXPECT_EQ(f.conjugate(a), f.pow(a, q));
      if (f.conjugate(a) == a) ++fixed;
      for (Elem b = 0; b < f.size(); b += 3) {
        EXPECT_EQ(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
        EXPECT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
      }
    }
    EXPECT_EQ(fixed, q);
  }
  EXPECT_THROW(FiniteField::build(2, 3).conjugate(1), std::logic_error);
}

TEST(Polynomial, DivisionAndGcd) {
  const auto f = FiniteField::build(5, 1);
  const poly::Poly a{1, 1};     // x + 1
  const poly::Poly b{2, 0, 1};  // x^2 + 2
  const auto ab = poly::mul(f, a, b);
  auto [quot, rem] = poly::divmod(f, ab, b);
  EXPECT_EQ(quot, a);
  EXPECT_TRUE(rem.empty());
  EXPECT_EQ(poly::gcd(f, ab, poly::mul(f, a, a)), a);
  EXPECT_EQ(poly::degree(poly::Poly{}), -1);
  EXPECT_THROW(poly::divmod(f, a, poly::Poly{}), std::domain_error);
}

TEST(Polynomial, SquarefreeAndFactor) {
  const auto f = FiniteField::build(3, 1);
  const poly::Poly x_minus_1{2, 1};   // x - 1
  const poly::Poly irreducible{1, 0, 1};  // x^2 + 1 over F_3
  const auto square = poly::mul(f, x_minus_1, x_minus_1);
  EXPECT_FALSE(poly::is_squarefree(f, square));
  EXPECT_TRUE(poly::is_squarefree(f, poly::mul(f, x_minus_1, irreducible)));
  // x^3 - x = x (x - 1)(x + 1) is squarefree; x^3 has zero derivative in characteristic 3.
  EXPECT_TRUE(poly::is_squarefree(f, poly::Poly{0, 2, 0, 1}));
  EXPECT_FALSE(poly::is_squarefree(f, poly::Poly{0, 0, 0, 1}));

  const auto product = poly::mul(f, square, irreducible);
  const auto factors = poly::factor(f, product);
  ASSERT_EQ(factors.size(), 2u);
  EXPECT_EQ(factors[0].first, x_minus_1);
  EXPECT_EQ(factors[0].second, 2u);
  EXPECT_EQ(factors[1].first, irreducible);
  EXPECT_EQ(factors[1].second, 1u);
}

TEST(Polynomial, FactorDegreesOfAllCubics) {
  // Over F_2 there are 8 monic cubics: the two irreducibles x^3+x+1 and x^3+x^2+1 factor trivially.
  const auto f = FiniteField::build(2, 1);
  unsigned irreducible = 0;
  for (unsigned c = 0; c < 8; ++c) {
    const poly::Poly g{c & 1u, (c >> 1) & 1u, (c >> 2) & 1u, 1};
    const auto factors = poly::factor(f, g);
    unsigned total = 0;
    poly::Poly rebuilt{1};
    for (const auto& [h, m] : factors) {
      total += static_cast<unsigned>(poly::degree(h)) * m;
      for (unsigned k = 0; k < m; ++k) rebuilt = poly::mul(f, rebuilt, h);
    }
    EXPECT_EQ(total, 3u);
    EXPECT_EQ(rebuilt, g);
    if (factors.size() == 1 && factors[0].second == 1) ++irreducible;
  }
  EXPECT_EQ(irreducible, 2u);
}
