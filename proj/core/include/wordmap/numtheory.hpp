#ifndef WORDMAP_NUMTHEORY_HPP
#define WORDMAP_NUMTHEORY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wordmap {

using Integer = mpz_class;
using Rational = mpq_class;

/// The twist ε: +1 for the linear family, -1 for the unitary family.
class Sign {
 public:
  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }

  constexpr int value() const { return value_; }
  constexpr bool is_plus() const { return value_ > 0; }

  /// ε^k as an integer.
  constexpr int pow(std::uint64_t k) const { return (is_plus() || k % 2 == 0) ? 1 : -1; }

  /// Parses "+", "-", "plus", "minus", "+1", "-1".
  static Sign parse(const std::string& text);
  std::string to_string() const { return is_plus() ? "+" : "-"; }

  friend constexpr bool operator==(Sign a, Sign b) { return a.value_ == b.value_; }

 private:
  constexpr explicit Sign(int v) : value_(v) {}
  int value_;
};

/// q = p^e with p prime.
struct PrimePower {
  std::uint64_t p = 2;
  unsigned e = 1;
  Integer q = 2;

  PrimePower() = default;
  PrimePower(std::uint64_t prime, unsigned exponent);

  /// Factors q as p^e; throws std::invalid_argument when q is not a prime power.
  static PrimePower from_q(std::uint64_t q);

  /// q as a machine integer; throws std::overflow_error when it does not fit.
  std::uint64_t q_u64() const;

  friend bool operator==(const PrimePower& a, const PrimePower& b) { return a.p == b.p && a.e == b.e; }
};

/// The three gcd shapes of a^s ∓ 1 against a^t ∓ 1.
enum class ZavKind {
  MinusMinus,  // (a^s - 1, a^t - 1)
  PlusPlus,    // (a^s + 1, a^t + 1)
  MinusPlus,   // (a^s - 1, a^t + 1)
};

bool is_prime(std::uint64_t n);

/// gcd(a^s ∓ 1, a^t ∓ 1) from the closed form in terms of a^{(s,t)}, without a big-integer gcd.
Integer zav_gcd(const Integer& a, std::uint64_t s, std::uint64_t t, ZavKind kind);

/// q^k - ε^k.
Integer qpow_eps(const Integer& q, std::uint64_t k, Sign eps);

/// Unsigned Stirling number of the first kind: permutations of n points with k cycles.
Integer stirling_first_unsigned(unsigned n, unsigned k);

/// Row c(n, 0..n), computed iteratively.
std::vector<Integer> stirling_first_row(unsigned n);

Rational harmonic(unsigned n);

Integer factorial(unsigned n);

/// Smallest prime p with p - 1 > 4 n^2 / c.
std::uint64_t find_example_prime(const Rational& c, unsigned n);

/// Renders an integer in decimal and a rational as "num/den" (plain decimal when integral).
std::string to_exact_string(const Integer& value);
std::string to_exact_string(const Rational& value);

/// Parses "a", "-a" or "a/b" into a canonical rational.
Rational parse_rational(const std::string& text);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace wordmap

#endif  // WORDMAP_NUMTHEORY_HPP
