#include "wordmap/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "wordmap/errors.hpp"

namespace wordmap {

AbelianInvariants::AbelianInvariants(std::vector<Integer> chain) {
  for (auto& d : chain) {
    if (d < 1) throw std::invalid_argument("invariant factors must be positive");
    if (d == 1) continue;
    if (!factors_.empty() && !mpz_divisible_p(d.get_mpz_t(), factors_.back().get_mpz_t())) {
      throw std::invalid_argument("factors do not form a divisibility chain");
    }
    factors_.push_back(std::move(d));
  }
}

AbelianInvariants AbelianInvariants::from_cyclic(std::vector<Integer> moduli) {
  for (const auto& m : moduli) {
    if (m < 1) throw std::invalid_argument("cyclic factor orders must be positive");
  }
  // Z_a x Z_b = Z_gcd x Z_lcm; one sweep per position leaves a chain.
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (std::size_t j = i + 1; j < moduli.size(); ++j) {
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), moduli[i].get_mpz_t(), moduli[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), moduli[i].get_mpz_t(), moduli[j].get_mpz_t());
      moduli[i] = g;
      moduli[j] = l;
    }
  }
  return AbelianInvariants(std::move(moduli));
}

Integer AbelianInvariants::order() const {
  Integer r = 1;
  for (const auto& d : factors_) r *= d;
  return r;
}

Integer AbelianInvariants::exponent() const { return factors_.empty() ? Integer(1) : factors_.back(); }

std::string AbelianInvariants::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ", ";
    s += factors_[i].get_str();
  }
  return s + ")";
}

AbelianInvariants power_image(const AbelianInvariants& group, const Integer& exponent) {
  if (exponent < 1) throw std::invalid_argument("power exponent must be >= 1");
  std::vector<Integer> out;
  out.reserve(group.rank());
  for (const auto& d : group.factors()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), exponent.get_mpz_t());
    out.push_back(d / g);
  }
  return AbelianInvariants::from_cyclic(std::move(out));
}

std::uint64_t enumerate_power_image_size(std::span<const std::uint64_t> moduli, std::uint64_t exponent,
                                         std::uint64_t budget) {
  if (exponent < 1) throw std::invalid_argument("power exponent must be >= 1");
  std::uint64_t total = 1;
  for (auto m : moduli) {
    if (m == 0) throw std::invalid_argument("cyclic factor orders must be positive");
    if (total > budget / m) throw BudgetExceeded("abelian group order exceeds enumeration budget");
    total *= m;
  }
  // Mixed-radix index of (M a_1, ..., M a_k); one bit per element.
  std::vector<bool> hit(total, false);
  std::vector<std::uint64_t> digits(moduli.size(), 0);
  std::uint64_t distinct = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t image = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      const auto m = moduli[i];
      const auto v = (digits[i] * (exponent % m)) % m;
      image = image * m + v;
    }
    if (!hit[image]) {
      hit[image] = true;
      ++distinct;
    }
    for (std::size_t i = moduli.size(); i-- > 0;) {
      if (++digits[i] < moduli[i]) break;
      digits[i] = 0;
    }
  }
  return distinct;
}

std::uint64_t enumerate_power_image_size(const AbelianInvariants& group, std::uint64_t exponent,
                                         std::uint64_t budget) {
  std::vector<std::uint64_t> moduli;
  for (const auto& d : group.factors()) {
    if (!d.fits_ulong_p()) throw BudgetExceeded("abelian group order exceeds enumeration budget");
    moduli.push_back(d.get_ui());
  }
  return enumerate_power_image_size(moduli, exponent, budget);
}

namespace {

std::map<std::uint64_t, unsigned> factor_u64(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> f;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

// log_p(x) when x is an exact power of p, otherwise -1.
int exact_log(std::uint64_t x, std::uint64_t p) {
  int k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return x == 1 ? k : -1;
}

}  // namespace

AbelianInvariants invariants_from_element_orders(std::span<const std::uint64_t> orders) {
  const std::uint64_t n = orders.size();
  if (n == 0) throw std::invalid_argument("a group has at least one element");
  for (auto o : orders) {
    if (o == 0 || n % o != 0) throw std::invalid_argument("element order does not divide the group order");
  }
  // Per prime p with p^v || n: the number of elements of order dividing p^j is p^{f(j)},
  // and f(j) - f(j-1) counts the cyclic p-factors of exponent >= j.
  std::vector<std::vector<std::uint64_t>> prime_power_columns;  // descending p-parts per prime
  std::size_t rank = 0;
  for (auto [p, v] : factor_u64(n)) {
    std::vector<int> at_least;  // at_least[j-1] = #{factors with exponent >= j}
    int prev = 0;
    std::uint64_t pj = 1;
    for (unsigned j = 1; prev < static_cast<int>(v); ++j) {
      pj *= p;
      std::uint64_t count = 0;
      for (auto o : orders) count += (pj % o == 0) ? 1 : 0;
      const int f = exact_log(count, p);
      if (f < 0 || f <= prev || f > static_cast<int>(v)) {
        throw std::invalid_argument("element order statistics are not those of an abelian group");
      }
      if (!at_least.empty() && f - prev > at_least.back()) {
        throw std::invalid_argument("element order statistics are not those of an abelian group");
      }
      at_least.push_back(f - prev);
      prev = f;
    }
    std::vector<std::uint64_t> parts(static_cast<std::size_t>(at_least.front()), 1);
    for (int c : at_least) {
      for (int i = 0; i < c; ++i) parts[static_cast<std::size_t>(i)] *= p;
    }
    rank = std::max(rank, parts.size());
    prime_power_columns.push_back(std::move(parts));
  }
  // Largest p-parts combine into the last factor, and so on downwards.
  std::vector<Integer> chain(rank, 1);
  for (const auto& parts : prime_power_columns) {
    for (std::size_t i = 0; i < parts.size(); ++i) chain[rank - 1 - i] *= Integer(static_cast<unsigned long>(parts[i]));
  }
  return AbelianInvariants(std::move(chain));
}

}  // namespace wordmap
