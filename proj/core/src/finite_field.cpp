#include "wordmap/finite_field.hpp"

#include <stdexcept>

#include "wordmap/errors.hpp"

namespace wordmap {

namespace {

using Digits = std::vector<std::uint32_t>;  // prime-field polynomial, low to high

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Digits prime_rem(Digits a, const Digits& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of k.
Digits monic_from_index(std::uint64_t k, unsigned d, std::uint32_t p) {
  Digits f(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    f[i] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  f[d] = 1;
  return f;
}

bool prime_irreducible(const Digits& f, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      if (prime_rem(f, monic_from_index(k, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField FiniteField::build(std::uint64_t p, unsigned e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (e == 0) throw std::invalid_argument("field degree must be positive");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < e; ++i) {
    size *= p;
    if (size > kMaxSize) throw BudgetExceeded("field size exceeds 10^4");
  }

  FiniteField f;
  f.p_ = static_cast<std::uint32_t>(p);
  f.e_ = e;
  f.size_ = static_cast<std::uint32_t>(size);

  // Candidates in lexicographic order of (c_0, ..., c_{e-1}): c_0 is the leading digit of k.
  for (std::uint64_t k = 0; k < size; ++k) {
    Digits cand(e + 1, 0);
    std::uint64_t rest = k;
    for (unsigned i = e; i-- > 0;) {
      cand[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    cand[e] = 1;
    if (prime_irreducible(cand, f.p_)) {
      f.modulus_ = cand;
      break;
    }
  }

  auto to_digits = [&](Elem a) {
    Digits d(e, 0);
    for (unsigned i = 0; i < e; ++i) {
      d[i] = a % f.p_;
      a /= f.p_;
    }
    return d;
  };
  auto from_digits = [&](const Digits& d) {
    Elem a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * f.p_ + d[i];
    return a;
  };
  auto raw_mul = [&](Elem a, Elem b) {
    const Digits da = to_digits(a), db = to_digits(b);
    Digits prod(2 * e, 0);
    for (unsigned i = 0; i < e; ++i) {
      for (unsigned j = 0; j < e; ++j) {
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % f.p_);
      }
    }
    Digits r = prime_rem(prod, f.modulus_, f.p_);
    r.resize(e, 0);
    return from_digits(r);
  };

  f.neg_.resize(size);
  for (Elem a = 0; a < size; ++a) {
    Digits d = to_digits(a);
    for (auto& c : d) c = (f.p_ - c) % f.p_;
    f.neg_[a] = from_digits(d);
  }

  const std::uint32_t group = f.size_ - 1;
  for (Elem g = 1; g < size; ++g) {
    std::uint32_t ord = 1;
    Elem x = g;
    while (x != 1) {
      x = raw_mul(x, g);
      ++ord;
    }
    if (ord != group) continue;
    f.exp_.resize(group);
    f.log_.assign(size, 0);
    x = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
      f.exp_[i] = x;
      f.log_[x] = i;
      x = raw_mul(x, g);
    }
    break;
  }

  if (size <= 256) {
    f.add_table_.resize(size * size);
    for (Elem a = 0; a < size; ++a) {
      for (Elem b = 0; b < size; ++b) f.add_table_[a * size + b] = f.add_digits(a, b);
    }
  }
  return f;
}

FiniteField::Elem FiniteField::add_digits(Elem a, Elem b) const {
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : size_ - 1 - l];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (k % (size_ - 1))) % (size_ - 1);
  return exp_[l];
}

FiniteField::Elem FiniteField::pow(Elem a, const Integer& k) const {
  if (k < 0) throw std::invalid_argument("negative exponent");
  if (sgn(k) == 0) return 1;
  if (a == 0) return 0;
  return pow(a, mpz_fdiv_ui(k.get_mpz_t(), size_ - 1) + (size_ - 1));
}

FiniteField::Elem FiniteField::conjugate(Elem a) const {
  if (e_ % 2 != 0) throw std::logic_error("conjugation needs a field of even degree");
  std::uint64_t root = 1;
  for (unsigned i = 0; i < e_ / 2; ++i) root *= p_;
  return pow(a, root);
}

FiniteField::Elem FiniteField::from_integer(std::int64_t k) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<Elem>(((k % p) + p) % p);
}

std::uint64_t FiniteField::order(Elem a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  const std::uint64_t group = size_ - 1;
  return group / gcd_u64(group, log_[a]);
}

std::string FiniteField::to_string(Elem a) const { return std::to_string(a); }

}  // namespace wordmap
