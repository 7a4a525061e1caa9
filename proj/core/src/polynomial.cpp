#include "wordmap/polynomial.hpp"

#include <stdexcept>

#include "wordmap/errors.hpp"

namespace wordmap::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const FiniteField& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

Poly sub(const FiniteField& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

Poly mul(const FiniteField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly scale(const FiniteField& f, const Poly& a, Elem c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const FiniteField& f, const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  trim(rem);
  const std::size_t db = b.size() - 1;
  if (rem.size() <= db) return {Poly{}, rem};
  Poly quot(rem.size() - db, 0);
  const Elem lead_inv = f.inv(b.back());
  while (rem.size() > db) {
    const Elem c = f.mul(rem.back(), lead_inv);
    const std::size_t shift = rem.size() - 1 - db;
    quot[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b[i]));
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

Poly monic(const FiniteField& f, const Poly& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

Poly gcd(const FiniteField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Poly derivative(const FiniteField& f, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    r[i - 1] = f.mul(a[i], f.from_integer(static_cast<std::int64_t>(i % f.characteristic())));
  }
  trim(r);
  return r;
}

bool is_squarefree(const FiniteField& f, const Poly& a) {
  const Poly g = gcd(f, a, derivative(f, a));
  return g.size() == 1;
}

std::vector<std::pair<Poly, unsigned>> factor(const FiniteField& f, const Poly& a) {
  Poly rest = monic(f, a);
  if (rest.empty()) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<std::pair<Poly, unsigned>> out;
  const std::uint64_t q = f.size();
  for (int d = 1; 2 * d <= degree(rest); ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) {
      count *= q;
      if (count > 1'000'000) throw BudgetExceeded("polynomial factorisation: too many trial divisors");
    }
    for (std::uint64_t k = 0; k < count && 2 * d <= degree(rest); ++k) {
      Poly cand(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t t = k;
      for (int i = 0; i < d; ++i) {
        cand[static_cast<std::size_t>(i)] = static_cast<Elem>(t % q);
        t /= q;
      }
      cand[static_cast<std::size_t>(d)] = 1;
      unsigned mult = 0;
      for (;;) {
        auto [quot, rem] = divmod(f, rest, cand);
        if (!rem.empty()) break;
        rest = std::move(quot);
        ++mult;
      }
      if (mult) out.emplace_back(std::move(cand), mult);
    }
  }
  // No divisor of degree <= deg/2 remains, so the cofactor is irreducible.
  if (degree(rest) >= 1) out.emplace_back(std::move(rest), 1);
  return out;
}

}  // namespace wordmap::poly
