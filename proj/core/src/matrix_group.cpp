// Explicit matrix groups over small finite fields.

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "wordmap/errors.hpp"
#include "wordmap/oracle.hpp"

namespace wordmap {

EnumerationBudget::EnumerationBudget(std::uint64_t cap) : max_elements(cap) {
  if (cap == 0) throw std::invalid_argument("enumeration budget must be positive");
}

EnumerationBudget EnumerationBudget::from_environment() {
  const char* raw = std::getenv(kBudgetEnvVar);
  if (raw == nullptr || *raw == '\0') return EnumerationBudget{};
  try {
    std::size_t used = 0;
    const auto v = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument("trailing characters");
    return EnumerationBudget(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(kBudgetEnvVar) + " must be a positive integer");
  }
}

FiniteField build_field(std::uint64_t p, unsigned e) { return FiniteField::build(p, e); }

FiniteField matrix_field(const GroupSpec& spec) {
  return FiniteField::build(spec.q.p, spec.eps.is_plus() ? spec.q.e : 2 * spec.q.e);
}

namespace {

// Determinant by Gaussian elimination over the field.
Elem determinant(const FiniteField& f, std::vector<Elem> m, unsigned n) {
  Elem det = 1;
  for (unsigned c = 0; c < n; ++c) {
    unsigned piv = c;
    while (piv < n && m[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (unsigned j = 0; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
      det = f.neg(det);
    }
    const Elem pv = m[c * n + c];
    det = f.mul(det, pv);
    const Elem pinv = f.inv(pv);
    for (unsigned r = c + 1; r < n; ++r) {
      const Elem factor = f.mul(m[r * n + c], pinv);
      if (factor == 0) continue;
      for (unsigned j = c; j < n; ++j) m[r * n + j] = f.sub(m[r * n + j], f.mul(factor, m[c * n + j]));
    }
  }
  return det;
}

// Advances a base-q odometer; returns false after the last state.
bool next_tuple(std::span<Elem> digits, std::uint32_t q) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < q) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

MatrixGroup::MatrixGroup(GroupSpec spec, FiniteField field)
    : spec_(std::move(spec)), field_(std::move(field)), n_(spec_.n) {}

MatrixGroup MatrixGroup::enumerate(const GroupSpec& spec, const EnumerationBudget& budget) {
  const Integer order = group_order(spec);
  if (order > Integer(static_cast<unsigned long>(budget.max_elements))) {
    throw BudgetExceeded(spec.name() + " has order " + order.get_str() + " > budget " +
                         std::to_string(budget.max_elements));
  }
  MatrixGroup g(spec, matrix_field(spec));
  const FiniteField& f = g.field_;
  const unsigned n = g.n_;
  const std::uint32_t Q = f.size();

  std::uint64_t span = 1;
  for (unsigned i = 0; i < n * n; ++i) {
    if (span > (std::uint64_t{1} << 63) / Q) throw BudgetExceeded("matrix codes do not fit 64 bits");
    span *= Q;
  }

  const std::uint64_t q = spec.q.q_u64();
  for (Elem mu = 1; mu < Q; ++mu) {
    if (f.pow(mu, n) != 1) continue;
    if (!spec.eps.is_plus() && f.pow(mu, q + 1) != 1) continue;
    g.scalars_.push_back(mu);
  }

  std::vector<Elem> m(static_cast<std::size_t>(n) * n, 0);
  if (spec.eps.is_plus()) {
    // First n-1 rows free; the last row solves the cofactor equation det = 1.
    std::span<Elem> prefix(m.data(), static_cast<std::size_t>(n - 1) * n);
    std::vector<Elem> cof(n), minor(static_cast<std::size_t>(n - 1) * (n - 1));
    do {
      for (unsigned j = 0; j < n; ++j) {
        for (unsigned r = 0; r + 1 < n; ++r) {
          unsigned cc = 0;
          for (unsigned c = 0; c < n; ++c) {
            if (c == j) continue;
            minor[r * (n - 1) + cc++] = m[r * n + c];
          }
        }
        Elem d = determinant(f, minor, n - 1);
        cof[j] = ((n - 1 + j) % 2 == 1) ? f.neg(d) : d;
      }
      unsigned pivot = n;
      for (unsigned j = 0; j < n; ++j) {
        if (cof[j] != 0) {
          pivot = j;
          break;
        }
      }
      if (pivot == n) continue;
      const Elem pinv = f.inv(cof[pivot]);
      std::vector<Elem> free(n - 1, 0);
      do {
        Elem acc = 0;
        unsigned k = 0;
        for (unsigned j = 0; j < n; ++j) {
          if (j == pivot) continue;
          m[(n - 1) * n + j] = free[k++];
          acc = f.add(acc, f.mul(m[(n - 1) * n + j], cof[j]));
        }
        m[(n - 1) * n + pivot] = f.mul(f.sub(1, acc), pinv);
        g.add_element(m);
      } while (next_tuple(free, Q));
    } while (next_tuple(prefix, Q));
  } else {
    // Columns orthonormal for the Hermitian form sum conj(u_i) v_i, then det = 1.
    auto herm = [&](std::span<const Elem> u, std::span<const Elem> v) {
      Elem acc = 0;
      for (unsigned i = 0; i < n; ++i) acc = f.add(acc, f.mul(f.conjugate(u[i]), v[i]));
      return acc;
    };
    std::vector<std::vector<Elem>> units;
    std::vector<Elem> v(n, 0);
    do {
      if (herm(v, v) == 1) units.push_back(v);
    } while (next_tuple(v, Q));

    std::vector<std::size_t> chosen;
    auto place = [&](auto&& self, unsigned col) -> void {
      if (col == n) {
        for (unsigned c = 0; c < n; ++c) {
          for (unsigned r = 0; r < n; ++r) m[r * n + c] = units[chosen[c]][r];
        }
        if (determinant(f, m, n) == 1) g.add_element(m);
        return;
      }
      for (std::size_t u = 0; u < units.size(); ++u) {
        bool ok = true;
        for (unsigned c = 0; c < col && ok; ++c) ok = herm(units[chosen[c]], units[u]) == 0;
        if (!ok) continue;
        chosen.push_back(u);
        self(self, col + 1);
        chosen.pop_back();
      }
    };
    place(place, 0);
  }
  g.finalize();
  return g;
}

void MatrixGroup::add_element(std::span<const Elem> m) {
  std::vector<Elem> c(m.begin(), m.end());
  canonicalize(c);
  codes_.push_back(encode(c));
}

void MatrixGroup::finalize() {
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  count_ = codes_.size();
  const std::size_t nn = static_cast<std::size_t>(n_) * n_;
  storage_.assign(count_ * nn, 0);
  index_.reserve(count_);
  const std::uint32_t Q = field_.size();
  for (std::size_t i = 0; i < count_; ++i) {
    std::uint64_t code = codes_[i];
    for (std::size_t k = nn; k-- > 0;) {
      storage_[i * nn + k] = static_cast<Elem>(code % Q);
      code /= Q;
    }
    index_.emplace(codes_[i], static_cast<std::uint32_t>(i));
  }
}

GroupElement MatrixGroup::element_copy(std::size_t i) const {
  const auto e = element(i);
  return GroupElement{{e.begin(), e.end()}, spec_.projective};
}

std::optional<std::size_t> MatrixGroup::index_of(std::span<const Elem> m) const {
  std::vector<Elem> c(m.begin(), m.end());
  canonicalize(c);
  auto it = index_.find(encode(c));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t MatrixGroup::encode(std::span<const Elem> m) const {
  std::uint64_t code = 0;
  for (Elem x : m) code = code * field_.size() + x;
  return code;
}

void MatrixGroup::multiply(std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out) const {
  const unsigned n = n_;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      Elem acc = 0;
      for (unsigned k = 0; k < n; ++k) acc = field_.add(acc, field_.mul(a[i * n + k], b[k * n + j]));
      out[i * n + j] = acc;
    }
  }
}

void MatrixGroup::canonicalize(std::span<Elem> m) const {
  if (!spec_.projective) return;
  std::vector<Elem> best(m.begin(), m.end()), trial(m.size());
  std::uint64_t best_code = encode(best);
  for (Elem mu : scalars_) {
    for (std::size_t k = 0; k < m.size(); ++k) trial[k] = field_.mul(mu, m[k]);
    const std::uint64_t c = encode(trial);
    if (c < best_code) {
      best_code = c;
      best = trial;
    }
  }
  std::copy(best.begin(), best.end(), m.begin());
}

std::vector<Elem> MatrixGroup::power(std::span<const Elem> a, const Integer& k) const {
  if (k < 0) throw std::invalid_argument("negative exponent");
  const std::size_t nn = static_cast<std::size_t>(n_) * n_;
  std::vector<Elem> result(nn, 0), base(a.begin(), a.end()), tmp(nn);
  for (unsigned i = 0; i < n_; ++i) result[i * n_ + i] = 1;
  const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t b = 0; b < bits; ++b) {
    if (mpz_tstbit(k.get_mpz_t(), b)) {
      multiply(result, base, tmp);
      result.swap(tmp);
    }
    if (b + 1 < bits) {
      multiply(base, base, tmp);
      base.swap(tmp);
    }
  }
  canonicalize(result);
  return result;
}

bool MatrixGroup::is_identity(std::span<const Elem> m) const {
  const Elem mu = m[0];
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      if (m[i * n_ + j] != (i == j ? mu : 0)) return false;
    }
  }
  if (mu == 1) return true;
  return spec_.projective && std::find(scalars_.begin(), scalars_.end(), mu) != scalars_.end();
}

bool MatrixGroup::commute(std::span<const Elem> a, std::span<const Elem> b) const {
  const unsigned n = n_;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      Elem ab = 0, ba = 0;
      for (unsigned k = 0; k < n; ++k) {
        ab = field_.add(ab, field_.mul(a[i * n + k], b[k * n + j]));
        ba = field_.add(ba, field_.mul(b[i * n + k], a[k * n + j]));
      }
      if (ab != ba) return false;
    }
  }
  return true;
}

std::uint64_t MatrixGroup::order(std::span<const Elem> a) const {
  const std::size_t nn = static_cast<std::size_t>(n_) * n_;
  std::vector<Elem> x(a.begin(), a.end()), tmp(nn);
  std::uint64_t k = 1;
  while (!is_identity(x)) {
    multiply(x, a, tmp);
    x.swap(tmp);
    if (++k > count_) throw std::logic_error("element order exceeds the group order");
  }
  return k;
}

poly::Poly MatrixGroup::characteristic_polynomial(std::span<const Elem> a) const {
  // det(xI - A) by expansion over column subsets: dp[mask] is the minor on the first
  // popcount(mask) rows and the columns in mask.
  const unsigned n = n_;
  if (n > 16) throw BudgetExceeded("characteristic polynomial: n > 16");
  const FiniteField& f = field_;
  auto entry = [&](unsigned i, unsigned j) {
    poly::Poly p{f.neg(a[i * n + j])};
    if (i == j) p.push_back(1);
    poly::trim(p);
    return p;
  };
  std::vector<poly::Poly> dp(std::size_t{1} << n);
  dp[0] = {1};
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const unsigned row = static_cast<unsigned>(__builtin_popcount(mask)) - 1;
    poly::Poly acc;
    for (unsigned j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      poly::Poly term = poly::mul(f, entry(row, j), dp[mask & ~(1u << j)]);
      // Laplace sign (-1)^(row + position of column j within the mask).
      const unsigned above = static_cast<unsigned>(__builtin_popcount(mask & ((1u << j) - 1)));
      acc = ((row + above) % 2 == 0) ? poly::add(f, acc, term) : poly::sub(f, acc, term);
    }
    dp[mask] = std::move(acc);
  }
  return dp[(1u << n) - 1];
}

}  // namespace wordmap
