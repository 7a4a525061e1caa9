// Smith normal form over arbitrary-precision integers and the lattice constructions
// built on it.

#include <algorithm>
#include <stdexcept>

#include "wordmap/abelian.hpp"
#include "wordmap/errors.hpp"

namespace wordmap {

namespace {

using Matrix = std::vector<std::vector<Integer>>;

// Locates the nonzero entry of least absolute value in the trailing block starting at (t, t).
bool find_pivot(const Matrix& a, std::size_t t, std::size_t& row, std::size_t& col) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.size(); ++i) {
    for (std::size_t j = t; j < a[i].size(); ++j) {
      if (sgn(a[i][j]) == 0) continue;
      Integer v = abs(a[i][j]);
      if (!found || v < best) {
        best = v;
        row = i;
        col = j;
        found = true;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<Integer> smith_normal_diagonal(Matrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& r : a) {
    if (r.size() != cols) throw std::invalid_argument("ragged relation matrix");
  }
  const std::size_t diag = std::min(rows, cols);
  std::vector<Integer> out(diag, 0);

  for (std::size_t t = 0; t < diag; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(a, t, pr, pc)) break;
    for (;;) {
      std::swap(a[t], a[pr]);
      for (auto& r : a) std::swap(r[t], r[pc]);

      bool dirty = false;
      const Integer pivot = a[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), a[i][t].get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
        if (sgn(a[i][t]) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), a[t][j].get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
        if (sgn(a[t][j]) != 0) dirty = true;
      }
      if (dirty) {
        find_pivot(a, t, pr, pc);
        continue;
      }
      // Row and column are clear; the pivot must divide the rest of the block.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), pivot.get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            fixed = false;
            break;
          }
        }
      }
      if (fixed) break;
      find_pivot(a, t, pr, pc);
    }
    out[t] = abs(a[t][t]);
  }
  return out;
}

AbelianInvariants smith_diagonal(const IntegerRelationPresentation& presentation) {
  const std::size_t g = presentation.generators;
  if (g == 0) return {};
  for (const auto& r : presentation.relations) {
    if (r.size() != g) throw std::invalid_argument("relation length differs from generator count");
  }
  if (presentation.relations.size() < g) throw NotFinite();
  auto diag = smith_normal_diagonal(presentation.relations);
  std::vector<Integer> chain;
  for (const auto& d : diag) {
    if (sgn(d) == 0) throw NotFinite();
    if (d != 1) chain.push_back(d);
  }
  return AbelianInvariants(std::move(chain));
}

AbelianInvariants quotient_by_subgroup(const IntegerRelationPresentation& presentation,
                                       const std::vector<std::vector<Integer>>& subgroup_generators) {
  IntegerRelationPresentation augmented = presentation;
  for (const auto& v : subgroup_generators) {
    if (v.size() != presentation.generators) throw std::invalid_argument("subgroup generator has wrong length");
    augmented.relations.push_back(v);
  }
  return smith_diagonal(augmented);
}

// ---------------------------------------------------------------------------
// Character kernels

namespace {

// Solves B^T-style system: finds x with sum_k x_k basis[k] = target, over the rationals,
// then checks integrality.
std::vector<Integer> solve_in_basis(const Matrix& basis, std::span<const Integer> target) {
  const std::size_t s = basis.size();
  // Augmented system: columns are basis vectors.
  std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s + 1));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t k = 0; k < s; ++k) m[i][k] = basis[k][i];
    m[i][s] = target[i];
  }
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t piv = c;
    while (piv < s && sgn(m[piv][c]) == 0) ++piv;
    if (piv == s) throw std::logic_error("kernel basis is singular");
    std::swap(m[c], m[piv]);
    for (std::size_t i = 0; i < s; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= s; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Integer> x(s);
  for (std::size_t i = 0; i < s; ++i) {
    Rational v = m[i][s] / m[i][i];
    v.canonicalize();
    if (v.get_den() != 1) throw std::invalid_argument("vector is not in the kernel lattice");
    x[i] = v.get_num();
  }
  return x;
}

}  // namespace

std::vector<Integer> CharacterKernel::coordinates(std::span<const Integer> vector) const {
  if (vector.size() != basis.size()) throw std::invalid_argument("vector has wrong length");
  return solve_in_basis(basis, vector);
}

CharacterKernel character_kernel(std::span<const Integer> moduli, std::span<const Integer> coefficients,
                                 const Integer& target_modulus) {
  const std::size_t s = moduli.size();
  if (coefficients.size() != s) throw std::invalid_argument("moduli and coefficients differ in length");
  if (target_modulus < 1) throw std::invalid_argument("target modulus must be >= 1");
  for (const auto& m : moduli) {
    if (m < 1) throw std::invalid_argument("moduli must be >= 1");
    if (!mpz_divisible_p(target_modulus.get_mpz_t(), m.get_mpz_t())) {
      throw std::invalid_argument("target modulus is not a common multiple of the moduli");
    }
  }

  // Row vector (c_1, ..., c_s, -L); its integer kernel projects isomorphically onto K'.
  std::vector<Integer> w(s + 1);
  for (std::size_t i = 0; i < s; ++i) w[i] = coefficients[i] * (target_modulus / moduli[i]);
  w[s] = -target_modulus;

  // Unimodular column operations reduce w to a single nonzero entry; the other columns
  // of the accumulated transform span the kernel.
  Matrix u(s + 1, std::vector<Integer>(s + 1, 0));
  for (std::size_t i = 0; i <= s; ++i) u[i][i] = 1;
  for (;;) {
    std::size_t piv = s + 1;
    for (std::size_t j = 0; j <= s; ++j) {
      if (sgn(w[j]) != 0 && (piv == s + 1 || abs(w[j]) < abs(w[piv]))) piv = j;
    }
    bool reduced = true;
    for (std::size_t j = 0; j <= s; ++j) {
      if (j == piv || sgn(w[j]) == 0) continue;
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), w[j].get_mpz_t(), w[piv].get_mpz_t());
      w[j] -= f * w[piv];
      for (std::size_t i = 0; i <= s; ++i) u[i][j] -= f * u[i][piv];
      if (sgn(w[j]) != 0) reduced = false;
    }
    if (reduced) {
      CharacterKernel kernel;
      for (std::size_t j = 0; j <= s; ++j) {
        if (j == piv) continue;
        std::vector<Integer> v(s);
        for (std::size_t i = 0; i < s; ++i) v[i] = u[i][j];
        kernel.basis.push_back(std::move(v));
      }
      kernel.presentation.generators = s;
      for (std::size_t i = 0; i < s; ++i) {
        std::vector<Integer> rel(s, 0);
        rel[i] = moduli[i];
        kernel.presentation.relations.push_back(solve_in_basis(kernel.basis, rel));
      }
      return kernel;
    }
  }
}

AbelianInvariants kernel_of_character(std::span<const Integer> moduli, std::span<const Integer> coefficients,
                                      const Integer& target_modulus) {
  return smith_diagonal(character_kernel(moduli, coefficients, target_modulus).presentation);
}

}  // namespace wordmap
