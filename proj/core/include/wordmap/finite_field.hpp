#ifndef WORDMAP_FINITE_FIELD_HPP
#define WORDMAP_FINITE_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wordmap/numtheory.hpp"

namespace wordmap {

/// F_{p^e} with elements encoded as integers 0 .. p^e - 1: the base-p digits of an element
/// are the coefficients of its polynomial representative, constant term first.
/// 0 is the zero and 1 the identity. Integer order on codes is the field-element order
/// used for canonical forms.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint64_t kMaxSize = 10'000;

  /// Builds F_{p^e} modulo the least monic irreducible of degree e, where monic polynomials
  /// are compared lexicographically on (c_0, c_1, ..., c_{e-1}).
  /// Throws BudgetExceeded when p^e > 10^4.
  static FiniteField build(std::uint64_t p, unsigned e);

  std::uint32_t size() const { return size_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  /// Monic modulus, coefficients low to high (size e + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// A generator of the multiplicative group.
  Elem primitive() const { return exp_.size() > 1 ? exp_[1] : exp_[0]; }

  Elem add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[a * size_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= size_ - 1) s -= size_ - 1;
    return exp_[s];
  }
  /// Throws std::domain_error for 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  Elem pow(Elem a, const Integer& k) const;

  /// x -> x^p
  Elem frobenius(Elem a) const { return pow(a, p_); }
  /// x -> x^{sqrt(size)}, the involution of F_{q^2} over F_q; requires even degree.
  Elem conjugate(Elem a) const;

  /// Image of the integer k in the prime field.
  Elem from_integer(std::int64_t k) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Elem a) const;

  std::string to_string(Elem a) const;

 private:
  FiniteField() = default;
  Elem add_digits(Elem a, Elem b) const;

  std::uint32_t p_ = 2;
  unsigned e_ = 1;
  std::uint32_t size_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_table_;  // only for small fields
  std::vector<Elem> neg_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
};

}  // namespace wordmap

#endif  // WORDMAP_FINITE_FIELD_HPP
