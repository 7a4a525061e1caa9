#ifndef WORDMAP_ABELIAN_HPP
#define WORDMAP_ABELIAN_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wordmap/numtheory.hpp"

namespace wordmap {

/// Invariant factors d_1 | d_2 | ... | d_k of a finite abelian group, all > 1.
/// The trivial group is the empty sequence.
class AbelianInvariants {
 public:
  AbelianInvariants() = default;

  /// Accepts factors that already form a divisibility chain (1-entries are dropped).
  /// Throws std::invalid_argument otherwise.
  explicit AbelianInvariants(std::vector<Integer> chain);

  /// Invariant factors of Z_{m_1} x ... x Z_{m_k} for arbitrary m_i >= 1.
  static AbelianInvariants from_cyclic(std::vector<Integer> moduli);

  const std::vector<Integer>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  bool is_trivial() const { return factors_.empty(); }

  Integer order() const;
  /// Exponent d_k (1 for the trivial group).
  Integer exponent() const;

  /// "(2, 6)"; the trivial group renders as "()".
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;

 private:
  std::vector<Integer> factors_;
};

/// Z^g modulo the lattice spanned by the relation rows.
struct IntegerRelationPresentation {
  std::size_t generators = 0;
  std::vector<std::vector<Integer>> relations;
};

/// Diagonal of the Smith normal form of an arbitrary integer matrix (absolute values,
/// zeros included, length min(rows, cols)).
std::vector<Integer> smith_normal_diagonal(std::vector<std::vector<Integer>> matrix);

/// Invariant factors of the presented group; throws NotFinite for an infinite quotient.
AbelianInvariants smith_diagonal(const IntegerRelationPresentation& presentation);

/// Structure of {x^M : x in A}: each d_i replaced by d_i / (M, d_i).
AbelianInvariants power_image(const AbelianInvariants& group, const Integer& exponent);

/// Counts distinct M-th powers in Z_{m_1} x ... x Z_{m_k} by visiting every element.
/// Throws BudgetExceeded when the group order exceeds `budget`.
std::uint64_t enumerate_power_image_size(std::span<const std::uint64_t> moduli, std::uint64_t exponent,
                                         std::uint64_t budget = 1'000'000);
std::uint64_t enumerate_power_image_size(const AbelianInvariants& group, std::uint64_t exponent,
                                         std::uint64_t budget = 1'000'000);

/// The subgroup K' of Z^s on which a linear character to Z_L vanishes, together with the
/// finite group K'/(m_1 Z x ... x m_s Z) written in coordinates of a basis of K'.
struct CharacterKernel {
  std::vector<std::vector<Integer>> basis;  // rows are the basis vectors of K' in Z^s
  IntegerRelationPresentation presentation; // relations in basis coordinates

  /// Coordinates of a vector of K' in the basis; throws std::invalid_argument when
  /// the vector is not in K'.
  std::vector<Integer> coordinates(std::span<const Integer> vector) const;
};

/// Kernel of prod Z_{m_i} -> Z_L, (a_i) -> sum a_i e_i (L / m_i) mod L.
/// L must be a common multiple of the m_i.
CharacterKernel character_kernel(std::span<const Integer> moduli, std::span<const Integer> coefficients,
                                 const Integer& target_modulus);

AbelianInvariants kernel_of_character(std::span<const Integer> moduli, std::span<const Integer> coefficients,
                                      const Integer& target_modulus);

/// Quotient of the presented group by the subgroup generated by the given elements
/// (in generator coordinates).
AbelianInvariants quotient_by_subgroup(const IntegerRelationPresentation& presentation,
                                       const std::vector<std::vector<Integer>>& subgroup_generators);

/// Recovers the invariant factors of a finite abelian group from the multiset of its
/// element orders. Throws std::invalid_argument when the statistics are not those of an
/// abelian group.
AbelianInvariants invariants_from_element_orders(std::span<const std::uint64_t> orders);

}  // namespace wordmap

#endif  // WORDMAP_ABELIAN_HPP
