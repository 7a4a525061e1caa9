#ifndef WORDMAP_ORACLE_HPP
#define WORDMAP_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "wordmap/abelian.hpp"
#include "wordmap/finite_field.hpp"
#include "wordmap/group_spec.hpp"
#include "wordmap/polynomial.hpp"
#include "wordmap/tori.hpp"

namespace wordmap {

/// Cap on the group order accepted by exhaustive routines.
struct EnumerationBudget {
  std::uint64_t max_elements = 1'000'000;

  explicit EnumerationBudget(std::uint64_t cap = 1'000'000);
  /// Reads WORDMAP_MAX_GROUP_ORDER, falling back to 10^6.
  static EnumerationBudget from_environment();
};

/// Environment variable holding the default enumeration budget.
inline constexpr const char* kBudgetEnvVar = "WORDMAP_MAX_GROUP_ORDER";

using Elem = FiniteField::Elem;

/// An n x n matrix over the group's field; in projective groups `canonical` marks the
/// scalar-coset representative that is least under the entry order.
struct GroupElement {
  std::vector<Elem> entries;  // row-major
  bool canonical = false;
};

/// F_q, or F_{q^2} for the unitary family.
FiniteField build_field(std::uint64_t p, unsigned e);
FiniteField matrix_field(const GroupSpec& spec);

/// An explicitly enumerated SL_n(q), SU_n(q), PSL_n(q) or PSU_n(q). Elements are stored
/// in increasing code order; projective elements are canonical representatives.
class MatrixGroup {
 public:
  /// Throws BudgetExceeded before doing any work when |G| exceeds the budget.
  static MatrixGroup enumerate(const GroupSpec& spec, const EnumerationBudget& budget);

  const GroupSpec& spec() const { return spec_; }
  const FiniteField& field() const { return field_; }
  unsigned n() const { return n_; }
  std::size_t size() const { return count_; }

  std::span<const Elem> element(std::size_t i) const {
    return {storage_.data() + i * n_ * n_, static_cast<std::size_t>(n_) * n_};
  }
  GroupElement element_copy(std::size_t i) const;
  std::uint64_t code(std::size_t i) const { return codes_[i]; }
  /// Index of a (canonicalised) matrix, if it belongs to the group.
  std::optional<std::size_t> index_of(std::span<const Elem> m) const;

  /// Scalars in the centre of the linear group.
  const std::vector<Elem>& center_scalars() const { return scalars_; }

  void multiply(std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out) const;
  /// a^k, canonicalised in projective groups.
  std::vector<Elem> power(std::span<const Elem> a, const Integer& k) const;
  /// Replaces m by the least matrix in its scalar coset (no-op for linear groups).
  void canonicalize(std::span<Elem> m) const;
  std::uint64_t encode(std::span<const Elem> m) const;
  bool is_identity(std::span<const Elem> m) const;
  /// Exact commutation of the stored representatives; scalars commute with everything,
  /// so in projective groups this is commutation of lifts.
  bool commute(std::span<const Elem> a, std::span<const Elem> b) const;
  /// Order in the group (modulo scalars when projective).
  std::uint64_t order(std::span<const Elem> a) const;

  /// Characteristic polynomial of the stored representative over the matrix field.
  poly::Poly characteristic_polynomial(std::span<const Elem> a) const;

 private:
  MatrixGroup(GroupSpec spec, FiniteField field);
  void add_element(std::span<const Elem> m);
  void finalize();

  GroupSpec spec_;
  FiniteField field_;
  unsigned n_;
  std::vector<Elem> scalars_;
  std::vector<Elem> storage_;
  std::vector<std::uint64_t> codes_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::size_t count_ = 0;
};

/// Deterministic pass over every element of the group.
template <typename Fn>
void for_each_element(const MatrixGroup& group, Fn&& fn) {
  for (std::size_t i = 0; i < group.size(); ++i) fn(group.element(i));
}

struct ElementClass {
  std::uint64_t order = 0;
  bool is_semisimple = false;
  bool is_regular_semisimple = false;
  /// Degrees of the irreducible factors of the characteristic polynomial over the
  /// matrix field, with multiplicity, ascending.
  std::vector<unsigned> char_poly_factor_degrees;
};

ElementClass classify_element(const MatrixGroup& group, std::span<const Elem> g);

/// Torus type of a regular semisimple element read from its characteristic polynomial.
/// Linear family: the factor degrees. Unitary family: a factor fixed by r -> r^{-q}
/// contributes its degree; a pair of factors swapped by it contributes twice the degree.
Partition element_partition(const MatrixGroup& group, std::span<const Elem> g);

std::uint64_t word_image_size(const MatrixGroup& group, const Integer& exponent);
std::uint64_t word_image_size(const GroupSpec& spec, const Integer& exponent, const EnumerationBudget& budget);

/// Distinct M-th powers of semisimple elements.
std::uint64_t semisimple_word_image_size(const MatrixGroup& group, const Integer& exponent);

std::uint64_t semisimple_count(const MatrixGroup& group);
std::uint64_t semisimple_count(const GroupSpec& spec, const EnumerationBudget& budget);

struct TorusOfElement {
  Partition partition;
  AbelianInvariants invariants;
  std::vector<std::size_t> members;  // element indices of the centraliser, ascending
};

/// Centraliser of a regular semisimple element by testing every group element, its
/// invariants from element orders, and its partition. In projective groups the
/// centraliser is the image of the linear one (lifts that commute exactly).
/// Throws std::invalid_argument when g is not regular semisimple and std::runtime_error
/// ("not regular") when the centraliser is not abelian.
TorusOfElement torus_of_element(const MatrixGroup& group, std::size_t g_index);

struct PowerCensus {
  std::map<Partition, std::uint64_t> regular_by_partition;
  std::uint64_t nonregular = 0;
  std::uint64_t image_size = 0;
};

/// Splits ω(G) into regular semisimple elements by torus type and the remainder.
PowerCensus regular_power_census(const MatrixGroup& group, const Integer& exponent);

/// Every maximal torus that contains a regular semisimple element, found by brute force.
struct TorusCatalogue {
  struct Entry {
    TorusOfElement torus;
    std::size_t witness = 0;  // a regular element generating this entry
  };
  std::vector<Entry> tori;
  /// Regular semisimple elements of the group.
  std::uint64_t regular_count = 0;
};

TorusCatalogue catalogue_tori(const MatrixGroup& group);

}  // namespace wordmap

#endif  // WORDMAP_ORACLE_HPP
