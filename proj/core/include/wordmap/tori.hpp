#ifndef WORDMAP_TORI_HPP
#define WORDMAP_TORI_HPP

#include <string>
#include <vector>

#include "wordmap/abelian.hpp"
#include "wordmap/group_spec.hpp"
#include "wordmap/numtheory.hpp"

namespace wordmap {

/// A partition of n, stored with non-increasing parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts into canonical order; every part must be >= 1.
  explicit Partition(std::vector<unsigned> parts);

  /// Parses "3,2,1" (any order, whitespace tolerated).
  static Partition parse(const std::string& text);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  unsigned n() const { return n_; }
  /// gcd of the parts.
  unsigned parts_gcd() const;

  /// "3,2,1"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

/// Every partition of n in reverse-lexicographic order, starting from (n).
/// Throws BudgetExceeded for n > 60.
std::vector<Partition> partitions(unsigned n);

/// |C_{Sym_n}(w)| for w of cycle type λ: prod_j j^{m_j} m_j!.
Integer weyl_centralizer_order(const Partition& lambda);

/// d_i = lcm over i-subsets of the gcd of q^{n_j} - (ε1)^{n_j}, i = 1..s; d_1 is the largest.
/// Computed by reducing every subset gcd with the closed-form identities.
std::vector<Integer> d_sequence(const Partition& lambda, const PrimePower& q, Sign eps);

/// The same sequence by literal big-integer gcd and lcm over all subsets.
std::vector<Integer> d_sequence_naive(const Partition& lambda, const PrimePower& q, Sign eps);

/// Standard decomposition of the maximal torus of SL^ε_n(q) of type λ, or of its image in
/// the projective group.
AbelianInvariants torus_decomposition(const Partition& lambda, const PrimePower& q, Sign eps, bool projective);

/// The same torus derived from the diagonal model: the determinant-one kernel in
/// prod Z_{m_i}, m_i = q^{n_i} - (ε1)^{n_i}, quotiented by the centre when projective.
AbelianInvariants torus_lattice_oracle(const Partition& lambda, const PrimePower& q, Sign eps, bool projective);

/// |G| / (|T| |W(T)|) with a flag for non-integral values.
struct ConjugateCount {
  Rational value;
  bool integral = true;
};

struct TorusReport {
  Partition partition;
  std::vector<Integer> d_seq;
  AbelianInvariants decomposition;
  Integer order;
  Integer weyl_order;
  ConjugateCount conjugates;
};

ConjugateCount conjugate_count(const GroupSpec& spec, const TorusReport& report);

/// Assembles the full report for one partition of spec.n.
TorusReport torus_report(const GroupSpec& spec, const Partition& lambda);

}  // namespace wordmap

#endif  // WORDMAP_TORI_HPP
