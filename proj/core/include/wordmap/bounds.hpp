#ifndef WORDMAP_BOUNDS_HPP
#define WORDMAP_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "wordmap/group_spec.hpp"
#include "wordmap/numtheory.hpp"
#include "wordmap/tori.hpp"

namespace wordmap {

/// The word x^M. M = 1 is allowed as the identity word.
class PowerWord {
 public:
  explicit PowerWord(Integer exponent);
  explicit PowerWord(std::uint64_t exponent) : PowerWord(Integer(static_cast<unsigned long>(exponent))) {}
  const Integer& exponent() const { return exponent_; }

 private:
  Integer exponent_;
};

enum class BoundDirection { Upper, Lower };

/// A bound on |ω(G)| (or on a torus image) next to the exact value when one is known.
struct BoundReport {
  GroupSpec spec;
  Integer word_exponent;
  std::string bound_name;
  BoundDirection direction = BoundDirection::Upper;
  Rational bound_value;
  std::optional<Integer> exact_value;
  std::optional<bool> satisfied;

  /// Records the exact value and evaluates the comparison in the bound's direction.
  void set_exact(const Integer& exact);
};

/// |ω(T_λ)| from the standard decomposition and the power-image rule.
Integer torus_power_image_size(const Partition& lambda, const GroupSpec& spec, const Integer& exponent);

/// Compares |ω(T̃)| for the projective torus of type λ in PSL^ε_n(p^l), M = p^n - (ε1)^n,
/// against |T̃| n/(p-1). Requires l odd, (l, n) = 1, n >= 2.
BoundReport lemma_torus_sl_check(const Partition& lambda, unsigned n, std::uint64_t p, unsigned l, Sign eps);

/// 4 |PSL^ε_n(p^l)| n / (p-1) for M = p^n - (ε1)^n.
Rational theorem_main_upper(unsigned n, std::uint64_t p, unsigned l, Sign eps);

/// True when an upper bound is at least |G| and therefore says nothing.
bool upper_bound_is_vacuous(const Rational& bound, const Integer& group_order);

/// |G| / N.
Rational lemma_ss_upper(const GroupSpec& spec, const Rational& per_torus_ratio);

/// Largest N with |ω(T)| <= |T|/N for every maximal torus: min over λ of |T_λ|/|ω(T_λ)|.
Rational per_torus_ratio(const GroupSpec& spec, const Integer& exponent);

/// |G| (1 - 3/(q-1) - 2/(q-1)^2); may be negative.
Rational semisimple_density_lower(const GroupSpec& spec);

enum class NonregularCase { Single, TwoPart };

/// Elements of the Singer (single) or two-part torus whose M-th power is not regular:
/// n^2 M q^{n/2} or 3 n^2 M q^{n/2}, with q^{n/2} rounded up for odd n. For the single
/// case with n = 2 or 3 the non-regular elements are the scalars, and n is returned.
Integer nonregular_bound(unsigned n, const PrimePower& q, const Integer& exponent, NonregularCase which);

/// |G| / (2 n M).
Rational lower_1torus(const GroupSpec& spec, const Integer& exponent);

struct Th1Bound {
  Rational formula_bound;       // |G| ln(n) / (2 n M^2) with ln(n) replaced by a certified lower bound
  double formula_bound_approx;  // same with floating ln(n)
  Rational weyl_sum;            // sum_{i=1}^{⌊n/2⌋} 1/|W(T_i)|
  Rational exact_union_bound;   // |G| (weyl_sum/(2M^2) + 1/(2nM))
};

Th1Bound lower_th1(const GroupSpec& spec, const Integer& exponent);

/// Rational lower bound on ln(x) for x >= 1 from the partial sums of 2 atanh((x-1)/(x+1)).
Rational ln_lower_bound(unsigned x, unsigned terms = 60);

/// sum_k c(n,k) / (n! (q-1)^{k-1}).
Rational th2_estimate(unsigned n, const PrimePower& q);

struct ThresholdPredicates {
  bool rank_condition;   // 2^{n/2} > 8 n^2 M^2
  bool field_condition;  // q^{n - ⌈n/2⌉ - 2} (q-1) > 2 n^2 M^2
};

ThresholdPredicates threshold_predicates(unsigned n, const PrimePower& q, const PowerWord& word);

}  // namespace wordmap

#endif  // WORDMAP_BOUNDS_HPP
