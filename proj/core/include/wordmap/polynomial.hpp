#ifndef WORDMAP_POLYNOMIAL_HPP
#define WORDMAP_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "wordmap/finite_field.hpp"

namespace wordmap::poly {

using Elem = FiniteField::Elem;
/// Coefficients low to high with no trailing zeros; the zero polynomial is empty.
using Poly = std::vector<Elem>;

void trim(Poly& a);
int degree(const Poly& a);  // -1 for zero

Poly add(const FiniteField& f, const Poly& a, const Poly& b);
Poly sub(const FiniteField& f, const Poly& a, const Poly& b);
Poly mul(const FiniteField& f, const Poly& a, const Poly& b);
Poly scale(const FiniteField& f, const Poly& a, Elem c);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const FiniteField& f, const Poly& a, const Poly& b);
Poly monic(const FiniteField& f, const Poly& a);
/// Monic gcd (zero when both are zero).
Poly gcd(const FiniteField& f, Poly a, Poly b);
Poly derivative(const FiniteField& f, const Poly& a);

bool is_squarefree(const FiniteField& f, const Poly& a);

/// Monic irreducible factors with multiplicity, ordered by degree then coefficients.
/// Trial division by monic polynomials of increasing degree.
std::vector<std::pair<Poly, unsigned>> factor(const FiniteField& f, const Poly& a);

}  // namespace wordmap::poly

#endif  // WORDMAP_POLYNOMIAL_HPP
