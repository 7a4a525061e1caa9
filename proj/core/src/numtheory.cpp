#include "wordmap/numtheory.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "wordmap/group_spec.hpp"

namespace wordmap {

Sign Sign::parse(const std::string& text) {
  if (text == "+" || text == "plus" || text == "+1" || text == "1") return plus();
  if (text == "-" || text == "minus" || text == "-1") return minus();
  throw std::invalid_argument("sign must be '+' or '-', got '" + text + "'");
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePower::PrimePower(std::uint64_t prime, unsigned exponent) : p(prime), e(exponent) {
  if (!is_prime(prime)) throw std::invalid_argument("p = " + std::to_string(prime) + " is not prime");
  if (exponent == 0) throw std::invalid_argument("prime power exponent must be positive");
  mpz_ui_pow_ui(q.get_mpz_t(), prime, exponent);
}

PrimePower PrimePower::from_q(std::uint64_t qv) {
  if (qv < 2) throw std::invalid_argument("q = " + std::to_string(qv) + " is not a prime power");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= qv / d; ++d) {
    if (qv % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower(qv, 1);
  unsigned e = 0;
  std::uint64_t rest = qv;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw std::invalid_argument("q = " + std::to_string(qv) + " is not a prime power");
  return PrimePower(p, e);
}

std::uint64_t PrimePower::q_u64() const {
  if (!q.fits_ulong_p()) throw std::overflow_error("q does not fit a machine word");
  return q.get_ui();
}

namespace {

Integer ipow(const Integer& a, std::uint64_t k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), k);
  return r;
}

// (2, a + 1)
Integer two_gcd(const Integer& a) { return mpz_odd_p(a.get_mpz_t()) ? Integer(2) : Integer(1); }

}  // namespace

Integer zav_gcd(const Integer& a, std::uint64_t s, std::uint64_t t, ZavKind kind) {
  if (a < 2) throw std::invalid_argument("zav_gcd requires a >= 2");
  if (s == 0 || t == 0) throw std::invalid_argument("zav_gcd requires s, t >= 1");
  const std::uint64_t g = std::gcd(s, t);
  const bool s_odd = (s / g) % 2 == 1;
  const bool t_odd = (t / g) % 2 == 1;
  switch (kind) {
    case ZavKind::MinusMinus:
      return ipow(a, g) - 1;
    case ZavKind::PlusPlus:
      return (s_odd && t_odd) ? Integer(ipow(a, g) + 1) : two_gcd(a);
    case ZavKind::MinusPlus:
      return (!s_odd && t_odd) ? Integer(ipow(a, g) + 1) : two_gcd(a);
  }
  throw std::logic_error("unreachable");
}

Integer qpow_eps(const Integer& q, std::uint64_t k, Sign eps) { return ipow(q, k) - eps.pow(k); }

std::vector<Integer> stirling_first_row(unsigned n) {
  std::vector<Integer> row(n + 1, 0);
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    // c(m, k) = c(m-1, k-1) + (m-1) c(m-1, k), updated in place from the top.
    for (unsigned k = m; k >= 1; --k) {
      row[k] = row[k - 1] + row[k] * (m - 1);
    }
    row[0] = 0;
  }
  return row;
}

Integer stirling_first_unsigned(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("stirling_first_unsigned: k > n");
  return stirling_first_row(n)[k];
}

Rational harmonic(unsigned n) {
  if (n == 0) throw std::invalid_argument("harmonic requires n >= 1");
  Rational h = 0;
  for (unsigned k = 1; k <= n; ++k) h += Rational(1, k);
  h.canonicalize();
  return h;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::uint64_t find_example_prime(const Rational& c, unsigned n) {
  if (c <= 0) throw std::invalid_argument("find_example_prime requires c > 0");
  const Rational threshold = Rational(4 * Integer(n) * n) / c;
  for (std::uint64_t p = 2;; ++p) {
    if (Rational(p - 1) > threshold && is_prime(p)) return p;
  }
}

std::string to_exact_string(const Integer& value) { return value.get_str(); }

std::string to_exact_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec::GroupSpec(Sign eps_, unsigned n_, PrimePower q_, bool projective_)
    : eps(eps_), n(n_), q(std::move(q_)), projective(projective_) {
  if (n < 2) throw std::invalid_argument("group rank parameter n must be >= 2");
}

Integer GroupSpec::q_minus_eps() const { return q.q - eps.value(); }

Integer GroupSpec::center_order() const {
  Integer d;
  mpz_gcd_ui(d.get_mpz_t(), q_minus_eps().get_mpz_t(), n);
  return d;
}

std::string GroupSpec::name() const {
  std::string s = projective ? "P" : "";
  s += eps.is_plus() ? "SL_" : "SU_";
  return s + std::to_string(n) + "(" + q.q.get_str() + ")";
}

Integer group_order(const GroupSpec& spec) {
  const std::uint64_t n = spec.n;
  Integer order = ipow(spec.q.q, n * (n - 1) / 2);
  for (std::uint64_t i = 2; i <= n; ++i) order *= qpow_eps(spec.q.q, i, spec.eps);
  if (spec.projective) order /= spec.center_order();
  return order;
}

}  // namespace wordmap
