#include "wordmap/bounds.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wordmap {

PowerWord::PowerWord(Integer exponent) : exponent_(std::move(exponent)) {
  if (exponent_ < 1) throw std::invalid_argument("power word exponent M must be >= 1");
}

void BoundReport::set_exact(const Integer& exact) {
  exact_value = exact;
  const Rational e(exact);
  satisfied = direction == BoundDirection::Upper ? (e <= bound_value) : (e >= bound_value);
}

Integer torus_power_image_size(const Partition& lambda, const GroupSpec& spec, const Integer& exponent) {
  if (lambda.n() != spec.n) throw std::invalid_argument("partition does not sum to n");
  const auto torus = torus_decomposition(lambda, spec.q, spec.eps, spec.projective);
  return power_image(torus, exponent).order();
}

namespace {

void check_odd_coprime(unsigned n, std::uint64_t p, unsigned l) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (l % 2 == 0) throw std::invalid_argument("l must be odd");
  if (std::gcd(l, n) != 1) throw std::invalid_argument("l must be coprime to n");
}

}  // namespace

BoundReport lemma_torus_sl_check(const Partition& lambda, unsigned n, std::uint64_t p, unsigned l, Sign eps) {
  check_odd_coprime(n, p, l);
  if (lambda.n() != n) throw std::invalid_argument("partition does not sum to n");
  BoundReport r;
  r.spec = GroupSpec(eps, n, PrimePower(p, l), true);
  r.word_exponent = qpow_eps(Integer(static_cast<unsigned long>(p)), n, eps);
  r.bound_name = "lemma-torusSL";
  r.direction = BoundDirection::Upper;
  const Integer torus_order = torus_decomposition(lambda, r.spec.q, eps, true).order();
  r.bound_value = Rational(torus_order * n, static_cast<unsigned long>(p - 1));
  r.bound_value.canonicalize();
  r.set_exact(torus_power_image_size(lambda, r.spec, r.word_exponent));
  return r;
}

Rational theorem_main_upper(unsigned n, std::uint64_t p, unsigned l, Sign eps) {
  check_odd_coprime(n, p, l);
  const GroupSpec g(eps, n, PrimePower(p, l), true);
  Rational r(4 * group_order(g) * n, static_cast<unsigned long>(p - 1));
  r.canonicalize();
  return r;
}

bool upper_bound_is_vacuous(const Rational& bound, const Integer& group_order) { return bound >= Rational(group_order); }

Rational lemma_ss_upper(const GroupSpec& spec, const Rational& per_torus) {
  if (per_torus <= 0) throw std::invalid_argument("N must be positive");
  Rational r = Rational(group_order(spec)) / per_torus;
  r.canonicalize();
  return r;
}

Rational per_torus_ratio(const GroupSpec& spec, const Integer& exponent) {
  std::optional<Rational> best;
  for (const auto& lambda : partitions(spec.n)) {
    const auto torus = torus_decomposition(lambda, spec.q, spec.eps, spec.projective);
    Rational ratio(torus.order(), power_image(torus, exponent).order());
    ratio.canonicalize();
    if (!best || ratio < *best) best = ratio;
  }
  return *best;
}

Rational semisimple_density_lower(const GroupSpec& spec) {
  const Integer qm1 = spec.q.q - 1;
  Rational coeff = Rational(1) - Rational(3, qm1) - Rational(2, qm1 * qm1);
  coeff.canonicalize();
  Rational r = Rational(group_order(spec)) * coeff;
  r.canonicalize();
  return r;
}

Integer nonregular_bound(unsigned n, const PrimePower& q, const Integer& exponent, NonregularCase which) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (which == NonregularCase::Single && n <= 3) return n;
  Integer half;  // q^{n/2}, rounded up for odd n
  if (n % 2 == 0) {
    mpz_pow_ui(half.get_mpz_t(), q.q.get_mpz_t(), n / 2);
  } else {
    Integer full;
    mpz_pow_ui(full.get_mpz_t(), q.q.get_mpz_t(), n);
    mpz_sqrt(half.get_mpz_t(), full.get_mpz_t());
    if (half * half < full) half += 1;
  }
  const Integer base = Integer(n) * n * exponent * half;
  return which == NonregularCase::Single ? base : Integer(3 * base);
}

Rational lower_1torus(const GroupSpec& spec, const Integer& exponent) {
  if (exponent < 2) throw std::invalid_argument("M must be >= 2");
  Rational r(group_order(spec), 2 * Integer(spec.n) * exponent);
  r.canonicalize();
  return r;
}

namespace {

// 2 atanh(y) = ln((1+y)/(1-y)); partial sums are lower bounds for y >= 0.
Rational atanh_series_lower(const Rational& y, unsigned terms) {
  Rational sum = 0;
  Rational power = y;
  const Rational y2 = y * y;
  for (unsigned k = 0; k < terms; ++k) {
    sum += power / (2 * k + 1);
    power *= y2;
  }
  sum *= 2;
  sum.canonicalize();
  return sum;
}

}  // namespace

Rational ln_lower_bound(unsigned x, unsigned terms) {
  if (x == 0) throw std::invalid_argument("ln of zero");
  // ln x = k ln 2 + ln(x / 2^k) with x / 2^k in [1, 2).
  unsigned k = 0;
  while ((std::uint64_t{1} << (k + 1)) <= x) ++k;
  const Rational ln2 = atanh_series_lower(Rational(1, 3), terms);
  const Rational r(x, std::uint64_t{1} << k);
  Rational rest = atanh_series_lower((r - 1) / (r + 1), terms);
  Rational total = ln2 * k + rest;
  // Round down to 30 decimals so reported values stay short; still a lower bound.
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 30);
  Integer num = total.get_num() * scale;
  Integer floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), num.get_mpz_t(), total.get_den().get_mpz_t());
  Rational rounded(floor_value, scale);
  rounded.canonicalize();
  return rounded;
}

Th1Bound lower_th1(const GroupSpec& spec, const Integer& exponent) {
  if (exponent < 1) throw std::invalid_argument("M must be >= 1");
  const unsigned n = spec.n;
  const Integer order = group_order(spec);
  Th1Bound b;
  b.weyl_sum = 0;
  for (unsigned i = 1; i <= n / 2; ++i) {
    b.weyl_sum += Rational(1, weyl_centralizer_order(Partition({i, n - i})));
  }
  b.weyl_sum.canonicalize();
  const Integer m2 = exponent * exponent;
  b.exact_union_bound = Rational(order) * (b.weyl_sum / (2 * m2) + Rational(1, 2 * Integer(n) * exponent));
  b.exact_union_bound.canonicalize();
  b.formula_bound = Rational(order) * ln_lower_bound(n) / (2 * Integer(n) * m2);
  b.formula_bound.canonicalize();
  b.formula_bound_approx = order.get_d() * std::log(static_cast<double>(n)) / (2.0 * n * m2.get_d());
  return b;
}

Rational th2_estimate(unsigned n, const PrimePower& q) {
  if (n == 0) throw std::invalid_argument("th2_estimate requires n >= 1");
  const auto row = stirling_first_row(n);
  const Integer qm1 = q.q - 1;
  // Common denominator n! (q-1)^{n-1}.
  Integer numerator = 0;
  Integer scale = 1;  // (q-1)^{n-k}, k running down from n
  for (unsigned k = n; k >= 1; --k) {
    numerator += row[k] * scale;
    scale *= qm1;
  }
  Integer qpow;
  mpz_pow_ui(qpow.get_mpz_t(), qm1.get_mpz_t(), n - 1);
  Rational r(numerator, factorial(n) * qpow);
  r.canonicalize();
  return r;
}

ThresholdPredicates threshold_predicates(unsigned n, const PrimePower& q, const PowerWord& word) {
  const Integer& m = word.exponent();
  const Integer nn = Integer(n) * n;
  ThresholdPredicates t{};
  // 2^{n/2} > 8 n^2 M^2, squared on both sides.
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
  const Integer rhs = 8 * nn * m * m;
  t.rank_condition = two_n > rhs * rhs;

  const long k = static_cast<long>(n) - static_cast<long>((n + 1) / 2) - 2;
  Rational lhs;
  Integer pw;
  mpz_pow_ui(pw.get_mpz_t(), q.q.get_mpz_t(), static_cast<unsigned long>(k >= 0 ? k : -k));
  lhs = k >= 0 ? Rational(pw) : Rational(Integer(1), pw);
  lhs *= q.q - 1;
  t.field_condition = lhs > Rational(2 * nn * m * m);
  return t;
}

}  // namespace wordmap
