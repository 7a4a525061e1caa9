#include "wordmap/tori.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wordmap/errors.hpp"

namespace wordmap {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("a partition has at least one part");
  for (auto p : parts_) {
    if (p == 0) throw std::invalid_argument("partition parts must be positive");
    n_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(const std::string& text) {
  std::vector<unsigned> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty partition part in '" + text + "'");
    const std::string digits = item.substr(b, e - b + 1);
    if (digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad partition part '" + digits + "'");
    }
    parts.push_back(static_cast<unsigned>(std::stoul(digits)));
  }
  return Partition(std::move(parts));
}

unsigned Partition::parts_gcd() const {
  unsigned g = 0;
  for (auto p : parts_) g = std::gcd(g, p);
  return g;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::vector<Partition> partitions(unsigned n) {
  if (n == 0) throw std::invalid_argument("partitions requires n >= 1");
  if (n > 60) throw BudgetExceeded("partitions: n > 60");
  std::vector<Partition> out;
  std::vector<unsigned> current;
  // Choosing the largest admissible part first yields reverse-lexicographic order.
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Integer weyl_centralizer_order(const Partition& lambda) {
  std::map<unsigned, unsigned> multiplicity;
  for (auto p : lambda.parts()) ++multiplicity[p];
  Integer r = 1;
  for (auto [part, m] : multiplicity) {
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), part, m);
    r *= pw * factorial(m);
  }
  return r;
}

namespace {

constexpr std::size_t kMaxParts = 20;

void check_parts_budget(const Partition& lambda) {
  if (lambda.size() > kMaxParts) throw BudgetExceeded("d_sequence: more than 20 parts");
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

std::vector<Integer> d_sequence_naive(const Partition& lambda, const PrimePower& q, Sign eps) {
  check_parts_budget(lambda);
  const std::size_t s = lambda.size();
  std::vector<Integer> m(s);
  for (std::size_t j = 0; j < s; ++j) m[j] = qpow_eps(q.q, lambda.parts()[j], eps);

  std::vector<Integer> d(s, 1);
  const std::uint32_t full = (1u << s);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Integer g = 0;
    for (std::size_t j = 0; j < s; ++j) {
      if (mask & (1u << j)) g = gcd(g, m[j]);
    }
    const auto i = static_cast<std::size_t>(std::popcount(mask)) - 1;
    d[i] = lcm(d[i], g);
  }
  return d;
}

std::vector<Integer> d_sequence(const Partition& lambda, const PrimePower& q, Sign eps) {
  check_parts_budget(lambda);
  const std::size_t s = lambda.size();
  const auto& parts = lambda.parts();

  // Each subset gcd of numbers q^a - (ε1)^a is again of that shape with a replaced by the
  // gcd of the exponents, so the fold only tracks exponents.
  auto term_is_plus = [&](std::uint64_t a) { return !eps.is_plus() && a % 2 == 1; };  // q^a + 1
  std::map<std::pair<std::uint64_t, std::uint64_t>, Integer> memo;
  auto pair_gcd = [&](std::uint64_t a, std::uint64_t b) -> const Integer& {
    auto key = std::minmax(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Integer v;
    const bool pa = term_is_plus(a), pb = term_is_plus(b);
    if (!pa && !pb) {
      v = zav_gcd(q.q, a, b, ZavKind::MinusMinus);
    } else if (pa && pb) {
      v = zav_gcd(q.q, a, b, ZavKind::PlusPlus);
    } else {
      v = pa ? zav_gcd(q.q, b, a, ZavKind::MinusPlus) : zav_gcd(q.q, a, b, ZavKind::MinusPlus);
    }
    return memo.emplace(key, std::move(v)).first->second;
  };

  const std::uint32_t full = (1u << s);
  std::vector<std::uint64_t> exponent(full, 0);
  std::vector<std::map<std::uint64_t, const Integer*>> by_size(s);
  std::map<std::uint64_t, Integer> singles;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & (mask - 1);
    const std::uint64_t part = parts[low];
    const Integer* value;
    if (rest == 0) {
      exponent[mask] = part;
      auto it = singles.find(part);
      if (it == singles.end()) it = singles.emplace(part, qpow_eps(q.q, part, eps)).first;
      value = &it->second;
    } else {
      exponent[mask] = std::gcd(exponent[rest], part);
      value = &pair_gcd(exponent[rest], part);
    }
    by_size[static_cast<std::size_t>(std::popcount(mask)) - 1].emplace(exponent[mask], value);
  }
  std::vector<Integer> d(s, 1);
  for (std::size_t i = 0; i < s; ++i) {
    for (const auto& [e, v] : by_size[i]) d[i] = lcm(d[i], *v);
  }
  return d;
}

namespace {

Integer exact_div(const Integer& a, const Integer& b, const char* what) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw std::logic_error(std::string("torus decomposition: non-integral factor ") + what);
  }
  return a / b;
}

}  // namespace

AbelianInvariants torus_decomposition(const Partition& lambda, const PrimePower& q, Sign eps, bool projective) {
  const auto d = d_sequence(lambda, q, eps);
  const std::size_t s = d.size();
  const Integer qe = q.q - eps.value();
  std::vector<Integer> factors(d.begin(), d.end());
  if (!projective) {
    factors[s - 1] = exact_div(d[s - 1], qe, "d_s/(q-ε1)");
    return AbelianInvariants::from_cyclic(std::move(factors));
  }
  Integer center;
  mpz_gcd_ui(center.get_mpz_t(), qe.get_mpz_t(), lambda.n());
  if (s == 1) {
    factors[0] = exact_div(d[0], center * qe, "d_1/(d(q-ε1))");
    return AbelianInvariants::from_cyclic(std::move(factors));
  }
  Integer dprime;
  mpz_gcd_ui(dprime.get_mpz_t(), qe.get_mpz_t(), lambda.n() / lambda.parts_gcd());
  factors[s - 2] = exact_div(d[s - 2], dprime, "d_{s-1}/d'");
  factors[s - 1] = exact_div(dprime * d[s - 1], center * qe, "d'd_s/(d(q-ε1))");
  return AbelianInvariants::from_cyclic(std::move(factors));
}

AbelianInvariants torus_lattice_oracle(const Partition& lambda, const PrimePower& q, Sign eps, bool projective) {
  check_parts_budget(lambda);
  const std::size_t s = lambda.size();
  const Integer twisted_q = eps.is_plus() ? Integer(q.q) : Integer(-q.q);  // εq
  std::vector<Integer> moduli(s), coeffs(s);
  Integer target = 1;
  for (std::size_t i = 0; i < s; ++i) {
    const unsigned ni = lambda.parts()[i];
    moduli[i] = qpow_eps(q.q, ni, eps);
    // det of diag(x, x^{εq}, ..., x^{(εq)^{n_i-1}}) is x^{((εq)^{n_i}-1)/(εq-1)}.
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), twisted_q.get_mpz_t(), ni);
    Integer e = (pw - 1) / (twisted_q - 1);
    mpz_fdiv_r(coeffs[i].get_mpz_t(), e.get_mpz_t(), moduli[i].get_mpz_t());
    target = lcm(target, moduli[i]);
  }
  const CharacterKernel kernel = character_kernel(moduli, coeffs, target);
  if (!projective) return smith_diagonal(kernel.presentation);

  // Scalars of order dividing q - ε1 sit at coordinates m_i/(q-ε1) times a generator;
  // keep the multiples on which the determinant character vanishes.
  const Integer qe = q.q - eps.value();
  std::vector<Integer> scalar(s);
  for (std::size_t i = 0; i < s; ++i) scalar[i] = moduli[i] / qe;
  auto character = [&](const std::vector<Integer>& a) {
    Integer acc = 0;
    for (std::size_t i = 0; i < s; ++i) acc += a[i] * coeffs[i] * (target / moduli[i]);
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), target.get_mpz_t());
    return r;
  };
  std::vector<Integer> generator;
  for (Integer k = 1; k <= qe; ++k) {
    std::vector<Integer> candidate(s);
    for (std::size_t i = 0; i < s; ++i) candidate[i] = scalar[i] * k;
    if (sgn(character(candidate)) == 0) {
      generator = std::move(candidate);
      break;
    }
  }
  return quotient_by_subgroup(kernel.presentation, {kernel.coordinates(generator)});
}

ConjugateCount conjugate_count(const GroupSpec& spec, const TorusReport& report) {
  ConjugateCount c;
  c.value = Rational(group_order(spec), report.order * report.weyl_order);
  c.value.canonicalize();
  c.integral = c.value.get_den() == 1;
  return c;
}

TorusReport torus_report(const GroupSpec& spec, const Partition& lambda) {
  if (lambda.n() != spec.n) throw std::invalid_argument("partition does not sum to n");
  TorusReport r;
  r.partition = lambda;
  r.d_seq = d_sequence(lambda, spec.q, spec.eps);
  r.decomposition = torus_decomposition(lambda, spec.q, spec.eps, spec.projective);
  r.order = r.decomposition.order();
  r.weyl_order = weyl_centralizer_order(lambda);
  r.conjugates = conjugate_count(spec, r);
  return r;
}

}  // namespace wordmap
