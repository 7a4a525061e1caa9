#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "wordmap/abelian.hpp"
#include "wordmap/bounds.hpp"
#include "wordmap/errors.hpp"
#include "wordmap/group_spec.hpp"
#include "wordmap/tori.hpp"

namespace wordmap::cli {

namespace {

std::string str(const Integer& v) { return to_exact_string(v); }
std::string str(const Rational& v) { return to_exact_string(v); }
std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

std::string approx(const Rational& v) {
  std::ostringstream os;
  os << std::setprecision(12) << v.get_d();
  return os.str();
}

std::string seq(const std::vector<Integer>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
  return out + ")";
}

Integer big(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

PrimePower prime_power(std::uint64_t q) {
  try {
    return PrimePower::from_q(q);
  } catch (const std::invalid_argument&) {
    throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  }
}

template <typename T>
T require(const std::optional<T>& v, const char* flag, const std::string& theorem) {
  if (!v) throw UsageError("--theorem " + theorem + " needs " + flag);
  return *v;
}

int exit_code_for(const std::vector<ReportRecord>& records) {
  int code = kExitOk;
  for (const auto& r : records) {
    if (r.status == Status::BudgetExceeded) code = std::max(code, kExitBudget);
    if (r.status == Status::Mismatch && code != kExitBudget) code = kExitMismatch;
  }
  return code;
}

// The enumerable groups used by the exhaustive suites: linear ones first, then their quotients.
std::vector<GroupSpec> small_groups() {
  std::vector<GroupSpec> linear = {GroupSpec::sl(2, 3), GroupSpec::sl(2, 5), GroupSpec::sl(2, 7),
                                   GroupSpec::sl(2, 9), GroupSpec::sl(3, 2), GroupSpec::sl(3, 3),
                                   GroupSpec::sl(4, 2), GroupSpec::su(2, 2), GroupSpec::su(2, 3),
                                   GroupSpec::su(3, 2)};
  std::vector<GroupSpec> all = linear;
  for (const auto& g : linear) all.push_back({g.eps, g.n, g.q, true});
  return all;
}

class Checker {
 public:
  explicit Checker(std::string suite) : suite_(std::move(suite)) {}

  void expect(bool ok, const std::string& what, const std::string& expected, const std::string& actual) {
    ++checks_;
    if (ok) return;
    failures_.push_back({"verify", {{"suite", suite_}, {"case", what}}, {{"expected", expected}, {"actual", actual}},
                         Status::Mismatch, {}});
  }
  template <typename T>
  void equal(const T& expected, const T& actual, const std::string& what) {
    expect(expected == actual, what, render(expected), render(actual));
  }

  CommandResult finish(std::optional<std::string> budget_note = std::nullopt) {
    CommandResult r;
    r.schema = {"verify", {"suite", "case"}, {"expected", "actual", "checks", "failures"}};
    r.records = std::move(failures_);
    const auto failed = r.records.size();
    ReportRecord summary{"verify", {{"suite", suite_}, {"case", "summary"}},
                         {{"checks", str(checks_)}, {"failures", str(static_cast<std::uint64_t>(failed))}},
                         failed ? Status::Mismatch : Status::Ok, {}};
    if (budget_note) {
      summary.status = Status::BudgetExceeded;
      summary.outputs.push_back({"actual", *budget_note});
    }
    r.records.push_back(std::move(summary));
    r.exit_code = exit_code_for(r.records);
    return r;
  }

 private:
  static std::string render(const Integer& v) { return str(v); }
  static std::string render(const Rational& v) { return str(v); }
  static std::string render(std::uint64_t v) { return str(v); }
  static std::string render(const AbelianInvariants& v) { return v.to_string(); }
  static std::string render(const std::vector<Integer>& v) { return seq(v); }

  std::string suite_;
  std::vector<ReportRecord> failures_;
  std::uint64_t checks_ = 0;
};

void suite_zav(Checker& c) {
  for (unsigned long a = 2; a <= 10; ++a) {
    for (unsigned long s = 1; s <= 12; ++s) {
      for (unsigned long t = 1; t <= 12; ++t) {
        Integer as, at;
        mpz_ui_pow_ui(as.get_mpz_t(), a, s);
        mpz_ui_pow_ui(at.get_mpz_t(), a, t);
        const std::pair<ZavKind, std::pair<Integer, Integer>> cases[] = {
            {ZavKind::MinusMinus, {as - 1, at - 1}},
            {ZavKind::PlusPlus, {as + 1, at + 1}},
            {ZavKind::MinusPlus, {as - 1, at + 1}},
        };
        for (const auto& [kind, pair] : cases) {
          Integer direct;
          mpz_gcd(direct.get_mpz_t(), pair.first.get_mpz_t(), pair.second.get_mpz_t());
          std::ostringstream what;
          what << "a=" << a << " s=" << s << " t=" << t << " kind=" << static_cast<int>(kind);
          c.equal(direct, zav_gcd(Integer(a), s, t, kind), what.str());
        }
      }
    }
  }
}

void suite_power(Checker& c) {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<unsigned> rank(1, 4);
  std::uniform_int_distribution<std::uint64_t> factor(1, 200);
  std::uniform_int_distribution<std::uint64_t> exponent(1, 50);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::uint64_t> moduli;
    std::uint64_t total = 0;
    do {
      moduli.assign(rank(rng), 0);
      total = 1;
      for (auto& m : moduli) {
        m = factor(rng);
        total *= m;
      }
    } while (total > 1'000'000);
    const std::uint64_t M = exponent(rng);

    std::vector<Integer> as_big;
    for (auto m : moduli) as_big.push_back(big(m));
    const auto predicted = power_image(AbelianInvariants::from_cyclic(as_big), big(M));

    // Distinct images (M a_i mod m_i) and their orders lcm_i m_i / (v_i, m_i).
    std::vector<bool> hit(total, false);
    std::vector<std::uint64_t> orders;
    std::vector<std::uint64_t> digits(moduli.size(), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t image = 0, order = 1;
      for (std::size_t i = 0; i < moduli.size(); ++i) {
        const auto m = moduli[i];
        const auto v = (digits[i] * (M % m)) % m;
        image = image * m + v;
        const auto o = m / gcd_u64(v, m);
        order = order / gcd_u64(order, o) * o;
      }
      if (!hit[image]) {
        hit[image] = true;
        orders.push_back(order);
      }
      for (std::size_t i = moduli.size(); i-- > 0;) {
        if (++digits[i] < moduli[i]) break;
        digits[i] = 0;
      }
    }
    std::ostringstream what;
    what << "moduli=" << seq(as_big) << " M=" << M;
    c.equal(predicted.order(), big(orders.size()), what.str() + " order");
    c.equal(predicted, invariants_from_element_orders(orders), what.str() + " structure");
  }
}

void suite_tori(Checker& c) {
  for (unsigned n = 2; n <= 7; ++n) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      const auto pq = PrimePower::from_q(q);
      for (Sign eps : {Sign::plus(), Sign::minus()}) {
        for (const auto& lambda : partitions(n)) {
          const std::string base = "q=" + std::to_string(q) + " eps=" + eps.to_string() + " lambda=" + lambda.to_string();
          c.equal(d_sequence_naive(lambda, pq, eps), d_sequence(lambda, pq, eps), base + " d-sequence");
          Integer linear_order = 1;
          for (unsigned part : lambda.parts()) linear_order *= qpow_eps(pq.q, part, eps);
          linear_order /= GroupSpec(eps, n, pq, false).q_minus_eps();
          for (bool projective : {false, true}) {
            const auto bg = torus_decomposition(lambda, pq, eps, projective);
            const auto lattice = torus_lattice_oracle(lambda, pq, eps, projective);
            c.equal(lattice, bg, base + (projective ? " projective" : " linear"));
            const Integer expected = projective ? Integer(linear_order / GroupSpec(eps, n, pq, true).center_order())
                                                : linear_order;
            c.equal(expected, bg.order(), base + (projective ? " projective order" : " linear order"));
          }
        }
      }
    }
  }
}

// Size of the centraliser of a permutation, by testing every permutation of the same degree.
std::uint64_t brute_centralizer(const std::vector<unsigned>& sigma) {
  std::vector<unsigned> tau(sigma.size());
  for (unsigned i = 0; i < tau.size(); ++i) tau[i] = i;
  std::uint64_t count = 0;
  do {
    bool commutes = true;
    for (unsigned i = 0; i < tau.size() && commutes; ++i) commutes = tau[sigma[i]] == sigma[tau[i]];
    if (commutes) ++count;
  } while (std::next_permutation(tau.begin(), tau.end()));
  return count;
}

std::vector<unsigned> permutation_of_type(const Partition& lambda) {
  std::vector<unsigned> sigma(lambda.n());
  unsigned start = 0;
  for (unsigned part : lambda.parts()) {
    for (unsigned j = 0; j < part; ++j) sigma[start + j] = start + (j + 1) % part;
    start += part;
  }
  return sigma;
}

void suite_weyl(Checker& c) {
  for (unsigned n = 1; n <= 12; ++n) {
    Rational total = 0;
    std::vector<Rational> by_parts(n + 1, Rational(0));
    for (const auto& lambda : partitions(n)) {
      const Rational inv(Integer(1), weyl_centralizer_order(lambda));
      total += inv;
      by_parts[lambda.size()] += inv;
      if (n <= 6) {
        c.equal(big(brute_centralizer(permutation_of_type(lambda))), weyl_centralizer_order(lambda),
                "centraliser lambda=" + lambda.to_string());
      }
    }
    c.equal(Rational(1), total, "n=" + std::to_string(n) + " class sum");
    const Integer nf = factorial(n);
    for (unsigned k = 1; k <= n; ++k) {
      Rational expected(stirling_first_unsigned(n, k), nf);
      expected.canonicalize();
      c.equal(expected, by_parts[k], "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
}

void suite_harmonic(Checker& c) {
  for (unsigned n = 2; n <= 50; ++n) {
    const unsigned k = n / 2;
    Rational via_weyl = 0;
    for (unsigned i = 1; i <= k; ++i) {
      via_weyl += Rational(Integer(1), weyl_centralizer_order(Partition({i, n - i})));
    }
    // The two branches: all terms 1/(i(n-i)) for odd n; the middle term 1/(2k^2) for even n.
    Rational branch = 0;
    const unsigned last = (n % 2) ? k : k - 1;
    for (unsigned i = 1; i <= last; ++i) branch += Rational(1, static_cast<unsigned long>(i) * (n - i));
    if (n % 2 == 0) branch += Rational(1, 2ul * k * k);
    branch.canonicalize();
    Rational expected = harmonic(n - 1) / n;
    expected.canonicalize();
    c.equal(expected, via_weyl, "n=" + std::to_string(n) + " weyl");
    c.equal(expected, branch, "n=" + std::to_string(n) + (n % 2 ? " odd branch" : " even branch"));
  }
}

unsigned cycle_count(const std::vector<unsigned>& perm) {
  std::vector<bool> seen(perm.size(), false);
  unsigned cycles = 0;
  for (unsigned i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (unsigned j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

void suite_stirling(Checker& c) {
  for (unsigned n = 1; n <= 12; ++n) {
    Integer sum = 0;
    for (const auto& v : stirling_first_row(n)) sum += v;
    c.equal(factorial(n), sum, "n=" + std::to_string(n) + " row sum");
  }
  for (unsigned n = 1; n <= 7; ++n) {
    std::vector<Integer> counts(n + 1, Integer(0));
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = i;
    do {
      ++counts[cycle_count(perm)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (unsigned k = 1; k <= n; ++k) {
      c.equal(counts[k], stirling_first_unsigned(n, k), "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  for (unsigned n = 1; n <= 12; ++n) {
    for (std::uint64_t q : {3, 5, 7}) {
      Rational expected = 0;
      for (const auto& lambda : partitions(n)) {
        Integer denom = weyl_centralizer_order(lambda);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), q - 1, lambda.size() - 1);
        expected += Rational(Integer(1), denom * scale);
      }
      c.equal(expected, th2_estimate(n, PrimePower::from_q(q)), "th2 n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
  }
}

void suite_oracle_tori(Checker& c, const EnumerationBudget& budget) {
  for (const auto& spec : small_groups()) {
    const auto group = MatrixGroup::enumerate(spec, budget);
    c.equal(group_order(spec), big(group.size()), spec.name() + " order");
    const auto cat = catalogue_tori(group);
    std::map<Partition, std::uint64_t> tori_by_type;
    for (const auto& entry : cat.tori) {
      const auto& t = entry.torus;
      ++tori_by_type[t.partition];
      c.equal(torus_decomposition(t.partition, spec.q, spec.eps, spec.projective), t.invariants,
              spec.name() + " torus at element " + std::to_string(entry.witness) + " lambda=" + t.partition.to_string());
    }
    for (const auto& [lambda, count] : tori_by_type) {
      const auto conj = torus_report(spec, lambda).conjugates;
      c.expect(conj.integral && conj.value == Rational(big(count)), spec.name() + " conjugates lambda=" + lambda.to_string(),
               str(conj.value), str(count));
    }
  }
}

void suite_density(Checker& c, const EnumerationBudget& budget) {
  for (std::uint64_t q : {5, 7, 9, 11, 13}) {
    const auto spec = GroupSpec::psl(2, q);
    const auto lower = semisimple_density_lower(spec);
    const auto count = semisimple_count(spec, budget);
    c.expect(Rational(big(count)) >= lower, spec.name() + " semisimple density", ">= " + str(lower), str(count));
  }
}

std::uint64_t group_exponent(const MatrixGroup& g) {
  std::uint64_t e = 1;
  for_each_element(g, [&](std::span<const Elem> x) {
    const auto o = g.order(x);
    e = e / gcd_u64(e, o) * o;
  });
  return e;
}

void suite_homomorphism(Checker& c, const EnumerationBudget& budget) {
  const auto groups = small_groups();
  const std::size_t half = groups.size() / 2;
  for (std::size_t i = 0; i < half; ++i) {
    const auto sl = MatrixGroup::enumerate(groups[i], budget);
    const auto psl = MatrixGroup::enumerate(groups[i + half], budget);
    const auto exp_sl = group_exponent(sl);
    for (std::uint64_t M = 1; M <= 12; ++M) {
      const Rational r_sl(big(word_image_size(sl, big(M))), big(sl.size()));
      const Rational r_psl(big(word_image_size(psl, big(M))), big(psl.size()));
      c.expect(r_psl >= r_sl, groups[i].name() + " -> " + groups[i + half].name() + " M=" + std::to_string(M),
               ">= " + str(r_sl), str(r_psl));
      c.equal(big(word_image_size(sl, big(M))), big(word_image_size(sl, big(M + exp_sl))),
              groups[i].name() + " M=" + std::to_string(M) + " vs M+exponent");
    }
  }
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"zav",      "power",       "tori",    "weyl",        "harmonic",
                                                 "stirling", "oracle-tori", "density", "homomorphism"};
  return names;
}

CommandResult run_verify(const std::string& suite, const EnumerationBudget& budget) {
  const auto& names = verify_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite: " + suite);
  Checker c(suite);
  try {
    if (suite == "zav") suite_zav(c);
    else if (suite == "power") suite_power(c);
    else if (suite == "tori") suite_tori(c);
    else if (suite == "weyl") suite_weyl(c);
    else if (suite == "harmonic") suite_harmonic(c);
    else if (suite == "stirling") suite_stirling(c);
    else if (suite == "oracle-tori") suite_oracle_tori(c, budget);
    else if (suite == "density") suite_density(c, budget);
    else suite_homomorphism(c, budget);
  } catch (const BudgetExceeded& e) {
    return c.finish(std::string(e.what()));
  }
  return c.finish();
}

CommandResult run_decompose(const DecomposeArgs& a) {
  Partition lambda;
  try {
    lambda = Partition::parse(a.partition);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --partition: ") + e.what());
  }
  if (lambda.n() != a.n) throw UsageError("partition does not sum to n");
  const GroupSpec spec(a.eps, a.n, prime_power(a.q), a.projective);
  const auto report = torus_report(spec, lambda);

  CommandResult r;
  r.schema = {"decompose",
              {"eps", "n", "q", "partition", "projective"},
              {"group", "d_seq", "decomposition", "order", "weyl_order", "conjugate_count", "conjugate_count_integral",
               "oracle_decomposition"}};
  ReportRecord rec{"decompose",
                   {{"eps", a.eps.to_string()},
                    {"n", std::to_string(a.n)},
                    {"q", str(a.q)},
                    {"partition", lambda.to_string()},
                    {"projective", str(a.projective)}},
                   {{"group", spec.name()},
                    {"d_seq", seq(report.d_seq)},
                    {"decomposition", report.decomposition.to_string()},
                    {"order", str(report.order)},
                    {"weyl_order", str(report.weyl_order)},
                    {"conjugate_count", str(report.conjugates.value)},
                    {"conjugate_count_integral", str(report.conjugates.integral)}},
                   Status::Ok,
                   {}};
  if (a.oracle) {
    const auto lattice = torus_lattice_oracle(lambda, spec.q, a.eps, a.projective);
    rec.outputs.push_back({"oracle_decomposition", lattice.to_string()});
    if (!(lattice == report.decomposition)) rec.status = Status::Mismatch;
  }
  r.records.push_back(std::move(rec));
  r.exit_code = exit_code_for(r.records);
  return r;
}

CommandResult run_bound(const BoundArgs& a) {
  const auto& th = a.theorem;
  CommandResult r;
  ReportRecord rec;
  rec.command = "bound";
  rec.inputs = {{"theorem", th}, {"eps", a.eps.to_string()}};
  auto& out = rec.outputs;

  // Runs an exact computation, turning an exceeded budget into a status.
  auto exact_or_budget = [&](auto&& fn) -> std::optional<Integer> {
    try {
      return fn();
    } catch (const BudgetExceeded& e) {
      rec.status = Status::BudgetExceeded;
      out.push_back({"exact", "budget-exceeded"});
      return std::nullopt;
    }
  };

  if (th == "main") {
    const unsigned n = require(a.n, "--n", th);
    const std::uint64_t p = require(a.p, "--p", th);
    rec.inputs.push_back({"n", std::to_string(n)});
    rec.inputs.push_back({"p", str(p)});
    rec.inputs.push_back({"l", std::to_string(a.l)});
    r.schema = {"bound",
                {"theorem", "eps", "n", "p", "l"},
                {"group", "group_order", "word_exponent", "bound", "bound_approx", "bound_over_order", "exact", "ratio",
                 "satisfied"}};
    if (!is_prime(p)) throw UsageError("--p must be prime");
    Rational bound;
    try {
      bound = theorem_main_upper(n, p, a.l, a.eps);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const GroupSpec spec(a.eps, n, PrimePower(p, a.l), true);
    const Integer order = group_order(spec);
    const Integer M = qpow_eps(big(p), n, a.eps);
    out = {{"group", spec.name()},
           {"group_order", str(order)},
           {"word_exponent", str(M)},
           {"bound", str(bound)},
           {"bound_approx", approx(bound)},
           {"bound_over_order", str(Rational(bound / order))}};
    if (upper_bound_is_vacuous(bound, order)) rec.status = Status::Vacuous;
    if (a.exact) {
      if (auto exact = exact_or_budget([&] { return big(word_image_size(spec, M, a.budget)); })) {
        const bool ok = Rational(*exact) <= bound;
        out.push_back({"exact", str(*exact)});
        out.push_back({"ratio", str(Rational(*exact / Rational(order)))});
        out.push_back({"satisfied", str(ok)});
        if (!ok) rec.status = Status::Mismatch;
      }
    }
  } else {
    const unsigned n = require(a.n, "--n", th);
    const std::uint64_t q = require(a.q, "--q", th);
    rec.inputs.push_back({"n", std::to_string(n)});
    rec.inputs.push_back({"q", str(q)});
    const PrimePower pq = prime_power(q);

    if (th == "th2") {
      r.schema = {"bound", {"theorem", "eps", "n", "q"},
                  {"group", "word_exponent", "bound", "bound_approx", "exact", "ratio", "satisfied"}};
      const GroupSpec spec(a.eps, n, pq, false);
      const Rational bound = th2_estimate(n, pq);
      const Integer M = big(q - 1);
      out = {{"group", spec.name()}, {"word_exponent", str(M)}, {"bound", str(bound)}, {"bound_approx", approx(bound)}};
      if (a.exact) {
        if (auto exact = exact_or_budget([&] {
              return big(semisimple_word_image_size(MatrixGroup::enumerate(spec, a.budget), M));
            })) {
          const Rational ratio(*exact, group_order(spec));
          const bool ok = ratio <= bound;
          out.push_back({"exact", str(*exact)});
          out.push_back({"ratio", str(Rational(ratio))});
          out.push_back({"satisfied", str(ok)});
          // The estimate bounds the linear family; elsewhere it is reported only.
          if (!ok && a.eps.is_plus()) rec.status = Status::Mismatch;
        }
      }
    } else if (th == "1torus" || th == "th1" || th == "ss") {
      const std::uint64_t m = require(a.M, "--M", th);
      rec.inputs.push_back({"M", str(m)});
      rec.inputs.push_back({"projective", str(a.projective)});
      const std::vector<std::string> in_keys = {"theorem", "eps", "n", "q", "M", "projective"};
      const GroupSpec spec(a.eps, n, pq, a.projective);
      const Integer order = group_order(spec);
      const Integer M = big(m);
      out = {{"group", spec.name()}, {"group_order", str(order)}, {"word_exponent", str(M)}};

      if (th == "1torus") {
        r.schema = {"bound", in_keys,
                    {"group", "group_order", "word_exponent", "bound", "bound_approx", "exact", "ratio", "satisfied"}};
        Rational bound;
        try {
          bound = lower_1torus(spec, M);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        out.push_back({"bound", str(bound)});
        out.push_back({"bound_approx", approx(bound)});
        if (a.exact) {
          if (auto exact = exact_or_budget([&] { return big(word_image_size(spec, M, a.budget)); })) {
            out.push_back({"exact", str(*exact)});
            out.push_back({"ratio", str(Rational(*exact / Rational(order)))});
            out.push_back({"satisfied", str(Rational(*exact) >= bound)});
          }
        }
      } else if (th == "th1") {
        r.schema = {"bound", in_keys,
                    {"group", "group_order", "word_exponent", "bound", "bound_approx", "weyl_sum", "exact_union_bound",
                     "exact", "ratio", "satisfied", "union_satisfied"}};
        const auto b = lower_th1(spec, M);
        out.push_back({"bound", str(b.formula_bound)});
        std::ostringstream os;
        os << std::setprecision(12) << b.formula_bound_approx;
        out.push_back({"bound_approx", os.str()});
        out.push_back({"weyl_sum", str(b.weyl_sum)});
        out.push_back({"exact_union_bound", str(b.exact_union_bound)});
        if (a.exact) {
          if (auto exact = exact_or_budget([&] { return big(word_image_size(spec, M, a.budget)); })) {
            out.push_back({"exact", str(*exact)});
            out.push_back({"ratio", str(Rational(*exact / Rational(order)))});
            out.push_back({"satisfied", str(Rational(*exact) >= b.formula_bound)});
            out.push_back({"union_satisfied", str(Rational(*exact) >= b.exact_union_bound)});
          }
        }
      } else {
        r.schema = {"bound", in_keys,
                    {"group", "group_order", "word_exponent", "per_torus_ratio", "bound", "bound_approx", "exact",
                     "ratio", "satisfied"}};
        const Rational N = per_torus_ratio(spec, M);
        const Rational bound = lemma_ss_upper(spec, N);
        out.push_back({"per_torus_ratio", str(N)});
        out.push_back({"bound", str(bound)});
        out.push_back({"bound_approx", approx(bound)});
        if (upper_bound_is_vacuous(bound, order)) rec.status = Status::Vacuous;
        if (a.exact) {
          if (auto exact = exact_or_budget([&] {
                return big(semisimple_word_image_size(MatrixGroup::enumerate(spec, a.budget), M));
              })) {
            const bool ok = Rational(*exact) <= bound;
            out.push_back({"exact", str(*exact)});
            out.push_back({"ratio", str(Rational(*exact / Rational(order)))});
            out.push_back({"satisfied", str(ok)});
            if (!ok) rec.status = Status::Mismatch;
          }
        }
      }
    } else {
      throw UsageError("unknown theorem: " + th);
    }
  }
  r.records.push_back(std::move(rec));
  r.exit_code = exit_code_for(r.records);
  return r;
}

CommandResult run_scan(const ScanArgs& a) {
  auto ns = a.n;
  auto qs = a.q;
  auto ms = a.M;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

  CommandResult r;
  if (a.theorem == "th2") {
    r.schema = {"scan", {"theorem", "n", "q"}, {"word_exponent", "estimate", "estimate_approx"}};
    for (unsigned n : ns) {
      for (std::uint64_t q : qs) {
        const auto est = th2_estimate(n, prime_power(q));
        r.records.push_back({"scan",
                             {{"theorem", "th2"}, {"n", std::to_string(n)}, {"q", str(q)}},
                             {{"word_exponent", str(q - 1)}, {"estimate", str(est)}, {"estimate_approx", approx(est)}},
                             Status::Ok,
                             {}});
      }
    }
  } else if (a.theorem == "1torus") {
    r.schema = {"scan",
                {"theorem", "eps", "n", "q", "M", "projective"},
                {"group", "group_order", "bound", "exact", "ratio", "satisfied"}};
    for (unsigned n : ns) {
      for (std::uint64_t q : qs) {
        const GroupSpec spec(a.eps, n, prime_power(q), a.projective);
        const Integer order = group_order(spec);
        std::optional<MatrixGroup> group;
        bool over_budget = false;
        if (a.exact) {
          try {
            group.emplace(MatrixGroup::enumerate(spec, a.budget));
          } catch (const BudgetExceeded&) {
            over_budget = true;
          }
        }
        for (std::uint64_t m : ms) {
          const Integer M = big(m);
          Rational bound;
          try {
            bound = lower_1torus(spec, M);
          } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
          }
          ReportRecord rec{"scan",
                           {{"theorem", "1torus"},
                            {"eps", a.eps.to_string()},
                            {"n", std::to_string(n)},
                            {"q", str(q)},
                            {"M", str(m)},
                            {"projective", str(a.projective)}},
                           {{"group", spec.name()}, {"group_order", str(order)}, {"bound", str(bound)}},
                           Status::Ok,
                           {}};
          if (over_budget) {
            rec.outputs.push_back({"exact", "budget-exceeded"});
            rec.status = Status::BudgetExceeded;
          } else if (group) {
            const Integer exact = big(word_image_size(*group, M));
            rec.outputs.push_back({"exact", str(exact)});
            rec.outputs.push_back({"ratio", str(Rational(exact / Rational(order)))});
            rec.outputs.push_back({"satisfied", str(Rational(exact) >= bound)});
          }
          r.records.push_back(std::move(rec));
        }
      }
    }
  } else if (a.theorem == "example") {
    r.schema = {"scan",
                {"theorem", "c", "n"},
                {"p", "word_exponent", "group", "group_order", "bound", "bound_over_order", "c_over_n", "holds"}};
    std::vector<Rational> cs;
    for (const auto& text : a.c) {
      try {
        cs.push_back(parse_rational(text));
      } catch (const std::invalid_argument& e) {
        throw UsageError("bad --c: " + text);
      }
      if (cs.back() <= 0) throw UsageError("--c must be positive");
    }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    for (const auto& c : cs) {
      for (unsigned n : ns) {
        if (n < 2) throw UsageError("--n must be >= 2");
        const std::uint64_t p = find_example_prime(c, n);
        const Rational bound = theorem_main_upper(n, p, 1, Sign::plus());
        const GroupSpec spec(Sign::plus(), n, PrimePower(p, 1), true);
        const Integer order = group_order(spec);
        const Rational ratio = bound / order;
        const Rational c_over_n = c / n;
        const bool holds = ratio < c_over_n;
        r.records.push_back({"scan",
                             {{"theorem", "example"}, {"c", str(c)}, {"n", std::to_string(n)}},
                             {{"p", str(p)},
                              {"word_exponent", str(qpow_eps(big(p), n, Sign::plus()))},
                              {"group", spec.name()},
                              {"group_order", str(order)},
                              {"bound", str(bound)},
                              {"bound_over_order", str(ratio)},
                              {"c_over_n", str(c_over_n)},
                              {"holds", str(holds)}},
                             holds ? Status::Ok : Status::Mismatch,
                             {}});
      }
    }
  } else {
    throw UsageError("unknown scan theorem: " + a.theorem);
  }
  r.exit_code = exit_code_for(r.records);
  return r;
}

}  // namespace wordmap::cli
