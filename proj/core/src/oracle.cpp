// Ground truth by exhaustion over enumerated matrix groups.

#include "wordmap/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "wordmap/errors.hpp"

namespace wordmap {

namespace {

bool coprime_to(std::uint64_t order, std::uint64_t p) { return gcd_u64(order, p) == 1; }

// Monic polynomial whose roots are r^{-q} for the roots r of f (f(0) != 0).
poly::Poly unitary_twist(const FiniteField& field, const poly::Poly& f) {
  poly::Poly g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[f.size() - 1 - i] = field.conjugate(f[i]);
  poly::trim(g);
  return poly::monic(field, g);
}

bool regular(const MatrixGroup& group, std::span<const Elem> g) {
  return poly::is_squarefree(group.field(), group.characteristic_polynomial(g));
}

}  // namespace

ElementClass classify_element(const MatrixGroup& group, std::span<const Elem> g) {
  ElementClass c;
  c.order = group.order(g);
  c.is_semisimple = coprime_to(c.order, group.spec().q.p);
  const auto chi = group.characteristic_polynomial(g);
  c.is_regular_semisimple = poly::is_squarefree(group.field(), chi);
  for (const auto& [factor, mult] : poly::factor(group.field(), chi)) {
    for (unsigned k = 0; k < mult; ++k) c.char_poly_factor_degrees.push_back(static_cast<unsigned>(poly::degree(factor)));
  }
  std::sort(c.char_poly_factor_degrees.begin(), c.char_poly_factor_degrees.end());
  return c;
}

Partition element_partition(const MatrixGroup& group, std::span<const Elem> g) {
  const FiniteField& field = group.field();
  const auto chi = group.characteristic_polynomial(g);
  if (!poly::is_squarefree(field, chi)) throw std::invalid_argument("element is not regular semisimple");
  const auto factors = poly::factor(field, chi);
  std::vector<unsigned> parts;
  if (group.spec().eps.is_plus()) {
    for (const auto& [f, m] : factors) parts.push_back(static_cast<unsigned>(poly::degree(f)));
    return Partition(std::move(parts));
  }
  std::vector<bool> used(factors.size(), false);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const auto& f = factors[i].first;
    const auto deg = static_cast<unsigned>(poly::degree(f));
    const auto twisted = unitary_twist(field, f);
    if (twisted == f) {
      parts.push_back(deg);
      continue;
    }
    auto partner = std::find_if(factors.begin(), factors.end(), [&](const auto& x) { return x.first == twisted; });
    if (partner == factors.end() || used[static_cast<std::size_t>(partner - factors.begin())]) {
      throw std::logic_error("unitary characteristic polynomial is not closed under r -> r^{-q}");
    }
    used[static_cast<std::size_t>(partner - factors.begin())] = true;
    parts.push_back(2 * deg);
  }
  return Partition(std::move(parts));
}

std::uint64_t word_image_size(const MatrixGroup& group, const Integer& exponent) {
  if (exponent < 1) throw std::invalid_argument("M must be >= 1");
  std::vector<bool> hit(group.size(), false);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto img = group.power(group.element(i), exponent);
    const auto idx = group.index_of(img);
    if (!idx) throw std::logic_error("power left the group");
    if (!hit[*idx]) {
      hit[*idx] = true;
      ++count;
    }
  }
  return count;
}

std::uint64_t word_image_size(const GroupSpec& spec, const Integer& exponent, const EnumerationBudget& budget) {
  return word_image_size(MatrixGroup::enumerate(spec, budget), exponent);
}

std::uint64_t semisimple_word_image_size(const MatrixGroup& group, const Integer& exponent) {
  std::vector<bool> hit(group.size(), false);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (!coprime_to(group.order(group.element(i)), group.spec().q.p)) continue;
    const auto idx = group.index_of(group.power(group.element(i), exponent));
    if (!hit[*idx]) {
      hit[*idx] = true;
      ++count;
    }
  }
  return count;
}

std::uint64_t semisimple_count(const MatrixGroup& group) {
  std::uint64_t count = 0;
  for_each_element(group, [&](std::span<const Elem> g) {
    if (coprime_to(group.order(g), group.spec().q.p)) ++count;
  });
  return count;
}

std::uint64_t semisimple_count(const GroupSpec& spec, const EnumerationBudget& budget) {
  return semisimple_count(MatrixGroup::enumerate(spec, budget));
}

TorusOfElement torus_of_element(const MatrixGroup& group, std::size_t g_index) {
  const auto g = group.element(g_index);
  if (!regular(group, g)) throw std::invalid_argument("element is not regular semisimple");
  TorusOfElement t;
  t.partition = element_partition(group, g);
  for (std::size_t h = 0; h < group.size(); ++h) {
    if (group.commute(group.element(h), g)) t.members.push_back(h);
  }
  for (std::size_t i = 0; i < t.members.size(); ++i) {
    for (std::size_t j = i + 1; j < t.members.size(); ++j) {
      if (!group.commute(group.element(t.members[i]), group.element(t.members[j]))) {
        throw std::runtime_error("not regular");
      }
    }
  }
  std::vector<std::uint64_t> orders;
  orders.reserve(t.members.size());
  for (auto h : t.members) orders.push_back(group.order(group.element(h)));
  t.invariants = invariants_from_element_orders(orders);
  return t;
}

PowerCensus regular_power_census(const MatrixGroup& group, const Integer& exponent) {
  if (exponent < 1) throw std::invalid_argument("M must be >= 1");
  std::vector<bool> hit(group.size(), false);
  for (std::size_t i = 0; i < group.size(); ++i) {
    hit[*group.index_of(group.power(group.element(i), exponent))] = true;
  }
  PowerCensus census;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (!hit[i]) continue;
    ++census.image_size;
    const auto h = group.element(i);
    if (regular(group, h)) {
      ++census.regular_by_partition[element_partition(group, h)];
    } else {
      ++census.nonregular;
    }
  }
  return census;
}

TorusCatalogue catalogue_tori(const MatrixGroup& group) {
  TorusCatalogue cat;
  std::vector<bool> is_regular(group.size()), assigned(group.size(), false);
  for (std::size_t i = 0; i < group.size(); ++i) {
    is_regular[i] = regular(group, group.element(i));
    if (is_regular[i]) ++cat.regular_count;
  }
  // A regular element determines its torus, and every regular member of that torus
  // has the same centraliser.
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (!is_regular[i] || assigned[i]) continue;
    TorusCatalogue::Entry entry{torus_of_element(group, i), i};
    for (auto h : entry.torus.members) {
      if (is_regular[h]) assigned[h] = true;
    }
    cat.tori.push_back(std::move(entry));
  }
  return cat;
}

}  // namespace wordmap
