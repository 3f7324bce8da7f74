#include "blockfunctor/group_algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "blockfunctor/errors.hpp"

namespace blockfunctor {

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(unsigned long long p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime");
}

unsigned long long p_part(unsigned long long n, unsigned long long p) {
  unsigned long long out = 1;
  while (n > 0 && n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

bool is_p_element(std::size_t element_order, unsigned long long p) {
  return p_part(element_order, p) == element_order;
}

bool is_p_regular(std::size_t element_order, unsigned long long p) {
  return element_order % p != 0;
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& group) {
  std::vector<ConjugacyClass> out;
  const auto& reps = group.class_representatives();
  const auto& sizes = group.class_sizes();
  for (std::size_t c = 0; c < reps.size(); ++c)
    out.push_back({group.element(reps[c]), sizes[c]});
  return out;
}

ElementSet normalizer_indices(const PermGroup& group, const ElementSet& sub) {
  std::vector<bool> in(group.size(), false);
  for (Index x : sub) in[x] = true;
  const auto gens = greedy_generators(group, sub);
  ElementSet out;
  for (Index g = 0; g < group.size(); ++g) {
    bool keeps = std::all_of(gens.begin(), gens.end(),
                             [&](Index x) { return in[group.conjugate(g, x)]; });
    if (keeps) out.push_back(g);
  }
  return out;
}

PermGroup normalizer(const PermGroup& group, const PermGroup& sub) {
  return subgroup_from_indices(group, normalizer_indices(group, indices_in(group, sub)));
}

ElementSet centralizer_indices(const PermGroup& group, Index s) {
  ElementSet out;
  for (Index g = 0; g < group.size(); ++g)
    if (group.multiply(g, s) == group.multiply(s, g)) out.push_back(g);
  return out;
}

PermGroup centralizer_element(const PermGroup& group, const Permutation& s) {
  return subgroup_from_indices(group, centralizer_indices(group, group.index_of(s)));
}

bool is_normal(const PermGroup& group, const ElementSet& sub) {
  std::vector<bool> in(group.size(), false);
  for (Index x : sub) in[x] = true;
  for (Index g : group.generator_indices())
    for (Index x : sub)
      if (!in[group.conjugate(g, x)]) return false;
  return true;
}

PPartDecomposition p_part_decomposition(const Permutation& g, unsigned long long p) {
  require_prime(p);
  const long long n = static_cast<long long>(g.order());
  const long long np = static_cast<long long>(p_part(static_cast<unsigned long long>(n), p));
  const long long nq = n / np;
  // Extended Euclid: a * np + b * nq = 1.
  long long r0 = np, r1 = nq, a0 = 1, a1 = 0, b0 = 0, b1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    a0 = std::exchange(a1, a0 - q * a1);
    b0 = std::exchange(b1, b0 - q * b1);
  }
  return {g.pow(b0 * nq), g.pow(a0 * np)};
}

ElementSet canonical_conjugate(const PermGroup& group, const ElementSet& sub) {
  ElementSet best = sub;
  ElementSet image(sub.size());
  for (Index g = 0; g < group.size(); ++g) {
    for (std::size_t i = 0; i < sub.size(); ++i) image[i] = group.conjugate(g, sub[i]);
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  }
  return best;
}

std::vector<ElementSet> p_subgroup_class_sets(const PermGroup& group, unsigned long long p) {
  require_prime(p);
  std::vector<ElementSet> result{{PermGroup::identity_index()}};
  std::vector<ElementSet> layer = result;
  while (!layer.empty()) {
    std::set<ElementSet> next;
    for (const ElementSet& sub : layer) {
      std::vector<bool> in(group.size(), false);
      for (Index x : sub) in[x] = true;
      std::set<ElementSet> seen;
      for (Index x : normalizer_indices(group, sub)) {
        if (in[x] || !is_p_element(group.element_order(x), p)) continue;
        if (!in[group.power(x, static_cast<long long>(p))]) continue;
        std::vector<Index> gens(sub.begin(), sub.end());
        gens.push_back(x);
        ElementSet extended = closure(group, gens);
        if (seen.insert(extended).second) next.insert(canonical_conjugate(group, extended));
      }
    }
    layer.assign(next.begin(), next.end());
    result.insert(result.end(), layer.begin(), layer.end());
  }
  return result;
}

std::vector<PermGroup> p_subgroup_classes(const PermGroup& group, unsigned long long p) {
  std::vector<PermGroup> out;
  for (const auto& sub : p_subgroup_class_sets(group, p))
    out.push_back(subgroup_from_indices(group, sub));
  return out;
}

ElementSet sylow_subgroup(const PermGroup& group, unsigned long long p) {
  return p_subgroup_class_sets(group, p).back();
}

ElementSet largest_normal_p_subgroup(const PermGroup& group, unsigned long long p) {
  const ElementSet sylow = sylow_subgroup(group, p);
  std::vector<int> count(group.size(), 0);
  for (Index g = 0; g < group.size(); ++g)
    for (Index x : sylow) ++count[group.conjugate(g, x)];
  // x lies in every conjugate of S iff it is hit |G| times by (g, y) -> g y g^-1.
  ElementSet out;
  for (Index x = 0; x < group.size(); ++x)
    if (static_cast<std::size_t>(count[x]) == group.size()) out.push_back(x);
  return out;
}

Quotient quotient_group(const PermGroup& group, const ElementSet& normal_sub) {
  if (!is_normal(group, normal_sub))
    throw DomainError("quotient: subgroup of order " + std::to_string(normal_sub.size()) +
                      " is not normal");
  const std::size_t n = group.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(n, kUnset);
  std::vector<Index> reps;
  for (Index x = 0; x < n; ++x) {
    if (coset_of[x] != kUnset) continue;
    for (Index m : normal_sub) coset_of[group.multiply(m, x)] = reps.size();
    reps.push_back(x);
  }
  const std::size_t cosets = reps.size();

  auto action = [&](Index g) {
    std::vector<Point> images(cosets);
    for (std::size_t c = 0; c < cosets; ++c)
      images[c] = static_cast<Point>(coset_of[group.multiply(reps[c], g)]);
    return Permutation::from_images(std::move(images));
  };

  std::vector<Permutation> gens;
  for (Index g : group.generator_indices()) gens.push_back(action(g));
  PermGroup quotient = PermGroup::from_generators(cosets, std::move(gens));
  std::vector<Index> table(n);
  for (Index x = 0; x < n; ++x) table[x] = quotient.index_of(action(x));
  GroupHom projection = GroupHom::from_table(group, quotient, std::move(table));
  return {std::move(quotient), std::move(projection)};
}

Quotient quotient_group(const PermGroup& group, const PermGroup& normal_sub) {
  return quotient_group(group, indices_in(group, normal_sub));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (Point x = 0; x < a.degree(); ++x) images[x] = g(x);
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    const Point shift = static_cast<Point>(a.degree());
    for (Point x = 0; x < b.degree(); ++x) images[x + shift] = g(x) + shift;
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return PermGroup::from_generators(degree, std::move(gens));
}

}  // namespace blockfunctor
