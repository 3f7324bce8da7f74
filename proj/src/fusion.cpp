#include "blockfunctor/fusion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "blockfunctor/errors.hpp"
#include "blockfunctor/group_algorithms.hpp"

namespace blockfunctor {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::string describe(const PermGroup& g, Index x) { return g.element(x).to_cycle_string(); }

std::size_t position_in(const ElementSet& set, Index x) {
  auto it = std::lower_bound(set.begin(), set.end(), x);
  return it != set.end() && *it == x ? static_cast<std::size_t>(it - set.begin()) : npos;
}

bool contains(const ElementSet& set, Index x) { return position_in(set, x) != npos; }

std::vector<Index> restriction(const PermGroup& g, Index x, const ElementSet& sub) {
  std::vector<Index> out;
  for (Index y : sub) out.push_back(g.conjugate(x, y));
  return out;
}

ElementSet greedy_complement(const PermGroup& group, const ElementSet& kernel, unsigned p) {
  const std::size_t target = group.size() / kernel.size();
  ElementSet current{PermGroup::identity_index()};
  std::vector<Index> gens;
  bool grew = true;
  while (current.size() < target && grew) {
    grew = false;
    for (Index x = 0; x < group.size() && current.size() < target; ++x) {
      if (contains(current, x) || !is_p_regular(group.element_order(x), p)) continue;
      gens.push_back(x);
      ElementSet bigger = closure(group, gens);
      if (is_p_regular(bigger.size(), p)) {
        current = std::move(bigger);
        grew = true;
      } else {
        gens.pop_back();
      }
    }
  }
  if (current.size() != target)
    throw DomainError("no p'-complement to the Sylow " + std::to_string(p) + "-subgroup found");
  return current;
}

// Composite of pi: L -> P with i_u, transported to P.
std::vector<Index> transported(const DDeltaClass& cls, const ElementSet& object, const LMap& pi) {
  const auto& r = cls.realization;
  std::vector<Index> out(object.size());
  for (std::size_t k = 0; k < pi.size(); ++k) {
    const auto conj = cls.l_position[r.ambient.conjugate(r.u, r.l_elements[k])];
    out[position_in(object, pi[k])] = pi[conj];
  }
  return out;
}

// Every isomorphism L -> object, as maps by position in l_elements.
std::vector<LMap> isomorphisms(const FusionData& fusion, const DDeltaClass& cls, const ElementSet& object) {
  const auto& r = cls.realization;
  const PermGroup l_group = subgroup_from_indices(r.ambient, r.l_elements);
  const PermGroup p_group = subgroup_from_indices(fusion.group, object);
  std::vector<Index> to_l(l_group.size());
  for (std::size_t k = 0; k < r.l_elements.size(); ++k)
    to_l[l_group.index_of(r.ambient.element(r.l_elements[k]))] = static_cast<Index>(k);
  std::vector<Index> to_g(p_group.size());
  for (Index j = 0; j < p_group.size(); ++j) to_g[j] = fusion.group.index_of(p_group.element(j));

  const auto& gens = l_group.generator_indices();
  std::vector<std::vector<Index>> candidates;
  for (Index x : gens) {
    candidates.emplace_back();
    for (Index y = 0; y < p_group.size(); ++y)
      if (p_group.element_order(y) == l_group.element_order(x)) candidates.back().push_back(y);
  }
  std::vector<LMap> out;
  search_embeddings(l_group, gens, p_group, candidates, [&](const std::vector<Index>& table) {
    LMap pi(r.l_elements.size());
    for (Index a = 0; a < table.size(); ++a) pi[to_l[a]] = to_g[table[a]];
    out.push_back(std::move(pi));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

LMap left_act(const PermGroup& g, Index x, const LMap& pi) {
  LMap out(pi.size());
  for (std::size_t k = 0; k < pi.size(); ++k) out[k] = g.conjugate(x, pi[k]);
  return out;
}

LMap right_act(const DDeltaClass& cls, const Permutation& f, const LMap& pi) {
  const auto& r = cls.realization;
  LMap out(pi.size());
  for (std::size_t k = 0; k < pi.size(); ++k) out[k] = pi[cls.l_position[f(r.l_elements[k])]];
  return out;
}

}  // namespace

FusionData build_fusion(const PermGroup& group, const ElementSet& kernel, const ElementSet& complement,
                        unsigned p) {
  require_prime(p);
  const std::size_t n = group.size();
  if (kernel.size() != p_part(n, p))
    throw DomainError("D of order " + std::to_string(kernel.size()) + " is not a Sylow " + std::to_string(p) +
                      "-subgroup of a group of order " + std::to_string(n));
  if (closure(group, kernel) != kernel) throw DomainError("D is not a subgroup");
  for (Index g : group.generator_indices())
    for (Index d : kernel)
      if (!contains(kernel, group.conjugate(g, d)))
        throw DomainError("Sylow " + std::to_string(p) + "-subgroup is not normal: " + describe(group, g) +
                          " conjugates " + describe(group, d) + " outside it");
  for (Index a : kernel)
    for (Index b : kernel)
      if (group.multiply(a, b) != group.multiply(b, a))
        throw DomainError("D is not abelian: " + describe(group, a) + " and " + describe(group, b) +
                          " do not commute");
  if (closure(group, complement) != complement || complement.size() * kernel.size() != n)
    throw DomainError("E is not a complement to D");
  for (Index e : complement) {
    if (e == PermGroup::identity_index()) continue;
    for (Index d : kernel)
      if (d != PermGroup::identity_index() && group.conjugate(e, d) == d)
        throw DomainError("E does not act freely: " + describe(group, e) + " fixes " + describe(group, d));
  }

  FusionData out;
  out.group = group;
  out.p = p;
  out.kernel = kernel;
  out.complement = complement;
  out.objects = p_subgroup_class_sets(group, p);
  for (const auto& object : out.objects) {
    out.normalizers.push_back(normalizer_indices(group, object));
    std::vector<std::vector<Index>> auts;
    for (Index g : out.normalizers.back()) auts.push_back(restriction(group, g, object));
    std::sort(auts.begin(), auts.end());
    auts.erase(std::unique(auts.begin(), auts.end()), auts.end());
    out.aut_f.push_back(std::move(auts));
  }
  return out;
}

FusionData build_fusion(const PermGroup& group, unsigned p) {
  require_prime(p);
  const ElementSet sylow = sylow_subgroup(group, p);
  if (!is_normal(group, sylow)) {
    for (Index g : group.generator_indices())
      for (Index d : sylow)
        if (!contains(sylow, group.conjugate(g, d)))
          throw DomainError("Sylow " + std::to_string(p) + "-subgroup is not normal: " + describe(group, g) +
                            " conjugates " + describe(group, d) + " outside it");
  }
  return build_fusion(group, sylow, greedy_complement(group, sylow, p), p);
}

std::vector<TripleOrbit> triple_orbits(const FusionData& fusion, const DDeltaClass& cls) {
  std::vector<TripleOrbit> out;
  const auto& r = cls.realization;
  if (r.l_order() == 1) return out;
  const auto aut_gens = cls.aut_pair.generators();
  for (std::size_t k = 0; k < fusion.objects.size(); ++k) {
    const auto& object = fusion.objects[k];
    if (object.size() != r.l_order()) continue;
    std::vector<LMap> triples;
    for (auto& pi : isomorphisms(fusion, cls, object))
      if (std::binary_search(fusion.aut_f[k].begin(), fusion.aut_f[k].end(), transported(cls, object, pi)))
        triples.push_back(std::move(pi));
    if (triples.empty()) continue;

    const auto n_gens = greedy_generators(fusion.group, fusion.normalizers[k]);
    auto index = [&](const LMap& pi) {
      auto it = std::lower_bound(triples.begin(), triples.end(), pi);
      if (it == triples.end() || *it != pi) throw InternalError("triple set is not closed under the actions");
      return static_cast<std::size_t>(it - triples.begin());
    };
    std::vector<bool> done(triples.size(), false);
    for (std::size_t start = 0; start < triples.size(); ++start) {
      if (done[start]) continue;
      std::vector<std::size_t> orbit{start};
      done[start] = true;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        std::vector<LMap> next;
        for (Index g : n_gens) next.push_back(left_act(fusion.group, g, triples[orbit[i]]));
        for (const auto& f : aut_gens) next.push_back(right_act(cls, f, triples[orbit[i]]));
        for (const auto& pi : next) {
          const auto j = index(pi);
          if (!done[j]) {
            done[j] = true;
            orbit.push_back(j);
          }
        }
      }

      // N_G(P)-orbit of the representative.
      const LMap& rep = triples[start];
      std::vector<bool> in_n_orbit(triples.size(), false);
      std::vector<std::size_t> n_orbit{start};
      in_n_orbit[start] = true;
      for (std::size_t i = 0; i < n_orbit.size(); ++i)
        for (Index g : n_gens) {
          const auto j = index(left_act(fusion.group, g, triples[n_orbit[i]]));
          if (!in_n_orbit[j]) {
            in_n_orbit[j] = true;
            n_orbit.push_back(j);
          }
        }
      ElementSet stabilizer;
      for (Index f = 0; f < cls.aut_pair.size(); ++f)
        if (in_n_orbit[index(right_act(cls, cls.aut_pair.element(f), rep))])
          stabilizer.push_back(cls.aut_to_out[f]);
      std::sort(stabilizer.begin(), stabilizer.end());
      stabilizer.erase(std::unique(stabilizer.begin(), stabilizer.end()), stabilizer.end());
      out.push_back(TripleOrbit{FusionTriple{k, rep}, orbit.size(), std::move(stabilizer)});
    }
  }
  return out;
}

PairPS psi(const FusionData& fusion, const DDeltaClass& cls, const FusionTriple& triple) {
  const auto& object = fusion.objects.at(triple.object);
  const auto wanted = transported(cls, object, triple.pi);
  for (Index s : fusion.normalizers[triple.object])
    if (is_p_regular(fusion.group.element_order(s), fusion.p) && restriction(fusion.group, s, object) == wanted)
      return PairPS{object, s};
  throw TheoremViolation("no p'-element of N_G(P) induces pi i_u pi^-1 on the object of order " +
                         std::to_string(object.size()));
}

PsiReport verify_bijection(const FusionData& fusion, const DDeltaClass& cls, const PairClassification& pairs) {
  const PermGroup& g = fusion.group;
  const auto& orbits = pairs.orbits;
  if (orbits.p_subgroups != fusion.objects) throw InternalError("pair enumeration and fusion objects differ");

  // Pair orbit of (P_k, s) for every p'-element s of N_G(P_k).
  std::vector<std::vector<std::size_t>> pair_of(fusion.objects.size(), std::vector<std::size_t>(g.size(), npos));
  for (std::size_t i = 0; i < orbits.pairs.size(); ++i) {
    const auto k = orbits.subgroup_of_pair[i];
    for (Index x : fusion.normalizers[k])
      pair_of[k][g.conjugate(x, orbits.pairs[i].element)] = i;
  }

  PsiReport report;
  report.class_id = cls.id;
  std::vector<std::size_t> matched;
  const auto triple_list = triple_orbits(fusion, cls);
  for (std::size_t t = 0; t < triple_list.size(); ++t) {
    const auto& orbit = triple_list[t];
    const auto name = "class " + std::to_string(cls.id) + ", triple orbit " + std::to_string(t);
    const auto pair = psi(fusion, cls, orbit.representative);
    const auto target = pair_of[orbit.representative.object][pair.element];
    if (target == npos) throw TheoremViolation(name + ": Psi image is not an enumerated pair");
    if (pairs.assignments[target].class_id != cls.id)
      throw TheoremViolation(name + ": Psi image lies in class " + std::to_string(pairs.assignments[target].class_id));

    // Constant on the orbit: test every generator move of the representative.
    const auto& object = fusion.objects[orbit.representative.object];
    for (Index x : greedy_generators(g, fusion.normalizers[orbit.representative.object])) {
      const FusionTriple moved{orbit.representative.object, left_act(g, x, orbit.representative.pi)};
      if (pair_of[moved.object][psi(fusion, cls, moved).element] != target)
        throw TheoremViolation(name + ": Psi is not constant under N_G(P)");
    }
    for (const auto& f : cls.aut_pair.generators()) {
      const FusionTriple moved{orbit.representative.object, right_act(cls, f, orbit.representative.pi)};
      if (pair_of[moved.object][psi(fusion, cls, moved).element] != target)
        throw TheoremViolation(name + ": Psi is not constant under Aut(L,u)");
    }

    const auto image = n_image_in_out(cls, g, pair, orbit.representative.pi);
    if (image != orbit.stabilizer)
      throw TheoremViolation(name + ": stabilizer of order " + std::to_string(orbit.stabilizer.size()) +
                             " differs from the image of N_G(P,s) of order " + std::to_string(image.size()) +
                             " at |P| = " + std::to_string(object.size()));
    matched.push_back(target);
    report.stabilizer_orders.push_back(image.size());
  }

  std::vector<std::size_t> expected;
  for (std::size_t i = 0; i < pairs.assignments.size(); ++i)
    if (pairs.assignments[i].class_id == cls.id) expected.push_back(i);
  std::vector<std::size_t> sorted = matched;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw TheoremViolation("class " + std::to_string(cls.id) + ": Psi identifies two triple orbits");
  if (sorted != expected)
    throw TheoremViolation("class " + std::to_string(cls.id) + ": " + std::to_string(sorted.size()) +
                           " triple orbits against " + std::to_string(expected.size()) + " pair orbits");
  report.triple_orbits = triple_list.size();
  report.pair_orbits = expected.size();
  return report;
}

}  // namespace blockfunctor
