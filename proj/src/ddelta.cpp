#include "blockfunctor/ddelta.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

#include "blockfunctor/errors.hpp"
#include "blockfunctor/group_algorithms.hpp"

namespace blockfunctor {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::size_t position_in(const ElementSet& set, Index x) {
  auto it = std::lower_bound(set.begin(), set.end(), x);
  return it != set.end() && *it == x ? static_cast<std::size_t>(it - set.begin()) : npos;
}

DDeltaClass trivial_class() {
  DDeltaClass cls;
  cls.realization.ambient = PermGroup::trivial(1);
  cls.realization.l_elements = {0};
  cls.realization.u = 0;
  aut_out_of_class(cls);
  return cls;
}

}  // namespace

MarkedPair PairRealization::marked() const {
  return MarkedPair{ambient, subgroup_from_indices(ambient, l_elements), ambient.element(u), p};
}

PairOrbits enumerate_pair_orbits(const PermGroup& group, unsigned p) {
  require_prime(p);
  PairOrbits out;
  out.group = group;
  out.p = p;
  out.p_subgroups = p_subgroup_class_sets(group, p);
  for (std::size_t k = 0; k < out.p_subgroups.size(); ++k) {
    const ElementSet normalizer = normalizer_indices(group, out.p_subgroups[k]);
    const auto gens = greedy_generators(group, normalizer);
    std::vector<bool> seen(group.size(), false);
    std::vector<Index> reps;
    for (Index x : normalizer) {
      if (seen[x] || !is_p_regular(group.element_order(x), p)) continue;
      std::vector<Index> orbit{x};
      seen[x] = true;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (Index g : gens) {
          const Index y = group.conjugate(g, orbit[i]);
          if (!seen[y]) {
            seen[y] = true;
            orbit.push_back(y);
          }
        }
      reps.push_back(*std::min_element(orbit.begin(), orbit.end()));
    }
    std::sort(reps.begin(), reps.end(), [&](Index a, Index b) {
      const auto oa = group.element_order(a), ob = group.element_order(b);
      return oa != ob ? oa < ob : a < b;
    });
    for (Index s : reps) {
      out.pairs.push_back(PairPS{out.p_subgroups[k], s});
      out.subgroup_of_pair.push_back(k);
    }
  }
  return out;
}

FaithfulQuotient realize_pair(const PermGroup& group, const ElementSet& subgroup,
                              const std::vector<Index>& automorphism, unsigned p) {
  const std::size_t n = subgroup.size();
  if (automorphism.size() != n) throw InternalError("automorphism does not match the subgroup");
  auto point = [&](Index x) {
    const auto pos = position_in(subgroup, x);
    if (pos == npos) throw InternalError("element outside the p-subgroup");
    return static_cast<Point>(pos);
  };
  auto regular = [&](Index x) {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = point(group.multiply(subgroup[i], x));
    return Permutation::from_images(std::move(images));
  };
  std::vector<Point> a_images(n);
  for (std::size_t i = 0; i < n; ++i) a_images[i] = point(automorphism[i]);
  const Permutation alpha = Permutation::from_images(std::move(a_images)).inverse();

  std::vector<Permutation> gens;
  std::vector<Permutation> l_gens;
  for (Index x : greedy_generators(group, subgroup)) l_gens.push_back(regular(x));
  gens = l_gens;
  if (!alpha.is_identity()) gens.push_back(alpha);

  FaithfulQuotient out;
  PairRealization& r = out.realization;
  r.ambient = PermGroup::from_generators(n, std::move(gens));
  r.p = p;
  r.u = r.ambient.index_of(alpha);
  std::vector<std::pair<Index, Index>> matched;
  for (Index x : subgroup) matched.emplace_back(r.ambient.index_of(regular(x)), x);
  std::sort(matched.begin(), matched.end());
  for (const auto& [ri, gi] : matched) {
    r.l_elements.push_back(ri);
    out.identification.push_back(gi);
  }

  for (std::size_t j = 1; j < r.u_order(); ++j) {
    const Permutation uj = alpha.pow(static_cast<long long>(j));
    const bool central = std::all_of(l_gens.begin(), l_gens.end(),
                                     [&](const Permutation& l) { return uj * l == l * uj; });
    if (central)
      throw InternalError("realization is not faithful: u^" + std::to_string(j) + " centralizes L");
  }
  return out;
}

FaithfulQuotient faithful_quotient(const PermGroup& group, const PairPS& pair, unsigned p) {
  std::vector<Index> automorphism;
  for (Index x : pair.subgroup) automorphism.push_back(group.conjugate(pair.element, x));
  return realize_pair(group, pair.subgroup, automorphism, p);
}

void aut_out_of_class(DDeltaClass& cls) {
  const PairRealization& r = cls.realization;
  const PermGroup& R = r.ambient;
  const std::size_t n = R.size();

  cls.l_position.assign(n, npos);
  for (std::size_t i = 0; i < r.l_elements.size(); ++i) cls.l_position[r.l_elements[i]] = i;
  cls.decomposition.assign(n, {npos, 0});
  Index uj = PermGroup::identity_index();
  for (std::size_t j = 0; j < r.u_order(); ++j) {
    for (std::size_t i = 0; i < r.l_elements.size(); ++i)
      cls.decomposition[R.multiply(r.l_elements[i], uj)] = {i, j};
    uj = R.multiply(uj, r.u);
  }
  for (const auto& d : cls.decomposition)
    if (d.first == npos) throw InternalError("realization is not L x| <u>");

  const auto aut = automorphism_group(R);
  const auto& class_of = R.class_of();
  std::vector<Permutation> pair_auts;
  for (const auto& f : aut.automorphisms) {
    if (class_of[f(r.u)] != class_of[r.u]) continue;
    for (Index l : r.l_elements)
      if (cls.l_position[f(l)] == npos)
        throw InternalError("automorphism of the pair does not preserve L");
    pair_auts.push_back(f);
  }
  cls.aut_pair = group_from_element_list(n, pair_auts);

  ElementSet inner;
  for (const auto& f : inner_automorphisms(R)) {
    const auto idx = cls.aut_pair.find(f);
    if (!idx) throw InternalError("inner automorphism outside Aut(L,u)");
    inner.push_back(*idx);
  }
  std::sort(inner.begin(), inner.end());
  auto quotient = quotient_group(cls.aut_pair, inner);
  cls.out_pair = quotient.group;
  cls.aut_to_out = quotient.projection.table();
  cls.out_table = character_table(cls.out_pair);
}

DDeltaRegistry::DDeltaRegistry() {
  classes_.push_back(std::make_unique<DDeltaClass>(trivial_class()));
  identity_ = 0;
  static std::atomic<std::size_t> next_serial{0};
  serial_ = next_serial++;
}

DDeltaRegistry::Assignment DDeltaRegistry::classify(const PermGroup& group, const PairPS& pair,
                                                    const FaithfulQuotient& fq) {
  const PairRealization& incoming = fq.realization;
  Assignment out;
  bool found = false;
  for (const auto& cls : classes_) {
    const PairRealization& c = cls->realization;
    if (c.l_order() != incoming.l_order() || c.ambient.order() != incoming.ambient.order() ||
        c.u_order() != incoming.u_order())
      continue;
    if (c.l_order() > 1 && c.p != incoming.p) continue;
    if (c.l_order() == 1) {
      out = {cls->id, LMap{fq.identification}};
      found = true;
      break;
    }
    const auto f = find_pair_isomorphism(c.marked(), incoming.marked());
    if (!f) continue;
    out.class_id = cls->id;
    for (Index l : c.l_elements) {
      const auto pos = position_in(incoming.l_elements, f->apply(l));
      if (pos == npos) throw InternalError("pair isomorphism does not map L onto L");
      out.witness.push_back(fq.identification[pos]);
    }
    found = true;
    break;
  }
  if (!found) {
    auto cls = std::make_unique<DDeltaClass>();
    cls->id = classes_.size();
    cls->realization = incoming;
    aut_out_of_class(*cls);
    out = {cls->id, LMap{fq.identification}};
    classes_.push_back(std::move(cls));
  }

  const DDeltaClass& cls = *classes_[out.class_id];
  const PairRealization& c = cls.realization;
  const std::size_t n = c.l_elements.size();
  std::vector<Index> image = out.witness;
  std::sort(image.begin(), image.end());
  if (image != pair.subgroup) throw InternalError("witness is not a bijection onto P");
  for (std::size_t i = 0; i < n; ++i) {
    const Index lhs = out.witness[cls.l_position[c.ambient.conjugate(c.u, c.l_elements[i])]];
    if (lhs != group.conjugate(pair.element, out.witness[i]))
      throw InternalError("witness fails the intertwining relation");
    for (std::size_t j = 0; j < n; ++j)
      if (out.witness[cls.l_position[c.ambient.multiply(c.l_elements[i], c.l_elements[j])]] !=
          group.multiply(out.witness[i], out.witness[j]))
        throw InternalError("witness is not a homomorphism");
  }
  return out;
}

PairClassification classify_into_registry(const PairOrbits& orbits, DDeltaRegistry& registry) {
  PairClassification out{orbits, {}};
  for (const auto& pair : orbits.pairs)
    out.assignments.push_back(
        registry.classify(orbits.group, pair, faithful_quotient(orbits.group, pair, orbits.p)));
  return out;
}

ElementSet n_image_in_out(const DDeltaClass& cls, const PermGroup& group, const PairPS& pair,
                          const LMap& witness) {
  const PairRealization& r = cls.realization;
  const PermGroup& R = r.ambient;
  const std::size_t n = r.l_elements.size();
  if (witness.size() != n) throw InternalError("witness does not match the class");
  std::vector<std::size_t> inverse(group.size(), npos);
  for (std::size_t i = 0; i < n; ++i) inverse[witness[i]] = i;

  std::vector<Index> u_powers{PermGroup::identity_index()};
  for (std::size_t j = 1; j < r.u_order(); ++j) u_powers.push_back(R.multiply(u_powers.back(), r.u));

  const ElementSet normalizer = normalizer_indices(group, pair.subgroup);
  const ElementSet centralizer = centralizer_indices(group, pair.element);
  ElementSet stabilizer;
  std::set_intersection(normalizer.begin(), normalizer.end(), centralizer.begin(), centralizer.end(),
                        std::back_inserter(stabilizer));

  ElementSet image;
  for (Index g : stabilizer) {
    std::vector<Point> f(R.size());
    for (Index x = 0; x < R.size(); ++x) {
      const auto [pos, j] = cls.decomposition[x];
      const auto target = inverse[group.conjugate(g, witness[pos])];
      if (target == npos) throw InternalError("N_G(P,s) element does not normalize P");
      f[x] = R.multiply(r.l_elements[target], u_powers[j]);
    }
    for (Index x = 0; x < R.size(); ++x)
      for (Index k : R.generator_indices())
        if (f[R.multiply(x, k)] != R.multiply(f[x], f[k]))
          throw InternalError("intertwining violation: induced map is not an automorphism");
    const auto idx = cls.aut_pair.find(Permutation::from_images(std::move(f)));
    if (!idx) throw InternalError("induced automorphism is not in Aut(L,u)");
    image.push_back(cls.aut_to_out[*idx]);
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  if (closure(cls.out_pair, image) != image) throw InternalError("image of N_G(P,s) is not a subgroup");
  return image;
}

}  // namespace blockfunctor
