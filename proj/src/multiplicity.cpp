#include "blockfunctor/multiplicity.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "blockfunctor/errors.hpp"
#include "blockfunctor/group_algorithms.hpp"

namespace blockfunctor {

namespace {

void fill_group_data(MultiplicityTable& table, const PermGroup& group, unsigned p, const DDeltaRegistry& registry,
                     std::string name) {
  table.group_name = std::move(name);
  table.p = p;
  table.invariants = invariants_kl(group, p);
  const auto sylow = sylow_subgroup(group, p);
  table.defect_order = sylow.size();
  table.defect_group = subgroup_from_indices(group, sylow);
  table.single_block = is_single_block(group, p);
  table.registry_serial = registry.serial();
}

void add_class_rows(MultiplicityTable& table, const DDeltaClass& cls) {
  for (std::size_t chi = 0; chi < cls.out_table.size(); ++chi) table.rows.try_emplace({cls.id, chi}, 0);
}

void add_fixed_dims(MultiplicityTable& table, const DDeltaClass& cls, const ElementSet& sub) {
  for (std::size_t chi = 0; chi < cls.out_table.size(); ++chi)
    table.rows[{cls.id, chi}] += fixed_point_dim(cls.out_table, chi, sub);
}

}  // namespace

BlockInvariants invariants_kl(const PermGroup& group, unsigned p) {
  require_prime(p);
  BlockInvariants out;
  for (Index rep : group.class_representatives()) {
    ++out.k;
    if (is_p_regular(group.element_order(rep), p)) ++out.l;
  }
  return out;
}

bool l_multiplicativity_check(const PermGroup& g, const PermGroup& h, unsigned p) {
  return invariants_kl(direct_product(g, h), p).l == invariants_kl(g, p).l * invariants_kl(h, p).l;
}

bool is_single_block(const PermGroup& group, unsigned p) {
  require_prime(p);
  const ElementSet core = largest_normal_p_subgroup(group, p);
  for (Index x = 0; x < group.size(); ++x) {
    if (std::binary_search(core.begin(), core.end(), x)) continue;
    const bool centralizes = std::all_of(core.begin(), core.end(), [&](Index c) {
      return group.multiply(x, c) == group.multiply(c, x);
    });
    if (centralizes) return false;
  }
  return true;
}

std::size_t MultiplicityTable::at(const FunctorKey& key) const {
  const auto it = rows.find(key);
  return it == rows.end() ? 0 : it->second;
}

MultiplicityTable mult_table_pairs(const PermGroup& group, unsigned p, DDeltaRegistry& registry, std::string name) {
  MultiplicityTable table;
  fill_group_data(table, group, p, registry, std::move(name));
  const auto pairs = classify_into_registry(enumerate_pair_orbits(group, p), registry);
  for (std::size_t i = 0; i < pairs.orbits.pairs.size(); ++i) {
    const auto& assignment = pairs.assignments[i];
    const auto& cls = registry.at(assignment.class_id);
    add_class_rows(table, cls);
    add_fixed_dims(table, cls, n_image_in_out(cls, group, pairs.orbits.pairs[i], assignment.witness));
  }
  const auto identity_row = table.at({registry.identity(), 0});
  if (identity_row != table.invariants.l)
    throw TheoremViolation("multiplicity of the (1,1) functor is " + std::to_string(identity_row) +
                           ", expected l = " + std::to_string(table.invariants.l));
  return table;
}

MultiplicityTable mult_table_fusion(const FusionData& fusion, DDeltaRegistry& registry, std::string name) {
  MultiplicityTable table;
  fill_group_data(table, fusion.group, fusion.p, registry, std::move(name));
  const PermGroup& g = fusion.group;

  std::set<std::size_t> class_ids;
  for (std::size_t k = 0; k < fusion.objects.size(); ++k) {
    const auto& object = fusion.objects[k];
    if (object.size() == 1) continue;
    for (const auto& a : fusion.aut_f[k]) {
      std::optional<Index> inducing;
      for (Index s : fusion.normalizers[k]) {
        if (!is_p_regular(g.element_order(s), fusion.p)) continue;
        std::vector<Index> r;
        for (Index x : object) r.push_back(g.conjugate(s, x));
        if (r == a) {
          inducing = s;
          break;
        }
      }
      if (!inducing)
        throw TheoremViolation("an element of Aut_F(P) with |P| = " + std::to_string(object.size()) +
                               " has no p'-element inducing it");
      const PairPS pair{object, *inducing};
      class_ids.insert(registry.classify(g, pair, realize_pair(g, object, a, fusion.p)).class_id);
    }
  }
  for (auto id : class_ids) {
    const auto& cls = registry.at(id);
    add_class_rows(table, cls);
    for (const auto& orbit : triple_orbits(fusion, cls)) add_fixed_dims(table, cls, orbit.stabilizer);
  }
  return table;
}

std::map<FunctorKey, std::size_t> nontrivial_rows(const MultiplicityTable& table, const DDeltaRegistry& registry) {
  std::map<FunctorKey, std::size_t> out;
  for (const auto& [key, value] : table.rows)
    if (registry.at(key.first).realization.l_order() > 1) out.emplace(key, value);
  return out;
}

EquivalenceVerdict compare(const MultiplicityTable& a, const MultiplicityTable& b, const DDeltaRegistry& registry) {
  if (a.registry_serial != registry.serial() || b.registry_serial != registry.serial())
    throw DomainError("multiplicity tables were built against different registries");
  if (a.p != b.p) throw DomainError("tables are for different primes");
  EquivalenceVerdict verdict;
  const auto left = nontrivial_rows(a, registry);
  const auto right = nontrivial_rows(b, registry);
  std::set<FunctorKey> keys;
  for (const auto& [key, v] : left) keys.insert(key);
  for (const auto& [key, v] : right) keys.insert(key);
  for (const auto& key : keys) {
    const auto x = a.at(key), y = b.at(key);
    if (x != y) verdict.diff.push_back({key, x, y});
  }
  verdict.stable = verdict.diff.empty();
  verdict.functorial = verdict.stable && a.invariants.l == b.invariants.l;
  verdict.kl_difference_equal = a.invariants.difference() == b.invariants.difference();
  verdict.defect_isomorphic = find_isomorphism(a.defect_group, b.defect_group).has_value();
  if (verdict.stable && a.single_block && b.single_block) {
    if (!verdict.kl_difference_equal)
      throw TheoremViolation("stably equivalent blocks " + a.group_name + " and " + b.group_name +
                             " have different k - l");
    if (!verdict.defect_isomorphic)
      throw TheoremViolation("stably equivalent blocks " + a.group_name + " and " + b.group_name +
                             " have non-isomorphic defect groups");
  }
  return verdict;
}

}  // namespace blockfunctor
