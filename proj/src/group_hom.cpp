#include "blockfunctor/group_hom.hpp"

#include <algorithm>
#include <string>

#include "blockfunctor/errors.hpp"
#include "blockfunctor/group_algorithms.hpp"

namespace blockfunctor {

CayleyTree CayleyTree::build(const PermGroup& group, std::vector<Index> gens) {
  const std::size_t n = group.size();
  CayleyTree tree;
  tree.gens = std::move(gens);
  tree.parent.assign(n, 0);
  tree.via.assign(n, 0);
  std::vector<bool> reached(n, false);
  reached[0] = true;
  tree.bfs.push_back(PermGroup::identity_index());
  for (std::size_t i = 0; i < tree.bfs.size(); ++i)
    for (std::size_t k = 0; k < tree.gens.size(); ++k) {
      Index b = group.multiply(tree.bfs[i], tree.gens[k]);
      if (reached[b]) continue;
      reached[b] = true;
      tree.parent[b] = tree.bfs[i];
      tree.via[b] = k;
      tree.bfs.push_back(b);
    }
  return tree;
}

std::optional<std::vector<Index>> extend_to_homomorphism(const PermGroup& source,
                                                         const CayleyTree& tree,
                                                         const PermGroup& target,
                                                         std::span<const Index> gen_images) {
  std::vector<Index> f(source.size(), PermGroup::identity_index());
  for (std::size_t i = 1; i < tree.bfs.size(); ++i) {
    const Index b = tree.bfs[i];
    f[b] = target.multiply(f[tree.parent[b]], gen_images[tree.via[b]]);
  }
  for (Index a : tree.bfs)
    for (std::size_t k = 0; k < tree.gens.size(); ++k)
      if (f[source.multiply(a, tree.gens[k])] != target.multiply(f[a], gen_images[k]))
        return std::nullopt;
  return f;
}

GroupHom::GroupHom(PermGroup source, PermGroup target, std::vector<Index> table)
    : source_(std::move(source)),
      target_(std::move(target)),
      table_(std::make_shared<const std::vector<Index>>(std::move(table))) {}

GroupHom GroupHom::from_generator_images(PermGroup source, PermGroup target,
                                         std::vector<Permutation> images) {
  if (images.size() != source.generators().size())
    throw DomainError("expected " + std::to_string(source.generators().size()) +
                      " generator images, got " + std::to_string(images.size()));
  std::vector<Index> image_indices;
  for (const auto& g : images) image_indices.push_back(target.index_of(g));
  const auto tree = CayleyTree::build(source, source.generator_indices());
  auto table = extend_to_homomorphism(source, tree, target, image_indices);
  if (!table) throw DomainError("generator images do not define a homomorphism");
  return GroupHom(std::move(source), std::move(target), std::move(*table));
}

GroupHom GroupHom::from_table(PermGroup source, PermGroup target, std::vector<Index> table) {
  if (table.size() != source.size()) throw InternalError("homomorphism table has wrong size");
  for (Index a = 0; a < table.size(); ++a)
    for (Index g : source.generator_indices())
      if (table[source.multiply(a, g)] != target.multiply(table[a], table[g]))
        throw InternalError("table is not a homomorphism");
  return GroupHom(std::move(source), std::move(target), std::move(table));
}

std::vector<Permutation> GroupHom::generator_images() const {
  std::vector<Permutation> out;
  for (Index g : source_.generator_indices()) out.push_back(target_.element(apply(g)));
  return out;
}

Permutation GroupHom::operator()(const Permutation& g) const {
  return target_.element(apply(source_.index_of(g)));
}

bool GroupHom::is_injective() const { return kernel().size() == 1; }

bool GroupHom::is_bijective() const {
  return is_injective() && source_.size() == target_.size();
}

ElementSet GroupHom::kernel() const {
  ElementSet out;
  for (Index a = 0; a < table_->size(); ++a)
    if ((*table_)[a] == PermGroup::identity_index()) out.push_back(a);
  return out;
}

ElementSet GroupHom::image() const {
  ElementSet out(table_->begin(), table_->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GroupHom GroupHom::inverse() const {
  if (!is_bijective()) throw DomainError("homomorphism is not invertible");
  std::vector<Index> inv(table_->size());
  for (Index a = 0; a < table_->size(); ++a) inv[(*table_)[a]] = a;
  return GroupHom(target_, source_, std::move(inv));
}

void search_embeddings(const PermGroup& source, std::span<const Index> gens,
                       const PermGroup& target,
                       const std::vector<std::vector<Index>>& candidates,
                       const std::function<bool(const std::vector<Index>&)>& visitor) {
  if (candidates.size() != gens.size())
    throw InternalError("candidate lists do not match the generator list");
  std::vector<CayleyTree> prefix_trees;
  for (std::size_t j = 0; j < gens.size(); ++j)
    prefix_trees.push_back(
        CayleyTree::build(source, std::vector<Index>(gens.begin(), gens.begin() + j + 1)));
  if (!gens.empty() ? prefix_trees.back().size() != source.size() : source.size() != 1)
    throw InternalError("search generators do not generate the source group");

  if (gens.empty()) {
    visitor(std::vector<Index>{PermGroup::identity_index()});
    return;
  }

  std::vector<Index> images(gens.size(), 0);
  std::vector<bool> seen(target.size(), false);
  bool stop = false;

  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    for (Index candidate : candidates[depth]) {
      if (stop) return;
      images[depth] = candidate;
      const CayleyTree& tree = prefix_trees[depth];
      auto table = extend_to_homomorphism(source, tree, target,
                                          std::span<const Index>(images.data(), depth + 1));
      if (!table) continue;
      bool injective = true;
      std::fill(seen.begin(), seen.end(), false);
      for (Index a : tree.bfs) {
        if (seen[(*table)[a]]) {
          injective = false;
          break;
        }
        seen[(*table)[a]] = true;
      }
      if (!injective) continue;
      if (depth + 1 == gens.size()) {
        if (!visitor(*table)) stop = true;
      } else {
        descend(depth + 1);
      }
    }
  };
  descend(0);
}

namespace {

// Elements of `target` whose order and class size match those of x in `source`.
std::vector<Index> matching_elements(const PermGroup& source, Index x, const PermGroup& target) {
  const auto order = source.element_order(x);
  const auto class_size = source.class_sizes()[source.class_of()[x]];
  std::vector<Index> out;
  for (Index y = 0; y < target.size(); ++y)
    if (target.element_order(y) == order &&
        target.class_sizes()[target.class_of()[y]] == class_size)
      out.push_back(y);
  return out;
}

std::vector<Index> all_indices(const PermGroup& group) {
  std::vector<Index> out(group.size());
  for (Index i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

// Multiset of (element order, class size) over all elements.
std::vector<std::pair<std::size_t, std::size_t>> element_profile(const PermGroup& group) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (Index x = 0; x < group.size(); ++x)
    out.emplace_back(group.element_order(x), group.class_sizes()[group.class_of()[x]]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PermGroup group_from_element_list(std::size_t degree, const std::vector<Permutation>& elements) {
  std::vector<Permutation> sorted = elements;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Permutation& a, const Permutation& b) {
    return a.order() > b.order();
  });
  std::vector<Permutation> gens;
  PermGroup group = PermGroup::trivial(degree);
  for (const auto& g : sorted) {
    if (group.contains(g)) continue;
    gens.push_back(g);
    group = PermGroup::from_generators(degree, gens);
    if (group.order() == elements.size()) break;
  }
  if (group.order() != elements.size())
    throw InternalError("permutation list does not form a group");
  return group;
}

Permutation inner_automorphism(const PermGroup& group, Index g) {
  std::vector<Point> images(group.size());
  for (Index x = 0; x < images.size(); ++x) images[x] = group.conjugate(g, x);
  return Permutation::from_images(std::move(images));
}

std::vector<Permutation> inner_automorphisms(const PermGroup& group) {
  std::vector<Permutation> out;
  for (Index g = 0; g < group.size(); ++g) out.push_back(inner_automorphism(group, g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Index> AutomorphismGroup::describe(const Permutation& automorphism) const {
  std::vector<Index> out;
  for (Index g : base_generators) out.push_back(automorphism(g));
  return out;
}

AutomorphismGroup automorphism_group(const PermGroup& group) {
  const std::size_t n = group.size();
  AutomorphismGroup result;
  result.base_group = group;
  result.base_generators = greedy_generators(group, all_indices(group));

  std::vector<std::vector<Index>> candidates;
  for (Index g : result.base_generators) candidates.push_back(matching_elements(group, g, group));

  search_embeddings(group, result.base_generators, group, candidates,
                    [&](const std::vector<Index>& table) {
                      std::vector<Point> images(table.begin(), table.end());
                      result.automorphisms.push_back(Permutation::from_images(std::move(images)));
                      return true;
                    });
  std::sort(result.automorphisms.begin(), result.automorphisms.end());
  result.group = group_from_element_list(n, result.automorphisms);
  return result;
}

std::optional<GroupHom> find_isomorphism(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (element_profile(a) != element_profile(b)) return std::nullopt;
  const auto gens = greedy_generators(a, all_indices(a));
  std::vector<std::vector<Index>> candidates;
  for (Index g : gens) candidates.push_back(matching_elements(a, g, b));
  std::optional<std::vector<Index>> found;
  search_embeddings(a, gens, b, candidates, [&](const std::vector<Index>& table) {
    found = table;
    return false;
  });
  if (!found) return std::nullopt;
  return GroupHom::from_table(a, b, std::move(*found));
}

void validate_marked_pair(const MarkedPair& pair) {
  require_prime(pair.p);
  if (pair.p_subgroup.degree() != pair.ambient.degree())
    throw DomainError("marked pair: p-subgroup degree differs from the ambient degree");
  const ElementSet sub = indices_in(pair.ambient, pair.p_subgroup);
  if (p_part(sub.size(), pair.p) != sub.size())
    throw DomainError("marked pair: subgroup of order " + std::to_string(sub.size()) +
                      " is not a " + std::to_string(pair.p) + "-group");
  if (!is_normal(pair.ambient, sub))
    throw DomainError("marked pair: p-subgroup is not normal in the ambient group");
  const auto s = pair.ambient.find(pair.element);
  if (!s) throw DomainError("marked pair: marked element is not in the ambient group");
  if (pair.ambient.element_order(*s) % pair.p == 0)
    throw DomainError("marked pair: marked element " + pair.element.to_cycle_string() +
                      " is not a p'-element");
  std::vector<Index> gens(sub.begin(), sub.end());
  gens.push_back(*s);
  if (closure(pair.ambient, gens).size() != pair.ambient.size())
    throw DomainError("marked pair: ambient group is not generated by P and s");
}

std::optional<GroupHom> find_pair_isomorphism(const MarkedPair& a, const MarkedPair& b) {
  validate_marked_pair(a);
  validate_marked_pair(b);
  if (a.p != b.p || a.ambient.order() != b.ambient.order() ||
      a.p_subgroup.order() != b.p_subgroup.order() || a.element.order() != b.element.order())
    return std::nullopt;

  const ElementSet p_a = indices_in(a.ambient, a.p_subgroup);
  const ElementSet p_b = indices_in(b.ambient, b.p_subgroup);
  std::vector<Index> gens{a.ambient.index_of(a.element)};
  for (Index g : greedy_generators(a.ambient, p_a)) gens.push_back(g);

  std::vector<std::vector<Index>> candidates{{b.ambient.index_of(b.element)}};
  for (std::size_t i = 1; i < gens.size(); ++i) {
    std::vector<Index> options;
    for (Index y : p_b)
      if (b.ambient.element_order(y) == a.ambient.element_order(gens[i])) options.push_back(y);
    candidates.push_back(std::move(options));
  }

  std::optional<std::vector<Index>> found;
  search_embeddings(a.ambient, gens, b.ambient, candidates, [&](const std::vector<Index>& table) {
    found = table;
    return false;
  });
  if (!found) return std::nullopt;
  for (Index x : p_a)
    if (!std::binary_search(p_b.begin(), p_b.end(), (*found)[x]))
      throw InternalError("pair isomorphism does not map P onto Q");
  return GroupHom::from_table(a.ambient, b.ambient, std::move(*found));
}

}  // namespace blockfunctor
