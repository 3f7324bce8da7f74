#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "blockfunctor/perm_group.hpp"

namespace blockfunctor {

// Spanning tree of the Cayley graph of a group for a chosen generating list:
// every non-identity element b is parent[b] * gens[via[b]].
struct CayleyTree {
  std::vector<Index> gens;
  std::vector<Index> bfs;  // discovery order, starts with the identity
  std::vector<Index> parent;
  std::vector<std::size_t> via;

  static CayleyTree build(const PermGroup& group, std::vector<Index> gens);
  std::size_t size() const { return bfs.size(); }
};

// Extends generator images to a map on the subgroup spanned by `tree` and
// checks the homomorphism property on every edge. Returns the image table
// (indexed by source element index, entries for unreached elements are
// unspecified) or nullopt when the assignment is not a homomorphism.
std::optional<std::vector<Index>> extend_to_homomorphism(const PermGroup& source,
                                                         const CayleyTree& tree,
                                                         const PermGroup& target,
                                                         std::span<const Index> gen_images);

// A homomorphism between enumerated permutation groups, stored as a full
// element table.
class GroupHom {
 public:
  // Throws DomainError if the images do not define a homomorphism.
  static GroupHom from_generator_images(PermGroup source, PermGroup target,
                                        std::vector<Permutation> images);
  // Table-based constructor; `table[i]` is the target index of source element i.
  static GroupHom from_table(PermGroup source, PermGroup target, std::vector<Index> table);

  const PermGroup& source() const { return source_; }
  const PermGroup& target() const { return target_; }
  std::vector<Permutation> generator_images() const;

  Index apply(Index source_index) const { return (*table_)[source_index]; }
  Permutation operator()(const Permutation& g) const;
  const std::vector<Index>& table() const { return *table_; }

  bool is_injective() const;
  bool is_bijective() const;
  ElementSet kernel() const;
  ElementSet image() const;
  GroupHom inverse() const;  // requires a bijection

 private:
  GroupHom(PermGroup source, PermGroup target, std::vector<Index> table);

  PermGroup source_;
  PermGroup target_;
  std::shared_ptr<const std::vector<Index>> table_;
};

// Backtracking enumeration of injective homomorphisms source -> target that
// send gens[i] into candidates[i]. After each generator is assigned the
// partial map is verified on the subgroup generated so far. The visitor gets
// the full image table and returns false to stop the search.
void search_embeddings(const PermGroup& source, std::span<const Index> gens,
                       const PermGroup& target,
                       const std::vector<std::vector<Index>>& candidates,
                       const std::function<bool(const std::vector<Index>&)>& visitor);

// Permutation group whose element set is exactly `elements`. A permutation
// becomes a generator only when it is not yet a member; throws InternalError
// if the list is not closed.
PermGroup group_from_element_list(std::size_t degree, const std::vector<Permutation>& elements);

// Aut(G) as a permutation group on the |G| element labels of G: point i is
// G.element(i), and an automorphism f maps point i to the index of f(element i).
struct AutomorphismGroup {
  PermGroup base_group;
  std::vector<Index> base_generators;  // generating set the descriptions refer to
  PermGroup group;
  std::vector<Permutation> automorphisms;  // every automorphism, sorted

  // Generator-image description of an automorphism given as a label permutation.
  std::vector<Index> describe(const Permutation& automorphism) const;
};

// Full automorphism group via generator-image backtracking, pruned by element
// order and class size. Throws SizeBoundError above the desk-scale bound.
AutomorphismGroup automorphism_group(const PermGroup& group);

// Label permutation of the inner automorphism x -> g x g^-1.
Permutation inner_automorphism(const PermGroup& group, Index g);

// Label permutations of all inner automorphisms (duplicates removed, sorted).
std::vector<Permutation> inner_automorphisms(const PermGroup& group);

// Some isomorphism a -> b, or nullopt.
std::optional<GroupHom> find_isomorphism(const PermGroup& a, const PermGroup& b);

// A group P<s> with its distinguished normal p-subgroup P and p'-element s.
struct MarkedPair {
  PermGroup ambient;
  PermGroup p_subgroup;
  Permutation element;
  unsigned p = 2;
};

// Throws DomainError unless ambient = <P, s>, P is a normal p-subgroup and s
// is a p'-element.
void validate_marked_pair(const MarkedPair& pair);

// Isomorphism f: P<s> -> Q<t> with f(P) = Q and f(s) = t (so in particular
// f(s) is conjugate to t), or nullopt when the pairs are not isomorphic.
std::optional<GroupHom> find_pair_isomorphism(const MarkedPair& a, const MarkedPair& b);

}  // namespace blockfunctor
