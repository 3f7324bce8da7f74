#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "blockfunctor/permutation.hpp"

namespace blockfunctor {

using Order = boost::multiprecision::cpp_int;

// Position of an element in PermGroup::elements().
using Index = std::uint32_t;

// Largest group order that the exhaustive algorithms accept. Reads
// BLOCKFUNCTOR_MAX_ORDER on every call, default 512.
std::size_t desk_scale_bound();

// A permutation group given by generators, with a base and strong generating
// set built by deterministic Schreier-Sims. Immutable; copies share the lazily
// built element enumeration, multiplication table and class data.
class PermGroup {
 public:
  PermGroup();

  // Throws DomainError on degree 0 or a generator of the wrong degree.
  static PermGroup from_generators(std::size_t degree, std::vector<Permutation> gens);
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const;
  const std::vector<Permutation>& generators() const;
  const std::vector<Point>& base() const;
  const std::vector<Permutation>& strong_generators() const;
  // Length of the fundamental orbit at each base level.
  std::vector<std::size_t> orbit_lengths() const;
  const Order& order() const;
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return order() == 1; }

  // Order as a machine integer. Throws SizeBoundError above desk_scale_bound().
  std::size_t size() const;

  // ---- Exhaustive element-level access (all throw SizeBoundError when the
  // order exceeds the desk-scale bound). Elements are sorted by image list,
  // so index 0 is the identity.
  const std::vector<Permutation>& elements() const;
  const Permutation& element(Index i) const { return elements()[i]; }
  std::optional<Index> find(const Permutation& g) const;
  // Throws DomainError if g is not an element.
  Index index_of(const Permutation& g) const;
  static constexpr Index identity_index() { return 0; }

  Index multiply(Index a, Index b) const;
  Index inverse(Index a) const;
  // ^g x = g x g^-1
  Index conjugate(Index g, Index x) const;
  std::size_t element_order(Index a) const;
  Index power(Index a, long long e) const;
  const std::vector<Index>& generator_indices() const;

  // Conjugacy class id of each element; classes are numbered by their
  // smallest element index, so class 0 is the identity class.
  const std::vector<std::size_t>& class_of() const;
  // Smallest element index of each class.
  const std::vector<Index>& class_representatives() const;
  const std::vector<std::size_t>& class_sizes() const;

 private:
  struct Core;
  struct Cache;
  std::shared_ptr<const Core> core_;
  std::shared_ptr<Cache> cache_;

  PermGroup(std::shared_ptr<const Core> core, std::shared_ptr<Cache> cache)
      : core_(std::move(core)), cache_(std::move(cache)) {}

  const Cache& enumerated() const;
  const Cache& tabulated() const;
  const Cache& classified() const;
};

// ---- Subgroups of an enumerated parent, as sorted element-index sets.

using ElementSet = std::vector<Index>;

// Element indices of `sub` inside `parent`. Throws DomainError when `sub` is
// not contained in `parent`.
ElementSet indices_in(const PermGroup& parent, const PermGroup& sub);

// Subgroup of `parent` generated by the given elements, as an index set.
ElementSet closure(const PermGroup& parent, std::span<const Index> gens);

// Builds a PermGroup for a subgroup given by its full element set. Generators
// are chosen greedily (largest element order first) until they generate the
// whole set; throws InternalError if the set is not a subgroup.
PermGroup subgroup_from_indices(const PermGroup& parent, std::span<const Index> elements);

// Greedy small generating set of a subgroup given by its element set:
// elements of larger order are tried first, each kept only when it enlarges
// the generated subgroup.
std::vector<Index> greedy_generators(const PermGroup& parent, std::span<const Index> elements);

}  // namespace blockfunctor
