#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "blockfunctor/ddelta.hpp"
#include "blockfunctor/fusion.hpp"

namespace blockfunctor {

struct BlockInvariants {
  std::size_t k = 0;  // conjugacy classes
  std::size_t l = 0;  // p-regular classes
  std::size_t difference() const { return k - l; }
};

BlockInvariants invariants_kl(const PermGroup& group, unsigned p);

// l(G x H) == l(G) l(H).
bool l_multiplicativity_check(const PermGroup& g, const PermGroup& h, unsigned p);

// kG is a single block when O_p(G) contains its own centralizer.
bool is_single_block(const PermGroup& group, unsigned p);

// Key of a simple functor: (class id in the registry, row of its out_table).
using FunctorKey = std::pair<std::size_t, std::size_t>;

struct MultiplicityTable {
  std::string group_name;
  unsigned p = 2;
  BlockInvariants invariants;
  std::size_t defect_order = 1;
  PermGroup defect_group;
  bool single_block = false;
  std::size_t registry_serial = 0;
  // Every character of every class that occurs; missing keys read as zero.
  std::map<FunctorKey, std::size_t> rows;

  std::size_t at(const FunctorKey& key) const;
};

// Sum over the pairs (P,s) of each class of dim V^{image of N_G(P,s)}.
MultiplicityTable mult_table_pairs(const PermGroup& group, unsigned p, DDeltaRegistry& registry,
                                   std::string name = "G");

// Sum over triple orbits of dim V^{stabilizer}, for classes with L != 1.
// Classes are seeded from the p'-elements of each Aut_F(P).
MultiplicityTable mult_table_fusion(const FusionData& fusion, DDeltaRegistry& registry, std::string name = "G");

// Rows with L != 1 of the pair table.
std::map<FunctorKey, std::size_t> nontrivial_rows(const MultiplicityTable& table, const DDeltaRegistry& registry);

struct RowDifference {
  FunctorKey key;
  std::size_t left = 0;
  std::size_t right = 0;
};

struct EquivalenceVerdict {
  bool stable = false;
  bool functorial = false;
  bool defect_isomorphic = false;
  bool kl_difference_equal = false;
  std::vector<RowDifference> diff;
};

// Throws DomainError when the tables come from different registries, and
// TheoremViolation when two single-block tables are stably equivalent but
// k - l or the defect groups disagree.
EquivalenceVerdict compare(const MultiplicityTable& a, const MultiplicityTable& b, const DDeltaRegistry& registry);

}  // namespace blockfunctor
