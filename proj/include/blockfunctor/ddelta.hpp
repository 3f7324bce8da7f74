#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "blockfunctor/chartab.hpp"
#include "blockfunctor/group_hom.hpp"
#include "blockfunctor/perm_group.hpp"

namespace blockfunctor {

// A p-subgroup P of the ambient group and a p'-element s normalizing it, both
// as element indices of the ambient group.
struct PairPS {
  ElementSet subgroup;
  Index element = 0;
};

// Representatives of the G-orbits on pairs. Pairs are grouped by p-subgroup
// class (same order as p_subgroup_class_sets) and, within a class, ordered
// by the order of s and then by element index.
struct PairOrbits {
  PermGroup group;
  unsigned p = 2;
  std::vector<ElementSet> p_subgroups;
  std::vector<PairPS> pairs;
  std::vector<std::size_t> subgroup_of_pair;  // index into p_subgroups
};

PairOrbits enumerate_pair_orbits(const PermGroup& group, unsigned p);

// L<u> acting faithfully on the elements of a p-group Q (point i is the i-th
// smallest element of Q): L is the right regular action of Q and u acts as
// the inverse of a given automorphism, so that u rho(x) u^-1 = rho(a(x)).
struct PairRealization {
  PermGroup ambient;
  ElementSet l_elements;  // indices in ambient
  Index u = 0;
  unsigned p = 2;

  std::size_t l_order() const { return l_elements.size(); }
  std::size_t u_order() const { return ambient.element_order(u); }
  MarkedPair marked() const;
};

// A realization together with the identification of its L with a p-subgroup
// P of some ambient G: identification[i] is the G-index of the element of P
// matching l_elements[i]. The identification intertwines u with s.
struct FaithfulQuotient {
  PairRealization realization;
  std::vector<Index> identification;
};

// (P, s) -> (P, image of s in <s>/C_<s>(P)), realized as P x| <i_s|_P>.
FaithfulQuotient faithful_quotient(const PermGroup& group, const PairPS& pair, unsigned p);

// Realization of (P, a) for an automorphism a of P given by images of the
// sorted elements of P (as G-indices). Throws InternalError unless the
// result satisfies C_<u>(L) = 1.
FaithfulQuotient realize_pair(const PermGroup& group, const ElementSet& subgroup,
                              const std::vector<Index>& automorphism, unsigned p);

// Map L -> P of some ambient group, by position in l_elements.
using LMap = std::vector<Index>;

struct DDeltaClass {
  std::size_t id = 0;
  PairRealization realization;
  PermGroup aut_pair;              // label permutations of realization.ambient
  PermGroup out_pair;
  std::vector<Index> aut_to_out;   // by aut_pair element index
  CharacterTable out_table;
  std::vector<std::size_t> l_position;  // ambient index -> position in l_elements, or npos
  std::vector<std::pair<std::size_t, std::size_t>> decomposition;  // r = l * u^j as (position, j)
};

// Aut(L,u), Out(L,u) and its character table for a realization.
void aut_out_of_class(DDeltaClass& cls);

// Registry of D^Delta-pair classes, shared by every group of a computation.
// Classes are created on first sight; the first realization seen becomes
// canonical. Class addresses are stable.
class DDeltaRegistry {
 public:
  DDeltaRegistry();

  struct Assignment {
    std::size_t class_id = 0;
    LMap witness;  // phi: L -> P with phi(u l u^-1) = s phi(l) s^-1
  };

  // Classifies the pair (P, s) of `group`; `fq` is its faithful quotient.
  // Throws InternalError if the witness fails the intertwining check.
  Assignment classify(const PermGroup& group, const PairPS& pair, const FaithfulQuotient& fq);

  const DDeltaClass& at(std::size_t id) const { return *classes_.at(id); }
  std::size_t size() const { return classes_.size(); }
  std::size_t identity() const { return identity_; }
  // Distinct for every registry created in the process.
  std::size_t serial() const { return serial_; }

 private:
  std::vector<std::unique_ptr<DDeltaClass>> classes_;
  std::size_t identity_;
  std::size_t serial_;
};

// One class assignment per pair of a PairOrbits, in pair order.
struct PairClassification {
  PairOrbits orbits;
  std::vector<DDeltaRegistry::Assignment> assignments;
};

PairClassification classify_into_registry(const PairOrbits& orbits, DDeltaRegistry& registry);

// Image of N_G(P,s) = N_G(P) n C_G(s) in Out(L,u), as element indices of
// cls.out_pair. Each g acts as phi^-1 i_g phi on L and fixes u.
ElementSet n_image_in_out(const DDeltaClass& cls, const PermGroup& group, const PairPS& pair,
                          const LMap& witness);

}  // namespace blockfunctor
