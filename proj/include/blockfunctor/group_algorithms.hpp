#pragma once

#include <cstddef>
#include <vector>

#include "blockfunctor/group_hom.hpp"
#include "blockfunctor/perm_group.hpp"

namespace blockfunctor {

bool is_prime(unsigned long long n);

// Throws DomainError unless p is prime.
void require_prime(unsigned long long p);

// Largest power of p dividing n.
unsigned long long p_part(unsigned long long n, unsigned long long p);

struct ConjugacyClass {
  Permutation representative;
  std::size_t size = 0;
};

// Classes ordered by smallest element; the representative is that smallest
// element, so the identity class comes first.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& group);

// N_G(P). Throws DomainError when P is not a subgroup of G.
PermGroup normalizer(const PermGroup& group, const PermGroup& sub);
ElementSet normalizer_indices(const PermGroup& group, const ElementSet& sub);

// C_G(s). Throws DomainError when s is not in G.
PermGroup centralizer_element(const PermGroup& group, const Permutation& s);
ElementSet centralizer_indices(const PermGroup& group, Index s);

bool is_normal(const PermGroup& group, const ElementSet& sub);

// Commuting factorisation g = g_p * g_p' with order(g_p) a power of p and
// order(g_p') prime to p.
struct PPartDecomposition {
  Permutation p_part;
  Permutation p_prime_part;
};
PPartDecomposition p_part_decomposition(const Permutation& g, unsigned long long p);

bool is_p_element(std::size_t element_order, unsigned long long p);
bool is_p_regular(std::size_t element_order, unsigned long long p);

// One representative per G-conjugacy class of p-subgroups, including the
// trivial subgroup, ordered by (order, sorted element list). Each
// representative is the conjugate with the lexicographically smallest
// element list. Built by layered extension inside normalizers.
std::vector<ElementSet> p_subgroup_class_sets(const PermGroup& group, unsigned long long p);
std::vector<PermGroup> p_subgroup_classes(const PermGroup& group, unsigned long long p);

// Lexicographically smallest sorted element list among the conjugates of `sub`.
ElementSet canonical_conjugate(const PermGroup& group, const ElementSet& sub);

// A Sylow p-subgroup (largest class returned by p_subgroup_class_sets).
ElementSet sylow_subgroup(const PermGroup& group, unsigned long long p);

struct Quotient {
  PermGroup group;
  GroupHom projection;
};

// G/N realised as the action of G on the right cosets of N. Throws
// DomainError when N is not normal in G.
Quotient quotient_group(const PermGroup& group, const PermGroup& normal_sub);
Quotient quotient_group(const PermGroup& group, const ElementSet& normal_sub);

// G x H acting on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

// Largest normal p-subgroup O_p(G).
ElementSet largest_normal_p_subgroup(const PermGroup& group, unsigned long long p);

}  // namespace blockfunctor
