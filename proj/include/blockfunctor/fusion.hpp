#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blockfunctor/ddelta.hpp"

namespace blockfunctor {

// The fusion system of G = D x| E on D, for D a normal abelian Sylow
// p-subgroup and E a complement acting freely on D \ {1}.
struct FusionData {
  PermGroup group;
  unsigned p = 2;
  ElementSet kernel;      // D
  ElementSet complement;  // E
  std::vector<ElementSet> objects;  // subgroups of D up to G-conjugacy
  std::vector<ElementSet> normalizers;
  // Aut_F(P) per object: each restriction i_g|_P as the images of the sorted
  // elements of P, sorted and without repeats.
  std::vector<std::vector<std::vector<Index>>> aut_f;
};

// Throws DomainError, naming a witness, when D is not a normal abelian Sylow
// p-subgroup, E is not a complement, or E does not act freely.
FusionData build_fusion(const PermGroup& group, const ElementSet& kernel, const ElementSet& complement,
                        unsigned p);
// Same with D the Sylow p-subgroup and E found by a greedy complement search.
FusionData build_fusion(const PermGroup& group, unsigned p);

// An isomorphism pi: L -> P onto an object, with pi i_u pi^-1 in Aut_F(P).
struct FusionTriple {
  std::size_t object = 0;
  LMap pi;
};

struct TripleOrbit {
  FusionTriple representative;
  std::size_t size = 0;
  // Classes in Out(L,u) of the F in Aut(L,u) with pi o F in the N_G(P)-orbit of pi.
  ElementSet stabilizer;
};

// Orbits of N_G(P) x Aut(L,u) on the triples of the class, over all objects
// isomorphic to L. Empty when L = 1 or no object matches.
std::vector<TripleOrbit> triple_orbits(const FusionData& fusion, const DDeltaClass& cls);

// The pair (P, s) with s the smallest-index p'-element of N_G(P) such that
// i_s|_P = pi i_u pi^-1. Throws TheoremViolation when there is none.
PairPS psi(const FusionData& fusion, const DDeltaClass& cls, const FusionTriple& triple);

struct PsiReport {
  std::size_t class_id = 0;
  std::size_t triple_orbits = 0;
  std::size_t pair_orbits = 0;
  std::vector<std::size_t> stabilizer_orders;  // per matched orbit
};

// Checks that Psi is constant on triple orbits, induces a bijection onto the
// pair orbits classified into `cls`, and that each triple stabilizer equals
// the image of N_G(P,s) computed with the same pi as witness. Throws
// TheoremViolation naming the orbit on any failure.
PsiReport verify_bijection(const FusionData& fusion, const DDeltaClass& cls,
                           const PairClassification& pairs);

}  // namespace blockfunctor
