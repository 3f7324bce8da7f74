#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "blockfunctor/perm_group.hpp"

namespace blockfunctor {

// Residue arithmetic modulo a prime below 2^32.
namespace modp {
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t q);
std::uint64_t inv(std::uint64_t a, std::uint64_t q);
}  // namespace modp

// Irreducible characters of a group with values stored as residues modulo a
// prime q with q = 1 mod exponent(G) and q > 2|G|. Columns follow the class
// order of PermGroup (identity class first). Rows are sorted by degree, then
// by the value columns, so row 0 is the trivial character.
struct CharacterTable {
  PermGroup group;
  std::vector<Index> class_representatives;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> inverse_class;  // class of g^-1 for each class
  std::uint64_t modulus = 0;
  std::vector<std::size_t> degrees;
  std::vector<std::vector<std::uint64_t>> values;

  std::size_t size() const { return degrees.size(); }
  std::uint64_t value(std::size_t chi, Index element) const;
};

// Smallest prime q = 1 mod exponent with q > 2 * order. Throws DomainError
// when none exists below `cap`.
std::uint64_t character_modulus(std::size_t exponent, std::size_t order, std::uint64_t cap);

inline constexpr std::uint64_t kDefaultPrimeCap = 1'000'000'007ull;

// Dixon-Schneider: simultaneous eigenvectors of the class multiplication
// matrices over F_q, split class by class until every common eigenspace is a
// line. Throws SizeBoundError above the desk-scale bound.
CharacterTable character_table(const PermGroup& group, std::uint64_t prime_cap = kDefaultPrimeCap);

// dim V^H = <Res_H chi, 1>, for H given by element indices of table.group.
// Throws InternalError if the residue does not lift into [0, degree(chi)].
std::size_t fixed_point_dim(const CharacterTable& table, std::size_t chi, const ElementSet& sub);
// Same, with H as a PermGroup. Throws DomainError when H is not a subgroup.
std::size_t fixed_point_dim(const CharacterTable& table, std::size_t chi, const PermGroup& sub);

// (1/|G|) sum_g chi_i(g) chi_j(g^-1) = delta_ij, modulo q.
bool rows_orthogonal(const CharacterTable& table);
// sum_chi chi(g_k) chi(g_l^-1) = delta_kl |C_G(g_k)|, modulo q.
bool columns_orthogonal(const CharacterTable& table);

}  // namespace blockfunctor
