#pragma once

#include <cstddef>
#include <vector>

#include "blockfunctor/perm_group.hpp"

namespace blockfunctor {

// Square matrix over F_p, row-major.
struct MatrixModP {
  unsigned long long p = 2;
  std::size_t rank = 1;
  std::vector<unsigned long long> entries;

  unsigned long long at(std::size_t row, std::size_t col) const { return entries[row * rank + col]; }
};

// (C_p)^rank x| <M> acting affinely on the p^rank vectors of F_p^rank. The
// vector v = (v_0, ..., v_{rank-1}) is point 1 + sum v_i p^i.
struct FrobeniusGroup {
  PermGroup group;
  PermGroup kernel;      // translations, the normal Sylow p-subgroup D
  PermGroup complement;  // <v -> M v>, the p'-complement E
  std::size_t complement_order = 1;
};

// Throws DomainError if p is not prime, M is singular, p divides the order
// of M, or some power M^j != 1 fixes a nonzero vector (the failing power and
// vector are named in the message).
FrobeniusGroup frobenius_group(const MatrixModP& matrix);

}  // namespace blockfunctor
