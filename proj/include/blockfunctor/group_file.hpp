#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockfunctor/perm_group.hpp"

namespace blockfunctor {

// Contents of a group-description file. Exactly one of the generator form
// (degree + gen lines) and the frobenius block is present.
struct GroupSpec {
  struct Frobenius {
    unsigned long long p = 0;
    std::size_t rank = 0;
    std::vector<unsigned long long> matrix;  // row-major
    bool operator==(const Frobenius&) const = default;
  };

  std::string name;  // may be empty
  std::size_t degree = 0;
  unsigned long long prime = 0;
  std::vector<std::string> generators;  // cycle notation, 1-based
  std::optional<Frobenius> frobenius;

  bool operator==(const GroupSpec&) const = default;
};

// Line-oriented grammar:
//   # comment
//   name <token> | degree <int> | prime <int> | gen <cycles>
//   frobenius, then p <int> | rank <int> | matrix <rank*rank ints>
// `gen` may repeat; every other key may appear once. `prime` defaults to p
// in the frobenius form. Throws ParseError with line and column.
GroupSpec parse_group_file(std::string_view text);

// Canonical text; parse_group_file(emit_group_file(s)) == s.
std::string emit_group_file(const GroupSpec& spec);

struct BuiltGroup {
  std::string name;
  PermGroup group;
  unsigned p = 2;
  // Set for the frobenius form.
  std::optional<ElementSet> kernel;
  std::optional<ElementSet> complement;
};

// Throws DomainError when the described group is invalid (non-free action,
// composite prime, ...).
BuiltGroup build_group(const GroupSpec& spec);

}  // namespace blockfunctor
