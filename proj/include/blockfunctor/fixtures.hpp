#pragma once

#include <string>
#include <vector>

namespace blockfunctor {

// A group file compiled into the binary from fixtures/.
struct Fixture {
  std::string file;
  std::string text;
  // Whether the group is D x| E with D normal abelian Sylow and E free.
  bool frobenius = true;
};

// The fixture battery used by `selftest` and the acceptance suite, in a
// fixed order.
const std::vector<Fixture>& fixture_battery();

// Every compiled-in fixture file, by file name. Throws UsageError when the
// name is unknown.
const std::string& fixture_text(const std::string& file);

}  // namespace blockfunctor
