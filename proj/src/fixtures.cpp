#include "blockfunctor/fixtures.hpp"

#include <map>

#include "blockfunctor/errors.hpp"

namespace blockfunctor {

namespace {

const std::map<std::string, std::string>& files() {
  static const std::map<std::string, std::string> table = {
#include "builtin_fixtures.inc"
  };
  return table;
}

}  // namespace

const std::string& fixture_text(const std::string& file) {
  const auto it = files().find(file);
  if (it == files().end()) throw UsageError("unknown fixture '" + file + "'");
  return it->second;
}

const std::vector<Fixture>& fixture_battery() {
  static const std::vector<Fixture> battery = [] {
    std::vector<Fixture> out;
    for (const char* name : {"s3.grp", "a4.grp", "c5c4.grp", "c7c3.grp", "c3sq_c8.grp", "c2cube_c7.grp", "c3.grp"})
      out.push_back({name, fixture_text(name), true});
    out.push_back({"s4.grp", fixture_text("s4.grp"), false});
    return out;
  }();
  return battery;
}

}  // namespace blockfunctor
