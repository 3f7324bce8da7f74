// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "blockfunctor/chartab.hpp"
#include "blockfunctor/cli.hpp"
#include "blockfunctor/errors.hpp"
#include "blockfunctor/fixtures.hpp"
#include "blockfunctor/fusion.hpp"
#include "blockfunctor/group_algorithms.hpp"
#include "blockfunctor/group_file.hpp"
#include "blockfunctor/multiplicity.hpp"
#include "oracle.hpp"

using namespace blockfunctor;

namespace {

struct Case {
  std::string file;
  BuiltGroup built;
  bool frobenius;
};

std::vector<Case> battery() {
  std::vector<Case> out;
  for (const auto& f : fixture_battery()) out.push_back({f.file, build_group(parse_group_file(f.text)), f.frobenius});
  return out;
}

BuiltGroup load_fixture(const std::string& file) { return build_group(parse_group_file(fixture_text(file))); }

FusionData fusion_of(const BuiltGroup& g) {
  if (g.kernel && g.complement) return build_fusion(g.group, *g.kernel, *g.complement, g.p);
  return build_fusion(g.group, g.p);
}

oracle::PermSet brute_elements(const PermGroup& g) { return oracle::closure(g.generators(), g.degree()); }

using ShapeKey = std::tuple<std::size_t, std::size_t, std::size_t>;

std::map<ShapeKey, long> by_shape(const MultiplicityTable& table, const DDeltaRegistry& registry) {
  std::map<ShapeKey, long> out;
  for (const auto& [key, value] : table.rows) {
    const auto& r = registry.at(key.first).realization;
    out[{r.l_order(), r.u_order(), key.second}] += static_cast<long>(value);
  }
  return out;
}

// Each check writes its failures to `why` and returns false on failure.
using Check = std::function<bool(std::ostream& why)>;

bool l_row_identity(std::ostream& why) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (const auto& c : battery()) {
    DDeltaRegistry registry;
    const auto t = mult_table_pairs(c.built.group, c.built.p, registry);
    const auto expected = oracle::p_regular_class_count(brute_elements(c.built.group), c.built.p);
    if (t.at({registry.identity(), 0}) != expected) {
      why << c.file << ": l-row " << t.at({registry.identity(), 0}) << " vs " << expected << "; ";
      ok = false;
    }
  }
  const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 60) {
    why << "took " << seconds << " s; ";
    ok = false;
  }
  return ok;
}

bool cross_formula(std::ostream& why) {
  bool ok = true;
  for (const auto& c : battery()) {
    if (!c.frobenius) continue;
    DDeltaRegistry registry;
    const auto pairs = mult_table_pairs(c.built.group, c.built.p, registry);
    const auto fusion = mult_table_fusion(fusion_of(c.built), registry);
    if (nontrivial_rows(pairs, registry) != fusion.rows) {
      why << c.file << ": tables differ; ";
      ok = false;
    }
  }
  return ok;
}

bool psi_verification(std::ostream& why) {
  bool ok = true;
  for (const auto& c : battery()) {
    if (!c.frobenius) continue;
    const auto fusion = fusion_of(c.built);
    DDeltaRegistry registry;
    const auto pc = classify_into_registry(enumerate_pair_orbits(c.built.group, c.built.p), registry);
    std::set<std::size_t> ids;
    for (const auto& a : pc.assignments)
      if (a.class_id != registry.identity()) ids.insert(a.class_id);
    for (auto id : ids) {
      try {
        const auto report = verify_bijection(fusion, registry.at(id), pc);
        if (report.triple_orbits != report.pair_orbits) {
          why << c.file << " class " << id << ": orbit counts differ; ";
          ok = false;
        }
      } catch (const InternalError& e) {
        why << c.file << " class " << id << ": " << e.what() << "; ";
        ok = false;
      }
    }
  }
  return ok;
}

bool golden_tables(std::ostream& why) {
  const std::map<ShapeKey, long> s3{{{1, 1, 0}, 2}, {{3, 1, 0}, 1}, {{3, 1, 1}, 0}, {{3, 2, 0}, 1}};
  const std::map<ShapeKey, long> a4{{{1, 1, 0}, 3}, {{2, 1, 0}, 1}, {{4, 1, 0}, 1},
                                    {{4, 1, 1}, 1}, {{4, 1, 2}, 0}, {{4, 3, 0}, 2}};
  bool ok = true;
  for (const auto& [file, golden] : {std::pair{"s3.grp", s3}, std::pair{"a4.grp", a4}}) {
    const auto g = load_fixture(file);
    DDeltaRegistry registry;
    const auto computed = by_shape(mult_table_pairs(g.group, g.p, registry), registry);
    const auto brute = oracle::small_pair_table(brute_elements(g.group), g.p);
    if (brute != golden) {
      why << file << ": oracle disagrees with golden table; ";
      ok = false;
    }
    if (computed != golden) {
      why << file << ": computed table disagrees with golden table; ";
      ok = false;
    }
  }
  return ok;
}

bool equivalence_verdicts(std::ostream& why) {
  bool ok = true;
  DDeltaRegistry registry;
  auto table = [&](const std::string& file) {
    const auto g = load_fixture(file);
    return mult_table_pairs(g.group, g.p, registry, file);
  };
  const auto s3 = table("s3.grp");
  const auto same = compare(s3, table("s3_relabeled.grp"), registry);
  if (!same.stable || !same.functorial) {
    why << "S3 vs relabeled S3 not stable/functorial; ";
    ok = false;
  }
  const auto differ = compare(s3, table("c3.grp"), registry);
  if (differ.stable || differ.diff.empty()) {
    why << "S3 vs C3 should be unstable with a diff; ";
    ok = false;
  }
  const auto iso = compare(table("c5c4.grp"), table("c5c4_perm.grp"), registry);
  if (!iso.stable || !iso.functorial) {
    why << "C5:C4 presentations not stable/functorial; ";
    ok = false;
  }
  for (const auto* v : {&same, &differ, &iso})
    if (v->stable && (!v->kl_difference_equal || !v->defect_isomorphic)) {
      why << "stable verdict without matching k-l and defect group; ";
      ok = false;
    }
  return ok;
}

bool character_tables(std::ostream& why) {
  bool ok = true;
  std::size_t samples = 0;
  for (const auto& c : battery()) {
    const auto& g = c.built.group;
    const auto t = character_table(g);
    if (!rows_orthogonal(t) || !columns_orthogonal(t)) {
      why << c.file << ": orthogonality fails; ";
      ok = false;
    }
    std::size_t squares = 0;
    for (auto d : t.degrees) squares += d * d;
    if (squares != g.size()) {
      why << c.file << ": degree squares sum to " << squares << "; ";
      ok = false;
    }
    std::vector<ElementSet> subs;
    for (unsigned p : {2u, 3u, 5u, 7u})
      for (const auto& s : p_subgroup_class_sets(g, p)) subs.push_back(s);
    for (Index x : g.generator_indices()) subs.push_back(centralizer_indices(g, x));
    for (const auto& h : subs) {
      std::size_t total = 0;
      for (std::size_t chi = 0; chi < t.size(); ++chi) total += t.degrees[chi] * fixed_point_dim(t, chi, h);
      if (total != g.size() / h.size()) {
        why << c.file << ": permutation module identity fails for |H| = " << h.size() << "; ";
        ok = false;
      }
      ++samples;
    }
  }
  if (samples < 20) {
    why << "only " << samples << " samples; ";
    ok = false;
  }
  return ok;
}

bool l_multiplicativity(std::ostream& why) {
  const std::vector<std::tuple<std::string, std::string, unsigned>> pairs{
      {"s3.grp", "s3.grp", 3}, {"s3.grp", "c3.grp", 3},   {"a4.grp", "c3.grp", 2},
      {"a4.grp", "s3.grp", 2}, {"c7c3.grp", "c3.grp", 3}, {"c5c4.grp", "s3.grp", 2},
      {"s4.grp", "c3.grp", 2}};
  bool ok = true;
  for (const auto& [a, b, p] : pairs) {
    const auto g = load_fixture(a);
    const auto h = load_fixture(b);
    const auto product = direct_product(g.group, h.group);
    const auto lg = oracle::p_regular_class_count(brute_elements(g.group), p);
    const auto lh = oracle::p_regular_class_count(brute_elements(h.group), p);
    if (!l_multiplicativity_check(g.group, h.group, p) || invariants_kl(product, p).l != lg * lh) {
      why << a << " x " << b << " at p = " << p << "; ";
      ok = false;
    }
  }
  return ok;
}

bool negative_path(std::ostream& why) {
  bool ok = true;
  const std::string path = std::string(BLOCKFUNCTOR_FIXTURE_DIR) + "/s4.grp";
  std::ostringstream out, err;
  const int code = run({"verify-psi", path}, out, err);
  if (code != kExitDomain) {
    why << "verify-psi exited " << code << "; ";
    ok = false;
  }
  const auto s4 = load_fixture("s4.grp");
  try {
    build_fusion(s4.group, s4.p);
    why << "build_fusion accepted S4; ";
    ok = false;
  } catch (const DomainError&) {
  }
  std::ostringstream mult_out, mult_err;
  if (run({"mult", path}, mult_out, mult_err) != kExitOk) {
    why << "mult failed: " << mult_err.str() << "; ";
    ok = false;
  }
  if (mult_out.str().find(kSingleBlockNote) != std::string::npos) {
    why << "single-block caveat printed for S4; ";
    ok = false;
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria{
      {"l-row identity on the fixture battery", l_row_identity},
      {"cross-formula equality on Frobenius fixtures", cross_formula},
      {"triple/pair bijection and stabilizers", psi_verification},
      {"golden tables for S3 and A4", golden_tables},
      {"equivalence verdicts", equivalence_verdicts},
      {"character table suite", character_tables},
      {"l-multiplicativity on direct products", l_multiplicativity},
      {"S4 negative path", negative_path},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream why;
    bool pass = false;
    try {
      pass = criteria[i].second(why);
    } catch (const std::exception& e) {
      why << "exception: " << e.what();
    }
    std::cout << "criterion " << i + 1 << ": " << (pass ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!pass) std::cout << "  (" << why.str() << ")";
    std::cout << '\n';
    failures += pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
