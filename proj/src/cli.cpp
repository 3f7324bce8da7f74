#include "blockfunctor/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <set>
#include <sstream>

#include "blockfunctor/errors.hpp"
#include "blockfunctor/fixtures.hpp"
#include "blockfunctor/fusion.hpp"
#include "blockfunctor/group_algorithms.hpp"
#include "blockfunctor/group_file.hpp"

namespace blockfunctor {

using Json = nlohmann::ordered_json;

std::vector<TableRow> table_rows(const MultiplicityTable& table, const DDeltaRegistry& registry) {
  std::vector<TableRow> out;
  for (const auto& [key, value] : table.rows) {
    const auto& cls = registry.at(key.first);
    out.push_back({key.first, cls.realization.l_order(), cls.realization.u_order(), cls.out_pair.size(), key.second,
                   cls.out_table.degrees[key.second], value});
  }
  return out;
}

namespace {

struct Loaded {
  BuiltGroup built;
  std::string name;
};

// ParseError whose message names the file it came from.
class FileParseError : public ParseError {
 public:
  FileParseError(const ParseError& e, const std::string& label)
      : ParseError(e), message_(label + ": " + e.what()) {}
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  std::string message_;
};

Loaded load_text(const std::string& text, const std::string& label, const std::string& fallback_name) {
  GroupSpec spec;
  try {
    spec = parse_group_file(text);
  } catch (const ParseError& e) {
    throw FileParseError(e, label);
  }
  Loaded out{build_group(spec), spec.name.empty() ? fallback_name : spec.name};
  out.built.name = out.name;
  return out;
}

Loaded load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_text(buffer.str(), path, std::filesystem::path(path).stem().string());
}

FusionData fusion_of(const BuiltGroup& g) {
  if (g.kernel && g.complement) return build_fusion(g.group, *g.kernel, *g.complement, g.p);
  return build_fusion(g.group, g.p);
}

Json group_json(const Loaded& g) {
  return Json{{"name", g.name},
              {"degree", g.built.group.degree()},
              {"order", g.built.group.order().str()},
              {"p", g.built.p}};
}

Json invariants_json(const MultiplicityTable& t) {
  return Json{{"k", t.invariants.k},
              {"l", t.invariants.l},
              {"k_minus_l", t.invariants.difference()},
              {"defect_order", t.defect_order}};
}

Json rows_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back(Json{{"class_id", r.class_id},
                       {"L_order", r.l_order},
                       {"u_order", r.u_order},
                       {"out_order", r.out_order},
                       {"irr_index", r.irr_index},
                       {"irr_degree", r.irr_degree},
                       {"multiplicity", r.multiplicity}});
  return out;
}

void write_rows_tsv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "class_id\tL_order\tu_order\tout_order\tirr_index\tirr_degree\tmultiplicity\n";
  for (const auto& r : rows)
    out << r.class_id << '\t' << r.l_order << '\t' << r.u_order << '\t' << r.out_order << '\t' << r.irr_index << '\t'
        << r.irr_degree << '\t' << r.multiplicity << '\n';
}

std::vector<std::string> notes_for(const MultiplicityTable& t) {
  if (t.single_block) return {};
  return {kSingleBlockNote};
}

Json document(const std::string& command) { return Json{{"schema", kReportSchema}, {"command", command}}; }

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

// ---- commands

int cmd_invariants(const std::string& path, bool json, std::ostream& out) {
  const auto g = load(path);
  MultiplicityTable t;
  t.invariants = invariants_kl(g.built.group, g.built.p);
  t.defect_order = sylow_subgroup(g.built.group, g.built.p).size();
  t.single_block = is_single_block(g.built.group, g.built.p);
  if (json) {
    auto doc = document("invariants");
    doc["group"] = group_json(g);
    doc["invariants"] = invariants_json(t);
    doc["single_block"] = t.single_block;
    doc["notes"] = notes_for(t);
    emit_json(out, doc);
    return kExitOk;
  }
  for (const auto& n : notes_for(t)) out << "# note: " << n << '\n';
  out << "group\t" << g.name << "\norder\t" << g.built.group.order() << "\np\t" << g.built.p << "\nk\t"
      << t.invariants.k << "\nl\t" << t.invariants.l << "\nk_minus_l\t" << t.invariants.difference()
      << "\ndefect_order\t" << t.defect_order << "\nsingle_block\t" << (t.single_block ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_pairs(const std::string& path, bool json, std::ostream& out) {
  const auto g = load(path);
  DDeltaRegistry registry;
  const auto pc = classify_into_registry(enumerate_pair_orbits(g.built.group, g.built.p), registry);
  const auto& G = g.built.group;
  Json rows = Json::array();
  if (!json) out << "pair_index\tP_order\ts\ts_order\tclass_id\tL_order\tu_order\n";
  for (std::size_t i = 0; i < pc.orbits.pairs.size(); ++i) {
    const auto& pair = pc.orbits.pairs[i];
    const auto& r = registry.at(pc.assignments[i].class_id).realization;
    const auto s = G.element(pair.element).to_cycle_string();
    if (json) {
      rows.push_back(Json{{"pair_index", i},
                          {"P_order", pair.subgroup.size()},
                          {"s", s},
                          {"s_order", G.element_order(pair.element)},
                          {"class_id", pc.assignments[i].class_id},
                          {"L_order", r.l_order()},
                          {"u_order", r.u_order()}});
    } else {
      out << i << '\t' << pair.subgroup.size() << '\t' << s << '\t' << G.element_order(pair.element) << '\t'
          << pc.assignments[i].class_id << '\t' << r.l_order() << '\t' << r.u_order() << '\n';
    }
  }
  if (json) {
    auto doc = document("pairs");
    doc["group"] = group_json(g);
    doc["pairs"] = rows;
    emit_json(out, doc);
  }
  return kExitOk;
}

int cmd_chartab(const std::string& path, bool json, std::ostream& out) {
  const auto g = load(path);
  const auto t = character_table(g.built.group);
  std::vector<std::string> reps;
  for (Index r : t.class_representatives) reps.push_back(t.group.element(r).to_cycle_string());
  if (json) {
    auto doc = document("chartab");
    doc["group"] = group_json(g);
    doc["modulus"] = t.modulus;
    doc["class_representatives"] = reps;
    doc["class_sizes"] = t.class_sizes;
    doc["degrees"] = t.degrees;
    doc["values"] = t.values;
    emit_json(out, doc);
    return kExitOk;
  }
  out << "modulus\t" << t.modulus << "\nclass_representative";
  for (const auto& r : reps) out << '\t' << r;
  out << "\nclass_size";
  for (auto s : t.class_sizes) out << '\t' << s;
  out << "\nirr_index\tdegree\tvalues\n";
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    out << chi << '\t' << t.degrees[chi];
    for (auto v : t.values[chi]) out << '\t' << v;
    out << '\n';
  }
  return kExitOk;
}

int cmd_mult(const std::string& path, const std::string& formula, bool json, std::ostream& out) {
  const auto g = load(path);
  DDeltaRegistry registry;
  MultiplicityTable table;
  std::vector<std::string> notes;
  std::string cross_check;
  if (formula == "fusion") {
    table = mult_table_fusion(fusion_of(g.built), registry, g.name);
  } else {
    table = mult_table_pairs(g.built.group, g.built.p, registry, g.name);
    if (formula == "both") {
      const auto fusion = mult_table_fusion(fusion_of(g.built), registry, g.name);
      const auto expected = nontrivial_rows(table, registry);
      if (expected != fusion.rows) {
        for (const auto& [key, value] : expected) {
          const auto other = fusion.at(key);
          if (other != value)
            throw TheoremViolation("formulas disagree at class " + std::to_string(key.first) + ", character " +
                                   std::to_string(key.second) + ": pairs " + std::to_string(value) + ", fusion " +
                                   std::to_string(other));
        }
        throw TheoremViolation("fusion formula produced rows absent from the pair formula");
      }
      cross_check = "fusion formula agrees on all " + std::to_string(expected.size()) + " rows with L != 1";
    }
  }
  notes = notes_for(table);
  const auto rows = table_rows(table, registry);
  if (json) {
    auto doc = document("mult");
    doc["group"] = Json{{"name", g.name},
                        {"degree", g.built.group.degree()},
                        {"order", g.built.group.order().str()},
                        {"p", g.built.p}};
    doc["formula"] = formula;
    doc["invariants"] = invariants_json(table);
    doc["single_block"] = table.single_block;
    doc["notes"] = notes;
    if (!cross_check.empty()) doc["cross_check"] = cross_check;
    doc["rows"] = rows_json(rows);
    emit_json(out, doc);
    return kExitOk;
  }
  for (const auto& n : notes) out << "# note: " << n << '\n';
  out << "# group " << g.name << " p " << g.built.p << " k " << table.invariants.k << " l " << table.invariants.l
      << " k_minus_l " << table.invariants.difference() << " defect_order " << table.defect_order << '\n';
  out << "# formula " << formula << '\n';
  if (!cross_check.empty()) out << "# cross-check: " << cross_check << '\n';
  write_rows_tsv(out, rows);
  return kExitOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b, bool json, std::ostream& out) {
  const auto a = load(path_a);
  const auto b = load(path_b);
  if (a.built.p != b.built.p)
    throw DomainError("groups are declared for different primes (" + std::to_string(a.built.p) + " and " +
                      std::to_string(b.built.p) + ")");
  DDeltaRegistry registry;
  const auto ta = mult_table_pairs(a.built.group, a.built.p, registry, a.name);
  const auto tb = mult_table_pairs(b.built.group, b.built.p, registry, b.name);
  const auto verdict = compare(ta, tb, registry);
  std::vector<std::string> notes;
  for (const auto* t : {&ta, &tb})
    if (!t->single_block) notes.push_back(t->group_name + ": " + kSingleBlockNote);

  if (json) {
    auto doc = document("compare");
    doc["groups"] = Json::array({group_json(a), group_json(b)});
    doc["invariants"] = Json::array({invariants_json(ta), invariants_json(tb)});
    doc["notes"] = notes;
    doc["verdict"] = Json{{"stable", verdict.stable},
                          {"functorial", verdict.functorial},
                          {"defect_isomorphic", verdict.defect_isomorphic},
                          {"kl_difference_equal", verdict.kl_difference_equal}};
    Json diff = Json::array();
    for (const auto& d : verdict.diff) {
      const auto& r = registry.at(d.key.first).realization;
      diff.push_back(Json{{"class_id", d.key.first},
                          {"L_order", r.l_order()},
                          {"u_order", r.u_order()},
                          {"irr_index", d.key.second},
                          {"left", d.left},
                          {"right", d.right}});
    }
    doc["diff"] = diff;
    emit_json(out, doc);
    return kExitOk;
  }
  for (const auto& n : notes) out << "# note: " << n << '\n';
  out << "# left " << a.name << " right " << b.name << " p " << a.built.p << '\n';
  auto flag = [](bool x) { return x ? "true" : "false"; };
  out << "stable\t" << flag(verdict.stable) << "\nfunctorial\t" << flag(verdict.functorial) << "\ndefect_isomorphic\t"
      << flag(verdict.defect_isomorphic) << "\nkl_difference_equal\t" << flag(verdict.kl_difference_equal) << '\n';
  out << "class_id\tL_order\tu_order\tirr_index\tleft\tright\n";
  for (const auto& d : verdict.diff) {
    const auto& r = registry.at(d.key.first).realization;
    out << d.key.first << '\t' << r.l_order() << '\t' << r.u_order() << '\t' << d.key.second << '\t' << d.left << '\t'
        << d.right << '\n';
  }
  return kExitOk;
}

int cmd_verify_psi(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  const auto g = load(path);
  const auto fusion = fusion_of(g.built);
  DDeltaRegistry registry;
  const auto pairs = classify_into_registry(enumerate_pair_orbits(g.built.group, g.built.p), registry);
  std::set<std::size_t> ids;
  for (const auto& a : pairs.assignments)
    if (a.class_id != registry.identity()) ids.insert(a.class_id);

  bool failed = false;
  Json rows = Json::array();
  if (!json) out << "class_id\tL_order\tu_order\ttriple_orbits\tpair_orbits\tstabilizer_orders\tstatus\n";
  for (auto id : ids) {
    const auto& r = registry.at(id).realization;
    std::string stabilizers;
    std::string status = "PASS";
    std::size_t triples = 0, pair_count = 0;
    try {
      const auto report = verify_bijection(fusion, registry.at(id), pairs);
      triples = report.triple_orbits;
      pair_count = report.pair_orbits;
      for (std::size_t i = 0; i < report.stabilizer_orders.size(); ++i)
        stabilizers += (i ? "," : "") + std::to_string(report.stabilizer_orders[i]);
    } catch (const InternalError& e) {
      status = "FAIL";
      failed = true;
      err << "verify-psi: " << e.what() << '\n';
    }
    if (stabilizers.empty()) stabilizers = "-";
    if (json) {
      rows.push_back(Json{{"class_id", id},
                          {"L_order", r.l_order()},
                          {"u_order", r.u_order()},
                          {"triple_orbits", triples},
                          {"pair_orbits", pair_count},
                          {"stabilizer_orders", stabilizers},
                          {"status", status}});
    } else {
      out << id << '\t' << r.l_order() << '\t' << r.u_order() << '\t' << triples << '\t' << pair_count << '\t'
          << stabilizers << '\t' << status << '\n';
    }
  }
  if (json) {
    auto doc = document("verify-psi");
    doc["group"] = group_json(g);
    doc["classes"] = rows;
    emit_json(out, doc);
  }
  return failed ? kExitInternal : kExitOk;
}

int cmd_selftest(bool json, std::ostream& out, std::ostream& err) {
  struct Line {
    std::string fixture;
    unsigned p;
    std::string check;
    bool pass;
  };
  std::vector<Line> lines;
  for (const auto& fixture : fixture_battery()) {
    const auto g = load_text(fixture.text, fixture.file, fixture.file);
    auto check = [&](const std::string& name, const std::function<bool()>& body) {
      bool pass = false;
      try {
        pass = body();
      } catch (const std::exception& e) {
        err << fixture.file << ": " << name << ": " << e.what() << '\n';
      }
      lines.push_back({fixture.file, g.built.p, name, pass});
    };
    DDeltaRegistry registry;
    MultiplicityTable pairs;
    check("l-row", [&] {
      pairs = mult_table_pairs(g.built.group, g.built.p, registry, g.name);
      return pairs.at({registry.identity(), 0}) == pairs.invariants.l;
    });
    if (fixture.frobenius) {
      check("cross-formula", [&] {
        const auto fusion = mult_table_fusion(fusion_of(g.built), registry, g.name);
        return nontrivial_rows(pairs, registry) == fusion.rows;
      });
      check("verify-psi", [&] {
        const auto fusion = fusion_of(g.built);
        const auto pc = classify_into_registry(enumerate_pair_orbits(g.built.group, g.built.p), registry);
        for (std::size_t id = 0; id < registry.size(); ++id)
          if (id != registry.identity()) {
            bool present = false;
            for (const auto& a : pc.assignments) present = present || a.class_id == id;
            if (present) verify_bijection(fusion, registry.at(id), pc);
          }
        return true;
      });
    } else {
      check("frobenius-rejected", [&] {
        try {
          fusion_of(g.built);
        } catch (const DomainError&) {
          return true;
        }
        return false;
      });
    }
  }
  bool all = true;
  for (const auto& l : lines) all = all && l.pass;
  if (json) {
    auto doc = document("selftest");
    Json checks = Json::array();
    for (const auto& l : lines)
      checks.push_back(Json{{"fixture", l.fixture}, {"p", l.p}, {"check", l.check}, {"status", l.pass ? "PASS" : "FAIL"}});
    doc["checks"] = checks;
    doc["passed"] = all;
    emit_json(out, doc);
  } else {
    out << "fixture\tp\tcheck\tstatus\n";
    for (const auto& l : lines) out << l.fixture << '\t' << l.p << '\t' << l.check << '\t' << (l.pass ? "PASS" : "FAIL") << '\n';
  }
  return all ? kExitOk : kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplicities of simple diagonal p-permutation functors for small groups", "blockfunctor"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of TSV");

  std::string file, other, formula = "pairs";
  auto* invariants = app.add_subcommand("invariants", "Print k, l, k - l and the defect order");
  auto* pairs = app.add_subcommand("pairs", "List pair orbits and their classes");
  auto* chartab = app.add_subcommand("chartab", "Print the character table as residues");
  auto* mult = app.add_subcommand("mult", "Multiplicity table");
  auto* cmp = app.add_subcommand("compare", "Compare the multiplicity tables of two groups");
  auto* psi = app.add_subcommand("verify-psi", "Check the triple/pair orbit bijection per class");
  auto* selftest = app.add_subcommand("selftest", "Run the built-in fixture battery");
  for (auto* sub : {invariants, pairs, chartab, mult, cmp, psi}) sub->add_option("file", file, "Group file")->required();
  mult->add_option("--formula", formula, "pairs, fusion or both")
      ->check(CLI::IsMember({"pairs", "fusion", "both"}));
  cmp->add_option("other", other, "Second group file")->required();
  for (auto* sub : {invariants, pairs, chartab, mult, cmp, psi, selftest}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (invariants->parsed()) return cmd_invariants(file, json, out);
    if (pairs->parsed()) return cmd_pairs(file, json, out);
    if (chartab->parsed()) return cmd_chartab(file, json, out);
    if (mult->parsed()) return cmd_mult(file, formula, json, out);
    if (cmp->parsed()) return cmd_compare(file, other, json, out);
    if (psi->parsed()) return cmd_verify_psi(file, json, out, err);
    if (selftest->parsed()) return cmd_selftest(json, out, err);
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace blockfunctor
