#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "critideals/ideals.hpp"
#include "critideals/intalg.hpp"
#include "critideals/suites.hpp"
#include "json.hpp"

using namespace critideals;
using nlohmann::ordered_json;

namespace {

enum Exit : int { kOk = 0, kAssertion = 1, kUsage = 2, kResource = 3 };

struct Options {
  std::string family;
  std::string input;
  std::string j;
  std::string format = "text";
  std::uint64_t seed = 1;
  int max_n = 6;
  std::size_t max_pairs = CompletionBudget{}.max_pairs;
  std::string suite;
  bool minimal = false;
  bool arithmetical = false;
  bool provenance = false;

  bool json() const { return format == "json"; }

  CompletionBudget budget() const {
    CompletionBudget b = CompletionBudget::from_environment();
    b.max_pairs = max_pairs;
    return b;
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void require_one_source(const Options& o) {
  if (o.family.empty() == o.input.empty()) throw InputError("give exactly one of --family or --input");
}

Tree load_tree(const Options& o) {
  require_one_source(o);
  if (!o.input.empty()) return parse_tree(read_input(o.input));
  FamilySpec spec = FamilySpec::parse(o.family);
  if (!spec.is_tree()) throw InputError("family '" + spec.kind + "' is not a tree");
  return build_tree(spec);
}

MultiGraph load_graph(const Options& o) {
  require_one_source(o);
  if (!o.input.empty()) return parse_multigraph(read_input(o.input));
  return build_graph(FamilySpec::parse(o.family));
}

// Parses --j as a number, "a..b", or "all".
std::vector<int> j_values(const Options& o, int n, bool required) {
  if (o.j.empty() || o.j == "all") {
    if (o.j.empty() && required) throw InputError("--j is required");
    std::vector<int> all;
    for (int j = 1; j <= n; ++j) all.push_back(j);
    return all;
  }
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw InputError("bad --j value '" + o.j + "'");
    if (v < 1 || v > n) throw InputError("j=" + s + " outside 1.." + std::to_string(n));
    return v;
  };
  auto dots = o.j.find("..");
  if (dots == std::string::npos) return {number(o.j)};
  int lo = number(o.j.substr(0, dots));
  int hi = number(o.j.substr(dots + 2));
  if (lo > hi) throw InputError("empty --j range '" + o.j + "'");
  std::vector<int> out;
  for (int j = lo; j <= hi; ++j) out.push_back(j);
  return out;
}

void print(const ordered_json& doc) { std::cout << doc.dump() << '\n'; }

int cmd_ideal(const Options& o) {
  Tree t = load_tree(o);
  std::vector<int> js = j_values(o, t.size(), false);
  ordered_json ideals = ordered_json::array();
  for (int j : js) {
    CriticalIdeal ideal = critical_ideal(t, j);
    ordered_json gens = ordered_json::array();
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
      const Polynomial& p = ideal.generators[i];
      if (o.json()) {
        ordered_json g{{"polynomial", p.to_string()}};
        if (o.provenance) g["matching"] = ideal.provenance[i].to_string();
        gens.push_back(std::move(g));
        continue;
      }
      if (js.size() > 1 && i == 0) std::cout << "j=" << j << '\n';
      std::cout << (js.size() > 1 ? "  " : "") << p.to_string();
      if (o.provenance) std::cout << "\t[" << ideal.provenance[i].to_string() << ']';
      std::cout << '\n';
    }
    if (o.json()) ideals.push_back({{"j", j}, {"generators", std::move(gens)}});
  }
  if (o.json()) print({{"tree", tree_id(t)}, {"ideals", std::move(ideals)}});
  return kOk;
}

int cmd_gamma(const Options& o) {
  Tree t = load_tree(o);
  GammaCertificate c = certify_gamma(t, o.budget());
  if (o.json()) {
    ordered_json doc{{"tree", tree_id(t)}, {"nu2", c.nu2}};
    if (c.ok()) doc["gamma"] = c.nu2;
    doc["trivial_at_nu2"] = c.trivial_at_nu2;
    doc["proper_above"] = c.proper_above;
    print(doc);
  } else if (c.ok()) {
    std::cout << "nu2=" << c.nu2 << " gamma=" << c.nu2 << '\n';
  } else {
    std::cout << "nu2=" << c.nu2 << " gamma=?\n";
  }
  if (!c.ok()) {
    std::cerr << "gamma differs from nu2: trivial_at_nu2=" << c.trivial_at_nu2 << " proper_above=" << c.proper_above << '\n';
    return kAssertion;
  }
  return kOk;
}

int cmd_matchings(const Options& o) {
  Tree t = load_tree(o);
  std::vector<int> js = j_values(o, t.size(), true);
  ordered_json out = ordered_json::array();
  for (int j : js) {
    std::vector<TwoMatching> ms = o.minimal ? enumerate_minimal(t, j) : enumerate_two_matchings(t, true, j);
    std::sort(ms.begin(), ms.end(), enumeration_less);
    ordered_json list = ordered_json::array();
    if (!o.json() && js.size() > 1) std::cout << "j=" << j << '\n';
    for (const auto& m : ms) {
      if (o.json()) {
        list.push_back(m.to_string());
      } else {
        std::cout << (js.size() > 1 ? "  " : "") << m.to_string() << '\n';
      }
    }
    if (o.json()) out.push_back({{"j", j}, {"minimal", o.minimal}, {"matchings", std::move(list)}});
  }
  if (o.json()) print({{"tree", tree_id(t)}, {"matchings", std::move(out)}});
  return kOk;
}

// Every chosen j gets the conjecture check; j = n-1 also gets the leaf-pair theorem check.
int cmd_groebner(const Options& o) {
  Tree t = load_tree(o);
  std::vector<int> js = j_values(o, t.size(), false);
  int exit = kOk;
  ordered_json rows = ordered_json::array();
  for (int j : js) {
    ConjectureOutcome c = conjecture_scan(t, j).front();
    ordered_json row{{"j", j}, {"basis_size", c.basis_size}, {"groebner", c.groebner}, {"reduced", c.reduced}};
    std::ostringstream line;
    line << "j=" << j << " basis_size=" << c.basis_size << " groebner=" << (c.groebner ? "yes" : "no")
         << " reduced=" << (c.reduced ? "yes" : "no");
    if (j == t.size() - 1) {
      PathBasisCheck p = groebner_check_paths(t);
      row["leaf_pairs"] = p.leaf_pairs;
      row["leaf_pair_basis"] = p.ok();
      line << " leaf_pairs=" << p.leaf_pairs << " leaf_pair_basis=" << (p.ok() ? "ok" : "FAIL");
      if (!p.ok()) exit = kAssertion;
    }
    if (o.json()) {
      rows.push_back(std::move(row));
    } else {
      std::cout << line.str() << '\n';
    }
  }
  if (o.json()) print({{"tree", tree_id(t)}, {"bases", std::move(rows)}});
  return exit;
}

int cmd_critgroup(const Options& o) {
  AbelianGroup g;
  if (o.arithmetical) {
    require_one_source(o);
    if (o.family.empty()) throw InputError("--arithmetical needs --family c5:m");
    FamilySpec spec = FamilySpec::parse(o.family);
    if (spec.kind != "c5") throw InputError("--arithmetical supports only the c5 family");
    ArithmeticalGraph a = c5_arithmetical(spec.params.at(0));
    if (!validate_arithmetical(a.graph, a.d, a.r)) {
      std::cerr << "(Diag(d) - A) r != 0\n";
      return kAssertion;
    }
    g = critical_group(a);
  } else {
    g = critical_group(load_graph(o));
  }
  if (o.json()) {
    std::cout << g.to_json() << '\n';
  } else {
    std::cout << g.torsion_string() << "\nfree_rank=" << g.free_rank << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, bool format_given) {
  if (o.suite.empty()) throw InputError("--suite is required");
  SuiteOptions so;
  so.max_n = o.max_n;
  so.seed = o.seed;
  so.budget = o.budget();
  bool json = !format_given || o.json();
  SuiteSummary s = run_suite(o.suite, so, [&](const ReportRecord& r) {
    if (json) {
      std::cout << r.to_json() << '\n';
    } else {
      std::cout << r.status << '\t' << r.check << '\t' << r.tree << '\t' << (r.j ? std::to_string(*r.j) : "-");
      if (r.witness) std::cout << '\t' << *r.witness;
      std::cout << '\n';
    }
  });
  std::cerr << o.suite << ": records=" << s.records << " failures=" << s.failures << " findings=" << s.findings << '\n';
  return s.failures == 0 ? kOk : kAssertion;
}

int cmd_family(const Options& o) {
  if (o.family.empty()) throw InputError("--family is required");
  FamilySpec spec = FamilySpec::parse(o.family);
  MultiGraph g = build_graph(spec);
  if (o.json()) {
    ordered_json edges = ordered_json::array();
    for (const auto& [e, mult] : g.edges()) edges.push_back({e.u, e.v, mult});
    print({{"family", spec.to_string()}, {"n", g.size()}, {"edges", std::move(edges)}});
  } else if (spec.is_tree()) {
    std::cout << serialize_tree(build_tree(spec));
  } else {
    std::cout << serialize_multigraph(g);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical ideals of trees"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "Family spec kind:p1,p2,...");
    sub->add_option("--input", o.input, "Graph file ('-' for stdin)");
  };
  auto add_format = [&](CLI::App* sub) {
    return sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-pairs", o.max_pairs, "Cap on completion pair steps")->check(CLI::PositiveNumber);
  };

  auto* ideal = app.add_subcommand("ideal", "Generators of I_j from minimal 2-matchings");
  add_input(ideal);
  add_format(ideal);
  ideal->add_option("--j", o.j, "j, a..b, or all (default all)");
  ideal->add_flag("--provenance", o.provenance, "Show the producing 2-matching");

  auto* gamma_cmd = app.add_subcommand("gamma", "nu2 and the certified algebraic co-rank");
  add_input(gamma_cmd);
  add_format(gamma_cmd);
  add_budget(gamma_cmd);

  auto* matchings = app.add_subcommand("matchings", "2-matchings of the looped tree");
  add_input(matchings);
  add_format(matchings);
  matchings->add_option("--j", o.j, "Size, a..b, or all")->required();
  matchings->add_flag("--minimal", o.minimal, "Only minimal 2-matchings");

  auto* groebner = app.add_subcommand("groebner", "Groebner checks of the critical ideals");
  add_input(groebner);
  add_format(groebner);
  groebner->add_option("--j", o.j, "j, a..b, or all (default all)");

  auto* critgroup = app.add_subcommand("critgroup", "Critical group of a graph");
  add_input(critgroup);
  add_format(critgroup);
  critgroup->add_flag("--arithmetical", o.arithmetical, "Use the arithmetical structure of the c5 family");

  auto* verify = app.add_subcommand("verify", "Run a verification suite as JSON lines");
  CLI::Option* verify_format = add_format(verify);
  add_budget(verify);
  std::string suites_help = "One of:";
  for (const auto& s : suite_names()) suites_help += " " + s;
  verify->add_option("--suite", o.suite, suites_help)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", o.max_n, "Largest tree size")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "Seed for random trees");

  auto* family = app.add_subcommand("family", "Print a family member in the graph file format");
  family->add_option("--family", o.family, "Family spec kind:p1,p2,...")->required();
  add_format(family);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (ideal->parsed()) return cmd_ideal(o);
    if (gamma_cmd->parsed()) return cmd_gamma(o);
    if (matchings->parsed()) return cmd_matchings(o);
    if (groebner->parsed()) return cmd_groebner(o);
    if (critgroup->parsed()) return cmd_critgroup(o);
    if (verify->parsed()) return cmd_verify(o, verify_format->count() > 0);
    if (family->parsed()) return cmd_family(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
