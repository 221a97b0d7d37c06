#include "critideals/suites.hpp"

#include <algorithm>
#include <random>

#include "critideals/ideals.hpp"
#include "critideals/intalg.hpp"
#include "critideals/matching.hpp"

namespace critideals {

namespace {

class Emitter {
 public:
  explicit Emitter(const RecordSink& sink) : sink_(sink) {}

  void emit(ReportRecord r) {
    ++summary_.records;
    if (r.status == "fail") ++summary_.failures;
    if (r.status == "finding") ++summary_.findings;
    sink_(r);
  }

  void check(const std::string& tree, std::optional<int> j, const std::string& name, bool ok, std::optional<std::string> witness = std::nullopt) {
    emit({tree, j, name, ok ? "pass" : "fail", ok ? std::nullopt : std::move(witness)});
  }

  // One record per tally, in check-name order.
  void report(const std::string& tree, const CheckReport& rep) {
    std::vector<const CheckTally*> tallies;
    for (const auto& t : rep.tallies()) tallies.push_back(&t);
    std::sort(tallies.begin(), tallies.end(), [](const CheckTally* a, const CheckTally* b) { return a->name < b->name; });
    for (const CheckTally* t : tallies) {
      std::optional<std::string> witness;
      if (!t->witnesses.empty()) witness = t->witnesses.front();
      check(tree, std::nullopt, t->name, t->ok(), witness);
    }
  }

  SuiteSummary summary() const { return summary_; }

 private:
  const RecordSink& sink_;
  SuiteSummary summary_;
};

template <typename Fn>
void each_tree(int max_n, Fn&& fn) {
  for (int n = 2; n <= max_n; ++n) {
    for_each_labeled_tree(n, [&](const Tree& t) {
      fn(t);
      return true;
    });
  }
}

void require_max_n(const SuiteOptions& o, int limit) {
  if (o.max_n < 2 || o.max_n > limit) throw InputError("--max-n must lie in 2.." + std::to_string(limit));
}

void run_identities(const SuiteOptions& o, Emitter& out) {
  require_max_n(o, 8);
  each_tree(o.max_n, [&](const Tree& t) { out.report(tree_id(t), verify_identities(t)); });
}

void run_structure(const SuiteOptions& o, Emitter& out) {
  require_max_n(o, 8);
  each_tree(o.max_n, [&](const Tree& t) { out.report(tree_id(t), structural_checks(t)); });
}

void run_oracle(const SuiteOptions& o, Emitter& out) {
  require_max_n(o, 7);
  each_tree(o.max_n, [&](const Tree& t) {
    std::string id = tree_id(t);
    for (int j = 1; j <= t.size(); ++j) {
      GeneratorSet minimal = critical_ideal(t, j).generators;
      GeneratorSet all = all_minor_ideal(t, j);
      auto missing = std::find_if(minimal.begin(), minimal.end(), [&](const Polynomial& p) { return !all.contains(p); });
      GeneratorSet basis = completed(minimal, o.budget);
      auto stray = std::find_if(all.begin(), all.end(), [&](const Polynomial& p) { return !reduces_to_zero(p, basis); });
      std::optional<std::string> witness;
      if (missing != minimal.end()) witness = "generator not a minor: " + missing->to_string();
      if (stray != all.end()) witness = "minor outside ideal: " + stray->to_string();
      out.check(id, j, "oracle_equivalence", !witness, witness);
    }
  });
}

void run_gamma(const SuiteOptions& o, Emitter& out) {
  require_max_n(o, 8);
  each_tree(o.max_n, [&](const Tree& t) {
    GammaCertificate c = certify_gamma(t, o.budget);
    out.check(tree_id(t), c.nu2, "gamma_equals_nu2", c.ok(),
              "trivial_at_nu2=" + std::to_string(c.trivial_at_nu2) + " proper_above=" + std::to_string(c.proper_above));
  });
}

void run_groebner(const SuiteOptions& o, Emitter& out) {
  require_max_n(o, 8);
  auto one = [&](const Tree& t) {
    PathBasisCheck c = groebner_check_paths(t);
    out.check(tree_id(t), t.size() - 1, "leaf_pair_basis", c.ok(),
              "size=" + std::to_string(c.basis_size) + " pairs=" + std::to_string(c.leaf_pairs) +
                  " groebner=" + std::to_string(c.groebner) + " reduced=" + std::to_string(c.reduced));
  };
  each_tree(o.max_n, one);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> size(std::min(o.max_n + 1, 12), 12);
  for (int i = 0; i < 100; ++i) one(random_tree(size(rng), rng()));
}

void run_conjecture(const SuiteOptions& o, Emitter& out) {
  require_max_n(o, 7);
  each_tree(o.max_n, [&](const Tree& t) {
    std::string id = tree_id(t);
    for (const auto& c : conjecture_scan(t)) {
      ReportRecord r{id, c.j, "reduced_groebner_basis", c.pass() ? "pass" : "finding", std::nullopt};
      if (!c.pass()) r.witness = "groebner=" + std::to_string(c.groebner) + " reduced=" + std::to_string(c.reduced);
      out.emit(std::move(r));
    }
  });
}

void run_bridge(const SuiteOptions& o, Emitter& out) {
  require_max_n(o, 7);
  each_tree(o.max_n, [&](const Tree& t) {
    MultiGraph g = MultiGraph::from_forest(t);
    std::vector<Integer> values{Integer(0)};
    for (const Integer& d : degree_vector(g)) values.push_back(d);
    SmithNormalForm snf = smith_normal_form(laplacian_matrix(g));
    Integer product = 1;
    for (int j = 1; j <= t.size(); ++j) {
      product *= snf.factors[j - 1];
      Integer value = evaluate_ideal(critical_ideal(t, j).generators, values);
      out.check(tree_id(t), j, "evaluation_matches_snf", value == product,
                "evaluated=" + value.get_str() + " snf_product=" + product.get_str());
    }
  });
}

void run_wired(const SuiteOptions&, Emitter& out) {
  auto record = [&](const WiredReport& w, bool check_factor) {
    out.check(w.graph, std::nullopt, "rank_equals_predicted", w.measured_rank == w.predicted_rank,
              "measured=" + std::to_string(w.measured_rank) + " predicted=" + std::to_string(w.predicted_rank));
    if (check_factor) {
      bool ok = w.first_nontrivial_factor && *w.first_nontrivial_factor == w.d;
      out.check(w.graph, std::nullopt, "first_factor_equals_d", ok,
                "first=" + (w.first_nontrivial_factor ? w.first_nontrivial_factor->get_str() : std::string("none")));
    }
    bool agrees = Integer(static_cast<unsigned long>(w.measured_rank)) == w.claimed_rank;
    out.emit({w.graph, std::nullopt, "rank_vs_claimed_power", agrees ? "pass" : "finding",
              "measured=" + std::to_string(w.measured_rank) + " claimed=" + w.claimed_rank.get_str()});
  };
  for (int d : {4, 5}) {
    for (int h : {2, 3}) record(wired_tree_report(d, h), true);
  }
  for (int h : {2, 3}) record(levine_report(4, h), false);
}

void run_arithmetical(const SuiteOptions&, Emitter& out) {
  for (int m = 5; m <= 10; ++m) {
    std::string id = "c5:" + std::to_string(m);
    ArithmeticalGraph a = c5_arithmetical(m);
    bool valid = validate_arithmetical(a.graph, a.d, a.r);
    out.check(id, std::nullopt, "arithmetical_valid", valid);
    if (!valid) continue;
    AbelianGroup g = critical_group(a);
    std::vector<Integer> expected = m % 2 == 0 ? std::vector<Integer>{2, 2} : std::vector<Integer>{4};
    out.check(id, std::nullopt, "group_by_parity", g.torsion == expected, g.torsion_string());
    out.check(id, std::nullopt, "torsion_order_four", g.torsion_order() == 4, g.torsion_order().get_str());
  }
}

void run_paths(const SuiteOptions& o, Emitter& out) {
  require_max_n(o, 8);
  for (int n = 2; n <= o.max_n; ++n) {
    std::size_t bad = 0;
    std::string witness;
    for_each_labeled_tree(n, [&](const Tree& t) {
      if ((nu2(t) == n - 1) != t.is_path()) {
        if (bad++ == 0) witness = tree_id(t);
      }
      return true;
    });
    out.check("trees:n" + std::to_string(n), std::nullopt, "full_nu2_iff_path", bad == 0, witness);
  }
  for (int n = 3; n <= std::min(o.max_n, 6); ++n) {
    std::size_t bad = 0;
    std::string witness;
    for_each_connected_cyclic_graph(n, [&](const MultiGraph& g) {
      if (spanning_tree_count(g) <= 1 && bad++ == 0) witness = serialize_multigraph(g);
      return true;
    });
    out.check("graphs:n" + std::to_string(n), std::nullopt, "cyclic_tree_count_above_one", bad == 0, witness);
  }
}

using SuiteFn = void (*)(const SuiteOptions&, Emitter&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"identities", run_identities}, {"structure", run_structure}, {"oracle", run_oracle},
      {"gamma", run_gamma},           {"groebner", run_groebner},   {"conjecture", run_conjecture},
      {"bridge", run_bridge},         {"wired", run_wired},         {"arithmetical", run_arithmetical},
      {"paths", run_paths},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteSummary run_suite(const std::string& name, const SuiteOptions& options, const RecordSink& sink) {
  for (const auto& [suite, fn] : registry()) {
    if (suite != name) continue;
    Emitter out(sink);
    fn(options, out);
    return out.summary();
  }
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace critideals
