#include "critideals/ideals.hpp"

#include <algorithm>
#include <map>

namespace critideals {

namespace {

void require_j(const Tree& t, int j) {
  if (j < 1 || j > t.size()) {
    throw InputError("j must lie in 1.." + std::to_string(t.size()) + ", got " + std::to_string(j));
  }
}

// Some 2-matching of size j has exactly these loops.
bool realisable(const Tree& t, const std::vector<Vertex>& loops, int j) {
  int edges = j - static_cast<int>(loops.size());
  if (edges < 0) return false;
  return nu2(t.delete_vertices(loops)) >= edges;
}

TwoMatching representative(const Tree& t, const std::vector<Vertex>& loops, int j) {
  Forest rest = t.delete_vertices(loops);
  TwoMatching out;
  bool found = false;
  for_each_two_matching(rest, false, j - static_cast<int>(loops.size()), [&](const TwoMatching& m) {
    out = TwoMatching(m.edges, loops);
    found = true;
    return false;
  });
  if (!found) throw std::logic_error("loop set not realisable");
  return out;
}

std::vector<Vertex> without(const std::vector<Vertex>& set, std::initializer_list<Vertex> drop) {
  std::vector<Vertex> out;
  for (Vertex v : set) {
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  }
  return out;
}

using Combination = std::map<std::vector<Vertex>, Polynomial>;

class Expander {
 public:
  Expander(const Tree& t, int j) : t_(t), j_(j) {}

  const Combination& expand(const std::vector<Vertex>& loops) {
    if (auto it = memo_.find(loops); it != memo_.end()) return it->second;
    Combination out;
    if (is_minimal(t_, representative(t_, loops, j_))) {
      out.emplace(loops, Polynomial(1));
      return memo_.emplace(loops, std::move(out)).first->second;
    }
    Vertex w = pick(loops);
    std::vector<Vertex> reduced = without(loops, {w});
    accumulate(out, expand(reduced), Polynomial::variable(w));
    for (Vertex v : t_.neighbors(w)) {
      if (!std::binary_search(loops.begin(), loops.end(), v)) continue;
      accumulate(out, expand(without(loops, {v, w})), Polynomial(-1));
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return memo_.emplace(loops, std::move(out)).first->second;
  }

 private:
  Vertex pick(const std::vector<Vertex>& loops) const {
    for (auto it = loops.rbegin(); it != loops.rend(); ++it) {
      Vertex w = *it;
      std::vector<Vertex> reduced = without(loops, {w});
      if (!realisable(t_, reduced, j_)) continue;
      bool ok = true;
      for (Vertex v : t_.neighbors(w)) {
        if (std::binary_search(loops.begin(), loops.end(), v) && !realisable(t_, without(loops, {v, w}), j_)) ok = false;
      }
      if (ok) return w;
    }
    throw std::logic_error("no loop vertex can be eliminated");
  }

  static void accumulate(Combination& into, const Combination& part, const Polynomial& factor) {
    for (const auto& [loops, coeff] : part) into[loops] += factor * coeff;
  }

  const Tree& t_;
  int j_;
  std::map<std::vector<Vertex>, Combination> memo_;
};

}  // namespace

const TwoMatching* CriticalIdeal::provenance_of(const Polynomial& p) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == p) return &provenance[i];
  }
  return nullptr;
}

CriticalIdeal critical_ideal(const Tree& t, int j) {
  require_j(t, j);
  CriticalIdeal ideal;
  ideal.j = j;
  std::vector<std::pair<Polynomial, TwoMatching>> produced;
  for (const auto& m : minimal_representatives(t, j)) {
    Polynomial d = d_of_matching(t, m);
    if (ideal.generators.insert(d)) produced.emplace_back(std::move(d), m);
  }
  for (const auto& g : ideal.generators) {
    auto it = std::find_if(produced.begin(), produced.end(), [&](const auto& pm) { return pm.first == g; });
    ideal.provenance.push_back(it->second);
  }
  return ideal;
}

GeneratorSet all_minor_ideal(const Tree& t, int j, std::size_t max_minors) {
  require_j(t, j);
  const auto& vs = t.vertices();
  std::vector<std::vector<Vertex>> subsets;
  std::vector<Vertex> pick;
  auto build = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == j) {
      subsets.push_back(pick);
      return;
    }
    for (std::size_t i = from; i < vs.size(); ++i) {
      pick.push_back(vs[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  build(build, 0);
  if (subsets.size() * subsets.size() > max_minors) {
    throw ResourceLimit("all-minor ideal needs " + std::to_string(subsets.size() * subsets.size()) + " minors");
  }
  MinorEngine engine(generalized_laplacian(t));
  GeneratorSet out;
  for (const auto& rows : subsets) {
    for (const auto& cols : subsets) out.insert(normalize_sign(engine.minor(rows, cols)));
  }
  return out;
}

int gamma(const Tree& t) { return nu2(t); }

GeneratorSet completed(const GeneratorSet& gens, const CompletionBudget& budget) { return groebner_complete(gens, budget); }

bool ideal_contains(const GeneratorSet& groebner_basis, const GeneratorSet& gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return reduces_to_zero(g, groebner_basis); });
}

bool same_ideal(const GeneratorSet& a, const GeneratorSet& b, const CompletionBudget& budget) {
  return ideal_contains(completed(a, budget), b) && ideal_contains(completed(b, budget), a);
}

GammaCertificate certify_gamma(const Tree& t, const CompletionBudget& budget) {
  GammaCertificate cert;
  cert.nu2 = nu2(t);
  cert.trivial_at_nu2 = cert.nu2 == 0 || completed(critical_ideal(t, cert.nu2).generators, budget).contains_one();
  cert.proper_above = cert.nu2 >= t.size() || !completed(critical_ideal(t, cert.nu2 + 1).generators, budget).contains_one();
  return cert;
}

std::vector<ExpansionTerm> expand_nonminimal(const Tree& t, const TwoMatching& m) {
  if (!is_two_matching(t, m)) throw InputError("not a 2-matching: " + m.to_string());
  if (is_minimal(t, m)) throw InputError("already minimal");
  int j = static_cast<int>(m.size());
  Expander expander(t, j);
  std::vector<ExpansionTerm> out;
  for (const auto& [loops, coeff] : expander.expand(m.loops)) out.push_back({coeff, representative(t, loops, j)});
  std::sort(out.begin(), out.end(), [](const ExpansionTerm& a, const ExpansionTerm& b) { return enumeration_less(a.minimal, b.minimal); });
  return out;
}

Polynomial recombine(const Tree& t, std::span<const ExpansionTerm> expansion) {
  Polynomial sum;
  for (const auto& term : expansion) sum += term.coefficient * d_of_matching(t, term.minimal);
  return sum;
}

GeneratorSet leaf_pair_basis(const Tree& t) {
  GeneratorSet out;
  auto leaves = t.leaves();
  for (std::size_t a = 0; a < leaves.size(); ++a) {
    for (std::size_t b = a + 1; b < leaves.size(); ++b) {
      PathSpec p = t.path_between(leaves[a], leaves[b]);
      std::vector<Edge> edges;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.emplace_back(p[i], p[i + 1]);
      std::vector<Vertex> loops;
      for (Vertex v : t.vertices()) {
        if (std::find(p.begin(), p.end(), v) == p.end()) loops.push_back(v);
      }
      out.insert(d_of_matching(t, TwoMatching(std::move(edges), std::move(loops))));
    }
  }
  return out;
}

PathBasisCheck groebner_check_paths(const Tree& t) {
  PathBasisCheck check;
  GeneratorSet basis = leaf_pair_basis(t);
  std::size_t k = t.leaves().size();
  check.basis_size = basis.size();
  check.leaf_pairs = k * (k - 1) / 2;
  check.groebner = is_groebner_basis(basis);
  check.reduced = check.groebner && is_reduced_groebner_basis(basis);
  return check;
}

std::vector<ConjectureOutcome> conjecture_scan(const Tree& t, std::optional<int> j) {
  std::vector<ConjectureOutcome> out;
  int lo = j ? *j : 1;
  int hi = j ? *j : t.size();
  for (int k = lo; k <= hi; ++k) {
    GeneratorSet basis = critical_ideal(t, k).generators;
    ConjectureOutcome o;
    o.j = k;
    o.basis_size = basis.size();
    o.groebner = is_groebner_basis(basis);
    o.reduced = o.groebner && is_reduced_groebner_basis(basis);
    out.push_back(o);
  }
  return out;
}

GeneratorSet star_ideal(int m, int j) {
  if (m < 3) throw InputError("star ideal needs m >= 3");
  if (j < 3 || j > m + 1) throw InputError("star ideal needs 3 <= j <= m+1");
  GeneratorSet out;
  if (j == m + 1) {
    std::vector<int> leaves(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) leaves[i] = i + 1;
    std::vector<int> all = leaves;
    all.push_back(m + 1);
    std::vector<Term> terms{{Integer(1), Monomial::product(all)}};
    for (int skip = 1; skip <= m; ++skip) {
      std::vector<int> rest;
      for (int v : leaves) {
        if (v != skip) rest.push_back(v);
      }
      terms.push_back({Integer(-1), Monomial::product(rest)});
    }
    out.insert(Polynomial::from_terms(std::move(terms)));
    return out;
  }
  int k = j - 2;
  std::vector<int> pick;
  auto build = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == k) {
      out.insert(Polynomial::monomial(Integer(1), Monomial::product(pick)));
      return;
    }
    for (int v = from; v <= m; ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  build(build, 1);
  return out;
}

std::optional<int> depth2_pattern(std::span<const int> branch_sizes, const TwoMatching& m) {
  const Vertex root = 1;
  int s = static_cast<int>(branch_sizes.size());
  bool root_loop = m.has_loop(root);
  int through = 0;
  int cherry = 0;
  int full = 0;
  Vertex first_leaf = s + 2;
  for (int b = 0; b < s; ++b) {
    Vertex centre = b + 2;
    std::vector<Vertex> leaves;
    for (int k = 0; k < branch_sizes[b]; ++k) leaves.push_back(first_leaf++);
    int leaf_edges = 0;
    int leaf_loops = 0;
    for (Vertex l : leaves) {
      leaf_edges += m.has_edge(Edge(centre, l)) ? 1 : 0;
      leaf_loops += m.has_loop(l) ? 1 : 0;
    }
    bool up = m.has_edge(Edge(root, centre));
    bool centre_loop = m.has_loop(centre);
    if (centre_loop) {
      if (up || leaf_edges > 0 || leaf_loops != static_cast<int>(leaves.size())) return std::nullopt;
      ++full;
    } else if (up && leaf_edges == 1) {
      ++through;
    } else if (!up && leaf_edges == 2) {
      ++cherry;
    } else {
      return std::nullopt;
    }
  }
  if (root_loop && through > 0) return std::nullopt;
  if (!root_loop && through == 2 && full == 0) return 1;
  if (!root_loop && through == 1 && full == 0) return 2;
  if (!root_loop && through == 0 && full == 0) return 3;
  if (!root_loop && through == 2 && full >= 1) return 4;
  if (root_loop) return 5;
  return std::nullopt;
}

}  // namespace critideals
