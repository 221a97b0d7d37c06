#include <gtest/gtest.h>

#include "support.hpp"

using namespace critideals;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = entry(rng);
  }
  return m;
}

Integer leibniz(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  Integer det = 0;
  do {
    Integer term = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) term *= m.at(rows[i], cols[perm[i]]);
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
    }
    det += inversions % 2 ? Integer(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    out.push_back(s);
  }
  return out;
}

// gcd of all k x k minors.
Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  for (const auto& rows : subsets(m.rows(), k)) {
    for (const auto& cols : subsets(m.cols(), k)) g = gcd(g, leibniz(m, rows, cols));
  }
  return g;
}

Integer brute_spanning_trees(const MultiGraph& g) {
  std::vector<Edge> edges;
  for (const auto& [e, mult] : g.edges()) {
    for (int i = 0; i < mult; ++i) edges.push_back(e);
  }
  const std::size_t need = static_cast<std::size_t>(g.size()) - 1;
  Integer count = 0;
  for (const auto& pick : subsets(edges.size(), need)) {
    std::vector<int> parent(static_cast<std::size_t>(g.size()) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool acyclic = true;
    for (std::size_t i : pick) {
      int a = find(edges[i].u);
      int b = find(edges[i].v);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[a] = b;
    }
    if (acyclic) ++count;
  }
  return count;
}

MultiGraph complete_graph(int n) {
  MultiGraph g(n);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) g.add_edge(a, b);
  }
  return g;
}

TEST(SmithNormalForm, TransformsAndDivisibilityOnRandomMatrices) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 4;
    std::size_t cols = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, rows, cols, trial % 2 ? 3 : 12);
    SmithNormalForm snf = smith_normal_form(m, true);
    ASSERT_TRUE(snf.u && snf.v);
    IntMatrix diag(rows, cols);
    for (std::size_t i = 0; i < snf.factors.size(); ++i) diag.at(i, i) = snf.factors[i];
    EXPECT_EQ(*snf.u * m * *snf.v, diag);
    EXPECT_EQ(abs(determinant(*snf.u)), 1);
    EXPECT_EQ(abs(determinant(*snf.v)), 1);
    std::size_t rank = 0;
    Integer product = 1;
    for (std::size_t k = 0; k < snf.factors.size(); ++k) {
      EXPECT_GE(snf.factors[k], 0);
      if (snf.factors[k] != 0) ++rank;
      if (k + 1 < snf.factors.size() && snf.factors[k + 1] != 0) EXPECT_TRUE(snf.factors[k + 1] % snf.factors[k] == 0);
      product *= snf.factors[k];
      EXPECT_EQ(product, determinantal_divisor(m, k + 1)) << "k=" << k + 1;
    }
    EXPECT_EQ(snf.rank, rank);
  }
}

TEST(Determinant, MatchesLeibniz) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, n, n, 9);
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(determinant(m), leibniz(m, all, all));
  }
  EXPECT_THROW(determinant(IntMatrix(2, 3)), InputError);
}

TEST(Cokernel, SmallExamples) {
  AbelianGroup g = cokernel(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  EXPECT_EQ(g.torsion, std::vector<Integer>{6});
  EXPECT_EQ(g.torsion_string(), "Z_6");
  AbelianGroup z = cokernel(IntMatrix(2, 2));
  EXPECT_EQ(z.free_rank, 2u);
  EXPECT_EQ(z.torsion_string(), "0");
  AbelianGroup k = cokernel(IntMatrix::from_rows({{2, 0}, {0, 2}}));
  EXPECT_EQ(k.torsion_string(), "Z_2 ⊕ Z_2");
  EXPECT_EQ(k.to_json(), R"({"torsion":[2,2],"free_rank":0})");
  EXPECT_THROW(IntMatrix::from_rows({{1, 2}, {3}}), InputError);
}

TEST(CriticalGroup, KnownFamilies) {
  for (int n = 3; n <= 6; ++n) {
    AbelianGroup k = critical_group(complete_graph(n));
    EXPECT_EQ(k.torsion, std::vector<Integer>(static_cast<std::size_t>(n - 2), Integer(n)));
    EXPECT_EQ(k.free_rank, 1u);
    MultiGraph cycle(n);
    for (int v = 1; v <= n; ++v) cycle.add_edge(v, v % n + 1);
    EXPECT_EQ(critical_group(cycle).torsion, std::vector<Integer>{n});
    EXPECT_TRUE(critical_group(MultiGraph::from_forest(path_tree(n))).torsion.empty());
  }
  EXPECT_THROW(critical_group(MultiGraph(2)), InputError);
}

// The torsion order of the critical group counts spanning trees.
TEST(SpanningTrees, MatchBruteForceAndGroupOrder) {
  for (int n = 3; n <= 5; ++n) {
    for_each_connected_cyclic_graph(n, [&](const MultiGraph& g) {
      Integer count = spanning_tree_count(g);
      EXPECT_EQ(count, brute_spanning_trees(g)) << serialize_multigraph(g);
      EXPECT_EQ(critical_group(g).torsion_order(), count);
      return !::testing::Test::HasFailure();
    });
  }
  EXPECT_EQ(spanning_tree_count(complete_graph(6)), 1296);
  MultiGraph fat(2);
  fat.add_edge(1, 2, 3);
  EXPECT_EQ(spanning_tree_count(fat), 3);
}

TEST(CyclicGraphs, EnumerationCountsConnectedNonTrees) {
  // Connected labeled graphs on n vertices minus the n^(n-2) trees.
  const std::size_t connected[] = {0, 1, 1, 4, 38, 728, 26704};
  const std::size_t trees[] = {0, 1, 1, 3, 16, 125, 1296};
  for (int n = 3; n <= 6; ++n) {
    std::size_t count = 0;
    for_each_connected_cyclic_graph(n, [&](const MultiGraph& g) {
      EXPECT_TRUE(g.is_connected());
      ++count;
      return true;
    });
    EXPECT_EQ(count, connected[n] - trees[n]) << "n=" << n;
  }
}

TEST(Arithmetical, ValidationAndGroups) {
  ArithmeticalGraph a = c5_arithmetical(5);
  EXPECT_TRUE(validate_arithmetical(a.graph, a.d, a.r));
  std::vector<Integer> bad_r = a.r;
  bad_r[0] += 1;
  EXPECT_FALSE(validate_arithmetical(a.graph, a.d, bad_r));
  std::vector<Integer> short_r(a.r.begin(), a.r.end() - 1);
  EXPECT_THROW(validate_arithmetical(a.graph, a.d, short_r), InputError);
  EXPECT_EQ(critical_group(a).torsion_string(), "Z_4");
  EXPECT_EQ(critical_group(c5_arithmetical(6)).torsion_string(), "Z_2 ⊕ Z_2");
}

TEST(EvaluateIdeal, GcdOfValues) {
  std::vector<Integer> values{0, 2, 3, 4};
  GeneratorSet gens{parse_polynomial("x1*x3"), parse_polynomial("x2*x3 - 2")};
  EXPECT_EQ(evaluate_ideal(gens, values), 2);
  EXPECT_EQ(evaluate_ideal(GeneratorSet{parse_polynomial("x1 - 2")}, values), 0);
}

TEST(WiredReport, JsonCarriesMeasurements) {
  WiredReport w = wired_tree_report(4, 2);
  EXPECT_EQ(w.measured_rank, w.predicted_rank);
  std::string json = w.to_json();
  for (const char* key : {"\"graph\"", "\"measured_rank\"", "\"predicted_rank\"", "\"claimed_rank\"", "\"factors\""}) {
    EXPECT_NE(json.find(key), std::string::npos) << key;
  }
  EXPECT_THROW(wired_tree_report(3, 2), InputError);
  EXPECT_THROW(wired_tree_report(9, 9), ResourceLimit);
}

}  // namespace
