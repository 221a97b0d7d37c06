#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "critideals/ideals.hpp"
#include "critideals/intalg.hpp"

namespace testing_support {

using namespace critideals;

inline Polynomial random_polynomial(std::mt19937_64& rng, int vars, int max_terms, unsigned max_exp, long max_coeff) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
  std::vector<Term> terms;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    for (int v = 1; v <= vars; ++v) m *= Monomial::variable(v, exp(rng));
    terms.push_back({Integer(coeff(rng)), m});
  }
  return Polynomial::from_terms(std::move(terms));
}

inline std::vector<Integer> random_point(std::mt19937_64& rng, int vars) {
  std::uniform_int_distribution<long> val(-4, 4);
  std::vector<Integer> out{Integer(0)};
  for (int v = 1; v <= vars; ++v) out.push_back(val(rng));
  return out;
}

/// Leibniz determinant of a symbolic submatrix: sum over permutations.
inline Polynomial leibniz_minor(const SymbolicMatrix& l, const std::vector<Vertex>& rows, const std::vector<Vertex>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det;
  do {
    Polynomial term(1L);
    for (std::size_t i = 0; i < rows.size() && !term.is_zero(); ++i) term *= l.entry(rows[i], cols[perm[i]]);
    if (term.is_zero()) continue;
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
    }
    if (inversions % 2) term = -term;
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Every multiset of tree edges and loops of the given size, filtered by the incidence rule.
inline std::set<TwoMatching> brute_two_matchings(const Tree& t, int size) {
  std::vector<Edge> edges(t.edges().begin(), t.edges().end());
  const int n = t.size();
  const int items = static_cast<int>(edges.size()) + n;
  std::set<TwoMatching> out;
  for (std::uint32_t mask = 0; mask < (1u << items); ++mask) {
    if (std::popcount(mask) != size) continue;
    std::vector<int> incidence(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Edge> es;
    std::vector<Vertex> loops;
    for (int i = 0; i < items; ++i) {
      if (!(mask >> i & 1)) continue;
      if (i < static_cast<int>(edges.size())) {
        es.push_back(edges[i]);
        ++incidence[edges[i].u];
        ++incidence[edges[i].v];
      } else {
        Vertex v = i - static_cast<int>(edges.size()) + 1;
        loops.push_back(v);
        incidence[v] += 2;
      }
    }
    if (std::all_of(incidence.begin(), incidence.end(), [](int c) { return c <= 2; })) out.insert(TwoMatching(es, loops));
  }
  return out;
}

inline bool subset_of(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Minimality straight from the definition: no same-size 2-matching has a strictly smaller loop set.
inline bool minimal_by_definition(const std::set<TwoMatching>& same_size, const TwoMatching& m) {
  for (const auto& other : same_size) {
    if (other.loops.size() < m.loops.size() && subset_of(other.loops, m.loops)) return false;
  }
  return true;
}

/// Dense integer matrix from a generalized Laplacian evaluated at values.
inline IntMatrix evaluate_matrix(const SymbolicMatrix& l, std::span<const Integer> values) {
  IntMatrix out(l.size(), l.size());
  for (std::size_t r = 0; r < l.size(); ++r) {
    for (std::size_t c = 0; c < l.size(); ++c) out.at(r, c) = l.at(r, c).evaluate(values);
  }
  return out;
}

}  // namespace testing_support
