#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "critideals/report.hpp"
#include "critideals/treegraph.hpp"

namespace critideals {

/// Edge set of T^ℓ: tree edges plus loops. A loop counts twice toward incidence, once toward size.
struct TwoMatching {
  std::vector<Edge> edges;
  std::vector<Vertex> loops;

  TwoMatching() = default;
  TwoMatching(std::vector<Edge> es, std::vector<Vertex> ls);

  std::size_t size() const { return edges.size() + loops.size(); }
  bool has_loop(Vertex v) const;
  bool has_edge(Edge e) const;
  /// Vertices covered by non-loop edges.
  std::vector<Vertex> covered() const;

  /// "1-2,2-5,3!" with edges then loops, each sorted; "{}" when empty.
  std::string to_string() const;
  static TwoMatching parse(std::string_view text);

  friend auto operator<=>(const TwoMatching&, const TwoMatching&) = default;
};

/// Order in which enumerate_two_matchings emits matchings: lexicographic over item sequences,
/// tree edges (sorted) before loops (by vertex).
bool enumeration_less(const TwoMatching& a, const TwoMatching& b);

struct HeadsTails {
  std::vector<Vertex> heads;
  std::vector<Vertex> tails;
};

/// Throws InputError when an edge or loop is not part of the forest.
bool is_two_matching(const Forest& f, const TwoMatching& m);

int nu2(const Forest& f);
/// Maximum 2-matching size when vertex v may use at most caps[v] edges and banned edges are excluded.
int nu2_capped(const Forest& f, std::span<const int> caps, std::span<const Edge> banned = {});

struct Saturation {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  friend bool operator==(const Saturation&, const Saturation&) = default;
};

/// Capacity-restricted dynamic programs: v is saturated iff capping it at one edge lowers ν₂,
/// e is saturated iff banning it lowers ν₂.
Saturation saturation(const Forest& f);
/// Intersection over all maximum 2-matchings, enumerated explicitly.
Saturation saturation_exhaustive(const Forest& f);

using MatchingVisitor = std::function<bool(const TwoMatching&)>;

/// 2-matchings of the given size, loops allowed on loop_vertices; visitor returns false to stop.
void for_each_two_matching(const Forest& f, std::span<const Vertex> loop_vertices, int size, const MatchingVisitor& visit);
void for_each_two_matching(const Forest& f, bool with_loops, int size, const MatchingVisitor& visit);
std::vector<TwoMatching> enumerate_two_matchings(const Forest& f, bool with_loops, int size);
/// Loopless 2-matchings to which no edge can be added.
std::vector<TwoMatching> maximal_two_matchings(const Forest& f);

/// No 2-matching of the same size has a strictly smaller loop set. Throws InputError for invalid m.
bool is_minimal(const Forest& f, const TwoMatching& m);

/// Largest tree for the subset scan behind minimal_loop_sets.
inline constexpr int kMaxMinimalScanSize = 22;

/// Loop sets of the minimal 2-matchings of size j, each sorted, in increasing bitmask order.
std::vector<std::vector<Vertex>> minimal_loop_sets(const Tree& t, int j);
/// V₂*(T^ℓ, j) in enumeration order.
std::vector<TwoMatching> enumerate_minimal(const Tree& t, int j);
/// One enumeration-first minimal 2-matching per minimal loop set, in enumeration order.
std::vector<TwoMatching> minimal_representatives(const Tree& t, int j);

/// Each path component is oriented from its smaller-label end; loops land in both sets.
HeadsTails heads_tails(const Forest& f, const TwoMatching& m);

/// Exhaustive checks of the structural statements about 2-matchings of trees (n <= 10).
CheckReport structural_checks(const Tree& t);

}  // namespace critideals
