#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "critideals/errors.hpp"

namespace critideals {

using Vertex = int;

/// Unordered edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Ordered vertex sequence of a path; a single vertex is a path of length 0.
using PathSpec = std::vector<Vertex>;

/// Acyclic graph on a subset of the labels 1..label_bound; labels survive deletions.
class Forest {
 public:
  Forest() = default;
  /// Throws ParseError on self-loops, duplicates, cycles or labels outside the vertex set.
  Forest(int label_bound, std::vector<Vertex> vertices, std::vector<Edge> edges);

  int label_bound() const { return label_bound_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool contains(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;
  /// Position of the edge in edges(), or -1.
  int edge_index(Edge e) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  std::vector<Vertex> leaves() const;

  int component_count() const { return component_count_; }
  int component_of(Vertex v) const;
  std::vector<std::vector<Vertex>> components() const;

  /// Unique path between two vertices of the same component; throws otherwise.
  PathSpec path_between(Vertex a, Vertex b) const;

  Forest delete_vertex(Vertex v) const;
  Forest delete_vertices(std::span<const Vertex> vs) const;
  Forest delete_edge(Edge e) const;
  Forest delete_edges(std::span<const Edge> es) const;
  Forest induced_subgraph(std::span<const Vertex> vs) const;

  /// Bit v set for every present vertex v (labels must be < 64).
  std::uint64_t vertex_mask() const;

  friend bool operator==(const Forest& a, const Forest& b) {
    return a.label_bound_ == b.label_bound_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 protected:
  void require_vertex(Vertex v) const;

 private:
  int label_bound_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<int> component_;
  int component_count_ = 0;
};

/// Connected forest on exactly the labels 1..n.
class Tree : public Forest {
 public:
  /// Throws ParseError when the edges do not form a tree on 1..n.
  static Tree from_edges(int n, std::vector<Edge> edges);

  int size() const { return vertex_count(); }
  bool is_path() const;

 private:
  explicit Tree(Forest f) : Forest(std::move(f)) {}
};

/// Loopless multigraph on 1..n with positive edge multiplicities.
class MultiGraph {
 public:
  explicit MultiGraph(int n = 0);
  static MultiGraph from_forest(const Forest& f);

  void add_edge(Vertex a, Vertex b, int multiplicity = 1);
  int size() const { return n_; }
  int multiplicity(Vertex a, Vertex b) const;
  const std::map<Edge, int>& edges() const { return edges_; }
  int degree(Vertex v) const;
  bool is_connected() const;

 private:
  int n_ = 0;
  std::map<Edge, int> edges_;
};

Tree parse_tree(std::string_view text);
MultiGraph parse_multigraph(std::string_view text);
std::string serialize_tree(const Tree& t);
std::string serialize_multigraph(const MultiGraph& g);

// Families. Stars put the leaves on 1..m and the root on m+1; C5 follows the
// drawing (leaves 1-4, centres 5 and 6, path 5-7-9-10-...-(m+5)-8-6); J numbers
// the left path, root, right path, lower path; the rest are breadth-first.
Tree path_tree(int n);
Tree star_tree(int m);
Tree depth2_tree(std::span<const int> branch_sizes);
Tree j_tree(int n1, int n2, int n3);
Tree regular_tree(int d, int h);
Tree regular_branch(int d, int h);
Tree c5_tree(int m);
/// Leaves of the tree merged into one new vertex n+1, keeping parallel edges.
MultiGraph collapse_leaves(const Tree& t, Vertex root);
MultiGraph wired_regular(int d, int h);
MultiGraph levine_wired(int d, int h);

struct FamilySpec {
  std::string kind;
  std::vector<int> params;

  /// "kind:p1,p2,..." with kind in path, star, depth2, J, regular, branch, c5, wired, levine.
  static FamilySpec parse(std::string_view text);
  bool is_tree() const;
  std::string to_string() const;
};

Tree build_tree(const FamilySpec& spec);
MultiGraph build_graph(const FamilySpec& spec);

inline constexpr int kMaxExhaustiveTreeSize = 8;

/// Labeled trees on 1..n in lexicographic Prüfer order (n^(n-2) of them); visitor returns false to stop.
template <typename Visitor>
void for_each_labeled_tree(int n, Visitor&& visit);
std::vector<Tree> enumerate_labeled_trees(int n);
Tree tree_from_pruefer(int n, std::span<const int> code);
std::vector<int> pruefer_code(const Tree& t);
/// Uniform labeled tree from a seeded random Prüfer code.
Tree random_tree(int n, std::uint64_t seed);
/// Identifier of the form "n7:1.2.3.4.5" built from the Prüfer code.
std::string tree_id(const Tree& t);

template <typename Visitor>
void for_each_labeled_tree(int n, Visitor&& visit) {
  if (n < 2) throw InputError("labeled tree enumeration needs n >= 2");
  if (n > kMaxExhaustiveTreeSize) {
    throw InputError("exhaustive enumeration limited to n <= " + std::to_string(kMaxExhaustiveTreeSize));
  }
  std::vector<int> code(static_cast<std::size_t>(n - 2), 1);
  while (true) {
    if (!visit(tree_from_pruefer(n, code))) return;
    int k = n - 3;
    while (k >= 0 && code[k] == n) code[k--] = 1;
    if (k < 0) return;
    ++code[k];
  }
}

}  // namespace critideals
