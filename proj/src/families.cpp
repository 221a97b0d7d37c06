#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "critideals/treegraph.hpp"

namespace critideals {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

// Complete tree: the root gets root_children children, every other internal vertex child_count.
Tree complete_tree(int root_children, int child_count, int depth) {
  std::vector<Edge> edges;
  std::deque<std::pair<Vertex, int>> queue{{1, 0}};
  Vertex next = 2;
  while (!queue.empty()) {
    auto [v, level] = queue.front();
    queue.pop_front();
    if (level == depth) continue;
    int kids = v == 1 ? root_children : child_count;
    for (int i = 0; i < kids; ++i) {
      edges.emplace_back(v, next);
      queue.emplace_back(next++, level + 1);
    }
  }
  return Tree::from_edges(next - 1, std::move(edges));
}

}  // namespace

Tree path_tree(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Tree::from_edges(n, std::move(edges));
}

Tree star_tree(int m) {
  require(m >= 2, "star needs m >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= m; ++v) edges.emplace_back(v, m + 1);
  return Tree::from_edges(m + 1, std::move(edges));
}

Tree depth2_tree(std::span<const int> branch_sizes) {
  require(!branch_sizes.empty(), "depth-2 tree needs at least one branch");
  int s = static_cast<int>(branch_sizes.size());
  std::vector<Edge> edges;
  Vertex next = s + 2;
  for (int i = 0; i < s; ++i) {
    require(branch_sizes[i] >= 1, "depth-2 branches need at least one leaf");
    Vertex child = i + 2;
    edges.emplace_back(1, child);
    for (int k = 0; k < branch_sizes[i]; ++k) edges.emplace_back(child, next++);
  }
  return Tree::from_edges(next - 1, std::move(edges));
}

Tree j_tree(int n1, int n2, int n3) {
  require(n1 >= 2 && n2 >= 2 && n3 >= 2, "J needs every path length >= 2");
  std::vector<Edge> edges;
  Vertex root = n1;
  for (Vertex v = 1; v < root; ++v) edges.emplace_back(v, v + 1);
  Vertex prev = root;
  Vertex next = root + 1;
  for (int k = 1; k < n2; ++k, ++next) {
    edges.emplace_back(prev, next);
    prev = next;
  }
  prev = root;
  for (int k = 1; k < n3; ++k, ++next) {
    edges.emplace_back(prev, next);
    prev = next;
  }
  return Tree::from_edges(next - 1, std::move(edges));
}

Tree regular_tree(int d, int h) {
  require(d >= 3 && h >= 1, "regular tree needs d >= 3 and h >= 1");
  return complete_tree(d, d - 1, h);
}

Tree regular_branch(int d, int h) {
  require(d >= 3 && h >= 1, "regular branch needs d >= 3 and h >= 1");
  return complete_tree(d - 1, d - 1, h);
}

Tree c5_tree(int m) {
  require(m >= 1, "C5 needs m >= 1");
  std::vector<Edge> edges{{1, 5}, {2, 5}, {3, 6}, {4, 6}};
  std::vector<Vertex> inner;
  if (m >= 2) inner.push_back(7);
  for (Vertex v = 9; v <= m + 5; ++v) inner.push_back(v);
  if (m >= 3) inner.push_back(8);
  Vertex prev = 5;
  for (Vertex v : inner) {
    edges.emplace_back(prev, v);
    prev = v;
  }
  edges.emplace_back(prev, 6);
  return Tree::from_edges(m + 5, std::move(edges));
}

MultiGraph collapse_leaves(const Tree& t, Vertex root) {
  std::vector<Vertex> label(static_cast<std::size_t>(t.size()) + 1, 0);
  Vertex next = 1;
  for (Vertex v : t.vertices()) {
    if (t.degree(v) != 1 || v == root) label[v] = next++;
  }
  Vertex sink = next;
  MultiGraph g(sink);
  for (const Edge& e : t.edges()) {
    Vertex a = label[e.u] != 0 ? label[e.u] : sink;
    Vertex b = label[e.v] != 0 ? label[e.v] : sink;
    g.add_edge(a, b);
  }
  return g;
}

MultiGraph wired_regular(int d, int h) { return collapse_leaves(regular_tree(d, h), 1); }

MultiGraph levine_wired(int d, int h) {
  MultiGraph g = collapse_leaves(regular_branch(d, h), 1);
  g.add_edge(g.size(), 1);
  return g;
}

FamilySpec FamilySpec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(ParseError::Kind::syntax, "family spec needs 'kind:params'");
  FamilySpec spec;
  for (char c : text.substr(0, colon)) spec.kind.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  static const char* const kinds[] = {"path", "star", "depth2", "j", "regular", "branch", "c5", "wired", "levine"};
  if (std::find(std::begin(kinds), std::end(kinds), spec.kind) == std::end(kinds)) {
    throw ParseError(ParseError::Kind::syntax, "unknown family '" + spec.kind + "'");
  }
  std::string params(text.substr(colon + 1));
  std::istringstream in(params);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw ParseError(ParseError::Kind::syntax, "bad family parameter '" + tok + "'");
    spec.params.push_back(value);
  }
  std::size_t want = 0;
  if (spec.kind == "path" || spec.kind == "star" || spec.kind == "c5") want = 1;
  if (spec.kind == "regular" || spec.kind == "branch" || spec.kind == "wired" || spec.kind == "levine") want = 2;
  if (spec.kind == "j") want = 3;
  if ((want != 0 && spec.params.size() != want) || spec.params.empty()) {
    throw ParseError(ParseError::Kind::syntax, "wrong number of parameters for family '" + spec.kind + "'");
  }
  return spec;
}

bool FamilySpec::is_tree() const { return kind != "wired" && kind != "levine"; }

std::string FamilySpec::to_string() const {
  std::string out = kind == "j" ? "J" : kind;
  out += ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(params[i]);
  }
  return out;
}

Tree build_tree(const FamilySpec& spec) {
  const auto& p = spec.params;
  if (spec.kind == "path") return path_tree(p[0]);
  if (spec.kind == "star") return star_tree(p[0]);
  if (spec.kind == "depth2") return depth2_tree(p);
  if (spec.kind == "j") return j_tree(p[0], p[1], p[2]);
  if (spec.kind == "regular") return regular_tree(p[0], p[1]);
  if (spec.kind == "branch") return regular_branch(p[0], p[1]);
  if (spec.kind == "c5") return c5_tree(p[0]);
  throw InputError("family '" + spec.kind + "' is not a tree");
}

MultiGraph build_graph(const FamilySpec& spec) {
  if (spec.kind == "wired") return wired_regular(spec.params[0], spec.params[1]);
  if (spec.kind == "levine") return levine_wired(spec.params[0], spec.params[1]);
  return MultiGraph::from_forest(build_tree(spec));
}

}  // namespace critideals
