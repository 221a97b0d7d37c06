#include "critideals/treegraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace critideals {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n) + 1) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

Forest::Forest(int label_bound, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : label_bound_(label_bound), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (label_bound_ < 0) throw InputError("negative label bound");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InputError("duplicate vertex in forest");
  }
  adjacency_.assign(static_cast<std::size_t>(label_bound_) + 1, {});
  component_.assign(static_cast<std::size_t>(label_bound_) + 1, -1);
  std::vector<bool> present(static_cast<std::size_t>(label_bound_) + 1, false);
  for (Vertex v : vertices_) {
    if (v < 1 || v > label_bound_) {
      throw ParseError(ParseError::Kind::label_out_of_range, "vertex " + std::to_string(v) + " out of range");
    }
    present[v] = true;
  }
  for (const Edge& e : edges_) {
    if (e.u < 1 || e.v > label_bound_ || !present[e.u] || !present[e.v]) {
      throw ParseError(ParseError::Kind::label_out_of_range, "edge " + edge_text(e) + " references a missing vertex");
    }
    if (e.u == e.v) throw ParseError(ParseError::Kind::self_loop, "self-loop at " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end()) {
    throw ParseError(ParseError::Kind::duplicate_edge, "duplicate edge " + edge_text(*it));
  }
  DisjointSets sets(label_bound_);
  for (const Edge& e : edges_) {
    if (!sets.unite(e.u, e.v)) throw ParseError(ParseError::Kind::cycle, "edge " + edge_text(e) + " closes a cycle");
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  std::vector<int> root_index(static_cast<std::size_t>(label_bound_) + 1, -1);
  for (Vertex v : vertices_) {
    int r = sets.find(v);
    if (root_index[r] < 0) root_index[r] = component_count_++;
    component_[v] = root_index[r];
  }
}

void Forest::require_vertex(Vertex v) const {
  if (!contains(v)) throw InputError("no vertex " + std::to_string(v));
}

bool Forest::contains(Vertex v) const { return v >= 1 && v <= label_bound_ && component_[v] >= 0; }

bool Forest::has_edge(Vertex a, Vertex b) const { return edge_index(Edge(a, b)) >= 0; }

int Forest::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::span<const Vertex> Forest::neighbors(Vertex v) const {
  require_vertex(v);
  return adjacency_[v];
}

std::vector<Vertex> Forest::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v : vertices_) {
    if (adjacency_[v].size() == 1) out.push_back(v);
  }
  return out;
}

int Forest::component_of(Vertex v) const {
  require_vertex(v);
  return component_[v];
}

std::vector<std::vector<Vertex>> Forest::components() const {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(component_count_));
  for (Vertex v : vertices_) out[component_[v]].push_back(v);
  return out;
}

PathSpec Forest::path_between(Vertex a, Vertex b) const {
  require_vertex(a);
  require_vertex(b);
  if (component_[a] != component_[b]) {
    throw InputError("no path between " + std::to_string(a) + " and " + std::to_string(b));
  }
  std::vector<Vertex> parent(adjacency_.size(), 0);
  std::vector<Vertex> stack{b};
  parent[b] = b;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (v == a) break;
    for (Vertex w : adjacency_[v]) {
      if (parent[w] == 0) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  PathSpec path{a};
  while (path.back() != b) path.push_back(parent[path.back()]);
  return path;
}

Forest Forest::delete_vertex(Vertex v) const {
  Vertex one[] = {v};
  return delete_vertices(one);
}

Forest Forest::delete_vertices(std::span<const Vertex> vs) const {
  std::vector<bool> gone(adjacency_.size(), false);
  for (Vertex v : vs) {
    require_vertex(v);
    gone[v] = true;
  }
  std::vector<Vertex> keep;
  for (Vertex v : vertices_) {
    if (!gone[v]) keep.push_back(v);
  }
  std::vector<Edge> es;
  for (const Edge& e : edges_) {
    if (!gone[e.u] && !gone[e.v]) es.push_back(e);
  }
  return Forest(label_bound_, std::move(keep), std::move(es));
}

Forest Forest::delete_edge(Edge e) const {
  Edge one[] = {e};
  return delete_edges(one);
}

Forest Forest::delete_edges(std::span<const Edge> es) const {
  std::vector<bool> gone(edges_.size(), false);
  for (const Edge& e : es) {
    int i = edge_index(e);
    if (i < 0) throw InputError("no edge " + edge_text(e));
    gone[i] = true;
  }
  std::vector<Edge> keep;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!gone[i]) keep.push_back(edges_[i]);
  }
  return Forest(label_bound_, vertices_, std::move(keep));
}

Forest Forest::induced_subgraph(std::span<const Vertex> vs) const {
  std::vector<bool> in(adjacency_.size(), false);
  for (Vertex v : vs) {
    require_vertex(v);
    in[v] = true;
  }
  std::vector<Vertex> gone;
  for (Vertex v : vertices_) {
    if (!in[v]) gone.push_back(v);
  }
  return delete_vertices(gone);
}

std::uint64_t Forest::vertex_mask() const {
  if (label_bound_ >= 64) throw InputError("vertex masks need labels below 64");
  std::uint64_t m = 0;
  for (Vertex v : vertices_) m |= std::uint64_t{1} << v;
  return m;
}

Tree Tree::from_edges(int n, std::vector<Edge> edges) {
  if (n < 1) throw InputError("a tree needs at least one vertex");
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v > n) {
      throw ParseError(ParseError::Kind::label_out_of_range, "edge " + edge_text(e) + " has a label outside 1.." + std::to_string(n));
    }
  }
  std::vector<Vertex> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 1);
  Forest f(n, std::move(vs), std::move(edges));
  if (f.component_count() != 1) throw ParseError(ParseError::Kind::disconnected, "edges do not connect all vertices");
  return Tree(std::move(f));
}

bool Tree::is_path() const {
  for (Vertex v : vertices()) {
    if (degree(v) > 2) return false;
  }
  return true;
}

MultiGraph::MultiGraph(int n) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
}

MultiGraph MultiGraph::from_forest(const Forest& f) {
  MultiGraph g(f.label_bound());
  for (const Edge& e : f.edges()) g.add_edge(e.u, e.v);
  return g;
}

void MultiGraph::add_edge(Vertex a, Vertex b, int multiplicity) {
  if (a < 1 || b < 1 || a > n_ || b > n_) {
    throw ParseError(ParseError::Kind::label_out_of_range, "edge label outside 1.." + std::to_string(n_));
  }
  if (a == b) throw ParseError(ParseError::Kind::self_loop, "self-loop at " + std::to_string(a));
  if (multiplicity < 1) throw ParseError(ParseError::Kind::multiplicity, "multiplicity must be positive");
  edges_[Edge(a, b)] += multiplicity;
}

int MultiGraph::multiplicity(Vertex a, Vertex b) const {
  auto it = edges_.find(Edge(a, b));
  return it == edges_.end() ? 0 : it->second;
}

int MultiGraph::degree(Vertex v) const {
  int d = 0;
  for (const auto& [e, m] : edges_) {
    if (e.touches(v)) d += m;
  }
  return d;
}

bool MultiGraph::is_connected() const {
  if (n_ <= 1) return true;
  DisjointSets sets(n_);
  int parts = n_;
  for (const auto& [e, m] : edges_) parts -= sets.unite(e.u, e.v) ? 1 : 0;
  return parts == 1;
}

namespace {

struct EdgeLine {
  Vertex u;
  Vertex v;
  int mult;
};

std::pair<int, std::vector<EdgeLine>> parse_edge_list(std::string_view text, bool allow_multiplicity) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<EdgeLine> lines;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw ParseError(ParseError::Kind::syntax, "line " + std::to_string(line_no) + ": not an integer: " + tok);
      }
      nums.push_back(value);
    }
    if (nums.empty()) continue;
    if (n < 0) {
      if (nums.size() != 1 || nums[0] < 1) {
        throw ParseError(ParseError::Kind::syntax, "line " + std::to_string(line_no) + ": expected a positive vertex count");
      }
      n = static_cast<int>(nums[0]);
      continue;
    }
    if (nums.size() < 2 || nums.size() > 3) {
      throw ParseError(ParseError::Kind::syntax, "line " + std::to_string(line_no) + ": expected 'u v [mult]'");
    }
    if (nums.size() == 3 && !allow_multiplicity) {
      throw ParseError(ParseError::Kind::multiplicity, "line " + std::to_string(line_no) + ": multiplicities need multigraph input");
    }
    for (std::size_t i = 0; i < 2; ++i) {
      if (nums[i] < 1 || nums[i] > n) {
        throw ParseError(ParseError::Kind::label_out_of_range,
                         "line " + std::to_string(line_no) + ": label " + std::to_string(nums[i]) + " outside 1.." + std::to_string(n));
      }
    }
    int mult = nums.size() == 3 ? static_cast<int>(nums[2]) : 1;
    if (mult < 1) throw ParseError(ParseError::Kind::multiplicity, "line " + std::to_string(line_no) + ": multiplicity must be positive");
    if (nums[0] == nums[1]) throw ParseError(ParseError::Kind::self_loop, "line " + std::to_string(line_no) + ": self-loop");
    lines.push_back({static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]), mult});
  }
  if (n < 0) throw ParseError(ParseError::Kind::syntax, "missing vertex count");
  return {n, std::move(lines)};
}

}  // namespace

Tree parse_tree(std::string_view text) {
  auto [n, lines] = parse_edge_list(text, false);
  std::vector<Edge> edges;
  for (const auto& l : lines) edges.emplace_back(l.u, l.v);
  return Tree::from_edges(n, std::move(edges));
}

MultiGraph parse_multigraph(std::string_view text) {
  auto [n, lines] = parse_edge_list(text, true);
  MultiGraph g(n);
  for (const auto& l : lines) g.add_edge(l.u, l.v, l.mult);
  return g;
}

std::string serialize_tree(const Tree& t) {
  std::ostringstream os;
  os << t.size() << '\n';
  for (const Edge& e : t.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string serialize_multigraph(const MultiGraph& g) {
  std::ostringstream os;
  os << g.size() << '\n';
  for (const auto& [e, m] : g.edges()) {
    os << e.u << ' ' << e.v;
    if (m > 1) os << ' ' << m;
    os << '\n';
  }
  return os.str();
}

}  // namespace critideals
