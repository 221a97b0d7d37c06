#include <algorithm>

#include "critideals/matching.hpp"

namespace critideals {

namespace {

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

bool contains_vertex(const std::vector<Vertex>& sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

bool contains_edge(const std::vector<Edge>& sorted, const Edge& e) { return std::binary_search(sorted.begin(), sorted.end(), e); }

// Component of t minus the edge e that contains x, as a vertex list.
std::vector<Vertex> side_of(const Tree& t, const Edge& e, Vertex x) {
  Forest cut = t.delete_edge(e);
  std::vector<Vertex> out;
  int c = cut.component_of(x);
  for (Vertex v : cut.vertices()) {
    if (cut.component_of(v) == c) out.push_back(v);
  }
  return out;
}

void check_leaf_paths(const Tree& t, const std::string& id, CheckReport& report) {
  if (t.size() < 2) return;
  auto leaves = t.leaves();
  for (const auto& m : maximal_two_matchings(t)) {
    bool found = false;
    for (std::size_t a = 0; a < leaves.size() && !found; ++a) {
      for (std::size_t b = a + 1; b < leaves.size() && !found; ++b) {
        PathSpec p = t.path_between(leaves[a], leaves[b]);
        bool inside = true;
        for (std::size_t i = 0; i + 1 < p.size() && inside; ++i) inside = m.has_edge(Edge(p[i], p[i + 1]));
        found = inside;
      }
    }
    report.tally("leaf_path_in_maximal").record(found, [&] { return id + " " + m.to_string(); });
  }
}

void check_edge_deletion(const Tree& t, const std::string& id, const Saturation& sat, int full, CheckReport& report) {
  for (const Edge& e : t.edges()) {
    Forest cut = t.delete_edge(e);
    int diff = full - nu2(cut);
    auto witness = [&] { return id + " e=" + edge_text(e) + " diff=" + std::to_string(diff); };
    report.tally("delete_edge_range").record(diff == 0 || diff == 1, witness);
    report.tally("delete_edge_saturated_edge").record((diff == 1) == contains_edge(sat.edges, e), witness);
    Saturation cut_sat = saturation(cut);
    bool endpoint = contains_vertex(cut_sat.vertices, e.u) || contains_vertex(cut_sat.vertices, e.v);
    report.tally("delete_edge_saturated_endpoint").record((diff == 0) == endpoint, witness);
  }
}

void check_vertex_deletion(const Tree& t, const std::string& id, const Saturation& sat, int full, CheckReport& report) {
  for (Vertex v : t.vertices()) {
    Forest cut = t.delete_vertex(v);
    int diff = full - nu2(cut);
    Saturation cut_sat = saturation(cut);
    auto nbrs = t.neighbors(v);
    std::size_t saturated_neighbours = 0;
    for (Vertex w : nbrs) saturated_neighbours += contains_vertex(cut_sat.vertices, w) ? 1 : 0;
    bool all_saturated = saturated_neighbours == nbrs.size();
    bool case_one = false;
    for (Vertex wj : nbrs) {
      if (!contains_edge(sat.edges, Edge(v, wj))) continue;
      bool others = true;
      for (Vertex wi : nbrs) {
        if (wi != wj && !contains_vertex(cut_sat.vertices, wi)) others = false;
      }
      case_one = case_one || others;
    }
    auto witness = [&] { return id + " v=" + std::to_string(v) + " diff=" + std::to_string(diff); };
    report.tally("delete_vertex_range").record(diff >= 0 && diff <= 2, witness);
    report.tally("delete_vertex_two").record((diff == 2) == contains_vertex(sat.vertices, v), witness);
    report.tally("delete_vertex_one").record((diff == 1) == case_one, witness);
    report.tally("delete_vertex_zero").record((diff == 0) == all_saturated, witness);
  }
}

void check_extension(const Tree& t, const std::string& id, const Saturation& sat, CheckReport& report) {
  for (const Edge& e : t.edges()) {
    for (Vertex u : {e.u, e.v}) {
      Forest side = t.induced_subgraph(side_of(t, e, u));
      if (!contains_vertex(saturation(side).vertices, u)) continue;
      report.tally("saturation_extends").record(contains_vertex(sat.vertices, u),
                                               [&] { return id + " e=" + edge_text(e) + " u=" + std::to_string(u); });
    }
  }
  if (t.size() >= 3) {
    report.tally("saturated_vertex_exists").record(!sat.vertices.empty(), [&] { return id; });
  }
}

void check_minimal_loopless(const Tree& t, const std::string& id, int full, CheckReport& report) {
  for (int j = 0; j <= full; ++j) {
    std::vector<TwoMatching> definitional;
    for_each_two_matching(t, true, j, [&](const TwoMatching& m) {
      if (is_minimal(t, m)) definitional.push_back(m);
      return true;
    });
    bool same = definitional == enumerate_two_matchings(t, false, j);
    report.tally("minimal_equals_loopless").record(same, [&] { return id + " j=" + std::to_string(j); });
  }
}

// M maximal inside the subgraph induced by V(M) and its neighbours, extended by loops elsewhere.
void check_maximal_to_minimal(const Tree& t, const std::string& id, CheckReport& report) {
  for (int size = 0; size <= t.size() - 1; ++size) {
    for_each_two_matching(t, false, size, [&](const TwoMatching& m) {
      std::vector<Vertex> covered = m.covered();
      std::vector<Vertex> hood = covered;
      for (Vertex v : covered) {
        for (Vertex w : t.neighbors(v)) hood.push_back(w);
      }
      std::sort(hood.begin(), hood.end());
      hood.erase(std::unique(hood.begin(), hood.end()), hood.end());
      std::vector<int> incidence(t.label_bound() + 1, 0);
      for (const Edge& e : m.edges) {
        ++incidence[e.u];
        ++incidence[e.v];
      }
      for (const Edge& e : t.edges()) {
        if (m.has_edge(e) || !contains_vertex(hood, e.u) || !contains_vertex(hood, e.v)) continue;
        if (incidence[e.u] < 2 && incidence[e.v] < 2) return true;
      }
      std::vector<Vertex> loops;
      for (Vertex v : t.vertices()) {
        if (!contains_vertex(covered, v)) loops.push_back(v);
      }
      TwoMatching extended(m.edges, loops);
      report.tally("maximal_on_neighbourhood_minimal").record(is_minimal(t, extended), [&] { return id + " " + extended.to_string(); });
      return true;
    });
  }
}

void check_recursive_containment(const Tree& t, const std::string& id, CheckReport& report) {
  std::vector<TwoMatching> minimal;
  for (int j = 0; j <= t.size(); ++j) {
    auto part = enumerate_minimal(t, j);
    minimal.insert(minimal.end(), part.begin(), part.end());
  }
  for (const Edge& e : t.edges()) {
    std::vector<Vertex> side_u = side_of(t, e, e.u);
    std::vector<Vertex> side_v = side_of(t, e, e.v);
    auto restrict = [&](const TwoMatching& m, const std::vector<Vertex>& side, Vertex other, bool with_edge) {
      std::vector<Vertex> vs = side;
      if (with_edge) vs.push_back(other);
      std::vector<Edge> es;
      for (const Edge& f : t.edges()) {
        if ((contains_vertex(side, f.u) && contains_vertex(side, f.v)) || (with_edge && f == e)) es.push_back(f);
      }
      Forest g(t.size(), vs, es);
      std::vector<Edge> me;
      for (const Edge& f : m.edges) {
        if (contains_edge(g.edges(), f)) me.push_back(f);
      }
      std::vector<Vertex> ml;
      for (Vertex v : m.loops) {
        if (contains_vertex(side, v)) ml.push_back(v);
      }
      return is_minimal(g, TwoMatching(me, ml));
    };
    for (const auto& m : minimal) {
      bool with_edge = m.has_edge(e);
      bool ok = restrict(m, side_u, e.v, with_edge) && restrict(m, side_v, e.u, with_edge);
      report.tally("recursive_containment").record(ok, [&] { return id + " e=" + edge_text(e) + " " + m.to_string(); });
    }
  }
}

}  // namespace

CheckReport structural_checks(const Tree& t) {
  if (t.size() > 10) throw ResourceLimit("structural checks limited to n <= 10");
  CheckReport report;
  std::string id = tree_id(t);
  Saturation sat = saturation(t);
  int full = nu2(t);
  check_leaf_paths(t, id, report);
  check_edge_deletion(t, id, sat, full, report);
  check_vertex_deletion(t, id, sat, full, report);
  check_extension(t, id, sat, report);
  check_minimal_loopless(t, id, full, report);
  check_maximal_to_minimal(t, id, report);
  check_recursive_containment(t, id, report);
  return report;
}

}  // namespace critideals
