#include <algorithm>
#include <map>

#include "critideals/ideals.hpp"

namespace critideals {

namespace {

std::string edges_text(std::span<const Edge> es) {
  std::string out;
  for (const Edge& e : es) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out.empty() ? "{}" : out;
}

std::string path_text(const PathSpec& p) {
  std::string out;
  for (Vertex v : p) {
    if (!out.empty()) out += '.';
    out += std::to_string(v);
  }
  return out;
}

// d of T with the given vertices removed.
Polynomial d_without(const Tree& t, std::vector<Vertex> removed) {
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  return matching_determinant(t.delete_vertices(removed));
}

Polynomial product_of(std::span<const Vertex> vs) {
  return Polynomial::monomial(Integer(1), Monomial::product(std::vector<int>(vs.begin(), vs.end())));
}

std::vector<PathSpec> all_paths(const Tree& t) {
  std::vector<PathSpec> out;
  const auto& vs = t.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a; b < vs.size(); ++b) out.push_back(t.path_between(vs[a], vs[b]));
  }
  return out;
}

// Matchings of the edge list, as index sets.
void for_each_edge_matching(std::span<const Edge> es, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> chosen;
  std::map<Vertex, int> used;
  auto walk = [&](auto&& self, std::size_t next) -> void {
    if (next == es.size()) {
      visit(chosen);
      return;
    }
    self(self, next + 1);
    const Edge& e = es[next];
    if (used[e.u] || used[e.v]) return;
    used[e.u] = used[e.v] = 1;
    chosen.push_back(next);
    self(self, next + 1);
    chosen.pop_back();
    used[e.u] = used[e.v] = 0;
  };
  walk(walk, 0);
}

}  // namespace

void check_deletion_identity(const Tree& t, CheckReport& report) {
  const auto& es = t.edges();
  std::size_t m = es.size();
  auto check = [&](const std::vector<Edge>& subset) {
    Polynomial lhs = matching_determinant(t.delete_edges(subset));
    Polynomial rhs;
    for_each_edge_matching(subset, [&](const std::vector<std::size_t>& mu) {
      std::vector<Vertex> covered;
      for (std::size_t i : mu) {
        covered.push_back(subset[i].u);
        covered.push_back(subset[i].v);
      }
      rhs += d_without(t, covered);
    });
    report.tally("deletion").record(lhs == rhs, [&] { return tree_id(t) + " S=" + edges_text(subset); });
  };
  if (t.size() <= 10) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<Edge> subset;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1) subset.push_back(es[i]);
      }
      check(subset);
    }
    return;
  }
  // Larger trees: every subset of at most two edges.
  check({});
  for (std::size_t a = 0; a < m; ++a) {
    check({es[a]});
    for (std::size_t b = a + 1; b < m; ++b) check({es[a], es[b]});
  }
}

void check_variable_identity(const Tree& t, CheckReport& report) {
  std::map<TwoMatching, Polynomial> cache;
  auto d = [&](const TwoMatching& m) -> const Polynomial& {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, d_of_matching(t, m)).first;
    return it->second;
  };
  for (int size = 0; size <= t.size(); ++size) {
    for (const auto& m : enumerate_two_matchings(t, true, size)) {
      for (Vertex w : t.vertices()) {
        if (m.has_loop(w)) continue;
        std::vector<Edge> kept;
        for (const Edge& e : m.edges) {
          if (!e.touches(w)) kept.push_back(e);
        }
        std::vector<Vertex> loops = m.loops;
        loops.push_back(w);
        Polynomial rhs = d(TwoMatching(kept, loops));
        for (Vertex v : t.neighbors(w)) {
          if (!m.has_loop(v)) continue;
          std::vector<Vertex> fewer;
          for (Vertex u : m.loops) {
            if (u != v) fewer.push_back(u);
          }
          rhs += d(TwoMatching(m.edges, fewer));
        }
        Polynomial lhs = Polynomial::variable(w) * d(m);
        report.tally("multiply_by_variable").record(lhs == rhs, [&] {
          return tree_id(t) + " M=" + m.to_string() + " w=" + std::to_string(w);
        });
      }
    }
  }
}

void check_path_product_identity(const Tree& t, CheckReport& report) {
  Polynomial whole = matching_determinant(t);
  for (const PathSpec& p : all_paths(t)) {
    auto on_path = [&](Vertex v) { return std::find(p.begin(), p.end(), v) != p.end(); };
    auto index_on_path = [&](Vertex v) { return static_cast<int>(std::find(p.begin(), p.end(), v) - p.begin()); };
    std::vector<Edge> touching;
    for (const Edge& e : t.edges()) {
      if (on_path(e.u) || on_path(e.v)) touching.push_back(e);
    }
    Polynomial rhs = whole;
    for (const Edge& e : touching) rhs += d_without(t, {e.u, e.v});
    for (std::size_t a = 0; a < touching.size(); ++a) {
      for (std::size_t b = a + 1; b < touching.size(); ++b) {
        const Edge& e1 = touching[a];
        const Edge& e2 = touching[b];
        if (e1.touches(e2.u) || e1.touches(e2.v)) continue;
        // Interior: path vertices strictly between the two edges.
        auto span_of = [&](const Edge& e) {
          int lo = 1 << 20;
          int hi = -1;
          for (Vertex v : {e.u, e.v}) {
            if (!on_path(v)) continue;
            lo = std::min(lo, index_on_path(v));
            hi = std::max(hi, index_on_path(v));
          }
          return std::make_pair(lo, hi);
        };
        auto s1 = span_of(e1);
        auto s2 = span_of(e2);
        if (s1.first > s2.first) std::swap(s1, s2);
        std::vector<Vertex> interior(p.begin() + s1.second + 1, p.begin() + s2.first);
        std::vector<Vertex> removed = interior;
        for (Vertex v : {e1.u, e1.v, e2.u, e2.v}) removed.push_back(v);
        rhs += product_of(interior) * d_without(t, removed);
      }
    }
    Polynomial lhs = product_of(p) * d_without(t, p);
    report.tally("path_product").record(lhs == rhs, [&] { return tree_id(t) + " P=" + path_text(p); });
  }
}

void check_subpath_identity(const Tree& t, CheckReport& report) {
  for (const PathSpec& p : all_paths(t)) {
    int len = static_cast<int>(p.size());
    for (int qa = 0; qa < len; ++qa) {
      for (int qb = qa; qb < len; ++qb) {
        std::vector<Vertex> q(p.begin() + qa, p.begin() + qb + 1);
        auto in_q = [&](Vertex v) { return std::find(q.begin(), q.end(), v) != q.end(); };
        auto index_on_path = [&](Vertex v) {
          auto it = std::find(p.begin(), p.end(), v);
          return it == p.end() ? -1 : static_cast<int>(it - p.begin());
        };
        // Edges of T - V(Q) meeting the left and right remainders, with the path vertices between each edge and Q.
        struct Side {
          Edge e;
          std::vector<Vertex> interior;
        };
        std::vector<Side> left;
        std::vector<Side> right;
        for (const Edge& e : t.edges()) {
          if (in_q(e.u) || in_q(e.v)) continue;
          int iu = index_on_path(e.u);
          int iv = index_on_path(e.v);
          int lmax = std::max(iu < qa ? iu : -1, iv < qa ? iv : -1);
          if (lmax >= 0) left.push_back({e, std::vector<Vertex>(p.begin() + lmax + 1, p.begin() + qa)});
          int rmin = std::min(iu > qb ? iu : len, iv > qb ? iv : len);
          if (rmin < len) right.push_back({e, std::vector<Vertex>(p.begin() + qb + 1, p.begin() + rmin)});
        }
        auto removal = [&](std::initializer_list<const Side*> sides) {
          std::vector<Vertex> removed = q;
          for (const Side* s : sides) {
            removed.push_back(s->e.u);
            removed.push_back(s->e.v);
            removed.insert(removed.end(), s->interior.begin(), s->interior.end());
          }
          return removed;
        };
        Polynomial rhs = d_without(t, q);
        for (const Side& s : left) rhs += product_of(s.interior) * d_without(t, removal({&s}));
        for (const Side& s : right) rhs += product_of(s.interior) * d_without(t, removal({&s}));
        for (const Side& l : left) {
          for (const Side& r : right) {
            rhs += product_of(l.interior) * product_of(r.interior) * d_without(t, removal({&l, &r}));
          }
        }
        std::vector<Vertex> outside_q(p.begin(), p.begin() + qa);
        outside_q.insert(outside_q.end(), p.begin() + qb + 1, p.end());
        Polynomial lhs = product_of(outside_q) * d_without(t, p);
        report.tally("path_over_subpath").record(lhs == rhs, [&] {
          return tree_id(t) + " P=" + path_text(p) + " Q=" + path_text(q);
        });
      }
    }
  }
}

CheckReport verify_identities(const Tree& t) {
  CheckReport report;
  check_deletion_identity(t, report);
  check_variable_identity(t, report);
  check_path_product_identity(t, report);
  check_subpath_identity(t, report);
  return report;
}

}  // namespace critideals
