#include "critideals/matching.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <sstream>

namespace critideals {

TwoMatching::TwoMatching(std::vector<Edge> es, std::vector<Vertex> ls) : edges(std::move(es)), loops(std::move(ls)) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::sort(loops.begin(), loops.end());
  loops.erase(std::unique(loops.begin(), loops.end()), loops.end());
}

bool TwoMatching::has_loop(Vertex v) const { return std::binary_search(loops.begin(), loops.end(), v); }

bool TwoMatching::has_edge(Edge e) const { return std::binary_search(edges.begin(), edges.end(), e); }

std::vector<Vertex> TwoMatching::covered() const {
  std::vector<Vertex> out;
  for (const Edge& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string TwoMatching::to_string() const {
  if (size() == 0) return "{}";
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  for (Vertex v : loops) {
    if (!out.empty()) out += ',';
    out += std::to_string(v) + "!";
  }
  return out;
}

TwoMatching TwoMatching::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty() || s == "{}") return {};
  std::vector<Edge> es;
  std::vector<Vertex> ls;
  std::istringstream in(s);
  std::string tok;
  auto number = [&](const std::string& part) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || value < 1) throw ParseError(ParseError::Kind::syntax, "bad matching item '" + tok + "'");
    return value;
  };
  while (std::getline(in, tok, ',')) {
    if (!tok.empty() && tok.back() == '!') {
      ls.push_back(number(tok.substr(0, tok.size() - 1)));
      continue;
    }
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw ParseError(ParseError::Kind::syntax, "bad matching item '" + tok + "'");
    Vertex a = number(tok.substr(0, dash));
    Vertex b = number(tok.substr(dash + 1));
    if (a == b) throw ParseError(ParseError::Kind::self_loop, "write loops as 'v!'");
    es.emplace_back(a, b);
  }
  TwoMatching m(es, ls);
  if (m.size() != es.size() + ls.size()) throw ParseError(ParseError::Kind::duplicate_edge, "repeated matching item");
  return m;
}

bool enumeration_less(const TwoMatching& a, const TwoMatching& b) {
  auto items = [](const TwoMatching& m) {
    std::vector<std::array<int, 3>> out;
    for (const Edge& e : m.edges) out.push_back({0, e.u, e.v});
    for (Vertex v : m.loops) out.push_back({1, v, 0});
    return out;
  };
  auto ia = items(a);
  auto ib = items(b);
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

bool is_two_matching(const Forest& f, const TwoMatching& m) {
  std::vector<int> use(static_cast<std::size_t>(f.label_bound()) + 1, 0);
  for (const Edge& e : m.edges) {
    if (!f.has_edge(e.u, e.v)) throw InputError("no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    ++use[e.u];
    ++use[e.v];
  }
  for (Vertex v : m.loops) {
    if (!f.contains(v)) throw InputError("no vertex " + std::to_string(v));
    use[v] += 2;
  }
  return std::all_of(use.begin(), use.end(), [](int u) { return u <= 2; });
}

namespace {

struct RootedOrder {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
};

RootedOrder rooted_order(const Forest& f) {
  RootedOrder r;
  r.parent.assign(static_cast<std::size_t>(f.label_bound()) + 1, -1);
  r.order.reserve(f.vertices().size());
  std::vector<Vertex> stack;
  for (Vertex root : f.vertices()) {
    if (r.parent[root] != -1) continue;
    r.parent[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      r.order.push_back(v);
      for (Vertex w : f.neighbors(v)) {
        if (r.parent[w] == -1) {
          r.parent[w] = v;
          stack.push_back(w);
        }
      }
    }
  }
  return r;
}

void require_matching(const Forest& f, const TwoMatching& m) {
  if (!is_two_matching(f, m)) throw InputError("not a 2-matching: " + m.to_string());
}

}  // namespace

int nu2_capped(const Forest& f, std::span<const int> caps, std::span<const Edge> banned) {
  if (caps.size() < static_cast<std::size_t>(f.label_bound()) + 1) throw InputError("capacity vector too short");
  std::vector<bool> is_banned(f.edges().size(), false);
  for (const Edge& e : banned) {
    int i = f.edge_index(e);
    if (i < 0) throw InputError("no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    is_banned[i] = true;
  }
  auto cap = [&](Vertex v) { return std::clamp(caps[v], 0, 2); };
  RootedOrder r = rooted_order(f);
  std::vector<std::array<int, 3>> best(static_cast<std::size_t>(f.label_bound()) + 1, {0, 0, 0});
  int total = 0;
  std::vector<int> gains;
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    Vertex v = *it;
    int base = 0;
    gains.clear();
    for (Vertex u : f.neighbors(v)) {
      if (u == r.parent[v]) continue;
      int cu = cap(u);
      base += best[u][cu];
      if (cu >= 1 && !is_banned[f.edge_index(Edge(u, v))]) gains.push_back(1 + best[u][cu - 1] - best[u][cu]);
    }
    std::sort(gains.begin(), gains.end(), std::greater<>());
    int acc = base;
    for (int k = 0; k <= 2; ++k) {
      if (k >= 1 && static_cast<std::size_t>(k) <= gains.size() && gains[k - 1] > 0) acc += gains[k - 1];
      best[v][k] = acc;
    }
    if (r.parent[v] == 0) total += best[v][cap(v)];
  }
  return total;
}

int nu2(const Forest& f) {
  std::vector<int> caps(static_cast<std::size_t>(f.label_bound()) + 1, 2);
  return nu2_capped(f, caps);
}

Saturation saturation(const Forest& f) {
  std::vector<int> caps(static_cast<std::size_t>(f.label_bound()) + 1, 2);
  int full = nu2_capped(f, caps);
  Saturation s;
  for (Vertex v : f.vertices()) {
    caps[v] = 1;
    if (nu2_capped(f, caps) < full) s.vertices.push_back(v);
    caps[v] = 2;
  }
  for (const Edge& e : f.edges()) {
    Edge one[] = {e};
    if (nu2_capped(f, caps, one) < full) s.edges.push_back(e);
  }
  return s;
}

Saturation saturation_exhaustive(const Forest& f) {
  int full = nu2(f);
  std::vector<bool> vertex_always(static_cast<std::size_t>(f.label_bound()) + 1, true);
  std::vector<bool> edge_always(f.edges().size(), true);
  std::vector<int> use(vertex_always.size());
  for_each_two_matching(f, false, full, [&](const TwoMatching& m) {
    std::fill(use.begin(), use.end(), 0);
    std::vector<bool> present(f.edges().size(), false);
    for (const Edge& e : m.edges) {
      ++use[e.u];
      ++use[e.v];
      present[f.edge_index(e)] = true;
    }
    for (Vertex v : f.vertices()) vertex_always[v] = vertex_always[v] && use[v] == 2;
    for (std::size_t i = 0; i < present.size(); ++i) edge_always[i] = edge_always[i] && present[i];
    return true;
  });
  Saturation s;
  for (Vertex v : f.vertices()) {
    if (vertex_always[v]) s.vertices.push_back(v);
  }
  for (std::size_t i = 0; i < f.edges().size(); ++i) {
    if (edge_always[i]) s.edges.push_back(f.edges()[i]);
  }
  return s;
}

namespace {

class MatchingEnumerator {
 public:
  MatchingEnumerator(const Forest& f, std::span<const Vertex> loop_vertices, const MatchingVisitor& visit)
      : edges_(f.edges()), loops_(loop_vertices.begin(), loop_vertices.end()), visit_(visit),
        use_(static_cast<std::size_t>(f.label_bound()) + 1, 0) {
    std::sort(loops_.begin(), loops_.end());
    for (Vertex v : loops_) {
      if (!f.contains(v)) throw InputError("no vertex " + std::to_string(v));
    }
  }

  void run(int size) {
    if (size < 0 || static_cast<std::size_t>(size) > edges_.size() + loops_.size()) return;
    target_ = static_cast<std::size_t>(size);
    choose(0);
  }

 private:
  std::size_t item_count() const { return edges_.size() + loops_.size(); }

  // Returns false once the visitor asked to stop.
  bool choose(std::size_t from) {
    std::size_t chosen = current_.edges.size() + current_.loops.size();
    if (chosen == target_) return visit_(current_);
    std::size_t need = target_ - chosen;
    for (std::size_t i = from; i + need <= item_count(); ++i) {
      if (i < edges_.size()) {
        const Edge& e = edges_[i];
        if (use_[e.u] >= 2 || use_[e.v] >= 2) continue;
        ++use_[e.u];
        ++use_[e.v];
        current_.edges.push_back(e);
        bool go_on = choose(i + 1);
        current_.edges.pop_back();
        --use_[e.u];
        --use_[e.v];
        if (!go_on) return false;
      } else {
        Vertex v = loops_[i - edges_.size()];
        if (use_[v] != 0) continue;
        use_[v] = 2;
        current_.loops.push_back(v);
        bool go_on = choose(i + 1);
        current_.loops.pop_back();
        use_[v] = 0;
        if (!go_on) return false;
      }
    }
    return true;
  }

  const std::vector<Edge>& edges_;
  std::vector<Vertex> loops_;
  const MatchingVisitor& visit_;
  std::vector<int> use_;
  TwoMatching current_;
  std::size_t target_ = 0;
};

}  // namespace

void for_each_two_matching(const Forest& f, std::span<const Vertex> loop_vertices, int size, const MatchingVisitor& visit) {
  MatchingEnumerator(f, loop_vertices, visit).run(size);
}

void for_each_two_matching(const Forest& f, bool with_loops, int size, const MatchingVisitor& visit) {
  std::span<const Vertex> loops;
  if (with_loops) loops = f.vertices();
  for_each_two_matching(f, loops, size, visit);
}

std::vector<TwoMatching> enumerate_two_matchings(const Forest& f, bool with_loops, int size) {
  std::vector<TwoMatching> out;
  for_each_two_matching(f, with_loops, size, [&](const TwoMatching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<TwoMatching> maximal_two_matchings(const Forest& f) {
  std::vector<TwoMatching> out;
  int top = nu2(f);
  std::vector<int> use(static_cast<std::size_t>(f.label_bound()) + 1);
  for (int k = 0; k <= top; ++k) {
    for_each_two_matching(f, false, k, [&](const TwoMatching& m) {
      std::fill(use.begin(), use.end(), 0);
      for (const Edge& e : m.edges) {
        ++use[e.u];
        ++use[e.v];
      }
      bool extendable = std::any_of(f.edges().begin(), f.edges().end(), [&](const Edge& e) {
        return !m.has_edge(e) && use[e.u] < 2 && use[e.v] < 2;
      });
      if (!extendable) out.push_back(m);
      return true;
    });
  }
  return out;
}

bool is_minimal(const Forest& f, const TwoMatching& m) {
  require_matching(f, m);
  const auto& loops = m.loops;
  if (loops.empty()) return true;
  if (loops.size() > 24) throw ResourceLimit("minimality check limited to 24 loops");
  int j = static_cast<int>(m.size());
  std::vector<int> caps(static_cast<std::size_t>(f.label_bound()) + 1, 2);
  std::uint32_t full = (std::uint32_t{1} << loops.size()) - 1;
  for (std::uint32_t sub = 0; sub < full; ++sub) {
    int count = std::popcount(sub);
    for (std::size_t i = 0; i < loops.size(); ++i) caps[loops[i]] = (sub >> i) & 1 ? 0 : 2;
    if (nu2_capped(f, caps) >= j - count) return false;
  }
  return true;
}

namespace {

std::vector<TwoMatching> leaf_pair_matchings(const Tree& t) {
  std::vector<TwoMatching> out;
  auto leaves = t.leaves();
  for (std::size_t a = 0; a < leaves.size(); ++a) {
    for (std::size_t b = a + 1; b < leaves.size(); ++b) {
      PathSpec p = t.path_between(leaves[a], leaves[b]);
      std::vector<Edge> es;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) es.emplace_back(p[i], p[i + 1]);
      std::vector<bool> on_path(static_cast<std::size_t>(t.size()) + 1, false);
      for (Vertex v : p) on_path[v] = true;
      std::vector<Vertex> ls;
      for (Vertex v : t.vertices()) {
        if (!on_path[v]) ls.push_back(v);
      }
      out.emplace_back(std::move(es), std::move(ls));
    }
  }
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

void require_size(const Tree& t, int j) {
  if (j < 0 || j > t.size()) throw InputError("size " + std::to_string(j) + " outside 0.." + std::to_string(t.size()));
}

}  // namespace

std::vector<std::vector<Vertex>> minimal_loop_sets(const Tree& t, int j) {
  require_size(t, j);
  int n = t.size();
  if (j <= nu2(t)) return {{}};
  if (j == n - 1) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& m : leaf_pair_matchings(t)) out.push_back(m.loops);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      auto mask = [](const std::vector<Vertex>& s) {
        std::uint64_t x = 0;
        for (Vertex v : s) x |= std::uint64_t{1} << (v - 1);
        return x;
      };
      return mask(a) < mask(b);
    });
    return out;
  }
  if (n > kMaxMinimalScanSize) {
    throw ResourceLimit("minimal 2-matching scan limited to n <= " + std::to_string(kMaxMinimalScanSize));
  }
  std::size_t subsets = std::size_t{1} << n;
  std::vector<char> achievable(subsets, 0);
  std::vector<char> has_achievable_subset(subsets, 0);
  std::vector<int> caps(static_cast<std::size_t>(n) + 1, 2);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    int count = std::popcount(mask);
    if (count > j) continue;
    for (Vertex v = 1; v <= n; ++v) caps[v] = (mask >> (v - 1)) & 1 ? 0 : 2;
    achievable[mask] = nu2_capped(t, caps) >= j - count;
    bool below = false;
    for (int b = 0; b < n && !below; ++b) {
      if ((mask >> b) & 1) below = has_achievable_subset[mask ^ (std::size_t{1} << b)];
    }
    has_achievable_subset[mask] = achievable[mask] || below;
    if (achievable[mask] && !below) {
      std::vector<Vertex> loops;
      for (Vertex v = 1; v <= n; ++v) {
        if ((mask >> (v - 1)) & 1) loops.push_back(v);
      }
      out.push_back(std::move(loops));
    }
  }
  return out;
}

std::vector<TwoMatching> enumerate_minimal(const Tree& t, int j) {
  require_size(t, j);
  if (j <= nu2(t)) return enumerate_two_matchings(t, false, j);
  if (j == t.size() - 1) return leaf_pair_matchings(t);
  std::vector<TwoMatching> out;
  for (const auto& loops : minimal_loop_sets(t, j)) {
    Forest rest = t.delete_vertices(loops);
    for_each_two_matching(rest, false, j - static_cast<int>(loops.size()), [&](const TwoMatching& m) {
      out.emplace_back(m.edges, loops);
      return true;
    });
  }
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

std::vector<TwoMatching> minimal_representatives(const Tree& t, int j) {
  require_size(t, j);
  if (j <= nu2(t)) {
    std::vector<TwoMatching> out;
    for_each_two_matching(t, false, j, [&](const TwoMatching& m) {
      out.push_back(m);
      return false;
    });
    return out;
  }
  if (j == t.size() - 1) return leaf_pair_matchings(t);
  std::vector<TwoMatching> out;
  for (const auto& loops : minimal_loop_sets(t, j)) {
    Forest rest = t.delete_vertices(loops);
    for_each_two_matching(rest, false, j - static_cast<int>(loops.size()), [&](const TwoMatching& m) {
      out.emplace_back(m.edges, loops);
      return false;
    });
  }
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

HeadsTails heads_tails(const Forest& f, const TwoMatching& m) {
  require_matching(f, m);
  std::size_t bound = static_cast<std::size_t>(f.label_bound()) + 1;
  std::vector<std::vector<Vertex>> adj(bound);
  for (const Edge& e : m.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  HeadsTails ht;
  std::vector<bool> seen(bound, false);
  for (Vertex start : f.vertices()) {
    if (seen[start] || adj[start].size() != 1) continue;
    Vertex prev = 0;
    Vertex cur = start;
    seen[cur] = true;
    while (true) {
      Vertex next = 0;
      for (Vertex w : adj[cur]) {
        if (w != prev) next = w;
      }
      if (next == 0) break;
      ht.tails.push_back(cur);
      ht.heads.push_back(next);
      prev = cur;
      cur = next;
      seen[cur] = true;
    }
  }
  for (Vertex v : m.loops) {
    ht.heads.push_back(v);
    ht.tails.push_back(v);
  }
  std::sort(ht.heads.begin(), ht.heads.end());
  std::sort(ht.tails.begin(), ht.tails.end());
  return ht;
}

}  // namespace critideals
