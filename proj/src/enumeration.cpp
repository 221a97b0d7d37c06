#include <functional>
#include <queue>
#include <random>

#include "critideals/treegraph.hpp"

namespace critideals {

Tree tree_from_pruefer(int n, std::span<const int> code) {
  if (n < 2) throw InputError("Prüfer decoding needs n >= 2");
  if (code.size() != static_cast<std::size_t>(n - 2)) throw InputError("Prüfer code must have length n-2");
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int c : code) {
    if (c < 1 || c > n) throw InputError("Prüfer entry out of range");
    ++degree[c];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int c : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Tree::from_edges(n, std::move(edges));
}

std::vector<int> pruefer_code(const Tree& t) {
  int n = t.size();
  if (n < 2) throw InputError("Prüfer encoding needs n >= 2");
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<int> code;
  for (int k = 0; k < n - 2; ++k) {
    Vertex leaf = leaves.top();
    leaves.pop();
    removed[leaf] = true;
    for (Vertex w : t.neighbors(leaf)) {
      if (removed[w]) continue;
      code.push_back(w);
      if (--degree[w] == 1) leaves.push(w);
    }
  }
  return code;
}

std::vector<Tree> enumerate_labeled_trees(int n) {
  std::vector<Tree> out;
  for_each_labeled_tree(n, [&](const Tree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw InputError("random tree needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = pick(rng);
  return tree_from_pruefer(n, code);
}

std::string tree_id(const Tree& t) {
  std::string id = "n" + std::to_string(t.size()) + ":";
  if (t.size() < 2) return id;
  auto code = pruefer_code(t);
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i != 0) id += '.';
    id += std::to_string(code[i]);
  }
  return id;
}

}  // namespace critideals
