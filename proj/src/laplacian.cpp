#include "critideals/laplacian.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

namespace critideals {

namespace {

void require_distinct(std::span<const Vertex> labels, const char* what) {
  std::vector<Vertex> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError(std::string("repeated label in ") + what);
  }
}

int position_of(const std::vector<Vertex>& labels, Vertex v) {
  auto it = std::find(labels.begin(), labels.end(), v);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

// Sign of the permutation that sorts the sequence.
int sorting_sign(std::vector<int> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    while (seq[i] != static_cast<int>(i)) {
      std::swap(seq[i], seq[seq[i]]);
      sign = -sign;
    }
  }
  return sign;
}

// Ranks of positions after sorting, so sorting_sign can cycle-sort them.
std::vector<int> ranks(const std::vector<int>& positions) {
  std::vector<int> order(positions.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return positions[a] < positions[b]; });
  std::vector<int> rank(positions.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  return rank;
}

SymbolicMatrix laplacian_block(const Forest& f, std::span<const Vertex> rows, std::span<const Vertex> cols) {
  SymbolicMatrix m(std::vector<Vertex>(rows.begin(), rows.end()), std::vector<Vertex>(cols.begin(), cols.end()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (rows[r] == cols[c]) {
        m.at(r, c) = Polynomial::variable(rows[r]);
      } else if (f.has_edge(rows[r], cols[c])) {
        m.at(r, c) = Polynomial(-1);
      }
    }
  }
  return m;
}

}  // namespace

SymbolicMatrix::SymbolicMatrix(std::vector<Vertex> rows, std::vector<Vertex> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
  if (rows_.size() != cols_.size()) throw InputError("symbolic matrix must be square");
  require_distinct(rows_, "rows");
  require_distinct(cols_, "columns");
  entries_.resize(rows_.size() * cols_.size());
}

int SymbolicMatrix::row_position(Vertex v) const { return position_of(rows_, v); }
int SymbolicMatrix::col_position(Vertex v) const { return position_of(cols_, v); }

const Polynomial& SymbolicMatrix::entry(Vertex row, Vertex col) const {
  int r = row_position(row);
  int c = col_position(col);
  if (r < 0 || c < 0) throw InputError("no entry (" + std::to_string(row) + "," + std::to_string(col) + ")");
  return at(r, c);
}

SymbolicMatrix SymbolicMatrix::submatrix(std::span<const Vertex> rows, std::span<const Vertex> cols) const {
  SymbolicMatrix out(std::vector<Vertex>(rows.begin(), rows.end()), std::vector<Vertex>(cols.begin(), cols.end()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out.at(r, c) = entry(rows[r], cols[c]);
  }
  return out;
}

std::string SymbolicMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (c) os << ", ";
      os << at(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

SymbolicMatrix generalized_laplacian(const Forest& f) { return laplacian_block(f, f.vertices(), f.vertices()); }

SymbolicMatrix generalized_laplacian(const MultiGraph& g) {
  std::vector<Vertex> labels(static_cast<std::size_t>(g.size()));
  std::iota(labels.begin(), labels.end(), 1);
  SymbolicMatrix m(labels, labels);
  for (std::size_t i = 0; i < labels.size(); ++i) m.at(i, i) = Polynomial::variable(labels[i]);
  for (const auto& [e, mult] : g.edges()) {
    m.at(e.u - 1, e.v - 1) = Polynomial(-mult);
    m.at(e.v - 1, e.u - 1) = Polynomial(-mult);
  }
  return m;
}

MinorEngine::MinorEngine(SymbolicMatrix matrix) : matrix_(std::move(matrix)) {
  std::size_t n = matrix_.size();
  if (n > 64) throw ResourceLimit("minor engine limited to 64 x 64 matrices");
  row_support_.assign(n, 0);
  col_support_.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (matrix_.at(r, c).is_zero()) continue;
      row_support_[r] |= std::uint64_t{1} << c;
      col_support_[c] |= std::uint64_t{1} << r;
    }
  }
}

Polynomial MinorEngine::minor(std::span<const Vertex> rows, std::span<const Vertex> cols) {
  if (rows.size() != cols.size()) throw InputError("minor needs as many rows as columns");
  if (rows.empty()) return Polynomial(1);
  require_distinct(rows, "minor rows");
  require_distinct(cols, "minor columns");
  std::vector<int> rpos;
  std::vector<int> cpos;
  std::uint64_t rmask = 0;
  std::uint64_t cmask = 0;
  for (Vertex v : rows) {
    int p = matrix_.row_position(v);
    if (p < 0) throw InputError("row label " + std::to_string(v) + " not in matrix");
    rpos.push_back(p);
    rmask |= std::uint64_t{1} << p;
  }
  for (Vertex v : cols) {
    int p = matrix_.col_position(v);
    if (p < 0) throw InputError("column label " + std::to_string(v) + " not in matrix");
    cpos.push_back(p);
    cmask |= std::uint64_t{1} << p;
  }
  int sign = sorting_sign(ranks(rpos)) * sorting_sign(ranks(cpos));
  Polynomial out = det(rmask, cmask);
  return sign < 0 ? -out : out;
}

const Polynomial& MinorEngine::det(std::uint64_t row_mask, std::uint64_t col_mask) {
  static const Polynomial kOne(1);
  if (row_mask == 0) return kOne;
  if (std::has_single_bit(row_mask)) return matrix_.at(std::countr_zero(row_mask), std::countr_zero(col_mask));
  auto key = std::make_pair(row_mask, col_mask);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  int best_line = -1;
  bool best_is_row = true;
  int best_count = 65;
  for (std::uint64_t m = row_mask; m; m &= m - 1) {
    int r = std::countr_zero(m);
    int cnt = std::popcount(row_support_[r] & col_mask);
    if (cnt < best_count) best_count = cnt, best_line = r, best_is_row = true;
  }
  for (std::uint64_t m = col_mask; m; m &= m - 1) {
    int c = std::countr_zero(m);
    int cnt = std::popcount(col_support_[c] & row_mask);
    if (cnt < best_count) best_count = cnt, best_line = c, best_is_row = false;
  }
  Polynomial result;
  if (best_count > 0) {
    std::uint64_t line_bit = std::uint64_t{1} << best_line;
    std::uint64_t own_mask = best_is_row ? row_mask : col_mask;
    std::uint64_t cross_mask = best_is_row ? col_mask : row_mask;
    std::uint64_t support = (best_is_row ? row_support_[best_line] : col_support_[best_line]) & cross_mask;
    int line_rank = std::popcount(own_mask & (line_bit - 1));
    for (std::uint64_t m = support; m; m &= m - 1) {
      int k = std::countr_zero(m);
      std::uint64_t k_bit = std::uint64_t{1} << k;
      int k_rank = std::popcount(cross_mask & (k_bit - 1));
      const Polynomial& entry = best_is_row ? matrix_.at(best_line, k) : matrix_.at(k, best_line);
      const Polynomial& sub = best_is_row ? det(row_mask & ~line_bit, col_mask & ~k_bit) : det(row_mask & ~k_bit, col_mask & ~line_bit);
      if (sub.is_zero()) continue;
      Polynomial term = entry * sub;
      if ((line_rank + k_rank) % 2) {
        result -= term;
      } else {
        result += term;
      }
    }
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

Polynomial minor(const SymbolicMatrix& m, std::span<const Vertex> rows, std::span<const Vertex> cols) {
  if (rows.size() != cols.size()) throw InputError("minor needs as many rows as columns");
  if (rows.empty()) return Polynomial(1);
  MinorEngine engine(m.submatrix(rows, cols));
  return engine.minor(rows, cols);
}

Polynomial matching_determinant(const Forest& f) {
  const auto& vs = f.vertices();
  const auto& es = f.edges();
  std::vector<Term> terms;
  std::vector<char> covered(static_cast<std::size_t>(f.label_bound()) + 1, 0);
  std::vector<int> uncovered;
  std::function<void(std::size_t, int)> walk = [&](std::size_t next, int size) {
    if (next == es.size()) {
      uncovered.clear();
      for (Vertex v : vs) {
        if (!covered[v]) uncovered.push_back(v);
      }
      terms.push_back(Term{Integer(size % 2 ? -1 : 1), Monomial::product(uncovered)});
      return;
    }
    walk(next + 1, size);
    const Edge& e = es[next];
    if (covered[e.u] || covered[e.v]) return;
    covered[e.u] = covered[e.v] = 1;
    walk(next + 1, size + 1);
    covered[e.u] = covered[e.v] = 0;
  };
  walk(0, 0);
  return Polynomial::from_terms(std::move(terms));
}

Polynomial forest_determinant(const Forest& f, std::span<const Vertex> vertices) {
  return matching_determinant(f.induced_subgraph(vertices));
}

Polynomial d_of_matching(const Forest& f, const TwoMatching& m) {
  if (!is_two_matching(f, m)) throw InputError("not a 2-matching: " + m.to_string());
  HeadsTails ht = heads_tails(f, m);
  std::sort(ht.tails.begin(), ht.tails.end());
  std::sort(ht.heads.begin(), ht.heads.end());
  if (ht.tails.empty()) return Polynomial(1);
  MinorEngine engine(laplacian_block(f, ht.tails, ht.heads));
  return normalize_sign(engine.minor(ht.tails, ht.heads));
}

std::vector<Vertex> OrientedMatching::tails() const {
  std::vector<Vertex> out = matching.loops;
  for (const auto& a : arcs) out.push_back(a.first);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> OrientedMatching::heads() const {
  std::vector<Vertex> out = matching.loops;
  for (const auto& a : arcs) out.push_back(a.second);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<OrientedMatching> minor_to_matching(const Forest& f, std::span<const Vertex> rows, std::span<const Vertex> cols) {
  if (rows.size() != cols.size()) throw InputError("minor needs as many rows as columns");
  for (Vertex v : rows) {
    if (!f.contains(v)) throw InputError("row label " + std::to_string(v) + " not in the forest");
  }
  for (Vertex v : cols) {
    if (!f.contains(v)) throw InputError("column label " + std::to_string(v) + " not in the forest");
  }
  if (rows.empty()) return OrientedMatching{};
  MinorEngine engine(laplacian_block(f, rows, cols));
  Polynomial det = engine.minor(rows, cols);
  if (det.is_zero()) return std::nullopt;

  // The leading monomial is x_F for the fixed-point set F of some surviving permutation term.
  std::vector<Vertex> fixed;
  for (const auto& [var, exp] : det.leading_power().powers()) fixed.push_back(var);
  auto is_fixed = [&](Vertex v) { return std::binary_search(fixed.begin(), fixed.end(), v); };
  std::vector<Vertex> free_rows;
  std::vector<Vertex> free_cols;
  for (Vertex v : rows) {
    if (!is_fixed(v)) free_rows.push_back(v);
  }
  for (Vertex v : cols) {
    if (!is_fixed(v)) free_cols.push_back(v);
  }
  std::sort(free_rows.begin(), free_rows.end());
  std::sort(free_cols.begin(), free_cols.end());

  std::vector<Vertex> image(free_rows.size());
  std::vector<char> used(free_cols.size(), 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == free_rows.size()) return true;
    for (std::size_t c = 0; c < free_cols.size(); ++c) {
      if (used[c] || !f.has_edge(free_rows[i], free_cols[c])) continue;
      used[c] = 1;
      image[i] = free_cols[c];
      if (assign(i + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  if (!assign(0)) throw std::logic_error("nonzero minor without a derangement term");

  OrientedMatching out;
  std::vector<Edge> edges;
  std::vector<Vertex> loops = fixed;
  for (std::size_t i = 0; i < free_rows.size(); ++i) {
    Vertex a = free_rows[i];
    Vertex b = image[i];
    auto back = std::find(free_rows.begin(), free_rows.end(), b);
    bool two_cycle = back != free_rows.end() && image[back - free_rows.begin()] == a;
    if (two_cycle) {
      loops.push_back(a);
    } else {
      edges.emplace_back(a, b);
      out.arcs.emplace_back(a, b);
    }
  }
  out.matching = TwoMatching(std::move(edges), std::move(loops));
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

}  // namespace critideals
