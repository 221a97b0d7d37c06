#include "critideals/intalg.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "critideals/matching.hpp"
#include "json.hpp"

namespace critideals {

namespace {

Integer ipow(long base, int exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

std::string integer_text(const Integer& z) { return z.get_str(); }

nlohmann::ordered_json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

class SnfWorker {
 public:
  SnfWorker(const IntMatrix& m, bool transforms) : a_(m), track_(transforms) {
    if (track_) {
      u_ = IntMatrix::identity(m.rows());
      v_ = IntMatrix::identity(m.cols());
    }
  }

  SmithNormalForm run() {
    std::size_t diag = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < diag; ++t) {
      if (!settle(t)) break;
    }
    SmithNormalForm out;
    for (std::size_t t = 0; t < diag; ++t) {
      out.factors.push_back(a_.at(t, t));
      if (a_.at(t, t) != 0) ++out.rank;
    }
    if (track_) {
      out.u = std::move(u_);
      out.v = std::move(v_);
    }
    return out;
  }

 private:
  // Brings a divisor of the whole remaining block to (t,t); false when the block is zero.
  bool settle(std::size_t t) {
    while (true) {
      if (!move_smallest_to(t)) return false;
      bool clean = true;
      const Integer pivot = a_.at(t, t);
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_.at(i, t) == 0) continue;
        Integer q = a_.at(i, t) / pivot;
        add_row(i, t, -q);
        if (a_.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_.at(t, j) == 0) continue;
        Integer q = a_.at(t, j) / pivot;
        add_col(j, t, -q);
        if (a_.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < a_.rows() && !offender; ++i) {
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
          if (a_.at(i, j) % pivot != 0) {
            offender = i;
            break;
          }
        }
      }
      if (offender) {
        add_row(t, *offender, Integer(1));
        continue;
      }
      if (pivot < 0) negate_row(t);
      return true;
    }
  }

  bool move_smallest_to(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_.at(i, j) == 0) continue;
        Integer mag = abs(a_.at(i, j));
        if (!best || mag < best_abs) {
          best = {i, j};
          best_abs = mag;
        }
      }
    }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_.at(a, j), a_.at(b, j));
    if (track_) {
      for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_.at(a, j), u_.at(b, j));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_.at(i, a), a_.at(i, b));
    if (track_) {
      for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_.at(i, a), v_.at(i, b));
    }
  }

  // row[target] += factor * row[source]
  void add_row(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_.at(target, j) += factor * a_.at(source, j);
    if (track_) {
      for (std::size_t j = 0; j < u_.cols(); ++j) u_.at(target, j) += factor * u_.at(source, j);
    }
  }

  void add_col(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t i = 0; i < a_.rows(); ++i) a_.at(i, target) += factor * a_.at(i, source);
    if (track_) {
      for (std::size_t i = 0; i < v_.rows(); ++i) v_.at(i, target) += factor * v_.at(i, source);
    }
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_.at(r, j) = -a_.at(r, j);
    if (track_) {
      for (std::size_t j = 0; j < u_.cols(); ++j) u_.at(r, j) = -u_.at(r, j);
    }
  }

  IntMatrix a_;
  bool track_;
  IntMatrix u_;
  IntMatrix v_;
};

void require_connected(const MultiGraph& g) {
  if (!g.is_connected()) throw InputError("graph is disconnected");
}

WiredReport measure(std::string name, const MultiGraph& g, int d, int h) {
  if (g.size() > kMaxWiredVertices) throw ResourceLimit("wired graph exceeds " + std::to_string(kMaxWiredVertices) + " vertices");
  WiredReport rep;
  rep.graph = std::move(name);
  rep.d = d;
  rep.h = h;
  rep.vertices = g.size();
  SmithNormalForm snf = smith_normal_form(laplacian_matrix(g));
  rep.factors = snf.factors;
  for (const Integer& f : snf.factors) {
    if (f > 1) {
      ++rep.measured_rank;
      if (!rep.first_nontrivial_factor) rep.first_nontrivial_factor = f;
    }
  }
  // The sink is the last vertex; what remains is a tree.
  Vertex sink = g.size();
  std::vector<Edge> inner;
  for (const auto& [e, mult] : g.edges()) {
    if (!e.touches(sink)) inner.push_back(e);
  }
  Tree rest = Tree::from_edges(sink - 1, inner);
  rep.predicted_rank = static_cast<std::size_t>(rest.size() - nu2(rest));
  rep.claimed_rank = ipow(d - 1, h);
  return rep;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimensions do not match");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return out;
}

SmithNormalForm smith_normal_form(const IntMatrix& m, bool want_transforms) { return SnfWorker(m, want_transforms).run(); }

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a.at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

Integer AbelianGroup::torsion_order() const {
  Integer out = 1;
  for (const Integer& f : torsion) out *= f;
  return out;
}

std::string AbelianGroup::torsion_string() const {
  if (torsion.empty()) return "0";
  std::string out;
  for (const Integer& f : torsion) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z_" + integer_text(f);
  }
  return out;
}

std::string AbelianGroup::to_json() const {
  nlohmann::ordered_json j;
  j["torsion"] = nlohmann::ordered_json::array();
  for (const Integer& f : torsion) j["torsion"].push_back(integer_json(f));
  j["free_rank"] = free_rank;
  return j.dump();
}

AbelianGroup cokernel(const IntMatrix& m) {
  SmithNormalForm snf = smith_normal_form(m);
  AbelianGroup g;
  for (const Integer& f : snf.factors) {
    if (f > 1) g.torsion.push_back(f);
  }
  g.free_rank = m.rows() - snf.rank;
  return g;
}

std::vector<Integer> degree_vector(const MultiGraph& g) {
  std::vector<Integer> d;
  for (Vertex v = 1; v <= g.size(); ++v) d.emplace_back(g.degree(v));
  return d;
}

IntMatrix arithmetical_matrix(const MultiGraph& g, std::span<const Integer> d) {
  if (d.size() != static_cast<std::size_t>(g.size())) throw InputError("vector length must equal the vertex count");
  std::size_t n = static_cast<std::size_t>(g.size());
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = d[i];
  for (const auto& [e, mult] : g.edges()) {
    m.at(e.u - 1, e.v - 1) -= mult;
    m.at(e.v - 1, e.u - 1) -= mult;
  }
  return m;
}

IntMatrix laplacian_matrix(const MultiGraph& g) {
  auto d = degree_vector(g);
  return arithmetical_matrix(g, d);
}

bool validate_arithmetical(const MultiGraph& g, std::span<const Integer> d, std::span<const Integer> r) {
  if (r.size() != static_cast<std::size_t>(g.size())) throw InputError("vector length must equal the vertex count");
  IntMatrix m = arithmetical_matrix(g, d);
  for (const Integer& x : r) {
    if (x <= 0) return false;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer sum = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) sum += m.at(i, j) * r[j];
    if (sum != 0) return false;
  }
  return true;
}

AbelianGroup critical_group(const MultiGraph& g) {
  require_connected(g);
  return cokernel(laplacian_matrix(g));
}

AbelianGroup critical_group(const ArithmeticalGraph& a) {
  require_connected(a.graph);
  if (!validate_arithmetical(a.graph, a.d, a.r)) throw InputError("(Diag(d) - A) r is not zero");
  return cokernel(arithmetical_matrix(a.graph, a.d));
}

ArithmeticalGraph c5_arithmetical(int m) {
  ArithmeticalGraph a;
  a.graph = MultiGraph::from_forest(c5_tree(m));
  int n = a.graph.size();
  a.d.assign(static_cast<std::size_t>(n), Integer(2));
  a.r.assign(static_cast<std::size_t>(n), Integer(2));
  for (int i = 0; i < 4; ++i) a.r[i] = 1;
  return a;
}

Integer nu2_branch_formula(int d, int h) {
  if (d < 3 || h < 2) throw InputError("branch formula needs d >= 3 and h >= 2");
  Integer base = d - 1;
  Integer top = ipow(d - 1, h + 1) - (h % 2 == 0 ? base : Integer(1));
  return 2 * top / (base * base - 1);
}

Integer nu2_full_formula(int d, int h) {
  if (d < 3 || h < 3) throw InputError("full-tree formula needs d >= 3 and h >= 3");
  return 2 * (ipow(d - 1, h) - 1) / (d - 2);
}

std::string WiredReport::to_json() const {
  nlohmann::ordered_json j;
  j["graph"] = graph;
  j["d"] = d;
  j["h"] = h;
  j["vertices"] = vertices;
  j["measured_rank"] = measured_rank;
  j["predicted_rank"] = predicted_rank;
  j["claimed_rank"] = integer_json(claimed_rank);
  j["first_nontrivial_factor"] = first_nontrivial_factor ? integer_json(*first_nontrivial_factor) : nlohmann::ordered_json(nullptr);
  j["factors"] = nlohmann::ordered_json::array();
  for (const Integer& f : factors) j["factors"].push_back(integer_json(f));
  return j.dump();
}

namespace {

// Vertex count after collapsing the leaves of a complete tree: internal levels 0..h-1 plus the sink.
void require_wired_size(int root_children, int children, int h) {
  long long level = root_children;
  long long total = 2;
  for (int depth = 1; depth < h; ++depth) {
    total += level;
    if (total > kMaxWiredVertices) throw ResourceLimit("wired graph exceeds " + std::to_string(kMaxWiredVertices) + " vertices");
    level *= children;
  }
}

}  // namespace

WiredReport wired_tree_report(int d, int h) {
  if (d < 4 || h < 2) throw InputError("wired report needs d >= 4 and h >= 2");
  require_wired_size(d, d - 1, h);
  return measure("wired:" + std::to_string(d) + "," + std::to_string(h), wired_regular(d, h), d, h);
}

WiredReport levine_report(int d, int h) {
  if (d < 3 || h < 2) throw InputError("levine report needs d >= 3 and h >= 2");
  require_wired_size(d - 1, d - 1, h);
  return measure("levine:" + std::to_string(d) + "," + std::to_string(h), levine_wired(d, h), d, h);
}

Integer evaluate_ideal(const GeneratorSet& gens, std::span<const Integer> values) {
  Integer g = 0;
  for (const Polynomial& p : gens) g = gcd(g, p.evaluate(values));
  return abs(g);
}

Integer spanning_tree_count(const MultiGraph& g) {
  require_connected(g);
  if (g.size() <= 1) return 1;
  IntMatrix l = laplacian_matrix(g);
  std::size_t n = l.rows() - 1;
  IntMatrix reduced(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) reduced.at(i, j) = l.at(i, j);
  }
  return determinant(reduced);
}

void for_each_connected_cyclic_graph(int n, const std::function<bool(const MultiGraph&)>& visit) {
  if (n < 3 || n > 6) throw InputError("cyclic graph enumeration needs 3 <= n <= 6");
  std::vector<Edge> slots;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) slots.emplace_back(a, b);
  }
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    if (std::popcount(mask) < n) continue;
    MultiGraph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) g.add_edge(slots[i].u, slots[i].v);
    }
    if (!g.is_connected()) continue;
    if (!visit(g)) return;
  }
}

}  // namespace critideals
