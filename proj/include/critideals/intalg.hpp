#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "critideals/polyring.hpp"
#include "critideals/treegraph.hpp"

namespace critideals {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  /// Throws InputError on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithNormalForm {
  /// min(rows, cols) diagonal entries, nonnegative, each dividing the next nonzero one.
  std::vector<Integer> factors;
  std::size_t rank = 0;
  /// U * M * V = diag(factors) when transforms were requested.
  std::optional<IntMatrix> u;
  std::optional<IntMatrix> v;
};

/// Smallest-pivot elimination with a divisibility repair pass.
SmithNormalForm smith_normal_form(const IntMatrix& m, bool want_transforms = false);

/// Exact determinant by fraction-free elimination.
Integer determinant(const IntMatrix& m);

struct AbelianGroup {
  /// Invariant factors > 1 in divisibility order.
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  Integer torsion_order() const;
  /// "Z_2 ⊕ Z_2", or "0" for the trivial group.
  std::string torsion_string() const;
  /// {"torsion":[...],"free_rank":r}
  std::string to_json() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel of a square integer matrix.
AbelianGroup cokernel(const IntMatrix& m);

struct ArithmeticalGraph {
  MultiGraph graph;
  std::vector<Integer> d;
  std::vector<Integer> r;
};

/// Diag(d) - A with d indexed from vertex 1.
IntMatrix arithmetical_matrix(const MultiGraph& g, std::span<const Integer> d);
/// Integer Laplacian: degrees on the diagonal.
IntMatrix laplacian_matrix(const MultiGraph& g);
std::vector<Integer> degree_vector(const MultiGraph& g);

/// (Diag(d) - A) r = 0 with r positive; throws InputError on length mismatch.
bool validate_arithmetical(const MultiGraph& g, std::span<const Integer> d, std::span<const Integer> r);

/// Torsion of the cokernel of the Laplacian; throws InputError for disconnected graphs.
AbelianGroup critical_group(const MultiGraph& g);
AbelianGroup critical_group(const ArithmeticalGraph& a);

/// C5(m) with d = (2,...,2) and r = (1,1,1,1,2,...,2).
ArithmeticalGraph c5_arithmetical(int m);

/// ν₂ of the regular branch T'(d,h), h >= 2, by parity of h.
Integer nu2_branch_formula(int d, int h);
/// ν₂ of T(d,h) = 2((d-1)^h - 1)/(d-2), h >= 3.
Integer nu2_full_formula(int d, int h);

struct WiredReport {
  std::string graph;
  int d = 0;
  int h = 0;
  int vertices = 0;
  std::vector<Integer> factors;
  /// Invariant factors > 1.
  std::size_t measured_rank = 0;
  /// Non-sink vertex count minus ν₂ of the tree left after removing the sink.
  std::size_t predicted_rank = 0;
  /// (d-1)^h, recorded for comparison only.
  Integer claimed_rank;
  std::optional<Integer> first_nontrivial_factor;

  std::string to_json() const;
};

inline constexpr int kMaxWiredVertices = 400;

/// Critical group of wired_regular(d,h) against the predicted and claimed ranks.
WiredReport wired_tree_report(int d, int h);
/// Same measurements for levine_wired(d,h).
WiredReport levine_report(int d, int h);

/// gcd of the generators evaluated at values (values[i] for x_i); 0 when all vanish.
Integer evaluate_ideal(const GeneratorSet& gens, std::span<const Integer> values);

/// Number of spanning trees via one principal cofactor; throws InputError when disconnected.
Integer spanning_tree_count(const MultiGraph& g);

/// Connected simple graphs on 1..n with at least n edges (n <= 6); visitor returns false to stop.
void for_each_connected_cyclic_graph(int n, const std::function<bool(const MultiGraph&)>& visit);

}  // namespace critideals
