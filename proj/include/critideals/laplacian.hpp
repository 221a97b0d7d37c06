#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "critideals/matching.hpp"
#include "critideals/polyring.hpp"
#include "critideals/treegraph.hpp"

namespace critideals {

/// Square matrix of polynomials whose rows and columns are labeled by vertices.
class SymbolicMatrix {
 public:
  SymbolicMatrix() = default;
  /// Throws InputError on repeated labels or mismatched sizes.
  SymbolicMatrix(std::vector<Vertex> rows, std::vector<Vertex> cols);

  std::size_t size() const { return rows_.size(); }
  const std::vector<Vertex>& rows() const { return rows_; }
  const std::vector<Vertex>& cols() const { return cols_; }
  /// Position of a label, or -1.
  int row_position(Vertex v) const;
  int col_position(Vertex v) const;

  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_.size() + c]; }
  Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_.size() + c]; }
  /// Entry addressed by vertex labels.
  const Polynomial& entry(Vertex row, Vertex col) const;

  SymbolicMatrix submatrix(std::span<const Vertex> rows, std::span<const Vertex> cols) const;
  /// Row-major bracketed form: [[x1, -1], [-1, x2]].
  std::string to_string() const;

 private:
  std::vector<Vertex> rows_;
  std::vector<Vertex> cols_;
  std::vector<Polynomial> entries_;
};

/// x_u on the diagonal, minus the edge multiplicity off the diagonal.
SymbolicMatrix generalized_laplacian(const Forest& f);
SymbolicMatrix generalized_laplacian(const MultiGraph& g);

/// Determinants of submatrices of one matrix by cofactor expansion along the sparsest line,
/// memoized on (row set, column set). Not safe for concurrent use of a single instance.
class MinorEngine {
 public:
  /// Matrices up to 64 x 64.
  explicit MinorEngine(SymbolicMatrix matrix);

  const SymbolicMatrix& matrix() const { return matrix_; }
  /// det L[rows, cols] with rows and columns taken in the given order.
  Polynomial minor(std::span<const Vertex> rows, std::span<const Vertex> cols);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };

  const Polynomial& det(std::uint64_t row_mask, std::uint64_t col_mask);

  SymbolicMatrix matrix_;
  std::vector<std::uint64_t> row_support_;
  std::vector<std::uint64_t> col_support_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Polynomial, KeyHash> memo_;
};

/// One-off minor; throws InputError when the index lists differ in length or repeat labels.
Polynomial minor(const SymbolicMatrix& m, std::span<const Vertex> rows, std::span<const Vertex> cols);

/// Sum over the matchings μ of the forest of (-1)^|μ| times the product of x_v over uncovered v.
Polynomial matching_determinant(const Forest& f);
/// Principal minor of L(T,X) on the given vertices, i.e. the matching determinant of the induced forest.
Polynomial forest_determinant(const Forest& f, std::span<const Vertex> vertices);

/// det L(T,X)[t(M), h(M)] with both index lists sorted, negated if needed so the leading coefficient is positive.
Polynomial d_of_matching(const Forest& f, const TwoMatching& m);

/// A 2-matching together with the arc orientation that realises the requested tails and heads.
struct OrientedMatching {
  TwoMatching matching;
  /// (tail, head) per non-loop edge.
  std::vector<std::pair<Vertex, Vertex>> arcs;

  std::vector<Vertex> tails() const;
  std::vector<Vertex> heads() const;
};

/// For a nonvanishing minor det L[rows, cols], a 2-matching of T^ℓ with tails = rows and heads = cols.
/// Uses a permutation term of the largest fixed-point set, with 2-cycles turned into loop pairs.
std::optional<OrientedMatching> minor_to_matching(const Forest& f, std::span<const Vertex> rows, std::span<const Vertex> cols);

}  // namespace critideals
