#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "critideals/laplacian.hpp"
#include "critideals/matching.hpp"
#include "critideals/polyring.hpp"
#include "critideals/report.hpp"
#include "critideals/treegraph.hpp"

namespace critideals {

struct CriticalIdeal {
  int j = 0;
  GeneratorSet generators;
  /// provenance[i] produced generators[i].
  std::vector<TwoMatching> provenance;

  const TwoMatching* provenance_of(const Polynomial& p) const;
};

/// I_j(T,X) from the minimal 2-matchings of T^ℓ of size j. Throws InputError unless 1 <= j <= n.
CriticalIdeal critical_ideal(const Tree& t, int j);

inline constexpr std::size_t kMaxAllMinors = 2'000'000;

/// Every nonzero j x j minor of L(T,X), sign-normalized. Throws ResourceLimit past max_minors pairs.
GeneratorSet all_minor_ideal(const Tree& t, int j, std::size_t max_minors = kMaxAllMinors);

/// Algebraic corank, which for trees is ν₂(T).
int gamma(const Tree& t);

struct GammaCertificate {
  int nu2 = 0;
  /// 1 lies in the completed basis of I_ν₂.
  bool trivial_at_nu2 = false;
  /// 1 is absent from the completed basis of I_{ν₂+1} (vacuously true when ν₂ = n).
  bool proper_above = false;

  bool ok() const { return trivial_at_nu2 && proper_above; }
};

/// Independent check of γ = ν₂ through Gröbner completion.
GammaCertificate certify_gamma(const Tree& t, const CompletionBudget& budget = CompletionBudget::from_environment());

/// Strong Gröbner basis of the ideal generated by gens; {1} for the unit ideal.
GeneratorSet completed(const GeneratorSet& gens, const CompletionBudget& budget = CompletionBudget::from_environment());
/// Every member of gens lies in the ideal of the given strong Gröbner basis.
bool ideal_contains(const GeneratorSet& groebner_basis, const GeneratorSet& gens);
/// Mutual containment after completing both sides.
bool same_ideal(const GeneratorSet& a, const GeneratorSet& b, const CompletionBudget& budget = CompletionBudget::from_environment());

struct ExpansionTerm {
  Polynomial coefficient;
  TwoMatching minimal;
};

/// d(M,X) as a combination of d over minimal 2-matchings of the same size. Repeatedly applies
/// d(L) = x_w d(L - w) - sum over looped neighbours v of w of d(L - {v,w}) on loop sets, taking
/// the smallest-in-deglex (largest label) w whose reduced loop sets are realisable.
/// Throws InputError("already minimal") for minimal M.
std::vector<ExpansionTerm> expand_nonminimal(const Tree& t, const TwoMatching& m);
/// Σ coefficient · d(minimal, X).
Polynomial recombine(const Tree& t, std::span<const ExpansionTerm> expansion);

/// Exact identity checks: deletion, multiply-by-variable, path-product, path-over-subpath (n <= 10).
CheckReport verify_identities(const Tree& t);
/// Individual identity families, used by verify_identities.
void check_deletion_identity(const Tree& t, CheckReport& report);
void check_variable_identity(const Tree& t, CheckReport& report);
void check_path_product_identity(const Tree& t, CheckReport& report);
void check_subpath_identity(const Tree& t, CheckReport& report);

/// d of the leaf-to-leaf path matchings, one per leaf pair.
GeneratorSet leaf_pair_basis(const Tree& t);

struct PathBasisCheck {
  std::size_t basis_size = 0;
  std::size_t leaf_pairs = 0;
  bool groebner = false;
  bool reduced = false;

  bool ok() const { return basis_size == leaf_pairs && groebner && reduced; }
};

/// B_{n-1} from leaf pairs: size check, Buchberger criterion and reducedness.
PathBasisCheck groebner_check_paths(const Tree& t);

struct ConjectureOutcome {
  int j = 0;
  std::size_t basis_size = 0;
  bool groebner = false;
  bool reduced = false;

  bool pass() const { return groebner && reduced; }
};

/// Buchberger check of B_j = {d(M) : M minimal of size j}; all j in 1..n when j is empty.
std::vector<ConjectureOutcome> conjecture_scan(const Tree& t, std::optional<int> j = std::nullopt);

/// Closed-form generators of I_j(S(m)) with leaves x1..xm and root x_{m+1}; 3 <= j <= m+1.
GeneratorSet star_ideal(int m, int j);

/// Which of the five minimal-matching shapes of a depth-two tree M has (1..5), built by depth2_tree.
/// The fifth shape accepts q = s (every branch a cherry plus the root loop).
std::optional<int> depth2_pattern(std::span<const int> branch_sizes, const TwoMatching& m);

}  // namespace critideals
