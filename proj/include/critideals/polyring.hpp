#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "critideals/errors.hpp"

namespace critideals {

using Integer = mpz_class;

/// Variables are x_1..x_kMaxVariable; x_i stands for vertex i.
inline constexpr int kMaxVariable = 63;

class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<std::pair<int, unsigned>> powers);

  static Monomial variable(int var, unsigned exponent = 1);
  /// Squarefree product of the given variables.
  static Monomial product(std::span<const int> vars);

  unsigned exponent(int var) const;
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  /// Nonzero exponents in increasing variable order.
  std::vector<std::pair<int, unsigned>> powers() const;
  int max_variable() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend std::strong_ordering deglex_compare(const Monomial& a, const Monomial& b);
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return deglex_compare(a, b); }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  std::array<std::uint8_t, kMaxVariable + 1> exps_{};
  std::uint16_t degree_ = 0;
};

struct Term {
  Integer coeff;
  Monomial mono;

  friend bool operator==(const Term& a, const Term& b) { return a.coeff == b.coeff && a.mono == b.mono; }
};

/// Sparse polynomial over the integers; terms strictly descending in deglex, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Integer& constant);
  explicit Polynomial(long constant) : Polynomial(Integer(constant)) {}

  static Polynomial variable(int var);
  static Polynomial monomial(const Integer& coeff, const Monomial& mono);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  unsigned total_degree() const;
  int max_variable() const;

  /// Throws std::domain_error("no leading term") on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_power() const { return leading_term().mono; }
  const Integer& leading_coefficient() const { return leading_term().coeff; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Integer& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
  friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }

  /// coeff * mono * (*this)
  Polynomial mul_term(const Integer& coeff, const Monomial& mono) const;
  /// *this -= coeff * mono * g, in a single merge pass.
  void sub_mul_term(const Integer& coeff, const Monomial& mono, const Polynomial& g);

  /// values[i] is the value of x_i; index 0 is ignored.
  Integer evaluate(std::span<const Integer> values) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Total order: term by term, monomial first (larger monomial ranks higher), then coefficient, then length.
std::strong_ordering canonical_compare(const Polynomial& a, const Polynomial& b);

/// Negates if needed so the leading coefficient is positive; zero stays zero.
Polynomial normalize_sign(Polynomial p);

/// Parses the text grammar, e.g. "x1*x2*x3 - x1 - x3", "2*x1^2 + 1", "0".
Polynomial parse_polynomial(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Set of nonzero polynomials kept in basis order: descending leading power, ties by canonical order.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  GeneratorSet(std::initializer_list<Polynomial> polys);
  explicit GeneratorSet(std::vector<Polynomial> polys);

  /// Returns false for zero or an already present polynomial.
  bool insert(Polynomial p);
  bool contains(const Polynomial& p) const;
  bool contains_one() const;

  std::size_t size() const { return polys_.size(); }
  bool empty() const { return polys_.empty(); }
  const Polynomial& operator[](std::size_t i) const { return polys_[i]; }
  auto begin() const { return polys_.begin(); }
  auto end() const { return polys_.end(); }
  const std::vector<Polynomial>& polys() const { return polys_; }
  std::vector<std::string> to_strings() const;

  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) = default;

 private:
  std::vector<Polynomial> polys_;
};

bool basis_order_less(const Polynomial& a, const Polynomial& b);

/// Throws InputError when either argument is zero.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
/// u*(X/X_f)*f + v*(X/X_g)*g with u*lc(f) + v*lc(g) = gcd(lc(f), lc(g)).
Polynomial gcd_polynomial(const Polynomial& f, const Polynomial& g);

struct Reduction {
  Polynomial normal_form;
  bool reduced_to_zero = false;
  std::size_t steps = 0;
};

/// Leading-term strong reduction; trace, when given, receives the leading term after every step.
Reduction strong_reduce(Polynomial f, const GeneratorSet& basis, std::vector<Term>* trace = nullptr);

bool is_groebner_basis(const GeneratorSet& basis);
bool is_reduced_groebner_basis(const GeneratorSet& basis);

struct CompletionBudget {
  std::size_t max_pairs = 2'000'000;
  /// Approximate cap on stored term bytes; 0 means no cap.
  std::size_t max_bytes = 0;

  /// Default budget with max_bytes read from CRITIDEALS_CAP_MB when set.
  static CompletionBudget from_environment();
};

class CompletionExhausted : public ResourceLimit {
 public:
  CompletionExhausted(GeneratorSet partial, std::size_t pairs_processed);
  const GeneratorSet& partial() const noexcept { return partial_; }
  std::size_t pairs_processed() const noexcept { return pairs_; }

 private:
  GeneratorSet partial_;
  std::size_t pairs_;
};

/// Strong Gröbner basis over the integers generating the same ideal; {1} when the ideal is the whole ring.
GeneratorSet groebner_complete(const GeneratorSet& generators, const CompletionBudget& budget = {});

/// Full strong reduction of every term, not only the leading one.
Polynomial reduce_fully(Polynomial f, const GeneratorSet& basis);

/// Ideal membership against a strong Gröbner basis.
bool reduces_to_zero(const Polynomial& f, const GeneratorSet& groebner_basis);

}  // namespace critideals
