#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <string>

#include "critideals/polyring.hpp"

namespace critideals {

namespace {

const Polynomial* find_divisor(const Term& t, const std::vector<const Polynomial*>& basis) {
  for (const Polynomial* b : basis) {
    const Term& lt = b->leading_term();
    if (lt.mono.divides(t.mono) && mpz_divisible_p(t.coeff.get_mpz_t(), lt.coeff.get_mpz_t())) return b;
  }
  return nullptr;
}

// Reduces the term at position k of f by b; terms before k are untouched.
void reduce_term(Polynomial& f, std::size_t k, const Polynomial& b) {
  const Term& t = f.terms()[k];
  const Term& lt = b.leading_term();
  Integer q;
  mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), lt.coeff.get_mpz_t());
  Monomial m = t.mono / lt.mono;
  f.sub_mul_term(q, m, b);
}

Polynomial reduce_with(Polynomial f, const std::vector<const Polynomial*>& basis, bool full) {
  std::size_t k = 0;
  while (k < f.size()) {
    if (const Polynomial* b = find_divisor(f.terms()[k], basis)) {
      reduce_term(f, k, *b);
    } else if (full) {
      ++k;
    } else {
      break;
    }
  }
  return f;
}

std::vector<const Polynomial*> pointers(const std::vector<Polynomial>& polys) {
  std::vector<const Polynomial*> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(&p);
  return out;
}

Integer positive_lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::size_t approx_bytes(const Polynomial& p) {
  std::size_t bytes = sizeof(Polynomial) + p.size() * sizeof(Term);
  for (const auto& t : p.terms()) bytes += mpz_size(t.coeff.get_mpz_t()) * sizeof(mp_limb_t);
  return bytes;
}

bool is_unit(const Polynomial& p) { return p.is_constant() && !p.is_zero() && abs(p.leading_coefficient()) == 1; }

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw InputError("S-polynomial of the zero polynomial");
  const Term& tf = f.leading_term();
  const Term& tg = g.leading_term();
  Monomial x = lcm(tf.mono, tg.mono);
  Integer c = positive_lcm(tf.coeff, tg.coeff);
  Integer cf;
  Integer cg;
  mpz_divexact(cf.get_mpz_t(), c.get_mpz_t(), tf.coeff.get_mpz_t());
  mpz_divexact(cg.get_mpz_t(), c.get_mpz_t(), tg.coeff.get_mpz_t());
  Polynomial s = f.mul_term(cf, x / tf.mono);
  s.sub_mul_term(cg, x / tg.mono, g);
  return s;
}

Polynomial gcd_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw InputError("gcd polynomial of the zero polynomial");
  const Term& tf = f.leading_term();
  const Term& tg = g.leading_term();
  Monomial x = lcm(tf.mono, tg.mono);
  Integer d;
  Integer u;
  Integer v;
  mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), tf.coeff.get_mpz_t(), tg.coeff.get_mpz_t());
  Polynomial out = f.mul_term(u, x / tf.mono);
  out.sub_mul_term(-v, x / tg.mono, g);
  return out;
}

Reduction strong_reduce(Polynomial f, const GeneratorSet& basis, std::vector<Term>* trace) {
  auto ptrs = pointers(basis.polys());
  Reduction r;
  while (!f.is_zero()) {
    const Polynomial* b = find_divisor(f.leading_term(), ptrs);
    if (b == nullptr) break;
    Monomial before = f.leading_power();
    reduce_term(f, 0, *b);
    ++r.steps;
    if (!f.is_zero() && !(f.leading_power() < before)) throw std::logic_error("strong reduction did not decrease the leading term");
    if (trace != nullptr) trace->push_back(f.is_zero() ? Term{0, Monomial{}} : f.leading_term());
  }
  r.reduced_to_zero = f.is_zero();
  r.normal_form = std::move(f);
  return r;
}

Polynomial reduce_fully(Polynomial f, const GeneratorSet& basis) {
  return reduce_with(std::move(f), pointers(basis.polys()), true);
}

bool reduces_to_zero(const Polynomial& f, const GeneratorSet& groebner_basis) {
  return strong_reduce(f, groebner_basis).reduced_to_zero;
}

bool is_groebner_basis(const GeneratorSet& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!strong_reduce(s_polynomial(basis[i], basis[j]), basis).reduced_to_zero) return false;
    }
  }
  return true;
}

bool is_reduced_groebner_basis(const GeneratorSet& basis) {
  for (const auto& b : basis) {
    if (b.leading_coefficient() != 1) return false;
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& lp = basis[j].leading_power();
      for (const auto& t : basis[i].terms()) {
        if (lp.divides(t.mono)) return false;
      }
    }
  }
  return true;
}

CompletionBudget CompletionBudget::from_environment() {
  CompletionBudget b;
  if (const char* cap = std::getenv("CRITIDEALS_CAP_MB"); cap != nullptr && *cap != '\0') {
    b.max_bytes = static_cast<std::size_t>(std::stoull(cap)) * 1024 * 1024;
  }
  return b;
}

CompletionExhausted::CompletionExhausted(GeneratorSet partial, std::size_t pairs_processed)
    : ResourceLimit("completion budget exhausted"), partial_(std::move(partial)), pairs_(pairs_processed) {}

namespace {

struct CriticalPair {
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

struct PairAfter {
  bool operator()(const CriticalPair& a, const CriticalPair& b) const {
    if (auto c = a.lcm <=> b.lcm; c != 0) return c > 0;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  }
};

class Completion {
 public:
  explicit Completion(const CompletionBudget& budget) : budget_(budget) {}

  GeneratorSet run(const GeneratorSet& input) {
    for (const auto& p : input) {
      if (add(p)) return GeneratorSet{Polynomial(1)};
    }
    while (!queue_.empty()) {
      CriticalPair pair = queue_.top();
      queue_.pop();
      if (pairs_ == budget_.max_pairs) throw CompletionExhausted(GeneratorSet(basis_), pairs_);
      ++pairs_;
      const Polynomial& f = basis_[pair.i];
      const Polynomial& g = basis_[pair.j];
      const Integer& cf = f.leading_coefficient();
      const Integer& cg = g.leading_coefficient();
      bool unit_leads = cf == 1 && cg == 1;
      bool comparable = mpz_divisible_p(cf.get_mpz_t(), cg.get_mpz_t()) || mpz_divisible_p(cg.get_mpz_t(), cf.get_mpz_t());
      Polynomial gpoly;
      if (!comparable) gpoly = gcd_polynomial(f, g);
      if (!(unit_leads && f.leading_power().coprime(g.leading_power()))) {
        if (add(s_polynomial(f, g))) return GeneratorSet{Polynomial(1)};
      }
      if (!comparable && add(std::move(gpoly))) return GeneratorSet{Polynomial(1)};
    }
    return finish();
  }

 private:
  // Returns true when the unit ideal has been reached.
  bool add(Polynomial h) {
    h = normalize_sign(reduce_with(std::move(h), current(), true));
    if (h.is_zero()) return false;
    if (is_unit(h)) return true;
    bytes_ += approx_bytes(h);
    if (budget_.max_bytes != 0 && bytes_ > budget_.max_bytes) {
      basis_.push_back(std::move(h));
      throw CompletionExhausted(GeneratorSet(basis_), pairs_);
    }
    basis_.push_back(std::move(h));
    ptrs_valid_ = false;
    std::size_t k = basis_.size() - 1;
    for (std::size_t i = 0; i < k; ++i) queue_.push({lcm(basis_[i].leading_power(), basis_[k].leading_power()), i, k});
    return false;
  }

  const std::vector<const Polynomial*>& current() {
    if (!ptrs_valid_) {
      ptrs_ = pointers(basis_);
      ptrs_valid_ = true;
    }
    return ptrs_;
  }

  GeneratorSet finish() {
    std::vector<Polynomial> kept;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Term& ti = basis_[i].leading_term();
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const Term& tj = basis_[j].leading_term();
        bool divides = tj.mono.divides(ti.mono) && mpz_divisible_p(ti.coeff.get_mpz_t(), tj.coeff.get_mpz_t());
        bool same = tj.mono == ti.mono && abs(tj.coeff) == abs(ti.coeff);
        redundant = divides && (!same || j < i);
      }
      if (!redundant) kept.push_back(basis_[i]);
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<const Polynomial*> others;
      for (std::size_t j = 0; j < kept.size(); ++j) {
        if (j != i) others.push_back(&kept[j]);
      }
      kept[i] = normalize_sign(reduce_with(std::move(kept[i]), others, true));
    }
    return GeneratorSet(std::move(kept));
  }

  CompletionBudget budget_;
  std::vector<Polynomial> basis_;
  std::vector<const Polynomial*> ptrs_;
  bool ptrs_valid_ = false;
  std::priority_queue<CriticalPair, std::vector<CriticalPair>, PairAfter> queue_;
  std::size_t pairs_ = 0;
  std::size_t bytes_ = 0;
};

}  // namespace

GeneratorSet groebner_complete(const GeneratorSet& generators, const CompletionBudget& budget) {
  if (generators.empty()) throw InputError("completion of an empty generator set");
  return Completion(budget).run(generators);
}

}  // namespace critideals
