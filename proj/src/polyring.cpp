#include "critideals/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace critideals {

namespace {

void check_variable(int var) {
  if (var < 1 || var > kMaxVariable) {
    throw InputError("variable index " + std::to_string(var) + " outside 1.." + std::to_string(kMaxVariable));
  }
}

}  // namespace

Monomial::Monomial(std::initializer_list<std::pair<int, unsigned>> powers) {
  for (const auto& [var, e] : powers) *this *= variable(var, e);
}

Monomial Monomial::variable(int var, unsigned exponent) {
  check_variable(var);
  if (exponent > 255) throw std::overflow_error("exponent overflow");
  Monomial m;
  m.exps_[var] = static_cast<std::uint8_t>(exponent);
  m.degree_ = static_cast<std::uint16_t>(exponent);
  return m;
}

Monomial Monomial::product(std::span<const int> vars) {
  Monomial m;
  for (int v : vars) m *= variable(v);
  return m;
}

unsigned Monomial::exponent(int var) const {
  check_variable(var);
  return exps_[var];
}

std::vector<std::pair<int, unsigned>> Monomial::powers() const {
  std::vector<std::pair<int, unsigned>> out;
  for (int i = 1; i <= kMaxVariable; ++i) {
    if (exps_[i] != 0) out.emplace_back(i, exps_[i]);
  }
  return out;
}

int Monomial::max_variable() const {
  for (int i = kMaxVariable; i >= 1; --i) {
    if (exps_[i] != 0) return i;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (int i = 1; i <= kMaxVariable; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 1; i <= kMaxVariable; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  bool overflow = false;
  for (int i = 1; i <= kMaxVariable; ++i) {
    unsigned s = unsigned{exps_[i]} + other.exps_[i];
    overflow |= s > 255;
    exps_[i] = static_cast<std::uint8_t>(s);
  }
  if (overflow) throw std::overflow_error("exponent overflow");
  degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return *this;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::domain_error("monomial is not divisible");
  Monomial q;
  for (int i = 1; i <= kMaxVariable; ++i) q.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
  q.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  unsigned deg = 0;
  for (int i = 1; i <= kMaxVariable; ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    deg += m.exps_[i];
  }
  m.degree_ = static_cast<std::uint16_t>(deg);
  return m;
}

std::strong_ordering deglex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  int c = std::memcmp(a.exps_.data(), b.exps_.data(), a.exps_.size());
  return c <=> 0;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  if (m.is_one()) return os << "1";
  bool first = true;
  for (const auto& [var, e] : m.powers()) {
    if (!first) os << '*';
    first = false;
    os << 'x' << var;
    if (e > 1) os << '^' << e;
  }
  return os;
}

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.push_back({constant, Monomial{}});
}

Polynomial Polynomial::variable(int var) { return monomial(1, Monomial::variable(var)); }

Polynomial Polynomial::monomial(const Integer& coeff, const Monomial& mono) {
  Polynomial p;
  if (coeff != 0) p.terms_.push_back({coeff, mono});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool Polynomial::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

int Polynomial::max_variable() const {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.mono.max_variable());
  return m;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("no leading term");
  return terms_.front();
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  sub_mul_term(-1, Monomial{}, other);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  sub_mul_term(1, Monomial{}, other);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return large.mul_term(small.terms_[0].coeff, small.terms_[0].mono);
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : small.terms_) {
    for (const auto& l : large.terms_) products.push_back({s.coeff * l.coeff, s.mono * l.mono});
  }
  return Polynomial::from_terms(std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= scalar;
  }
  return *this;
}

Polynomial Polynomial::mul_term(const Integer& coeff, const Monomial& mono) const {
  Polynomial p;
  if (coeff == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coeff * coeff, t.mono * mono});
  return p;
}

void Polynomial::sub_mul_term(const Integer& coeff, const Monomial& mono, const Polynomial& g) {
  if (coeff == 0 || g.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto it = terms_.begin();
  Integer c;
  for (const auto& gt : g.terms_) {
    Monomial m = gt.mono * mono;
    while (it != terms_.end() && it->mono > m) out.push_back(std::move(*it++));
    c = gt.coeff * coeff;
    if (it != terms_.end() && it->mono == m) {
      c = it->coeff - c;
      ++it;
      if (c != 0) out.push_back({c, m});
    } else {
      out.push_back({-c, m});
    }
  }
  while (it != terms_.end()) out.push_back(std::move(*it++));
  terms_ = std::move(out);
}

Integer Polynomial::evaluate(std::span<const Integer> values) const {
  Integer sum = 0;
  Integer power;
  for (const auto& t : terms_) {
    Integer prod = t.coeff;
    for (const auto& [var, e] : t.mono.powers()) {
      if (static_cast<std::size_t>(var) >= values.size()) {
        throw InputError("no value for x" + std::to_string(var));
      }
      mpz_pow_ui(power.get_mpz_t(), values[var].get_mpz_t(), e);
      prod *= power;
    }
    sum += prod;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = t.coeff < 0;
    Integer magnitude = abs(t.coeff);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << magnitude.get_str();
    } else {
      if (magnitude != 1) os << magnitude.get_str() << '*';
      os << t.mono;
    }
  }
  return os;
}

std::strong_ordering canonical_compare(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = ta[i].mono <=> tb[i].mono; c != 0) return c;
    int cc = cmp(ta[i].coeff, tb[i].coeff);
    if (cc != 0) return cc <=> 0;
  }
  return ta.size() <=> tb.size();
}

Polynomial normalize_sign(Polynomial p) {
  if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
  return p;
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      terms.push_back(parse_term());
      if (sign < 0) terms.back().coeff = -terms.back().coeff;
      first = false;
      skip_space();
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Term parse_term() {
    Term t{1, Monomial{}};
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = Integer(read_digits());
      have_factor = true;
      skip_space();
      if (peek() != '*') return t;
      get();
      skip_space();
    }
    while (true) {
      if (peek() != 'x') {
        if (!have_factor) fail("expected coefficient or variable");
        fail("expected variable after '*'");
      }
      get();
      std::string digits = read_digits();
      int var = digits.size() > 2 ? 0 : std::stoi(digits);
      if (var < 1 || var > kMaxVariable) fail("variable index outside 1.." + std::to_string(kMaxVariable));
      unsigned e = 1;
      skip_space();
      if (peek() == '^') {
        get();
        skip_space();
        e = static_cast<unsigned>(std::stoul(read_digits()));
        skip_space();
      }
      t.mono *= Monomial::variable(var, e);
      have_factor = true;
      if (peek() != '*') break;
      get();
      skip_space();
    }
    return t;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseError::Kind::syntax, "polynomial: " + msg + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

bool basis_order_less(const Polynomial& a, const Polynomial& b) { return canonical_compare(a, b) > 0; }

GeneratorSet::GeneratorSet(std::initializer_list<Polynomial> polys) {
  for (const auto& p : polys) insert(p);
}

GeneratorSet::GeneratorSet(std::vector<Polynomial> polys) {
  for (auto& p : polys) insert(std::move(p));
}

bool GeneratorSet::insert(Polynomial p) {
  if (p.is_zero()) return false;
  auto it = std::lower_bound(polys_.begin(), polys_.end(), p, basis_order_less);
  if (it != polys_.end() && *it == p) return false;
  polys_.insert(it, std::move(p));
  return true;
}

bool GeneratorSet::contains(const Polynomial& p) const {
  auto it = std::lower_bound(polys_.begin(), polys_.end(), p, basis_order_less);
  return it != polys_.end() && *it == p;
}

bool GeneratorSet::contains_one() const { return contains(Polynomial(1)); }

std::vector<std::string> GeneratorSet::to_strings() const {
  std::vector<std::string> out;
  out.reserve(polys_.size());
  for (const auto& p : polys_) out.push_back(p.to_string());
  return out;
}

}  // namespace critideals
