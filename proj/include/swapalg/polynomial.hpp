#pragma once

#include <algorithm>
#include <concepts>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "swapalg/errors.hpp"
#include "swapalg/scalar.hpp"

namespace swapalg {

/// A power product of variables. Factors are kept sorted by variable with positive exponents,
/// so two monomials are equal iff their factor lists are equal.
template <class Var>
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;

  static Monomial of(const Var& v, std::uint32_t exponent = 1) {
    Monomial m;
    if (exponent > 0) {
      m.factors_.emplace_back(v, exponent);
      m.degree_ = exponent;
    }
    m.rehash();
    return m;
  }

  /// Canonicalizes an arbitrary factor list (any order, repeats, zero exponents).
  static Monomial from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (auto& [v, e] : factors) {
      if (e == 0) continue;
      if (!m.factors_.empty() && m.factors_.back().first == v) {
        m.factors_.back().second += e;
      } else {
        m.factors_.emplace_back(v, e);
      }
      m.degree_ += e;
    }
    m.rehash();
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  std::size_t hash() const { return hash_; }

  std::uint32_t exponent(const Var& v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, const Var& x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial m;
    m.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
      if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
        m.factors_.push_back(*a++);
      } else if (a == factors_.end() || b->first < a->first) {
        m.factors_.push_back(*b++);
      } else {
        m.factors_.emplace_back(a->first, a->second + b->second);
        ++a;
        ++b;
      }
    }
    m.degree_ = degree_ + other.degree_;
    m.rehash();
    return m;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    auto b = other.factors_.begin();
    for (const auto& [v, e] : factors_) {
      while (b != other.factors_.end() && b->first < v) ++b;
      if (b == other.factors_.end() || !(b->first == v) || b->second < e) return false;
    }
    return true;
  }

  /// Exact quotient other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial m;
    auto a = factors_.begin();
    for (const auto& [v, e] : other.factors_) {
      if (a != factors_.end() && a->first == v) {
        if (e > a->second) m.factors_.emplace_back(v, e - a->second);
        ++a;
      } else {
        m.factors_.emplace_back(v, e);
      }
    }
    m.degree_ = other.degree_ - degree_;
    m.rehash();
    return m;
  }

  /// The monomial with the exponent of v lowered by one; std::nullopt if v does not occur.
  std::optional<Monomial> lowered(const Var& v) const {
    Monomial m;
    bool found = false;
    for (const auto& [x, e] : factors_) {
      if (x == v) {
        found = true;
        if (e > 1) m.factors_.emplace_back(x, e - 1);
      } else {
        m.factors_.emplace_back(x, e);
      }
    }
    if (!found) return std::nullopt;
    m.degree_ = degree_ - 1;
    m.rehash();
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.hash_ == b.hash_ && a.factors_ == b.factors_;
  }

 private:
  static constexpr std::size_t kEmptyHash = 0x9e3779b97f4a7c15ULL;

  void rehash() {
    std::size_t h = kEmptyHash;
    for (const auto& [v, e] : factors_) {
      h ^= std::hash<Var>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
      h ^= e + 0x7f4a7c159e3779b9ULL + (h << 6U) + (h >> 2U);
    }
    hash_ = h;
  }

  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
  std::size_t hash_ = kEmptyHash;
};

/// Graded lexicographic order; among variables, the smaller one (by operator<) ranks higher.
/// For pair generators this makes every non-degenerate minor lead with its diagonal product.
template <class Var>
std::strong_ordering grlex_compare(const Monomial<Var>& a, const Monomial<Var>& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].first < fb[i].first) return std::strong_ordering::greater;
    if (fb[i].first < fa[i].first) return std::strong_ordering::less;
    if (fa[i].second != fb[i].second) return fa[i].second <=> fb[i].second;
  }
  return fa.size() <=> fb.size();
}

template <class Var>
struct MonomialHash {
  std::size_t operator()(const Monomial<Var>& m) const noexcept { return m.hash(); }
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are stored in strictly decreasing grlex order with nonzero coefficients, so
/// structural equality is equality of polynomials.
template <class Var>
class Polynomial {
 public:
  struct Term {
    Monomial<Var> monomial;
    Rational coeff;

    friend bool operator==(const Term& a, const Term& b) { return a.monomial == b.monomial && a.coeff == b.coeff; }
  };

  Polynomial() = default;

  static Polynomial constant(const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({Monomial<Var>(), c});
    return p;
  }

  static Polynomial variable(const Var& v) {
    Polynomial p;
    p.terms_.push_back({Monomial<Var>::of(v), Rational(1)});
    return p;
  }

  static Polynomial monomial(const Monomial<Var>& m, const Rational& c = 1) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds the canonical form of an arbitrary term list (any order, repeats, zeros).
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  Rational constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.back().monomial.is_one() ? terms_.back().coeff : Rational(0);
  }
  const Term& leading_term() const { return terms_.front(); }
  std::uint32_t degree() const { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }

  /// Distinct variables, sorted.
  std::vector<Var> variables() const {
    std::vector<Var> vars;
    for (const auto& t : terms_) {
      for (const auto& f : t.monomial.factors()) vars.push_back(f.first);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
  friend Polynomial operator*(const Rational& c, const Polynomial& a) {
    if (c == 0) return {};
    Polynomial p = a;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
  }
  friend Polynomial operator*(const Polynomial& a, const Rational& c) { return c * a; }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned exponent) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (exponent != 0) {
      if (exponent & 1U) result = result * base;
      exponent >>= 1U;
      if (exponent != 0) base = base * base;
    }
    return result;
  }

  /// Formal partial derivative.
  Polynomial partial(const Var& v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      std::uint32_t e = t.monomial.exponent(v);
      if (e == 0) continue;
      out.push_back({*t.monomial.lowered(v), t.coeff * e});
    }
    return from_terms(std::move(out));
  }

  /// Multiplies every term by a monomial (order-preserving, so no re-sort).
  Polynomial times_monomial(const Monomial<Var>& m, const Rational& c = 1) const {
    Polynomial p;
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
    return p;
  }

  /// Exact evaluation. value_of(v) returns std::optional<Rational>; a missing value throws
  /// IncompleteAssignment.
  template <class ValueOf>
    requires std::invocable<ValueOf&, const Var&>
  Rational evaluate(ValueOf&& value_of) const {
    std::unordered_map<Var, Rational> cache;
    Rational total = 0;
    for (const auto& t : terms_) {
      Rational term = t.coeff;
      for (const auto& [v, e] : t.monomial.factors()) {
        auto it = cache.find(v);
        if (it == cache.end()) {
          std::optional<Rational> value = value_of(v);
          if (!value) throw IncompleteAssignment("no value assigned to variable " + v.name());
          it = cache.emplace(v, *value).first;
        }
        for (std::uint32_t k = 0; k < e; ++k) term *= it->second;
      }
      total += term;
    }
    return total;
  }

  Rational evaluate(const std::map<Var, Rational>& assignment) const {
    return evaluate([&](const Var& v) -> std::optional<Rational> {
      auto it = assignment.find(v);
      if (it == assignment.end()) return std::nullopt;
      return it->second;
    });
  }

  /// Evaluation in F_p. value_of(v) returns std::optional<std::uint64_t>.
  template <class ValueOf>
  std::uint64_t evaluate_mod(const PrimeField& field, ValueOf&& value_of) const {
    std::unordered_map<Var, std::uint64_t> cache;
    std::uint64_t total = 0;
    for (const auto& t : terms_) {
      std::uint64_t term = field.from_rational(t.coeff);
      for (const auto& [v, e] : t.monomial.factors()) {
        auto it = cache.find(v);
        if (it == cache.end()) {
          std::optional<std::uint64_t> value = value_of(v);
          if (!value) throw IncompleteAssignment("no value assigned to variable " + v.name());
          it = cache.emplace(v, *value).first;
        }
        term = field.mul(term, e == 1 ? it->second : field.pow(it->second, e));
      }
      total = field.add(total, term);
    }
    return total;
  }

  /// Canonical text: terms in decreasing order, each as "c * v1 * v2^e".
  std::string render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.coeff;
      if (!first) {
        out += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      }
      out += c.get_str();
      for (const auto& [v, e] : t.monomial.factors()) {
        out += " * ";
        out += v.name();
        if (e > 1) out += "^" + std::to_string(e);
      }
      first = false;
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.render(); }

 private:
  static Polynomial multiply(const Polynomial& a, const Polynomial& b);

  static bool term_greater(const Term& a, const Term& b) { return grlex_compare(a.monomial, b.monomial) > 0; }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial p;
    p.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end()) {
        p.terms_.push_back(*i++);
        continue;
      }
      if (i == a.terms_.end()) {
        p.terms_.push_back({j->monomial, subtract ? Rational(-j->coeff) : j->coeff});
        ++j;
        continue;
      }
      auto cmp = grlex_compare(i->monomial, j->monomial);
      if (cmp > 0) {
        p.terms_.push_back(*i++);
      } else if (cmp < 0) {
        p.terms_.push_back({j->monomial, subtract ? Rational(-j->coeff) : j->coeff});
        ++j;
      } else {
        Rational c = subtract ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
        if (c != 0) p.terms_.push_back({i->monomial, c});
        ++i;
        ++j;
      }
    }
    return p;
  }

  std::vector<Term> terms_;
};

/// Hash-based accumulator for building large polynomials term by term.
template <class Var>
class PolyAccumulator {
 public:
  void reserve(std::size_t n) { map_.reserve(n); }

  void add(const Monomial<Var>& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = map_.try_emplace(m, c);
    if (!inserted) it->second += c;
  }

  void add(const Polynomial<Var>& p, const Rational& scale = 1) {
    for (const auto& t : p.terms()) add(t.monomial, t.coeff * scale);
  }

  Polynomial<Var> take() {
    std::vector<typename Polynomial<Var>::Term> terms;
    terms.reserve(map_.size());
    for (auto& [m, c] : map_) {
      if (c != 0) terms.push_back({m, std::move(c)});
    }
    map_.clear();
    return Polynomial<Var>::from_terms(std::move(terms));
  }

 private:
  std::unordered_map<Monomial<Var>, Rational, MonomialHash<Var>> map_;
};

template <class Var>
Polynomial<Var> Polynomial<Var>::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

template <class Var>
Polynomial<Var> Polynomial<Var>::multiply(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times_monomial(a.terms_[0].monomial, a.terms_[0].coeff);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].monomial, b.terms_[0].coeff);
  PolyAccumulator<Var> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) acc.add(s.monomial * t.monomial, s.coeff * t.coeff);
  }
  return acc.take();
}

}  // namespace swapalg
