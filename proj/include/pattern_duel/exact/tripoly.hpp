#ifndef PATTERN_DUEL_EXACT_TRIPOLY_HPP
#define PATTERN_DUEL_EXACT_TRIPOLY_HPP

#include "pattern_duel/exact/number.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pattern_duel {

/// Exponent triple of x^ex a^ea b^eb. Ordered lexicographically by (x, a, b).
struct Monomial {
  unsigned x = 0;
  unsigned a = 0;
  unsigned b = 0;

  auto operator<=>(const Monomial&) const = default;

  // 21 bits per exponent; the packing preserves the lexicographic order.
  std::uint64_t key() const {
    return (std::uint64_t{x} << 42) | (std::uint64_t{a} << 21) | std::uint64_t{b};
  }
  static Monomial from_key(std::uint64_t k) {
    constexpr std::uint64_t mask = (std::uint64_t{1} << 21) - 1;
    return {static_cast<unsigned>(k >> 42), static_cast<unsigned>((k >> 21) & mask),
            static_cast<unsigned>(k & mask)};
  }
  bool divides(const Monomial& o) const { return x <= o.x && a <= o.a && b <= o.b; }
  Monomial operator*(const Monomial& o) const { return {x + o.x, a + o.a, b + o.b}; }
  Monomial operator/(const Monomial& o) const { return {x - o.x, a - o.a, b - o.b}; }
};

/// Sparse polynomial in x, a, b with integer coefficients. Terms are kept
/// sorted ascending by monomial with no zero coefficients.
class TriPoly {
 public:
  struct Term {
    Monomial mono;
    Integer coef;
    bool operator==(const Term&) const = default;
  };

  TriPoly() = default;
  TriPoly(long c) : TriPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  TriPoly(const Integer& c) {               // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({Monomial{}, c});
  }

  static TriPoly monomial(const Integer& c, Monomial m) {
    TriPoly p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }
  static TriPoly x(unsigned power = 1) { return monomial(1, {power, 0, 0}); }
  static TriPoly a(unsigned power = 1) { return monomial(1, {0, power, 0}); }
  static TriPoly b(unsigned power = 1) { return monomial(1, {0, 0, power}); }

  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static TriPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& l, const Term& r) { return l.mono < r.mono; });
    TriPoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coef += t.coef;
      } else {
        p.terms_.push_back(std::move(t));
      }
    }
    p.prune();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& v) { return t.mono < v; });
    return (it != terms_.end() && it->mono == m) ? it->coef : Integer(0);
  }

  unsigned degree_x() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.x);
    return d;
  }

  /// Coefficient of x^ex as a polynomial in a and b.
  TriPoly x_coefficient(unsigned ex) const {
    TriPoly p;
    for (const auto& t : terms_)
      if (t.mono.x == ex) p.terms_.push_back({{0, t.mono.a, t.mono.b}, t.coef});
    return p;
  }

  /// Positive gcd of all coefficients; 0 for the zero polynomial.
  Integer content() const {
    Integer g = 0;
    for (const auto& t : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  TriPoly swap_ab() const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({{t.mono.x, t.mono.b, t.mono.a}, t.coef});
    return from_terms(std::move(ts));
  }

  /// Substitutes integer values for a and b, leaving a polynomial in x.
  TriPoly substitute_ab(const Integer& av, const Integer& bv) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_)
      ts.push_back({{t.mono.x, 0, 0}, t.coef * ipow(av, t.mono.a) * ipow(bv, t.mono.b)});
    return from_terms(std::move(ts));
  }

  TriPoly operator-() const {
    TriPoly p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
  }

  friend TriPoly operator+(const TriPoly& p, const TriPoly& q) { return merge(p, q, false); }
  friend TriPoly operator-(const TriPoly& p, const TriPoly& q) { return merge(p, q, true); }
  TriPoly& operator+=(const TriPoly& q) { return *this = *this + q; }
  TriPoly& operator-=(const TriPoly& q) { return *this = *this - q; }

  friend TriPoly operator*(const TriPoly& p, const TriPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    if (p.size() == 1 && p.terms_[0].mono == Monomial{}) return q.scaled(p.terms_[0].coef);
    if (q.size() == 1 && q.terms_[0].mono == Monomial{}) return p.scaled(q.terms_[0].coef);
    std::unordered_map<std::uint64_t, Integer> acc;
    acc.reserve(p.size() * q.size());
    for (const auto& s : p.terms_)
      for (const auto& t : q.terms_) {
        Integer& slot = acc[(s.mono * t.mono).key()];
        mpz_addmul(slot.get_mpz_t(), s.coef.get_mpz_t(), t.coef.get_mpz_t());
      }
    std::vector<std::pair<std::uint64_t, Integer>> flat(acc.begin(), acc.end());
    std::sort(flat.begin(), flat.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    TriPoly out;
    out.terms_.reserve(flat.size());
    for (auto& [k, c] : flat)
      if (c != 0) out.terms_.push_back({Monomial::from_key(k), std::move(c)});
    return out;
  }
  TriPoly& operator*=(const TriPoly& q) { return *this = *this * q; }

  TriPoly scaled(const Integer& c) const {
    if (c == 0) return {};
    TriPoly p = *this;
    for (auto& t : p.terms_) t.coef *= c;
    return p;
  }

  /// Exact division by an integer; throws if some coefficient is not divisible.
  TriPoly divide_exact(const Integer& c) const {
    TriPoly p = *this;
    for (auto& t : p.terms_) {
      if (!mpz_divisible_p(t.coef.get_mpz_t(), c.get_mpz_t()))
        throw ComputationError("inexact integer division of polynomial");
      mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
    }
    return p;
  }

  /// Exact polynomial division. The divisor must divide *this in Z[x,a,b];
  /// otherwise a ComputationError is thrown.
  TriPoly divide_exact(const TriPoly& d) const {
    if (d.is_zero()) throw ComputationError("division by zero polynomial");
    if (is_zero()) return {};
    if (d.size() == 1) {
      const Term& lt = d.terms_.front();
      TriPoly p;
      p.terms_.reserve(terms_.size());
      for (const auto& t : terms_) {
        if (!lt.mono.divides(t.mono) ||
            !mpz_divisible_p(t.coef.get_mpz_t(), lt.coef.get_mpz_t()))
          throw ComputationError("inexact polynomial division");
        Integer c;
        mpz_divexact(c.get_mpz_t(), t.coef.get_mpz_t(), lt.coef.get_mpz_t());
        p.terms_.push_back({t.mono / lt.mono, std::move(c)});
      }
      return p;
    }
    std::map<std::uint64_t, Integer> rem;
    for (const auto& t : terms_) rem.emplace(t.mono.key(), t.coef);
    const Term& lead = d.terms_.back();
    std::vector<Term> quotient;
    while (!rem.empty()) {
      auto top = std::prev(rem.end());
      Monomial m = Monomial::from_key(top->first);
      if (!lead.mono.divides(m) ||
          !mpz_divisible_p(top->second.get_mpz_t(), lead.coef.get_mpz_t()))
        throw ComputationError("inexact polynomial division");
      Integer qc;
      mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lead.coef.get_mpz_t());
      Monomial qm = m / lead.mono;
      for (const auto& t : d.terms_) {
        auto [it, inserted] = rem.try_emplace((t.mono * qm).key());
        mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), t.coef.get_mpz_t());
        if (it->second == 0) rem.erase(it);
      }
      quotient.push_back({qm, std::move(qc)});
    }
    return from_terms(std::move(quotient));
  }

  friend bool operator==(const TriPoly& p, const TriPoly& q) { return p.terms_ == q.terms_; }

  /// Terms in ascending (x, a, b) order, e.g. "1 + x - x*a".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      Integer mag = abs(t.coef);
      bool neg = t.coef < 0;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string mono;
      auto add = [&mono](const char* v, unsigned e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      add("x", t.mono.x);
      add("a", t.mono.a);
      add("b", t.mono.b);
      if (mono.empty()) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  static TriPoly merge(const TriPoly& p, const TriPoly& q, bool subtract) {
    TriPoly out;
    out.terms_.reserve(p.size() + q.size());
    auto i = p.terms_.begin();
    auto j = q.terms_.begin();
    while (i != p.terms_.end() || j != q.terms_.end()) {
      if (j == q.terms_.end() || (i != p.terms_.end() && i->mono < j->mono)) {
        out.terms_.push_back(*i++);
      } else if (i == p.terms_.end() || j->mono < i->mono) {
        out.terms_.push_back({j->mono, subtract ? Integer(-j->coef) : j->coef});
        ++j;
      } else {
        Integer c = subtract ? Integer(i->coef - j->coef) : Integer(i->coef + j->coef);
        if (c != 0) out.terms_.push_back({i->mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  void prune() {
    std::erase_if(terms_, [](const Term& t) { return t.coef == 0; });
  }

  std::vector<Term> terms_;
};

namespace detail {

// Recursive-descent parser for expressions such as "-(a*x - x - 1)" or
// "a b x^10 + 5 a x^6 - 4 x^6". Juxtaposition means multiplication.
class TriPolyParser {
 public:
  explicit TriPolyParser(std::string_view text) : s_(text) {}

  TriPoly parse() {
    TriPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_factor_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'a' || c == 'b' ||
           c == '(';
  }
  unsigned long number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }
  TriPoly expr() {
    TriPoly acc;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    TriPoly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }
  TriPoly term() {
    TriPoly acc = factor();
    for (;;) {
      if (eat('*')) acc *= factor();
      else if (at_factor_start()) acc *= factor();
      else return acc;
    }
  }
  TriPoly power(TriPoly base) {
    if (!eat('^')) return base;
    unsigned long e = number();
    TriPoly r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
  }
  TriPoly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      TriPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return power(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return power(TriPoly(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    ++pos_;
    switch (c) {
      case 'x': return power(TriPoly::x());
      case 'a': return power(TriPoly::a());
      case 'b': return power(TriPoly::b());
      default: --pos_; fail("unknown symbol");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline TriPoly parse_tripoly(std::string_view text) { return detail::TriPolyParser(text).parse(); }

}  // namespace pattern_duel

#endif  // PATTERN_DUEL_EXACT_TRIPOLY_HPP
