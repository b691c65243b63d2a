#ifndef PATTERN_DUEL_EXACT_LAURENT_HPP
#define PATTERN_DUEL_EXACT_LAURENT_HPP

#include "pattern_duel/exact/number.hpp"

#include <map>
#include <string>
#include <utility>

namespace pattern_duel {

/// Laurent polynomial in t with rational coefficients; zero terms are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c) { set(0, c); }  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Rational& c, long exponent) {
    LaurentPoly p;
    p.set(exponent, c);
    return p;
  }

  const std::map<long, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  long max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  Rational coefficient(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void set(long e, const Rational& c) {
    if (c == 0) terms_.erase(e);
    else terms_[e] = c;
  }
  void add(long e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational at_one() const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  bool has_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
      if (!is_integer(c)) return false;
    return true;
  }

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) {
    for (const auto& [e, c] : q.terms_) p.add(e, c);
    return p;
  }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) {
    for (const auto& [e, c] : q.terms_) p.add(e, -c);
    return p;
  }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r;
    for (const auto& [e1, c1] : p.terms_)
      for (const auto& [e2, c2] : q.terms_) r.add(e1 + e2, c1 * c2);
    return r;
  }
  /// Division by the monomial c·t^e.
  LaurentPoly divided_by_monomial(const Rational& c, long e) const {
    if (c == 0) throw ComputationError("division by zero monomial");
    LaurentPoly r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k - e, v / c);
    return r;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Descending powers, e.g. "t + 2 + t^-1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool neg = c < 0;
      Rational mag = abs(c);
      if (first) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      first = false;
      if (e == 0) {
        out += pattern_duel::to_string(mag);
        continue;
      }
      if (mag != 1) out += pattern_duel::to_string(mag) + "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::map<long, Rational> terms_;
};

}  // namespace pattern_duel

#endif  // PATTERN_DUEL_EXACT_LAURENT_HPP
