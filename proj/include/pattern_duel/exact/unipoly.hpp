#ifndef PATTERN_DUEL_EXACT_UNIPOLY_HPP
#define PATTERN_DUEL_EXACT_UNIPOLY_HPP

#include "pattern_duel/exact/number.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace pattern_duel {

/// Dense polynomial in n over the rationals. coeffs()[j] multiplies n^j.
class UniPolyN {
 public:
  UniPolyN() = default;
  explicit UniPolyN(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPolyN(const Rational& c) : c_{c} { trim(); }  // NOLINT(google-explicit-constructor)

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& n) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * n + *it;
    return r;
  }
  Rational operator()(long n) const { return (*this)(Rational(n)); }

  /// Evaluation when every coefficient is an integer.
  Integer eval_integer(long n) const {
    Integer r = 0;
    Integer nn = n;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (!is_integer(*it)) throw ComputationError("eval_integer on non-integer polynomial");
      r = r * nn + it->get_num();
    }
    return r;
  }

  friend UniPolyN operator+(const UniPolyN& p, const UniPolyN& q) {
    std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return UniPolyN(std::move(r));
  }
  friend UniPolyN operator*(const UniPolyN& p, const UniPolyN& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> r(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    return UniPolyN(std::move(r));
  }
  UniPolyN scaled(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& v : r) v *= s;
    return UniPolyN(std::move(r));
  }

  friend bool operator==(const UniPolyN&, const UniPolyN&) = default;

  /// Descending powers of n, e.g. "8*n + 32".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (int j = degree(); j >= 0; --j) {
      const Rational& c = c_[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      bool neg = c < 0;
      Rational mag = abs(c);
      if (first) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      first = false;
      if (j == 0) {
        out += pattern_duel::to_string(mag);
        continue;
      }
      if (mag != 1) out += pattern_duel::to_string(mag) + "*";
      out += "n";
      if (j > 1) out += "^" + std::to_string(j);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace pattern_duel

#endif  // PATTERN_DUEL_EXACT_UNIPOLY_HPP
