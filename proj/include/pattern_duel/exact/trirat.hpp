#ifndef PATTERN_DUEL_EXACT_TRIRAT_HPP
#define PATTERN_DUEL_EXACT_TRIRAT_HPP

#include "pattern_duel/exact/tripoly.hpp"

#include <string>
#include <utility>

namespace pattern_duel {

/// Rational function num/den in x, a, b.
///
/// Canonical form removes the integer content shared by num and den and makes
/// the coefficient of den's lowest monomial positive. No polynomial gcd is
/// taken, so two equal functions may have different representations; compare
/// them with trirat_equal.
class TriRat {
 public:
  TriRat() : den_(1) {}
  TriRat(TriPoly num, TriPoly den = TriPoly(1)) : num_(std::move(num)), den_(std::move(den)) {  // NOLINT
    if (den_.is_zero()) throw ComputationError("zero denominator in rational function");
    canonicalize();
  }

  const TriPoly& num() const { return num_; }
  const TriPoly& den() const { return den_; }

  friend TriRat operator+(const TriRat& f, const TriRat& g) {
    if (f.den_ == g.den_) return {f.num_ + g.num_, f.den_};
    return {f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_};
  }
  friend TriRat operator-(const TriRat& f, const TriRat& g) {
    if (f.den_ == g.den_) return {f.num_ - g.num_, f.den_};
    return {f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_};
  }
  friend TriRat operator*(const TriRat& f, const TriRat& g) {
    return {f.num_ * g.num_, f.den_ * g.den_};
  }
  friend TriRat operator/(const TriRat& f, const TriRat& g) {
    if (g.num_.is_zero()) throw ComputationError("division by zero rational function");
    return {f.num_ * g.den_, f.den_ * g.num_};
  }

  TriRat swap_ab() const { return {num_.swap_ab(), den_.swap_ab()}; }

  /// Structural equality of canonical forms (stricter than trirat_equal).
  friend bool operator==(const TriRat& f, const TriRat& g) {
    return f.num_ == g.num_ && f.den_ == g.den_;
  }

  std::string to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

 private:
  void canonicalize() {
    Integer g = num_.content();
    Integer dc = den_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dc.get_mpz_t());
    if (den_.terms().front().coef < 0) g = -g;
    if (g != 1) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }

  TriPoly num_;
  TriPoly den_;
};

/// F == G as rational functions, decided by cross-multiplication.
inline bool trirat_equal(const TriRat& f, const TriRat& g) {
  return f.num() * g.den() == g.num() * f.den();
}

}  // namespace pattern_duel

#endif  // PATTERN_DUEL_EXACT_TRIRAT_HPP
