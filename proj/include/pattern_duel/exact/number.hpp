#ifndef PATTERN_DUEL_EXACT_NUMBER_HPP
#define PATTERN_DUEL_EXACT_NUMBER_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pattern_duel {

using Integer = mpz_class;
using Rational = mpq_class;

/// Bad input: malformed patterns, out-of-range letters, violated preconditions.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
  static constexpr int exit_code = 2;
};

/// A computation that could not be completed (singular system, budget, unstable fit).
struct ComputationError : std::runtime_error {
  using std::runtime_error::runtime_error;
  static constexpr int exit_code = 3;
};

inline Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ValidationError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw ValidationError("not a rational number: " + text);
  q.canonicalize();
  return q;
}

/// Decimal rendering of an exact rational rounded to `digits` significant
/// digits with round-half-even. Trailing zeros are dropped, so 1 renders as
/// "1" and 1/4 as "0.25".
inline std::string format_significant(const Rational& value, int digits = 10) {
  if (digits < 1) throw ValidationError("digits must be positive");
  if (value == 0) return "0";
  Rational mag = abs(value);

  // Find e with 10^(e-1) <= mag < 10^e.
  long e = static_cast<long>(mpz_sizeinbase(mag.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(mag.get_den_mpz_t(), 10));
  auto pow10 = [](long p) {
    Rational r(ipow(10, static_cast<unsigned long>(p < 0 ? -p : p)));
    return p < 0 ? Rational(1) / r : r;
  };
  while (mag >= pow10(e)) ++e;
  while (mag < pow10(e - 1)) --e;

  Rational scaled = mag * pow10(digits - e);
  Integer q = scaled.get_num() / scaled.get_den();
  Rational rem = scaled - Rational(q);
  Rational half(1, 2);
  if (rem > half || (rem == half && mpz_odd_p(q.get_mpz_t()))) ++q;
  if (q == ipow(10, static_cast<unsigned long>(digits))) {
    q /= 10;
    ++e;
  }

  std::string d = q.get_str();
  std::string out;
  if (e <= 0) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + d;
  } else if (e >= digits) {
    out = d + std::string(static_cast<size_t>(e - digits), '0');
  } else {
    out = d.substr(0, static_cast<size_t>(e)) + "." + d.substr(static_cast<size_t>(e));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return value < 0 ? "-" + out : out;
}

}  // namespace pattern_duel

#endif  // PATTERN_DUEL_EXACT_NUMBER_HPP
