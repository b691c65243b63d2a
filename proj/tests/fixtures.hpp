#ifndef PATTERN_DUEL_TESTS_FIXTURES_HPP
#define PATTERN_DUEL_TESTS_FIXTURES_HPP

#include "pattern_duel/recurrence.hpp"

namespace fixtures {

using namespace pattern_duel;

inline UniPolyN lin(long c1, long c0) { return UniPolyN(std::vector<Rational>{c0, c1}); }

inline Pattern W(std::initializer_list<int> l) { return Pattern{std::vector<int>(l)}; }

inline const BetSpec& coin() {
  static const BetSpec spec = BetSpec::make(2, {W({1, 1})}, {W({1, 2})});
  return spec;
}

// Reference weight enumerator for HH against HT.
inline TriRat coin_gf() {
  return {-parse_tripoly("a x - x - 1"), parse_tripoly("a x^2 - b x^2 - a x - x + 1")};
}

// Reference enumerator for 111111 against 122222 on a six-sided die.
inline TriRat six_die_gf() {
  TriPoly num = parse_tripoly("-a x^5 - a x^4 + x^5 - a x^3 + x^4 - a x^2 + x^3 - a x + x^2 + x + 1");
  TriPoly den = parse_tripoly(
      "a b x^10 + a b x^9 - a x^10 - b x^10 + a b x^8 - a x^9 - b x^9 + x^10 + a b x^7"
      " - a x^8 - b x^8 + x^9 - a x^7 - b x^7 + x^8 + 5 a x^6"
      " - b x^6 + x^7 + 5 a x^5 - 4 x^6 + 5 a x^4 - 5 x^5 + 5 a x^3 - 5 x^4 + 5 a x^2"
      " - 5 x^3 - a x - 5 x^2 - 5 x + 1");
  return {num, den};
}

inline ExactSequence seq(long start, std::vector<Rational> terms) {
  ExactSequence s;
  s.n_start = start;
  s.terms = std::move(terms);
  return s;
}

// Deficit of HT beating HH, multiplied through by 8(n+4).
inline SeededRecurrence ht_beats_hh() {
  PRecurrence rec;
  rec.coeffs = {lin(-1, -1), lin(4, 7), lin(-5, -12), lin(6, 16), lin(-12, -40), lin(8, 32)};
  rec.n0 = 1;
  return {rec, seq(1, {Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 8), Rational(3, 32)})};
}

// Deficit of HH beating HT, multiplied through by 8(n+5).
inline SeededRecurrence hh_beats_ht() {
  PRecurrence rec;
  rec.coeffs = {lin(1, 1), lin(0, 3), lin(-3, -12), lin(-2, -2), lin(-4, -24), lin(8, 40)};
  rec.n0 = 1;
  return {rec, seq(1, {Rational(1, 2), Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(3, 16)})};
}

}  // namespace fixtures

#endif
