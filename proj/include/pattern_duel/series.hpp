#ifndef PATTERN_DUEL_SERIES_HPP
#define PATTERN_DUEL_SERIES_HPP

#include "pattern_duel/exact/laurent.hpp"
#include "pattern_duel/exact/trirat.hpp"
#include "pattern_duel/gf.hpp"
#include "pattern_duel/patterns.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace pattern_duel {

/// F(x; t, 1/t) = Σ p_i x^i / Σ q_i x^i with Laurent-polynomial coefficients
/// and q[0] = 1.
struct SpecializedGF {
  std::vector<LaurentPoly> p;
  std::vector<LaurentPoly> q;
};

/// Substitutes a = t, b = 1/t and normalizes the denominator's x^0
/// coefficient to 1. That coefficient must be a single monomial c t^e.
inline SpecializedGF specialize(const TriRat& f) {
  auto collect = [](const TriPoly& poly) {
    std::vector<LaurentPoly> out(poly.is_zero() ? 0 : poly.degree_x() + 1);
    for (const auto& t : poly.terms())
      out[t.mono.x].add(static_cast<long>(t.mono.a) - static_cast<long>(t.mono.b),
                        Rational(t.coef));
    return out;
  };
  SpecializedGF s{collect(f.num()), collect(f.den())};
  if (s.q.empty() || s.q[0].terms().size() != 1)
    throw ComputationError("cannot normalize specialization");
  const auto [e, c] = *s.q[0].terms().begin();
  const Rational lead = c;
  const long shift = e;
  for (auto& v : s.p) v = v.divided_by_monomial(lead, shift);
  for (auto& v : s.q) v = v.divided_by_monomial(lead, shift);
  while (!s.p.empty() && s.p.back().is_zero()) s.p.pop_back();
  while (!s.q.empty() && s.q.back().is_zero()) s.q.pop_back();
  return s;
}

namespace detail {

inline void sub_mul(Integer& acc, const Integer& a, const Integer& b) {
  mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void sub_mul(Rational& acc, const Rational& a, const Rational& b) { acc -= a * b; }

template <class Coef>
Coef convert_coef(const Rational& r);
template <>
inline Integer convert_coef<Integer>(const Rational& r) {
  return r.get_num();
}
template <>
inline Rational convert_coef<Rational>(const Rational& r) {
  return r;
}

/// Coefficients of t^low .. t^(low + c.size() - 1).
template <class Coef>
struct DenseLaurent {
  long low = 0;
  std::vector<Coef> c;

  long high() const { return low + static_cast<long>(c.size()) - 1; }

  void trim() {
    std::size_t first = 0;
    while (first < c.size() && c[first] == 0) ++first;
    if (first == c.size()) {
      c.clear();
      low = 0;
      return;
    }
    std::size_t last = c.size();
    while (c[last - 1] == 0) --last;
    c.erase(c.begin() + static_cast<long>(last), c.end());
    c.erase(c.begin(), c.begin() + static_cast<long>(first));
    low += static_cast<long>(first);
  }

  LaurentPoly to_laurent() const {
    LaurentPoly out;
    for (std::size_t i = 0; i < c.size(); ++i)
      out.add(low + static_cast<long>(i), Rational(c[i]));
    return out;
  }
};

/// Streams f_0, f_1, ... via f_n = p_n - Σ_{i>=1} q_i f_{n-i}, keeping
/// only the last deg(q) values.
template <class Coef>
class SeriesStream {
 public:
  explicit SeriesStream(const SpecializedGF& s) {
    auto sparse = [](const std::vector<LaurentPoly>& v) {
      std::vector<std::vector<std::pair<long, Coef>>> out;
      for (const auto& lp : v) {
        auto& row = out.emplace_back();
        for (const auto& [e, c] : lp.terms()) row.emplace_back(e, convert_coef<Coef>(c));
      }
      return out;
    };
    p_ = sparse(s.p);
    q_ = sparse(s.q);
  }

  const DenseLaurent<Coef>& next() {
    const std::size_t n = static_cast<std::size_t>(n_);
    const std::size_t depth = std::min(q_.size() > 0 ? q_.size() - 1 : 0, history_.size());

    long low = 0, high = -1;
    bool any = false;
    auto widen = [&](long lo, long hi) {
      if (!any) {
        low = lo;
        high = hi;
        any = true;
      } else {
        low = std::min(low, lo);
        high = std::max(high, hi);
      }
    };
    if (n < p_.size())
      for (const auto& [e, c] : p_[n]) widen(e, e);
    for (std::size_t i = 1; i <= depth; ++i) {
      const auto& f = history_[history_.size() - i];
      if (f.c.empty()) continue;
      for (const auto& [e, c] : q_[i]) widen(e + f.low, e + f.high());
    }

    DenseLaurent<Coef> out;
    if (any) {
      out.low = low;
      out.c.assign(static_cast<std::size_t>(high - low + 1), Coef(0));
      if (n < p_.size())
        for (const auto& [e, c] : p_[n]) out.c[static_cast<std::size_t>(e - low)] += c;
      for (std::size_t i = 1; i <= depth; ++i) {
        const auto& f = history_[history_.size() - i];
        for (const auto& [e, c] : q_[i]) {
          const std::size_t base = static_cast<std::size_t>(e + f.low - low);
          for (std::size_t j = 0; j < f.c.size(); ++j)
            if (f.c[j] != 0) sub_mul(out.c[base + j], c, f.c[j]);
        }
      }
      out.trim();
    }

    history_.push_back(std::move(out));
    while (history_.size() > std::max<std::size_t>(1, q_.size() - 1)) history_.pop_front();
    ++n_;
    return history_.back();
  }

 private:
  std::vector<std::vector<std::pair<long, Coef>>> p_, q_;
  std::deque<DenseLaurent<Coef>> history_;
  long n_ = 0;
};

inline bool integral(const SpecializedGF& s) {
  auto ok = [](const std::vector<LaurentPoly>& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const LaurentPoly& lp) { return lp.has_integer_coefficients(); });
  };
  return ok(s.p) && ok(s.q);
}

}  // namespace detail

/// Maclaurin coefficients f_0 .. f_N of F(x; t, 1/t).
inline std::vector<LaurentPoly> coefficients(const SpecializedGF& s, int order) {
  if (order < 0) throw ValidationError("order must be non-negative");
  std::vector<LaurentPoly> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  auto run = [&](auto stream) {
    for (int n = 0; n <= order; ++n) out.push_back(stream.next().to_laurent());
  };
  if (detail::integral(s)) run(detail::SeriesStream<Integer>(s));
  else run(detail::SeriesStream<Rational>(s));
  return out;
}

/// Masses of f_n(t) at t = 1 split by the sign of the exponent.
struct TieSplit {
  Integer plus;   // Alice ahead
  Integer zero;   // tie
  Integer minus;  // Bob ahead
  bool operator==(const TieSplit&) const = default;
};

namespace detail {

inline void check_split(const TieSplit& s, int n, int m) {
  if (s.plus < 0 || s.zero < 0 || s.minus < 0 ||
      s.plus + s.zero + s.minus != ipow(m, static_cast<unsigned long>(n)))
    throw ComputationError("series corrupt");
}

inline TieSplit split_dense(const DenseLaurent<Integer>& f, int n, int m) {
  TieSplit s;
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    long e = f.low + static_cast<long>(i);
    if (e > 0) s.plus += f.c[i];
    else if (e < 0) s.minus += f.c[i];
    else s.zero += f.c[i];
  }
  check_split(s, n, m);
  return s;
}

}  // namespace detail

inline TieSplit split_at_one(const LaurentPoly& f, int n, int m) {
  if (!f.has_integer_coefficients()) throw ComputationError("series corrupt");
  TieSplit s;
  for (const auto& [e, c] : f.terms()) {
    if (e > 0) s.plus += c.get_num();
    else if (e < 0) s.minus += c.get_num();
    else s.zero += c.get_num();
  }
  detail::check_split(s, n, m);
  return s;
}

/// Tie splits for n = 0 .. N, streaming the series without storing it.
inline std::vector<TieSplit> tie_splits(const SpecializedGF& s, int order, int m) {
  if (order < 0) throw ValidationError("order must be non-negative");
  std::vector<TieSplit> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  if (detail::integral(s)) {
    detail::SeriesStream<Integer> stream(s);
    for (int n = 0; n <= order; ++n) out.push_back(detail::split_dense(stream.next(), n, m));
  } else {
    detail::SeriesStream<Rational> stream(s);
    for (int n = 0; n <= order; ++n) out.push_back(split_at_one(stream.next().to_laurent(), n, m));
  }
  return out;
}

inline std::vector<TieSplit> tie_splits(const BetSpec& spec, int order) {
  return tie_splits(specialize(cluster_gf(spec)), order, spec.m);
}

enum class Favored { alice, bob, equal };

inline std::string to_string(Favored f) {
  switch (f) {
    case Favored::alice: return "alice";
    case Favored::bob: return "bob";
    default: return "equal";
  }
}

/// Exact outcome probabilities after n rolls.
struct GameVerdict {
  int n = 0;
  Favored favored = Favored::equal;
  Rational p_alice;
  Rational p_bob;
  Rational p_tie;
  std::array<std::string, 3> displayed;  // alice, bob, tie at 10 significant digits

  bool operator==(const GameVerdict&) const = default;
};

inline GameVerdict verdict_from_split(const TieSplit& s, int n, int m) {
  const Integer total = ipow(m, static_cast<unsigned long>(n));
  GameVerdict v;
  v.n = n;
  v.p_alice = make_rational(s.plus, total);
  v.p_bob = make_rational(s.minus, total);
  v.p_tie = make_rational(s.zero, total);
  v.favored = s.plus > s.minus ? Favored::alice : s.minus > s.plus ? Favored::bob : Favored::equal;
  v.displayed = {format_significant(v.p_alice), format_significant(v.p_bob),
                 format_significant(v.p_tie)};
  return v;
}

/// Verdicts for every n = 0 .. N.
inline std::vector<GameVerdict> verdicts(const BetSpec& spec, int order) {
  spec.require_game();
  auto splits = tie_splits(spec, order);
  std::vector<GameVerdict> out;
  out.reserve(splits.size());
  for (std::size_t n = 0; n < splits.size(); ++n)
    out.push_back(verdict_from_split(splits[n], static_cast<int>(n), spec.m));
  return out;
}

inline GameVerdict verdict(const BetSpec& spec, int n) {
  if (n < 0) throw ValidationError("number of rolls must be non-negative");
  return verdicts(spec, n).back();
}

/// Tie split read off the brute-force enumerator.
inline TieSplit brute_split(const BetSpec& spec, int n, double budget = kDefaultOracleBudget) {
  TieSplit s;
  const TriPoly counts = brute_enumerator(spec, n, budget);
  for (const auto& t : counts.terms()) {
    if (t.mono.a > t.mono.b) s.plus += t.coef;
    else if (t.mono.a < t.mono.b) s.minus += t.coef;
    else s.zero += t.coef;
  }
  return s;
}

inline GameVerdict brute_verdict(const BetSpec& spec, int n, double budget = kDefaultOracleBudget) {
  spec.require_game();
  return verdict_from_split(brute_split(spec, n, budget), n, spec.m);
}

}  // namespace pattern_duel

#endif  // PATTERN_DUEL_SERIES_HPP
