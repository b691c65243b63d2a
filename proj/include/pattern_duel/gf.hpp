#ifndef PATTERN_DUEL_GF_HPP
#define PATTERN_DUEL_GF_HPP

#include "pattern_duel/exact/solve.hpp"
#include "pattern_duel/exact/trirat.hpp"
#include "pattern_duel/patterns.hpp"

#include <cstddef>
#include <vector>

namespace pattern_duel {

namespace detail {

inline TriPoly mark_weight(const BetSpec& spec, const Pattern& v) {
  TriPoly w = 1;
  if (contains(spec.alice, v)) w *= TriPoly::a();
  if (contains(spec.bob, v)) w *= TriPoly::b();
  return w;
}

}  // namespace detail

/// Weight enumerator F(x; a, b) of all words via the Goulden-Jackson cluster
/// method. The coefficient of x^n a^i b^j counts n-letter words with i
/// occurrences from alice's set and j from bob's.
///
/// With marked weights w_v - 1 the cluster generating functions solve
///   C_v = (w_v - 1) (x^k + Σ_u overlap(u, v) C_u),
/// and F = 1 / (1 - m x - Σ_v C_v). A pattern in both sets is one unknown
/// with w_v = a b.
inline TriRat cluster_gf(const BetSpec& spec) {
  PatternSet all = spec.alice;
  all.insert(all.end(), spec.bob.begin(), spec.bob.end());
  all = normalize_set(std::move(all));

  const TriPoly one_minus_mx = TriPoly(1) - TriPoly::x().scaled(spec.m);
  if (all.empty()) return {TriPoly(1), one_minus_mx};

  const std::size_t n = all.size();
  const TriPoly xk = TriPoly::x(static_cast<unsigned>(spec.k));
  PolyMatrix mat(n, std::vector<TriPoly>(n));
  std::vector<TriPoly> rhs(n);
  for (std::size_t vi = 0; vi < n; ++vi) {
    const TriPoly marked = detail::mark_weight(spec, all[vi]) - TriPoly(1);
    for (std::size_t ui = 0; ui < n; ++ui) {
      TriPoly entry = (ui == vi) ? TriPoly(1) : TriPoly();
      mat[vi][ui] = entry - marked * overlap_poly(all[ui], all[vi]);
    }
    rhs[vi] = marked * xk;
  }
  auto sol = bareiss_solve(std::move(mat), std::move(rhs));
  TriPoly cluster_num;
  for (const auto& y : sol.numerators) cluster_num += y;
  // 1 / (1 - m x - N/D) = D / ((1 - m x) D - N)
  return {sol.denominator, one_minus_mx * sol.denominator - cluster_num};
}

constexpr std::size_t kDefaultTransferBudget = 4096;

/// Weight enumerator via the prefix (transfer-matrix) linear system: one
/// unknown Weight(W(v)) per (k-1)-letter prefix v with
///   W(v) = x^(k-1) + x Σ_i a^[v·i ∈ A] b^[v·i ∈ B] W(v_2..v_(k-1) i).
/// Requires k >= 2; the unknown count m^(k-1) is capped by `budget`.
inline TriRat transfer_gf(const BetSpec& spec, std::size_t budget = kDefaultTransferBudget) {
  if (spec.k < 2) throw ValidationError("transfer construction needs pattern length >= 2");
  const std::size_t m = static_cast<std::size_t>(spec.m);
  std::size_t states = 1;
  for (int i = 0; i + 1 < spec.k; ++i) {
    states *= m;
    if (states > budget) throw ComputationError("state space too large");
  }

  const auto marks = detail::window_marks(spec);
  PolyMatrix mat(states, std::vector<TriPoly>(states));
  std::vector<TriPoly> rhs(states, TriPoly::x(static_cast<unsigned>(spec.k - 1)));
  const TriPoly x = TriPoly::x();
  for (std::size_t v = 0; v < states; ++v) {
    mat[v][v] += TriPoly(1);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t window = v * m + i;
      const std::size_t next = window % states;
      TriPoly w = x;
      if (marks[window] & 1) w *= TriPoly::a();
      if (marks[window] & 2) w *= TriPoly::b();
      mat[v][next] -= w;
    }
  }
  auto sol = bareiss_solve(std::move(mat), std::move(rhs));

  TriPoly short_words;  // Σ_{i<k-1} m^i x^i
  Integer mi = 1;
  for (int i = 0; i + 1 < spec.k; ++i) {
    short_words += TriPoly::monomial(mi, {static_cast<unsigned>(i), 0, 0});
    mi *= spec.m;
  }
  TriPoly num = short_words * sol.denominator;
  for (const auto& y : sol.numerators) num += y;
  return {num, sol.denominator};
}

/// Maclaurin coefficients in x of F up to x^N, each a polynomial in a, b.
/// Requires den's x^0 part to be a nonzero integer that divides every
/// coefficient produced (true for weight enumerators, whose x^0 part is 1).
inline std::vector<TriPoly> series_in_x(const TriRat& f, int order) {
  const TriPoly q0 = f.den().x_coefficient(0);
  if (q0.size() != 1 || q0.terms().front().mono != Monomial{})
    throw ComputationError("cannot expand: denominator constant term is not a number");
  const Integer c0 = q0.terms().front().coef;
  const unsigned dq = f.den().degree_x();
  std::vector<TriPoly> q(dq + 1);
  for (unsigned i = 0; i <= dq; ++i) q[i] = f.den().x_coefficient(i);

  std::vector<TriPoly> out;
  for (int n = 0; n <= order; ++n) {
    TriPoly acc = f.num().x_coefficient(static_cast<unsigned>(n));
    for (unsigned i = 1; i <= dq && i <= static_cast<unsigned>(n); ++i)
      if (!q[i].is_zero()) acc -= q[i] * out[static_cast<std::size_t>(n) - i];
    out.push_back(acc.divide_exact(c0));
  }
  return out;
}

}  // namespace pattern_duel

#endif  // PATTERN_DUEL_GF_HPP
