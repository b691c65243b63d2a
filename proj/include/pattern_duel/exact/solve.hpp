#ifndef PATTERN_DUEL_EXACT_SOLVE_HPP
#define PATTERN_DUEL_EXACT_SOLVE_HPP

#include "pattern_duel/exact/trirat.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace pattern_duel {

using PolyMatrix = std::vector<std::vector<TriPoly>>;

/// Solution of M·x = rhs over a common denominator: x_i = numerators[i] / denominator.
/// The denominator is det(M) up to sign.
struct CommonDenominatorSolution {
  std::vector<TriPoly> numerators;
  TriPoly denominator;
};

/// Bareiss fraction-free elimination followed by fraction-free back
/// substitution. Every division performed is exact in Z[x, a, b].
inline CommonDenominatorSolution bareiss_solve(PolyMatrix m, std::vector<TriPoly> rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw ValidationError("right-hand side length does not match matrix");
  for (const auto& row : m)
    if (row.size() != n) throw ValidationError("matrix must be square");
  if (n == 0) return {{}, TriPoly(1)};

  for (std::size_t i = 0; i < n; ++i) m[i].push_back(std::move(rhs[i]));

  TriPoly prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // Sparsest nonzero pivot keeps the intermediate minors small.
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      if (best == n || m[i][k].size() < m[best][k].size()) best = i;
    }
    if (best == n) throw ComputationError("singular system");
    if (best != k) std::swap(m[best], m[k]);

    const TriPoly& pivot = m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const TriPoly factor = m[i][k];
      for (std::size_t j = k + 1; j <= n; ++j) {
        TriPoly v = pivot * m[i][j];
        if (!factor.is_zero() && !m[k][j].is_zero()) v -= factor * m[k][j];
        m[i][j] = v.divide_exact(prev);
      }
      m[i][k] = TriPoly();
    }
    prev = pivot;
  }

  const TriPoly det = m[n - 1][n - 1];
  std::vector<TriPoly> y(n);
  for (std::size_t ii = n; ii-- > 0;) {
    TriPoly acc = det * m[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j)
      if (!m[ii][j].is_zero() && !y[j].is_zero()) acc -= m[ii][j] * y[j];
    y[ii] = acc.divide_exact(m[ii][ii]);
  }
  return {std::move(y), det};
}

/// Exact solution column of M·x = rhs as rational functions.
inline std::vector<TriRat> fraction_free_solve(const PolyMatrix& m, const std::vector<TriPoly>& rhs) {
  auto sol = bareiss_solve(m, rhs);
  std::vector<TriRat> out;
  out.reserve(sol.numerators.size());
  for (auto& num : sol.numerators) out.emplace_back(std::move(num), sol.denominator);
  return out;
}

}  // namespace pattern_duel

#endif  // PATTERN_DUEL_EXACT_SOLVE_HPP
