#ifndef PATTERN_DUEL_ASYMPTOTICS_HPP
#define PATTERN_DUEL_ASYMPTOTICS_HPP

#include "pattern_duel/recurrence.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <concepts>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace pattern_duel {

using Real = boost::multiprecision::mpfr_float;

constexpr unsigned kDefaultPrecisionDigits = 50;
constexpr unsigned kMinPrecisionDigits = 30;

/// Working precision of the fitter in decimal digits; PATTERN_DUEL_PRECISION
/// overrides the default.
inline unsigned working_digits() {
  const char* env = std::getenv("PATTERN_DUEL_PRECISION");
  if (!env || !*env) return kDefaultPrecisionDigits;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end || v < static_cast<long>(kMinPrecisionDigits) || v > 100000)
    throw ValidationError("PATTERN_DUEL_PRECISION must be an integer >= " +
                          std::to_string(kMinPrecisionDigits));
  return static_cast<unsigned>(v);
}

inline Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}
inline Real to_real(const Real& x) { return x; }

/// General-format decimal with `digits` significant digits.
inline std::string format_real(const Real& x, int digits = 10) {
  return x.str(digits, std::ios_base::fmtflags(0));
}

/// A_n ≈ n^{-1/2} (c_0 + c_1/n + ... + c_J/n^J).
struct AsymptoticFit {
  std::vector<Real> coeffs;
  std::vector<int> stability;  // agreeing leading digits between the two windows
  long K = 0;
  int J = 0;
};

namespace detail {

inline std::vector<long> fit_window(long anchor, long stride, int J) {
  std::vector<long> out;
  for (int i = 0; i <= J; ++i) out.push_back(anchor - i * stride);
  return out;
}

struct FitWindows {
  std::vector<long> first, second;
};

inline FitWindows fit_windows(long K, int J) {
  if (J < 0) throw ValidationError("expansion order must be non-negative");
  if (K < 100L * (J + 2)) throw ValidationError("K must be at least 100*(J+2)");
  const long s = K / (4L * (J + 2));
  return {fit_window(K, s, J), fit_window(K - s / 2, s, J)};
}

// Solves Σ_j c_j n_i^{-j} = y_i by partial-pivot elimination.
inline std::vector<Real> solve_window(const std::vector<long>& ns, const std::vector<Real>& ys) {
  const std::size_t m = ns.size();
  std::vector<std::vector<Real>> a(m, std::vector<Real>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    Real inv = Real(1) / Real(ns[i]);
    Real p = 1;
    for (std::size_t j = 0; j < m; ++j, p *= inv) a[i][j] = p;
    a[i][m] = ys[i];
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < m; ++i)
      if (abs(a[i][c]) > abs(a[piv][c])) piv = i;
    if (a[piv][c] == 0) throw ComputationError("fit unstable");
    std::swap(a[piv], a[c]);
    for (std::size_t i = c + 1; i < m; ++i) {
      Real f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= m; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Real> x(m);
  for (std::size_t i = m; i-- > 0;) {
    Real acc = a[i][m];
    for (std::size_t j = i + 1; j < m; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

inline int agreeing_digits(const Real& a, const Real& b, unsigned cap) {
  if (a == b) return static_cast<int>(cap);
  Real scale = max(abs(a), abs(b));
  Real rel = abs(a - b) / scale;
  if (rel >= 1) return 0;
  Real d = floor(-log10(rel));
  return static_cast<int>(std::min<long>(d.convert_to<long>(), cap));
}

}  // namespace detail

/// Indices an expansion fit of order J at K reads.
inline std::vector<long> fit_sample_indices(long K, int J) {
  auto w = detail::fit_windows(K, J);
  std::vector<long> out = w.first;
  out.insert(out.end(), w.second.begin(), w.second.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Fits c_0..c_J from exact terms sample(n) on two windows near K.
template <class Sampler>
  requires std::invocable<Sampler&, long>
AsymptoticFit fit_expansion(Sampler&& sample, long K, int J) {
  const auto windows = detail::fit_windows(K, J);
  const unsigned digits = working_digits();
  const unsigned saved = Real::default_precision();
  Real::default_precision(digits);
  struct Restore {
    unsigned p;
    ~Restore() { Real::default_precision(p); }
  } restore{saved};

  auto solve = [&](const std::vector<long>& ns) {
    std::vector<Real> ys;
    for (long n : ns) ys.push_back(to_real(sample(n)) * sqrt(Real(n)));
    return detail::solve_window(ns, ys);
  };
  const auto a = solve(windows.first);
  const auto b = solve(windows.second);

  AsymptoticFit fit;
  fit.K = K;
  fit.J = J;
  fit.coeffs = a;
  const unsigned cap = digits - 5;
  for (std::size_t j = 0; j < a.size(); ++j) fit.stability.push_back(detail::agreeing_digits(a[j], b[j], cap));
  if (fit.stability[0] == 0) throw ComputationError("fit unstable");
  return fit;
}

inline AsymptoticFit fit_expansion(const ExactSequence& seq, long K, int J) {
  const auto idx = fit_sample_indices(K, J);
  if (seq.empty() || seq.n_start > idx.front() || seq.n_end() < idx.back())
    throw ValidationError("sequence does not cover the fit windows");
  return fit_expansion([&](long n) -> const Rational& { return seq.at(n); }, K, J);
}

constexpr long kDefaultK = 30000;
constexpr int kDefaultJ = 2;

struct PipelineConfig {
  int direct_budget = kDefaultDirectBudget;
  GuessConfig guess;
};

/// Exact deficit terms for one side at the requested indices: series for
/// n up to the direct budget, then a guessed recurrence.
inline std::map<long, Rational> deficit_samples(const BetSpec& spec, Side side, const std::vector<long>& indices,
                                                const PipelineConfig& cfg = {}) {
  std::map<long, Rational> out;
  if (indices.empty()) return out;
  const long last = *std::max_element(indices.begin(), indices.end());
  if (*std::min_element(indices.begin(), indices.end()) < 1) throw ValidationError("indices start at 1");
  const long direct_n = std::min<long>(last, cfg.direct_budget);
  auto direct = deficit_sequence(spec, side, static_cast<int>(direct_n), cfg.direct_budget);
  const std::set<long> wanted(indices.begin(), indices.end());
  for (long n : wanted)
    if (n <= direct_n) out.emplace(n, direct.at(n));
  if (last <= direct_n) return out;

  auto rec = guess(direct, cfg.guess);
  if (!rec) throw ComputationError("no recurrence found");
  iterate(*rec, direct, last, [&](long n, const Rational& v) {
    if (wanted.count(n)) out.emplace(n, v);
  });
  return out;
}

struct AsymptoticVerdict {
  Favored favored = Favored::equal;
  AsymptoticFit alice;
  AsymptoticFit bob;
};

namespace detail {

inline Favored compare_constants(const AsymptoticFit& a, const AsymptoticFit& b) {
  const int digits = std::min(a.stability[0], b.stability[0]);
  Real scale = max(abs(a.coeffs[0]), abs(b.coeffs[0]));
  Real diff = a.coeffs[0] - b.coeffs[0];
  if (abs(diff) <= scale * pow(Real(10), -digits)) return Favored::equal;
  return diff < 0 ? Favored::alice : Favored::bob;
}

}  // namespace detail

/// Leading constants of both deficits; the side with the smaller constant
/// wins more often for large n.
inline AsymptoticVerdict whowon_asymptotic(const BetSpec& spec, long K = kDefaultK, int J = kDefaultJ,
                                           const PipelineConfig& cfg = {}) {
  spec.require_game();
  const auto idx = fit_sample_indices(K, J);
  AsymptoticVerdict v;
  auto fit_side = [&](Side side) {
    auto samples = deficit_samples(spec, side, idx, cfg);
    return fit_expansion([&](long n) -> const Rational& { return samples.at(n); }, K, J);
  };
  v.alice = fit_side(Side::alice);
  v.bob = fit_side(Side::bob);
  v.favored = detail::compare_constants(v.alice, v.bob);
  return v;
}

struct CounterBet {
  std::vector<Pattern> patterns;  // equivalent under symmetries fixing Alice's pattern
  Real advantage;                 // c_alice - c_bob, positive when Bob is favored
  int stability = 0;
  bool exact_zero = false;        // some symmetry swaps the two bets
};

/// Every other pattern of the same length as a single-pattern bet against
/// `alice`, best for Bob first.
inline std::vector<CounterBet> rank_counter_bets(int m, const Pattern& alice, long K = kDefaultK, int J = kDefaultJ,
                                                 const PipelineConfig& cfg = {}) {
  BetSpec::make(m, {alice}, {});
  const int k = static_cast<int>(alice.letters.size());
  const auto symmetries = word_symmetries(m);
  std::vector<WordSymmetry> stabilizer;
  for (const auto& g : symmetries)
    if (g.apply(alice) == alice) stabilizer.push_back(g);

  std::vector<CounterBet> out;
  std::set<Pattern> seen;
  for (const auto& bob : all_words(m, k)) {
    if (bob == alice || seen.count(bob)) continue;
    CounterBet bet;
    for (const auto& g : stabilizer) {
      Pattern q = g.apply(bob);
      if (!seen.count(q)) {
        seen.insert(q);
        bet.patterns.push_back(q);
      }
    }
    std::sort(bet.patterns.begin(), bet.patterns.end());
    const BetSpec spec = BetSpec::make(m, {alice}, {bob});
    for (const auto& g : symmetries)
      if (g.apply(alice) == bob && g.apply(bob) == alice) bet.exact_zero = true;
    if (bet.exact_zero) {
      // Confirm on the exact series before trusting the symmetry.
      const int n = std::min(cfg.direct_budget, 100);
      for (const auto& s : tie_splits(spec, n))
        if (s.plus != s.minus) throw ComputationError("symmetric bet with unequal series");
      bet.advantage = 0;
      bet.stability = static_cast<int>(working_digits());
    } else {
      auto v = whowon_asymptotic(spec, K, J, cfg);
      const unsigned saved = Real::default_precision();
      Real::default_precision(working_digits());
      bet.advantage = v.alice.coeffs[0] - v.bob.coeffs[0];
      Real::default_precision(saved);
      bet.stability = std::min(v.alice.stability[0], v.bob.stability[0]);
    }
    out.push_back(std::move(bet));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CounterBet& a, const CounterBet& b) { return a.advantage > b.advantage; });
  return out;
}

}  // namespace pattern_duel

#endif  // PATTERN_DUEL_ASYMPTOTICS_HPP
