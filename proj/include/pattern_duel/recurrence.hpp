#ifndef PATTERN_DUEL_RECURRENCE_HPP
#define PATTERN_DUEL_RECURRENCE_HPP

#include "pattern_duel/exact/number.hpp"
#include "pattern_duel/exact/unipoly.hpp"
#include "pattern_duel/series.hpp"

#include <cctype>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pattern_duel {

enum class Side { alice, bob, tie };

inline std::string to_string(Side s) {
  switch (s) {
    case Side::alice: return "alice";
    case Side::bob: return "bob";
    default: return "tie";
  }
}

/// Exact terms s_{n_start}, s_{n_start+1}, ...
struct ExactSequence {
  enum class Provenance { series_direct, recurrence_extended };

  long n_start = 0;
  std::vector<Rational> terms;
  Provenance provenance = Provenance::series_direct;

  bool empty() const { return terms.empty(); }
  long n_end() const { return n_start + static_cast<long>(terms.size()) - 1; }
  const Rational& at(long n) const { return terms.at(static_cast<std::size_t>(n - n_start)); }

  /// Terms with index <= last.
  ExactSequence prefix(long last) const {
    ExactSequence s = *this;
    if (last < n_end()) s.terms.resize(static_cast<std::size_t>(std::max(0L, last - n_start + 1)));
    return s;
  }
};

/// Deficits 1/2 - Pr(side wins at n) for n = 1..N; for Side::tie the tie
/// probability itself.
inline ExactSequence deficit_sequence(const std::vector<TieSplit>& splits, int m, Side side,
                                      int last) {
  ExactSequence seq;
  seq.n_start = 1;
  const Rational half(1, 2);
  for (int n = 1; n <= last; ++n) {
    const TieSplit& s = splits.at(static_cast<std::size_t>(n));
    const Integer total = ipow(m, static_cast<unsigned long>(n));
    switch (side) {
      case Side::alice: seq.terms.push_back(half - make_rational(s.plus, total)); break;
      case Side::bob: seq.terms.push_back(half - make_rational(s.minus, total)); break;
      case Side::tie: seq.terms.push_back(make_rational(s.zero, total)); break;
    }
  }
  return seq;
}

constexpr int kDefaultDirectBudget = 400;

inline ExactSequence deficit_sequence(const BetSpec& spec, Side side, int last,
                                      int budget = kDefaultDirectBudget) {
  spec.require_game();
  if (last < 1) throw ValidationError("sequence length must be positive");
  if (last > budget) throw ValidationError("direct series budget exceeded");
  return deficit_sequence(tie_splits(spec, last), spec.m, side, last);
}

/// Σ_{i=0..r} coeffs[i](n) s_{n+i} = 0 for every n >= n0.
struct PRecurrence {
  std::vector<UniPolyN> coeffs;
  long n0 = 0;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  int degree() const {
    int d = 0;
    for (const auto& p : coeffs) d = std::max(d, p.degree());
    return d;
  }
  bool operator==(const PRecurrence&) const = default;

  /// Σ_i p_i(n) s_{n+i}; requires the terms n..n+r.
  Rational residual(const ExactSequence& seq, long n) const {
    Rational acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (!coeffs[i].is_zero()) acc += coeffs[i](n) * seq.at(n + static_cast<long>(i));
    return acc;
  }
};

/// Clears denominators, removes the integer content and makes p_r's leading
/// coefficient positive.
inline PRecurrence make_primitive(PRecurrence rec) {
  Integer lcm = 1, g = 0;
  for (const auto& p : rec.coeffs)
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& p : rec.coeffs)
    for (const auto& c : p.coeffs()) {
      Integer v = Rational(c * lcm).get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  if (g == 0) throw ValidationError("zero recurrence");
  Rational scale = make_rational(lcm, g);
  if (rec.coeffs.back().is_zero()) throw ValidationError("leading coefficient polynomial is zero");
  if (rec.coeffs.back().leading() < 0) scale = -scale;
  for (auto& p : rec.coeffs) p = p.scaled(scale);
  return rec;
}

struct GuessConfig {
  int max_order = 8;
  int max_degree = 8;
  int guard_terms = 20;
};

namespace detail::modp {

using u64 = std::uint64_t;

inline u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
inline u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mul(a, a, p))
    if (e & 1) r = mul(r, a, p);
  return r;
}
inline u64 inv(u64 a, u64 p) { return pow(a, p - 2, p); }

inline u64 reduce(const Integer& z, u64 p) {
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

inline const std::vector<u64>& primes() {
  static const std::vector<u64> list = [] {
    std::vector<u64> out;
    Integer c = ipow(2, 62) - ipow(2, 32);
    for (int i = 0; i < 256; ++i) {
      mpz_nextprime(c.get_mpz_t(), c.get_mpz_t());
      out.push_back(c.get_ui());
    }
    return out;
  }();
  return list;
}

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<u64>>& m, std::size_t cols, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const u64 iv = inv(m[row][col], p);
    for (std::size_t j = col; j < cols; ++j) m[row][j] = mul(m[row][j], iv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const u64 f = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        if (m[row][j]) m[i][j] = (m[i][j] + p - mul(f, m[row][j], p)) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail::modp

namespace detail {

// Rational r/s ≡ a (mod M) with |r|, s <= sqrt(M/2), if one exists.
inline std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& modulus) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(modulus / 2).get_mpz_t());
  Integer r0 = modulus, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return make_rational(r1, t1);
}

// Fitting problem for one (order, degree) candidate: row n holds
// n^j s_{n+i} in column i*(degree+1) + j.
struct GuessSystem {
  const ExactSequence& seq;
  int order;
  int degree;
  long first_row;
  long rows;

  std::size_t unknowns() const { return static_cast<std::size_t>((order + 1) * (degree + 1)); }

  PRecurrence recurrence(const std::vector<Rational>& v) const {
    PRecurrence rec;
    for (int i = 0; i <= order; ++i) {
      std::vector<Rational> c(v.begin() + i * (degree + 1), v.begin() + (i + 1) * (degree + 1));
      rec.coeffs.emplace_back(std::move(c));
    }
    rec.n0 = seq.n_start;
    return rec;
  }

  // Nullspace vector mod p (first free column set to 1), or nothing when the
  // system has full column rank or p divides a denominator.
  std::optional<std::pair<std::vector<std::size_t>, std::vector<modp::u64>>> null_vector(
      const std::vector<modp::u64>& terms_mod, modp::u64 p) const {
    const std::size_t cols = unknowns();
    std::vector<std::vector<modp::u64>> m(static_cast<std::size_t>(rows), std::vector<modp::u64>(cols));
    for (long r = 0; r < rows; ++r) {
      const long n = first_row + r;
      const modp::u64 nm = static_cast<modp::u64>(((n % static_cast<long>(p)) + static_cast<long>(p)) %
                                                  static_cast<long>(p));
      for (int i = 0; i <= order; ++i) {
        modp::u64 v = terms_mod[static_cast<std::size_t>(n + i - seq.n_start)];
        for (int j = 0; j <= degree; ++j) {
          m[static_cast<std::size_t>(r)][static_cast<std::size_t>(i * (degree + 1) + j)] = v;
          v = modp::mul(v, nm, p);
        }
      }
    }
    auto pivots = modp::rref(m, cols, p);
    if (pivots.size() == cols) return std::nullopt;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<modp::u64> v(cols, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m[r][free_col]) % p;
    return std::make_pair(std::move(pivots), std::move(v));
  }
};

inline std::optional<std::vector<modp::u64>> terms_mod(const ExactSequence& seq, modp::u64 p) {
  std::vector<modp::u64> out;
  out.reserve(seq.terms.size());
  for (const auto& q : seq.terms) {
    modp::u64 den = modp::reduce(q.get_den(), p);
    if (den == 0) return std::nullopt;
    out.push_back(modp::mul(modp::reduce(q.get_num(), p), modp::inv(den, p), p));
  }
  return out;
}

inline bool holds_on(const PRecurrence& rec, const ExactSequence& seq, long from, long to) {
  for (long n = from; n <= to; ++n)
    if (rec.residual(seq, n) != 0) return false;
  return true;
}

// Lifts the modular nullspace vector to Q by CRT over several primes and
// rational reconstruction, accepting once the lifted candidate satisfies
// the fitting rows exactly.
inline std::optional<PRecurrence> lift_candidate(const GuessSystem& sys, std::vector<std::size_t> pivots,
                                                 std::vector<modp::u64> first,
                                                 std::vector<std::vector<modp::u64>>& cache) {
  const auto& primes = modp::primes();
  const std::size_t cols = sys.unknowns();
  std::vector<Integer> residue(cols);
  for (std::size_t c = 0; c < cols; ++c) residue[c] = Integer(static_cast<unsigned long>(first[c]));
  Integer modulus = Integer(static_cast<unsigned long>(primes[0]));
  const long last_row = sys.first_row + sys.rows - 1;

  for (std::size_t k = 1; k < primes.size(); ++k) {
    if (cache.size() <= k) {
      auto t = terms_mod(sys.seq, primes[k]);
      cache.push_back(t ? std::move(*t) : std::vector<modp::u64>{});
    }
    if (cache[k].empty()) continue;
    auto nv = sys.null_vector(cache[k], primes[k]);
    if (!nv || nv->first != pivots) continue;
    const Integer pk(static_cast<unsigned long>(primes[k]));
    for (std::size_t c = 0; c < cols; ++c) {
      // residue += modulus * ((v - residue) / modulus mod pk)
      Integer diff = Integer(static_cast<unsigned long>(nv->second[c])) - residue[c];
      Integer inv_m;
      mpz_invert(inv_m.get_mpz_t(), modulus.get_mpz_t(), pk.get_mpz_t());
      Integer t = (diff * inv_m) % pk;
      if (t < 0) t += pk;
      residue[c] += modulus * t;
    }
    modulus *= pk;

    std::vector<Rational> v(cols);
    bool ok = true;
    for (std::size_t c = 0; c < cols && ok; ++c) {
      auto r = rational_reconstruct(residue[c], modulus);
      if (!r) ok = false;
      else v[c] = *r;
    }
    if (!ok) continue;
    PRecurrence rec = sys.recurrence(v);
    if (rec.coeffs.back().is_zero()) return std::nullopt;
    rec = make_primitive(std::move(rec));
    if (holds_on(rec, sys.seq, sys.first_row, last_row)) return rec;
  }
  return std::nullopt;
}

}  // namespace detail

/// Searches for a P-recurrence annihilating `seq`, by increasing order and
/// then increasing degree. A candidate is fitted on a window of terms just
/// before the last `guard_terms` rows and accepted only if it also
/// annihilates those held-out rows. The returned n0 is the smallest index
/// from which the recurrence holds on every available term.
inline std::optional<PRecurrence> guess(const ExactSequence& seq, const GuessConfig& cfg = {}) {
  if (cfg.max_order < 1 || cfg.max_degree < 0 || cfg.guard_terms < 1)
    throw ValidationError("invalid guess configuration");
  const long len = static_cast<long>(seq.terms.size());
  const auto& primes = detail::modp::primes();
  std::vector<std::vector<detail::modp::u64>> cache;
  {
    auto t = detail::terms_mod(seq, primes[0]);
    if (!t) return std::nullopt;
    cache.push_back(std::move(*t));
  }
  constexpr long kExtraRows = 4;

  for (int r = 1; r <= cfg.max_order; ++r) {
    for (int d = 0; d <= cfg.max_degree; ++d) {
      const long unknowns = static_cast<long>((r + 1) * (d + 1));
      const long total_rows = len - r;
      if (total_rows < unknowns + cfg.guard_terms) break;
      const long fit_rows = std::min(total_rows - cfg.guard_terms, unknowns + kExtraRows);
      const long first_row = seq.n_start + total_rows - cfg.guard_terms - fit_rows;
      detail::GuessSystem sys{seq, r, d, first_row, fit_rows};

      auto nv = sys.null_vector(cache[0], primes[0]);
      if (!nv) continue;
      auto rec = detail::lift_candidate(sys, std::move(nv->first), std::move(nv->second), cache);
      if (!rec) continue;

      const long last_row = seq.n_start + total_rows - 1;
      if (!detail::holds_on(*rec, seq, first_row + fit_rows, last_row)) continue;
      long n0 = first_row;
      while (n0 > seq.n_start && rec->residual(seq, n0 - 1) == 0) --n0;
      rec->n0 = n0;
      return rec;
    }
  }
  return std::nullopt;
}

/// True iff the recurrence holds exactly at every n >= n0 where the
/// sequence supplies s_n .. s_{n+r}.
inline bool annihilates(const PRecurrence& rec, const ExactSequence& seq) {
  const long from = std::max(rec.n0, seq.n_start);
  const long to = seq.n_end() - rec.order();
  return detail::holds_on(rec, seq, from, to);
}

/// Runs s_{n+r} = -Σ_{i<r} p_i(n) s_{n+i} / p_r(n) past the end of `seed`
/// up to index `last`, calling visit(index, term) for each new term. Only
/// the last r terms are held.
template <class Visit>
void iterate(const PRecurrence& rec, const ExactSequence& seed, long last, Visit&& visit) {
  const int r = rec.order();
  if (r < 1) throw ValidationError("recurrence order must be positive");
  if (static_cast<long>(seed.terms.size()) < r) throw ValidationError("seed shorter than order");
  if (seed.n_end() + 1 - r < rec.n0) throw ValidationError("seed does not reach the validity offset");

  bool integral = true;
  for (const auto& p : rec.coeffs)
    for (const auto& c : p.coeffs()) integral = integral && is_integer(c);

  std::deque<Rational> window(seed.terms.end() - r, seed.terms.end());
  std::vector<Rational> pv(static_cast<std::size_t>(r) + 1);
  for (long t = seed.n_end() + 1; t <= last; ++t) {
    const long n = t - r;
    for (int i = 0; i <= r; ++i)
      pv[static_cast<std::size_t>(i)] =
          integral ? Rational(rec.coeffs[static_cast<std::size_t>(i)].eval_integer(n))
                   : rec.coeffs[static_cast<std::size_t>(i)](n);
    if (pv.back() == 0)
      throw ComputationError("singular leading coefficient at n=" + std::to_string(n));
    Rational acc = 0;
    for (int i = 0; i < r; ++i)
      if (pv[static_cast<std::size_t>(i)] != 0)
        acc -= pv[static_cast<std::size_t>(i)] * window[static_cast<std::size_t>(i)];
    acc /= pv.back();
    visit(t, static_cast<const Rational&>(acc));
    window.pop_front();
    window.push_back(std::move(acc));
  }
}

/// `seed` followed by the recurrence's continuation up to index `last`.
inline ExactSequence extend(const PRecurrence& rec, const ExactSequence& seed, long last) {
  ExactSequence out = seed;
  if (last > seed.n_end()) out.provenance = ExactSequence::Provenance::recurrence_extended;
  out.terms.reserve(static_cast<std::size_t>(std::max(last - out.n_start + 1, 0L)));
  iterate(rec, seed, last, [&](long, const Rational& v) { out.terms.push_back(v); });
  return out;
}

/// A recurrence together with the initial terms that pin down its solution.
struct SeededRecurrence {
  PRecurrence recurrence;
  ExactSequence seed;
  bool operator==(const SeededRecurrence& o) const {
    return recurrence == o.recurrence && seed.n_start == o.seed.n_start && seed.terms == o.seed.terms;
  }
};

/// Text form:
///   recurrence: p_0(n); p_1(n); ...; p_r(n)
///   n0: <offset>
///   seed_start: <index of first seed term>
///   seed: <t_0>, <t_1>, ...
inline std::string serialize(const SeededRecurrence& sr) {
  std::ostringstream os;
  os << "recurrence: ";
  for (std::size_t i = 0; i < sr.recurrence.coeffs.size(); ++i)
    os << (i ? "; " : "") << sr.recurrence.coeffs[i].to_string();
  os << "\nn0: " << sr.recurrence.n0 << "\nseed_start: " << sr.seed.n_start << "\nseed: ";
  for (std::size_t i = 0; i < sr.seed.terms.size(); ++i)
    os << (i ? ", " : "") << to_string(sr.seed.terms[i]);
  os << "\n";
  return os.str();
}

namespace detail {

// Parses "8*n^2 - 3*n + 1/2" style polynomials in n.
inline UniPolyN parse_unipoly(std::string_view text) {
  std::vector<Rational> c;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const char* what) -> void {
    throw ValidationError(std::string("bad polynomial '") + std::string(text) + "': " + what);
  };
  skip();
  bool first = true;
  while (pos < text.size()) {
    bool neg = false;
    skip();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      neg = text[pos] == '-';
      ++pos;
    } else if (!first) {
      fail("expected sign");
    }
    first = false;
    skip();
    Rational coef = 1;
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
      ++pos;
    if (pos > start) coef = parse_rational(std::string(text.substr(start, pos - start)));
    skip();
    std::size_t power = 0;
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip();
    }
    if (pos < text.size() && text[pos] == 'n') {
      ++pos;
      power = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t ps = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (ps == pos) fail("expected exponent");
        power = std::stoul(std::string(text.substr(ps, pos - ps)));
      }
    } else if (pos == start) {
      fail("expected term");
    }
    if (c.size() <= power) c.resize(power + 1);
    c[power] += neg ? Rational(-coef) : coef;
    skip();
  }
  return UniPolyN(std::move(c));
}

inline std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace detail

inline SeededRecurrence parse_recurrence(const std::string& text) {
  SeededRecurrence sr;
  std::istringstream is(text);
  std::string line;
  bool have_rec = false;
  while (std::getline(is, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = detail::trim(line.substr(0, colon));
    std::string value = line.substr(colon + 1);
    if (key == "recurrence") {
      std::istringstream parts(value);
      std::string part;
      while (std::getline(parts, part, ';')) sr.recurrence.coeffs.push_back(detail::parse_unipoly(part));
      have_rec = true;
    } else if (key == "n0") {
      sr.recurrence.n0 = std::stol(value);
    } else if (key == "seed_start") {
      sr.seed.n_start = std::stol(value);
    } else if (key == "seed") {
      std::istringstream parts(value);
      std::string part;
      while (std::getline(parts, part, ','))
        if (!detail::trim(part).empty()) sr.seed.terms.push_back(parse_rational(detail::trim(part)));
    }
  }
  if (!have_rec || sr.recurrence.coeffs.size() < 2) throw ValidationError("missing recurrence line");
  return sr;
}

}  // namespace pattern_duel

#endif  // PATTERN_DUEL_RECURRENCE_HPP
