#ifndef PATTERN_DUEL_PATTERNS_HPP
#define PATTERN_DUEL_PATTERNS_HPP

#include "pattern_duel/exact/tripoly.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pattern_duel {

/// A word over {1..m}; letters are 1-based (H = 1, T = 2 for coins).
struct Pattern {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  auto operator<=>(const Pattern&) const = default;

  Pattern reversed() const { return {std::vector<int>(letters.rbegin(), letters.rend())}; }

  /// Digits when every letter is < 10 ("112"), bracketed list otherwise.
  std::string to_string() const {
    bool digits = std::all_of(letters.begin(), letters.end(), [](int l) { return l < 10; });
    std::string out = digits ? "" : "[";
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (!digits && i > 0) out += ",";
      out += std::to_string(letters[i]);
    }
    return digits ? out : out + "]";
  }
};

using PatternSet = std::vector<Pattern>;  // sorted, duplicate-free

inline PatternSet normalize_set(PatternSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const PatternSet& s, const Pattern& p) {
  return std::binary_search(s.begin(), s.end(), p);
}

inline std::string to_string(const PatternSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].to_string();
  return out;
}

/// Alphabet size, common pattern length and the two bettors' pattern sets.
struct BetSpec {
  int m = 2;
  int k = 1;
  PatternSet alice;
  PatternSet bob;

  /// Validates and normalizes. k is inferred from the patterns; pass
  /// k explicitly only when both sets are empty.
  static BetSpec make(int m, PatternSet alice, PatternSet bob, int k = 0) {
    if (m < 2) throw ValidationError("alphabet size must be at least 2");
    BetSpec s;
    s.m = m;
    s.alice = normalize_set(std::move(alice));
    s.bob = normalize_set(std::move(bob));
    int len = 0;
    for (const auto* set : {&s.alice, &s.bob})
      for (const auto& p : *set) {
        if (p.letters.empty()) throw ValidationError("empty pattern");
        for (int l : p.letters)
          if (l < 1 || l > m) throw ValidationError("letter out of range");
        if (len == 0) len = static_cast<int>(p.size());
        else if (len != static_cast<int>(p.size()))
          throw ValidationError("patterns must share one length");
      }
    if (len == 0) len = k > 0 ? k : 1;
    else if (k > 0 && k != len) throw ValidationError("patterns must share one length");
    s.k = len;
    return s;
  }

  void require_game() const {
    if (alice.empty() || bob.empty()) throw ValidationError("empty pattern set");
  }

  /// Patterns that carry both marks.
  PatternSet shared() const {
    PatternSet out;
    std::set_intersection(alice.begin(), alice.end(), bob.begin(), bob.end(),
                          std::back_inserter(out));
    return out;
  }

  BetSpec mirrored() const { return make(m, bob, alice, k); }

  friend bool operator==(const BetSpec&, const BetSpec&) = default;
};

/// Occurrences (overlapping) of members of `patterns` as consecutive subwords.
inline long count_occurrences(std::span<const int> word, const PatternSet& patterns) {
  long count = 0;
  for (const auto& p : patterns) {
    const std::size_t k = p.size();
    if (word.size() < k) continue;
    for (std::size_t i = 0; i + k <= word.size(); ++i)
      if (std::equal(p.letters.begin(), p.letters.end(), word.begin() + static_cast<long>(i)))
        ++count;
  }
  return count;
}

/// Exponents of Weight(w) = x^|w| a^#A b^#B.
struct WeightMonomial {
  long length = 0;
  long alice = 0;
  long bob = 0;
  bool operator==(const WeightMonomial&) const = default;
};

inline WeightMonomial word_weight(std::span<const int> word, const BetSpec& spec) {
  return {static_cast<long>(word.size()), count_occurrences(word, spec.alice),
          count_occurrences(word, spec.bob)};
}

namespace detail {

// Index of a k-letter word in base m (letters shifted to 0..m-1).
inline std::size_t window_code(std::span<const int> w, int m) {
  std::size_t c = 0;
  for (int l : w) c = c * static_cast<std::size_t>(m) + static_cast<std::size_t>(l - 1);
  return c;
}

// mark[code] bit 0: in alice, bit 1: in bob.
inline std::vector<unsigned char> window_marks(const BetSpec& spec) {
  std::size_t size = 1;
  for (int i = 0; i < spec.k; ++i) size *= static_cast<std::size_t>(spec.m);
  std::vector<unsigned char> marks(size, 0);
  for (const auto& p : spec.alice) marks[window_code(p.letters, spec.m)] |= 1;
  for (const auto& p : spec.bob) marks[window_code(p.letters, spec.m)] |= 2;
  return marks;
}

}  // namespace detail

constexpr double kDefaultOracleBudget = 1e7;

/// Σ over all m^n words of a^#A b^#B, as a polynomial in a, b (x-exponent 0).
/// Exhaustive enumeration; intended as a test oracle.
inline TriPoly brute_enumerator(const BetSpec& spec, int n, double budget = kDefaultOracleBudget) {
  if (n < 0) throw ValidationError("word length must be non-negative");
  double words = 1;
  for (int i = 0; i < n; ++i) {
    words *= spec.m;
    if (words > budget) throw ComputationError("oracle too large");
  }
  const auto marks = detail::window_marks(spec);
  const std::size_t m = static_cast<std::size_t>(spec.m);
  std::size_t window_mod = 1;
  for (int i = 0; i + 1 < spec.k; ++i) window_mod *= m;

  std::map<std::pair<long, long>, long> counts;
  // Depth-first over words, carrying the code of the last k-1 letters.
  auto walk = [&](auto&& self, int depth, std::size_t code, long ca, long cb) -> void {
    if (depth == n) {
      ++counts[{ca, cb}];
      return;
    }
    for (std::size_t l = 0; l < m; ++l) {
      std::size_t full = code * m + l;
      long na = ca, nb = cb;
      if (depth + 1 >= spec.k) {
        unsigned char mk = marks[full % (window_mod * m)];
        na += mk & 1;
        nb += (mk >> 1) & 1;
      }
      self(self, depth + 1, window_mod == 1 ? 0 : full % window_mod, na, nb);
    }
  };
  walk(walk, 0, 0, 0, 0);

  std::vector<TriPoly::Term> terms;
  for (const auto& [ab, c] : counts)
    terms.push_back({{0, static_cast<unsigned>(ab.first), static_cast<unsigned>(ab.second)}, c});
  return TriPoly::from_terms(std::move(terms));
}

/// Σ_j [u's suffix of length k-j equals v's prefix of length k-j] x^j for
/// j = 1..k-1: the offsets at which v can chain onto u while overlapping it.
inline TriPoly overlap_poly(const Pattern& u, const Pattern& v) {
  if (u.size() != v.size()) throw ValidationError("patterns must share one length");
  const std::size_t k = u.size();
  TriPoly p;
  for (std::size_t j = 1; j < k; ++j)
    if (std::equal(u.letters.begin() + static_cast<long>(j), u.letters.end(), v.letters.begin()))
      p += TriPoly::x(static_cast<unsigned>(j));
  return p;
}

/// Applies a letter permutation (perm[l-1] is the image of l) to every pattern.
inline PatternSet relabel(const PatternSet& s, const std::vector<int>& perm) {
  PatternSet out;
  for (const auto& p : s) {
    Pattern q;
    for (int l : p.letters) q.letters.push_back(perm[static_cast<std::size_t>(l - 1)]);
    out.push_back(std::move(q));
  }
  return normalize_set(std::move(out));
}

inline PatternSet reversed(const PatternSet& s) {
  PatternSet out;
  for (const auto& p : s) out.push_back(p.reversed());
  return normalize_set(std::move(out));
}

/// Word maps that preserve the occurrence statistics: a letter permutation
/// optionally followed by reversal.
struct WordSymmetry {
  std::vector<int> perm;
  bool reverse = false;

  PatternSet apply(const PatternSet& s) const {
    PatternSet r = relabel(s, perm);
    return reverse ? reversed(r) : r;
  }
  Pattern apply(const Pattern& p) const { return apply(PatternSet{p}).front(); }
};

inline std::vector<WordSymmetry> word_symmetries(int m) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::vector<WordSymmetry> out;
  do {
    out.push_back({perm, false});
    out.push_back({perm, true});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// All m^k words of length k in lexicographic order.
inline std::vector<Pattern> all_words(int m, int k) {
  std::vector<Pattern> out;
  Pattern p{std::vector<int>(static_cast<std::size_t>(k), 1)};
  for (;;) {
    out.push_back(p);
    int i = k - 1;
    while (i >= 0 && p.letters[static_cast<std::size_t>(i)] == m) {
      p.letters[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) return out;
    ++p.letters[static_cast<std::size_t>(i)];
  }
}

}  // namespace pattern_duel

#endif  // PATTERN_DUEL_PATTERNS_HPP
