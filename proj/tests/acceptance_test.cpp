// Acceptance checks, one PASS/FAIL line per criterion.
//   acceptance_test        run all
//   acceptance_test 4 7    run the listed criteria
#include "pattern_duel/asymptotics.hpp"
#include "pattern_duel/cli.hpp"

#include "fixtures.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace pattern_duel;
using fixtures::coin;
using fixtures::W;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void check(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

struct Fixture {
  int m;
  PatternSet a, b;
  int n;
  Favored favored;
  const char* pa;
  const char* pb;
  BetSpec spec() const { return BetSpec::make(m, a, b); }
};

const std::vector<Fixture>& verdict_fixtures() {
  static const std::vector<Fixture> f = {
      {2, {W({1, 1})}, {W({1, 2})}, 100, Favored::bob, "0.4576402592", "0.4858327983"},
      {2, {W({1, 1})}, {W({1, 2})}, 200, Favored::bob, "0.4700634942", "0.4900044947"},
      {6, {W({1, 1})}, {W({1, 2})}, 200, Favored::bob, "0.4292455296", "0.4486924385"},
      {6, {W({1, 1})}, {W({2, 3})}, 200, Favored::bob, "0.4346673623", "0.4527404645"},
      {6, {W({1, 1, 1}), W({2, 2, 2})}, {W({1, 2, 3})}, 100, Favored::alice, "0.4163070114", "0.1955648145"},
      {6, {W({1, 1, 1}), W({2, 2, 2})}, {W({1, 2, 3}), W({3, 2, 1})}, 100, Favored::bob, "0.3828838919",
       "0.4121794361"},
  };
  return f;
}

std::string label(const BetSpec& s) {
  return "(" + std::to_string(s.m) + ",{" + to_string(s.alice) + "},{" + to_string(s.bob) + "})";
}

Rational decimal(const std::string& s) {
  auto dot = s.find('.');
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  return make_rational(Integer(digits, 10), ipow(10, static_cast<unsigned long>(s.size() - dot - 1)));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double as_double(const Real& x) { return x.convert_to<double>(); }

const double kSqrtPi = std::sqrt(std::acos(-1.0));

Outcome gf_fixtures() {
  Outcome o;
  std::ostringstream out, err;
  cli::CliRequest r;
  r.command = "gf";
  r.alice = "11";
  r.bob = "12";
  o.check(cli::run(r, out, err) == 0, "gf exit code");
  o.check(out.str() == fixtures::coin_gf().to_string() + "\n", "coin gf text");
  o.check(trirat_equal(cluster_gf(coin()), fixtures::coin_gf()), "coin gf");
  auto six = BetSpec::make(6, {W({1, 1, 1, 1, 1, 1})}, {W({1, 2, 2, 2, 2, 2})});
  o.check(trirat_equal(cluster_gf(six), fixtures::six_die_gf()), "six-sided gf");
  return o;
}

Outcome verdict_table() {
  Outcome o;
  for (const auto& f : verdict_fixtures()) {
    GameVerdict v = verdict(f.spec(), f.n);
    const Rational unit(1, 10000000000);  // values lie in [0.1, 1)
    const bool ok_a = abs(decimal(v.displayed[0]) - decimal(f.pa)) <= unit;
    const bool ok_b = abs(decimal(v.displayed[1]) - decimal(f.pb)) <= unit;
    const bool ok_f = v.favored == f.favored;
    std::cout << "    " << label(f.spec()) << " n=" << f.n << ": " << to_string(v.favored) << " "
              << v.displayed[0] << " " << v.displayed[1] << "  expected " << to_string(f.favored) << " " << f.pa
              << " " << f.pb << (ok_a && ok_b && ok_f ? "" : "  MISMATCH") << "\n";
    if (!(ok_a && ok_b && ok_f)) {
      o.fail(label(f.spec()) + " n=" + std::to_string(f.n));
      GameVerdict alt = verdict(f.spec(), 2 * f.n);
      std::cout << "    note: the same spec at n=" << 2 * f.n << " gives " << alt.displayed[0] << " "
                << alt.displayed[1] << "\n";
    }
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (const auto& f : verdict_fixtures()) {
    const BetSpec spec = f.spec();
    const int top = spec.m == 2 ? 20 : 8;
    auto splits = tie_splits(spec, top);
    for (int n = 0; n <= top; ++n)
      if (splits[static_cast<std::size_t>(n)] != brute_split(spec, n))
        o.fail(label(spec) + " n=" + std::to_string(n));
  }
  return o;
}

Outcome cross_method() {
  Outcome o;
  std::vector<BetSpec> specs;
  for (const auto& f : verdict_fixtures()) specs.push_back(f.spec());
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> mdist(2, 4), kdist(2, 3), count(1, 2);
  for (int i = 0; i < 20; ++i) {
    const int m = mdist(rng), k = kdist(rng);
    auto words = all_words(m, k);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    PatternSet a, b;
    for (int j = count(rng); j > 0; --j) a.push_back(words[pick(rng)]);
    for (int j = count(rng); j > 0; --j) b.push_back(words[pick(rng)]);
    specs.push_back(BetSpec::make(m, a, b));
  }
  for (const auto& s : specs)
    if (!trirat_equal(cluster_gf(s), transfer_gf(s))) o.fail(label(s));
  return o;
}

Outcome known_recurrences() {
  Outcome o;
  auto one = fixtures::ht_beats_hh();
  auto two = fixtures::hh_beats_ht();
  auto bob = deficit_sequence(coin(), Side::bob, 400);
  auto alice = deficit_sequence(coin(), Side::alice, 400);
  o.check(bob.prefix(5).terms == one.seed.terms, "HT-beats-HH seeds");
  o.check(alice.prefix(5).terms == two.seed.terms, "HH-beats-HT seeds");
  o.check(annihilates(one.recurrence, bob), "first recurrence on HT-beats-HH deficits");
  o.check(annihilates(two.recurrence, alice), "second recurrence on HH-beats-HT deficits");
  return o;
}

Outcome guess_extend() {
  Outcome o;
  for (Side side : {Side::alice, Side::bob}) {
    auto direct = deficit_sequence(coin(), side, 400);
    auto rec = guess(direct.prefix(200));
    if (!rec) {
      o.fail("no recurrence for " + to_string(side));
      continue;
    }
    std::cout << "    " << to_string(side) << ": order " << rec->order() << ", degree " << rec->degree()
              << ", n0 " << rec->n0 << "\n";
    o.check(extend(*rec, direct.prefix(200), 400).terms == direct.terms, to_string(side) + " 201..400");
    try {
      long count = 0;
      iterate(*rec, direct, 30000, [&](long, const Rational&) { ++count; });
      o.check(count == 30000 - 400, to_string(side) + " extension length");
    } catch (const ComputationError& e) {
      o.fail(e.what());
    }
  }
  return o;
}

Outcome asymptotic_constants() {
  Outcome o;
  auto v = whowon_asymptotic(coin(), 30000, 2);
  const double ca = as_double(v.alice.coeffs[0]), cb = as_double(v.bob.coeffs[0]);
  const double ra = as_double(v.alice.coeffs[1] / v.alice.coeffs[0]);
  const double rb = as_double(v.bob.coeffs[1] / v.bob.coeffs[0]);
  std::cout << "    c0 alice " << format_real(v.alice.coeffs[0], 12) << " bob " << format_real(v.bob.coeffs[0], 12)
            << "; c1/c0 alice " << format_real(v.alice.coeffs[1] / v.alice.coeffs[0], 8) << " bob "
            << format_real(v.bob.coeffs[1] / v.bob.coeffs[0], 8) << "\n";
  o.check(std::abs(ca - 3 / (4 * kSqrtPi)) <= 1e-4, "alice c0");
  o.check(std::abs(cb - 1 / (4 * kSqrtPi)) <= 1e-4, "bob c0");
  o.check(std::abs(ra - 5.0 / 48) <= 1e-2 * 5.0 / 48, "alice c1/c0");
  o.check(std::abs(rb - 7.0 / 16) <= 1e-2 * 7.0 / 16, "bob c1/c0");
  o.check(v.favored == Favored::bob, "favored");
  return o;
}

Outcome counter_bets() {
  Outcome o;
  auto ranked = rank_counter_bets(2, W({1, 1, 1}), 20000);
  const std::vector<PatternSet> order = {
      {W({1, 1, 2}), W({2, 1, 1})}, {W({1, 2, 2}), W({2, 2, 1})}, {W({1, 2, 1})}, {W({2, 1, 2})}, {W({2, 2, 2})}};
  const std::vector<double> adv = {0.598456, 0.4886160, 0.32572, 0.28214, 0};
  if (ranked.size() != order.size()) {
    o.fail("wrong number of groups");
    return o;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::cout << "    " << to_string(ranked[i].patterns) << " " << format_real(ranked[i].advantage, 10)
              << (ranked[i].exact_zero ? " (exact)" : "") << "\n";
    o.check(ranked[i].patterns == order[i], "position " + std::to_string(i + 1));
    o.check(std::abs(as_double(ranked[i].advantage) - adv[i]) <= 2e-3, "advantage of " + to_string(order[i]));
  }
  o.check(ranked.back().exact_zero && ranked.back().advantage == 0, "222 not exactly zero");
  auto splits = tie_splits(BetSpec::make(2, {W({1, 1, 1})}, {W({2, 2, 2})}), 100);
  for (const auto& s : splits) o.check(s.plus == s.minus, "111 vs 222 series asymmetric");
  return o;
}

Outcome properties() {
  Outcome o;
  std::vector<BetSpec> specs;
  for (const auto& f : verdict_fixtures()) specs.push_back(f.spec());
  for (const auto& spec : specs) {
    auto all = verdicts(spec, 200);
    for (const auto& v : all)
      if (v.p_alice + v.p_bob + v.p_tie != 1) o.fail("normalization " + label(spec));
    auto f = coefficients(specialize(cluster_gf(spec)), 200);
    for (int n = 0; n <= 200; ++n)
      if (f[static_cast<std::size_t>(n)].at_one() != Rational(ipow(spec.m, static_cast<unsigned long>(n))))
        o.fail("f_n(1) " + label(spec));
    auto mirrored = verdicts(spec.mirrored(), 200);
    for (std::size_t n = 0; n < all.size(); ++n)
      if (all[n].p_alice != mirrored[n].p_bob || all[n].p_bob != mirrored[n].p_alice) o.fail("mirror " + label(spec));
  }
  for (const auto& spec : {specs[3], specs[4]}) {
    auto base = verdicts(spec, 100);
    for (const auto& g : word_symmetries(spec.m)) {
      if (g.reverse) continue;
      auto moved = verdicts(BetSpec::make(spec.m, g.apply(spec.alice), g.apply(spec.bob)), 100);
      if (moved != base) o.fail("relabel " + label(spec));
    }
  }
  o.check(verdicts(BetSpec::make(2, {W({1, 1, 1})}, {W({1, 1, 2})}), 200) ==
              verdicts(BetSpec::make(2, {W({1, 1, 1})}, {W({2, 1, 1})}), 200),
          "112 vs 211 reversal");
  auto coin_splits = tie_splits(coin(), 200);
  for (int n = 3; n <= 200; ++n)
    if (coin_splits[static_cast<std::size_t>(n)].minus <= coin_splits[static_cast<std::size_t>(n)].plus)
      o.fail("Bob not ahead at n=" + std::to_string(n));
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "gf fixtures", 1, gf_fixtures},
      {2, "verdict fixtures", 30, verdict_table},
      {3, "oracle equivalence", 60, oracle_equivalence},
      {4, "cluster = transfer", 60, cross_method},
      {5, "known recurrences", 0, known_recurrences},
      {6, "guess-extend consistency", 300, guess_extend},
      {7, "asymptotic constants", 600, asymptotic_constants},
      {8, "counter-bet ranking", 0, counter_bets},
      {9, "property suite", 0, properties},
  };
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double took = seconds_since(t0);
    if (c.limit_seconds > 0 && took > c.limit_seconds)
      o.fail("took " + std::to_string(took) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    char line[256];
    std::snprintf(line, sizeof line, "criterion %d %-26s %s  %.2f s", c.id, c.name, o.pass ? "PASS" : "FAIL", took);
    std::cout << line << (o.detail.empty() ? "" : "  [" + o.detail + "]") << "\n" << std::flush;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
