#include "pattern_duel/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using pattern_duel::cli::CliRequest;

void common(CLI::App* sub, CliRequest& r, bool needs_bob = true) {
  sub->add_option("-m", r.m, "alphabet size")->default_val(2);
  sub->add_option("--alice,-a", r.alice, "Alice's patterns, e.g. 111,222 or [1,2,3],[3,2,1]")->required();
  auto* bob = sub->add_option("--bob,-b", r.bob, "Bob's patterns");
  if (needs_bob) bob->required();
  sub->add_flag("--json", r.json, "machine-readable output");
}

void guess_options(CLI::App* sub, CliRequest& r) {
  sub->add_option("--order", r.guess.max_order, "largest recurrence order tried")->default_val(8);
  sub->add_option("--degree", r.guess.max_degree, "largest coefficient degree tried")->default_val(8);
  sub->add_option("--guard", r.guess.guard_terms, "held-out terms checked after fitting")->default_val(20);
}

}  // namespace

int main(int argc, char** argv) {
  CliRequest r;
  CLI::App app{"Exact win probabilities for pattern-counting dice games"};
  app.require_subcommand(1);

  auto* gf = app.add_subcommand("gf", "weight enumerator F(x;a,b)");
  common(gf, r, false);
  gf->add_option("--method", r.method, "cluster or transfer")->default_val("cluster");

  for (const char* name : {"whowon", "brute"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "whowon" ? "exact verdict after n rolls"
                                                                        : "verdict by enumerating every word");
    common(sub, r);
    sub->add_option("-n", r.n, "number of rolls")->required();
  }

  auto* rec = app.add_subcommand("rec", "guess recurrences for the deficit sequences");
  common(rec, r);
  rec->add_option("--terms", r.terms, "series terms used for guessing")->default_val(200);
  rec->add_option("--side", r.side, "alice, bob, tie or both")->default_val("both");
  guess_options(rec, r);

  auto* asymp = app.add_subcommand("asymp", "constants c in 1/2 - c/sqrt(n)");
  common(asymp, r);
  asymp->add_option("-K", r.K, "last sequence index used")->default_val(pattern_duel::kDefaultK);
  asymp->add_option("-J", r.J, "expansion order")->default_val(pattern_duel::kDefaultJ);
  guess_options(asymp, r);

  auto* rank = app.add_subcommand("rank", "rank every counter bet against one pattern");
  common(rank, r, false);
  rank->add_option("-K", r.K, "last sequence index used")->default_val(pattern_duel::kDefaultK);
  rank->add_option("-J", r.J, "expansion order")->default_val(pattern_duel::kDefaultJ);
  guess_options(rank, r);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : pattern_duel::ValidationError::exit_code;
  }
  r.command = app.get_subcommands().front()->get_name();
  return pattern_duel::cli::run(r, std::cout, std::cerr);
}
