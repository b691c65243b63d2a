#ifndef PATTERN_DUEL_CLI_HPP
#define PATTERN_DUEL_CLI_HPP

#include "pattern_duel/asymptotics.hpp"
#include "pattern_duel/gf.hpp"
#include "pattern_duel/recurrence.hpp"
#include "pattern_duel/series.hpp"

#include <json.hpp>

#include <cctype>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pattern_duel::cli {

struct CliRequest {
  std::string command;  // gf | whowon | brute | rec | asymp | rank
  int m = 2;
  std::string alice;
  std::string bob;
  std::optional<long> n;
  long K = kDefaultK;
  int J = kDefaultJ;
  int terms = 200;
  std::string side = "both";       // rec: alice | bob | tie | both
  std::string method = "cluster";  // gf: cluster | transfer
  GuessConfig guess;
  bool json = false;
};

namespace detail {

inline std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

inline int parse_letter(const std::string& tok) {
  if (tok.empty() || tok.size() > 9 ||
      !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ValidationError("malformed pattern '" + tok + "'");
  return std::stoi(tok);
}

}  // namespace detail

/// "111,222" (one digit per letter) or "[1,2,3],[3,2,1]" for any m.
inline PatternSet parse_patterns(const std::string& expr, int m) {
  const std::string s = detail::strip(expr);
  PatternSet out;
  if (s.empty()) return out;
  if (s.find('[') != std::string::npos) {
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '[') throw ValidationError("malformed pattern list '" + expr + "'");
      const std::size_t close = s.find(']', pos);
      if (close == std::string::npos) throw ValidationError("unbalanced bracket in '" + expr + "'");
      Pattern p;
      std::string body = s.substr(pos + 1, close - pos - 1);
      std::size_t start = 0;
      while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string::npos) comma = body.size();
        p.letters.push_back(detail::parse_letter(body.substr(start, comma - start)));
        start = comma + 1;
      }
      out.push_back(std::move(p));
      pos = close + 1;
      if (pos < s.size()) {
        if (s[pos] != ',') throw ValidationError("malformed pattern list '" + expr + "'");
        ++pos;
      }
    }
  } else {
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t comma = s.find(',', start);
      if (comma == std::string::npos) comma = s.size();
      const std::string word = s.substr(start, comma - start);
      if (word.empty()) throw ValidationError("empty pattern");
      Pattern p;
      for (char c : word) p.letters.push_back(detail::parse_letter(std::string(1, c)));
      out.push_back(std::move(p));
      start = comma + 1;
    }
  }
  for (const auto& p : out)
    for (int l : p.letters)
      if (l < 1 || l > m) throw ValidationError("letter out of range");
  for (const auto& p : out)
    if (p.size() != out.front().size()) throw ValidationError("patterns must share one length");
  return normalize_set(std::move(out));
}

namespace detail {

using nlohmann::json;

inline json fraction(const Rational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

inline void print_verdict(const GameVerdict& v, bool as_json, std::ostream& out) {
  if (as_json) {
    json j = {{"favored", to_string(v.favored)},
              {"alice_wins", v.favored == Favored::alice},
              {"n", v.n},
              {"p_alice", fraction(v.p_alice)},
              {"p_bob", fraction(v.p_bob)},
              {"p_tie", fraction(v.p_tie)},
              {"display", v.displayed}};
    out << j.dump() << "\n";
    return;
  }
  out << to_string(v.favored) << " " << v.displayed[0] << " " << v.displayed[1];
  if (v.p_alice == 0 && v.p_bob == 0) out << " (tie " << v.displayed[2] << ")";
  out << "\n";
}

inline BetSpec spec_of(const CliRequest& r) {
  if (r.m < 2) throw ValidationError("alphabet size must be at least 2");
  return BetSpec::make(r.m, parse_patterns(r.alice, r.m), parse_patterns(r.bob, r.m));
}

inline long require_n(const CliRequest& r) {
  if (!r.n) throw ValidationError("missing -n");
  if (*r.n < 0) throw ValidationError("number of rolls must be non-negative");
  if (*r.n > 1000000) throw ValidationError("number of rolls too large");
  return *r.n;
}

inline std::vector<Side> rec_sides(const std::string& s) {
  if (s == "alice") return {Side::alice};
  if (s == "bob") return {Side::bob};
  if (s == "tie") return {Side::tie};
  if (s == "both") return {Side::alice, Side::bob};
  throw ValidationError("side must be alice, bob, tie or both");
}

inline std::string constant(const Real& c, int stability) {
  return format_real(c, std::clamp(stability, 1, 10));
}

inline int dispatch(const CliRequest& r, std::ostream& out, std::ostream& err) {
  const BetSpec spec = spec_of(r);
  if (!spec.shared().empty())
    err << "note: " << to_string(spec.shared()) << " belongs to both sets and scores for both players\n";

  if (r.command == "gf") {
    TriRat f;
    if (r.method == "cluster") f = cluster_gf(spec);
    else if (r.method == "transfer") f = transfer_gf(spec);
    else throw ValidationError("method must be cluster or transfer");
    if (r.json) out << json{{"num", f.num().to_string()}, {"den", f.den().to_string()}}.dump() << "\n";
    else out << f.to_string() << "\n";
    return 0;
  }
  if (r.command == "whowon") {
    spec.require_game();
    print_verdict(verdict(spec, static_cast<int>(require_n(r))), r.json, out);
    return 0;
  }
  if (r.command == "brute") {
    spec.require_game();
    print_verdict(brute_verdict(spec, static_cast<int>(require_n(r))), r.json, out);
    return 0;
  }
  if (r.command == "rec") {
    spec.require_game();
    json j = json::object();
    std::string text;
    for (Side side : rec_sides(r.side)) {
      auto seq = deficit_sequence(spec, side, r.terms);
      auto rec = guess(seq, r.guess);
      if (!rec) throw ComputationError("no recurrence found for " + to_string(side));
      SeededRecurrence sr{*rec, seq.prefix(std::max(rec->n0, seq.n_start) + rec->order() - 1)};
      if (r.json) {
        json coeffs = json::array();
        for (const auto& p : rec->coeffs) coeffs.push_back(p.to_string());
        json seed = json::array();
        for (const auto& t : sr.seed.terms) seed.push_back(to_string(t));
        j[to_string(side)] = {{"order", rec->order()}, {"n0", rec->n0},       {"coeffs", coeffs},
                              {"seed_start", sr.seed.n_start}, {"seed", seed}};
      } else {
        text += "# " + to_string(side) + "\n" + serialize(sr);
      }
    }
    out << (r.json ? j.dump() + "\n" : text);
    return 0;
  }
  if (r.command == "asymp") {
    auto v = whowon_asymptotic(spec, r.K, r.J, PipelineConfig{kDefaultDirectBudget, r.guess});
    if (r.json) {
      auto fit = [](const AsymptoticFit& f) {
        json c = json::array();
        for (const auto& x : f.coeffs) c.push_back(format_real(x, 20));
        return json{{"coeffs", c}, {"stability", f.stability}};
      };
      out << json{{"favored", to_string(v.favored)},
                  {"alice_wins", v.favored == Favored::alice},
                  {"K", r.K},
                  {"J", r.J},
                  {"c_alice", fit(v.alice)},
                  {"c_bob", fit(v.bob)}}
                 .dump()
          << "\n";
    } else {
      out << to_string(v.favored) << " " << constant(v.alice.coeffs[0], v.alice.stability[0]) << " "
          << constant(v.bob.coeffs[0], v.bob.stability[0]) << " (stable digits " << v.alice.stability[0] << " "
          << v.bob.stability[0] << ")\n";
    }
    return 0;
  }
  if (r.command == "rank") {
    if (spec.alice.size() != 1) throw ValidationError("rank takes exactly one Alice pattern");
    auto ranked = rank_counter_bets(spec.m, spec.alice.front(), r.K, r.J,
                                    PipelineConfig{kDefaultDirectBudget, r.guess});
    json rows = json::array();
    for (const auto& b : ranked) {
      if (r.json) {
        json pats = json::array();
        for (const auto& p : b.patterns) pats.push_back(p.to_string());
        rows.push_back({{"bob", pats},
                        {"advantage", b.exact_zero ? "0" : format_real(b.advantage, 20)},
                        {"stability", b.stability},
                        {"exact_zero", b.exact_zero}});
      } else {
        out << to_string(b.patterns) << " ";
        if (b.exact_zero) out << "0 (exact)\n";
        else out << constant(b.advantage, b.stability) << " (stable digits " << b.stability << ")\n";
      }
    }
    if (r.json) out << rows.dump() << "\n";
    return 0;
  }
  throw ValidationError("unknown subcommand '" + r.command + "'");
}

}  // namespace detail

/// Executes one request. Data goes to `out`, diagnostics to `err`; returns
/// 0, 2 (invalid input) or 3 (computation failed).
inline int run(const CliRequest& request, std::ostream& out, std::ostream& err) {
  try {
    return detail::dispatch(request, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return ValidationError::exit_code;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return ValidationError::exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ComputationError::exit_code;
  }
}

}  // namespace pattern_duel::cli

#endif  // PATTERN_DUEL_CLI_HPP
