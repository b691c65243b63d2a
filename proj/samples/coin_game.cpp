// HH against HT on a fair coin: exact odds for a few lengths, then the
// large-n constants.
#include "pattern_duel/asymptotics.hpp"

#include <iostream>

using namespace pattern_duel;

int main() {
  const BetSpec spec = BetSpec::make(2, {Pattern{{1, 1}}}, {Pattern{{1, 2}}});
  std::cout << "F = " << cluster_gf(spec).to_string() << "\n\n";

  const auto all = verdicts(spec, 200);
  for (int n : {2, 3, 10, 50, 100, 200}) {
    const auto& v = all[static_cast<std::size_t>(n)];
    std::cout << "n=" << n << "  HH " << v.displayed[0] << "  HT " << v.displayed[1] << "  tie " << v.displayed[2]
              << "\n";
  }

  const auto a = whowon_asymptotic(spec, 30000, 2);
  std::cout << "\nPr(HH wins) ~ 1/2 - " << format_real(a.alice.coeffs[0]) << "/sqrt(n)\n"
            << "Pr(HT wins) ~ 1/2 - " << format_real(a.bob.coeffs[0]) << "/sqrt(n)\n";
}
