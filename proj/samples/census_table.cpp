// Prints the multiset dimension census for trees of order 6..10 and lists the
// trees whose dimension equals n - 2.
#include <iostream>

#include "mdim/mdim.hpp"

int main() {
  const mdim::CensusResult res = mdim::run_census(1, 10);
  std::vector<mdim::CensusRow> rows(res.rows.begin() + 5, res.rows.end());
  std::cout << mdim::census_summary(rows) << '\n';

  for (const auto& g6 : mdim::verify_bounds(res.records).extremal) {
    const mdim::Graph t = mdim::parse_graph6(g6);
    std::cout << "md = n-2: " << g6 << " (n=" << t.order() << ", edges:";
    for (auto [u, v] : t.edges()) std::cout << ' ' << u << '-' << v;
    std::cout << ")\n";
  }
}
