// Builds the landmark set for a lobster from its spine decomposition and
// checks it against the exact solver.
#include <iostream>

#include "mdim/mdim.hpp"

int main() {
  // Spine 0-1-2-3-4-5-6-7-8 with hanging pieces of depth <= 2.
  mdim::Graph g = mdim::from_edge_list(17, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
                                            {0, 9}, {9, 10}, {9, 11}, {2, 12}, {4, 13}, {13, 14},
                                            {8, 15}, {15, 16}});
  std::cout << "lobster: " << std::boolalpha << mdim::is_lobster(g) << '\n';
  const auto verdict = mdim::lobster_md_finite(g);
  std::cout << "predicted finite: " << verdict.prediction << '\n';
  if (!verdict.prediction) return 0;

  const auto c = mdim::construct_lobster_resolving_set(g);
  std::cout << "method " << mdim::to_string(c.method) << ", " << c.landmarks.size() << " landmarks:";
  for (auto v : c.landmarks) std::cout << ' ' << v;
  std::cout << "\nresolving: " << c.verified << '\n';
}
