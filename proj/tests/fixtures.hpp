#pragma once
// Hand-checked trees shared across the test suites.

#include <vector>

#include "cnat/core.hpp"

namespace fixtures {

inline cnat::Cnat make(int n, std::vector<cnat::Dot> dots) {
  auto tree = cnat::cnat_from_dots(n, std::move(dots));
  if (!tree.ok()) throw std::runtime_error(tree.error().message());
  return std::move(tree).value();
}

// Size 5, matrix rows 10110 / 11001 / 01000 / 10000 / 00100.
// Leaves (1,4),(2,5),(3,2),(4,1),(5,3); permutation 45213, sign -1.
inline cnat::Cnat five_example() {
  return make(5, {{1, 1},
                  {1, 3},
                  {1, 4},
                  {2, 1},
                  {2, 2},
                  {2, 5},
                  {3, 2},
                  {4, 1},
                  {5, 3}});
}

inline const char* five_example_matrix_text() {
  return "10110\n11001\n01000\n10000\n00100\n";
}

inline cnat::Cnat size1() { return make(1, {{1, 1}}); }

// The unique size-2 tree: matrix 11 / 10.
inline cnat::Cnat size2() { return make(2, {{1, 1}, {1, 2}, {2, 1}}); }

// Size 6 with three long leaves (4,1), (6,3), (5,5) and three short ones
// (3,2), (1,4), (2,6).
inline cnat::Cnat six_with_long_leaves() {
  return make(6, {{1, 1},
                  {1, 3},
                  {1, 4},
                  {2, 1},
                  {2, 2},
                  {2, 5},
                  {2, 6},
                  {3, 2},
                  {4, 1},
                  {5, 5},
                  {6, 3}});
}

// Image of six_with_long_leaves under the involution: the two active leaves
// (6,3) and (5,5) swap rows.
inline cnat::Cnat six_switched() {
  return make(6, {{1, 1},
                  {1, 3},
                  {1, 4},
                  {2, 1},
                  {2, 2},
                  {2, 5},
                  {2, 6},
                  {3, 2},
                  {4, 1},
                  {5, 3},
                  {6, 5}});
}

// All-short size 6; permutation 436521. Reduces to three_chain.
inline cnat::Cnat six_all_short() {
  return make(6, {{1, 1},
                  {1, 3},
                  {1, 4},
                  {2, 3},
                  {3, 1},
                  {3, 5},
                  {3, 6},
                  {4, 5},
                  {5, 1},
                  {5, 2},
                  {6, 1}});
}

// Size 3, permutation 231; expands to six_all_short.
inline cnat::Cnat three_chain() {
  return make(3, {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 1}});
}

}  // namespace fixtures
