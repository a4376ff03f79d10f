#pragma once
// Exhaustive generation of complete non-ambiguous trees by size: a
// shape-then-label streaming generator, a brute-force matrix-scan oracle,
// and sign tallies compared against the closed-form parity split.

#include <cstdint>
#include <functional>
#include <vector>

#include "cnat/core.hpp"

namespace cnat {

inline constexpr int default_size_bound = 8;
inline constexpr int naive_size_bound = 4;  // 2^(n^2) matrices scanned

// Complete binary tree (every internal node has two children) stored in
// preorder; node 0 is the root, leaves have both child indices -1.
struct TreeShape {
  struct Node {
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;

  int leaf_count() const { return (static_cast<int>(nodes.size()) + 1) / 2; }

  bool operator==(const TreeShape&) const = default;
};

// All shapes with n leaves, each exactly once, in a fixed recursive order:
// left subtree size ascending, then left shape, then right shape.
std::vector<TreeShape> tree_shapes(int n);

using CnatSink = std::function<void(const Cnat&)>;

struct EnumerateOptions {
  int bound = default_size_bound;
  int jobs = 1;  // >1 partitions shapes across threads; sink must be thread-safe
};

// Every tree of size n exactly once. With one job the order is canonical:
// shapes in tree_shapes order, row labelings in lexicographic order, column
// labelings nested innermost. Returns the number emitted.
Result<std::uint64_t> enumerate_cnats(int n, const CnatSink& sink,
                                      const EnumerateOptions& = {});

// Reference oracle: scans all 2^(n^2) 0/1 matrices in numeric order of the
// row-major bit pattern and keeps the ones that validate.
Result<std::uint64_t> naive_enumerate(int n, const CnatSink& sink);

struct SignCounts {
  int n = 0;
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;

  std::uint64_t total() const { return plus + minus; }

  bool operator==(const SignCounts&) const = default;
};

// Tally of sign(leaf_permutation(T)) over all trees of size n.
Result<SignCounts> count_by_sign(int n, const EnumerateOptions& = {});

struct TheoremReport {
  int n = 0;
  SignCounts observed;
  bool applicable = false;  // the parity split says nothing at n = 1
  std::uint64_t expected_plus = 0;
  std::uint64_t expected_minus = 0;
  bool pass = false;  // true at n = 1 (out of scope, not a failure)
};

// Compares the observed sign tally with the closed forms: equal halves for
// odd n > 1, (T_{2p} +- (-1)^p T_p)/2 for even n = 2p with T_p obtained by
// enumeration.
Result<TheoremReport> verify_theorem(int n, const EnumerateOptions& = {});

// Number of size-n trees all of whose leaves are short.
Result<std::uint64_t> count_all_short(int n, const EnumerateOptions& = {});

}  // namespace cnat
