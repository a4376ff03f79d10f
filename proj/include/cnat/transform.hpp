#pragma once
// Leaf taxonomy, interacting pairs, the switch move, the sign-reversing
// involution phi, and the reduce/expand bijection between all-short trees of
// even size and trees of half the size.

#include <optional>
#include <vector>

#include "cnat/core.hpp"

namespace cnat {

enum class Side {
  left,   // below its parent, same column
  right,  // to the right of its parent, same row
};

struct LeafInfo {
  Dot dot;
  Dot parent;     // the leaf itself for the degenerate size-1 root
  Side side = Side::left;
  bool is_short = false;  // grid-adjacent to its parent on the shared line
};

// An ordered pair of same-side leaves where `second` lies strictly between
// `first`'s parent and `first` on the shared axis (rows for left leaves,
// columns for right leaves). `first` always has the larger coordinate.
struct InteractingPair {
  Dot first;
  Dot second;
  Side side = Side::left;

  bool operator==(const InteractingPair&) const = default;
};

// One entry per leaf, in (row, col) order of the leaf dots. The size-1 root
// has no parent and counts as a short leaf by convention.
std::vector<LeafInfo> classify_leaves(const Cnat&);

bool is_all_short(const Cnat&);

// All interacting ordered pairs on one side, ascending by the pair of
// first/second coordinates on the shared axis.
std::vector<InteractingPair> interacting_pairs(const Cnat&, Side side);

// Exchanges the row labels (left side) or column labels (right side) of an
// interacting pair; the result is always a valid tree of the same size.
// NotInteracting when the two dots are not an interacting leaf pair; a
// revalidation failure cannot happen and throws std::logic_error.
Result<Cnat> switch_leaves(const Cnat&, Dot l1, Dot l2);

// The pair switched by phi: left pairs take precedence over right ones, and
// within a side the lexicographically largest axis pair wins. nullopt iff no
// pair exists, which happens exactly on all-short trees.
std::optional<InteractingPair> active_pair(const Cnat&);

// Switch at the active pair; identity on all-short trees. An involution that
// flips the permutation sign everywhere off its fixed-point set.
Cnat phi(const Cnat&);

// Deletes every right leaf together with its column and every left leaf
// together with its row, then renumbers rows and columns order-preservingly.
// Defined on all-short trees of even size 2p; lands on size p.
Result<Cnat> reduce(const Cnat&);

// Inverse of reduce: every leaf gets a fresh row just below it, a fresh
// column just to its right, and two adjacent leaf children. Doubles the size
// and lands in the all-short set.
Cnat expand(const Cnat&);

// Each value v becomes the adjacent pair (2v)(2v-1): 231 -> 436521. The
// output has exactly 4*inversions(input) + size(input) inversions.
Permutation doubled_permutation(const Permutation&);

}  // namespace cnat
