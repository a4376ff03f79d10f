#include "cnat/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnat {

namespace {

int axis(Dot d, Side side) { return side == Side::left ? d.row : d.col; }

LeafInfo describe(const Cnat& t, Dot leaf) {
  const Dot p = t.parent(leaf);
  LeafInfo info;
  info.dot = leaf;
  info.parent = p;
  info.side = (leaf.col == p.col) ? Side::left : Side::right;
  info.is_short = info.side == Side::left ? (leaf.row == p.row + 1)
                                          : (leaf.col == p.col + 1);
  return info;
}

Cnat revalidated(const Cnat& original, std::vector<Dot> dots,
                 const char* what) {
  auto rebuilt = cnat_from_dots(original.size(), std::move(dots));
  if (!rebuilt.ok())
    throw std::logic_error(std::string(what) +
                           " produced an invalid tree: " +
                           rebuilt.error().message());
  return std::move(rebuilt).value();
}

}  // namespace

std::vector<LeafInfo> classify_leaves(const Cnat& t) {
  std::vector<LeafInfo> out;
  if (t.size() == 1) {
    // The root has no parent; it counts as a short left leaf.
    out.push_back({Cnat::root, Cnat::root, Side::left, true});
    return out;
  }
  out.reserve(t.leaves().size());
  for (Dot l : t.leaves()) out.push_back(describe(t, l));
  return out;
}

bool is_all_short(const Cnat& t) {
  const auto infos = classify_leaves(t);
  return std::all_of(infos.begin(), infos.end(),
                     [](const LeafInfo& i) { return i.is_short; });
}

std::vector<InteractingPair> interacting_pairs(const Cnat& t, Side side) {
  std::vector<LeafInfo> same_side;
  if (t.size() >= 2)
    for (Dot l : t.leaves()) {
      LeafInfo info = describe(t, l);
      if (info.side == side) same_side.push_back(info);
    }

  std::vector<InteractingPair> out;
  for (const LeafInfo& first : same_side)
    for (const LeafInfo& second : same_side) {
      if (first.dot == second.dot) continue;
      const int lo = axis(first.parent, side);
      const int mid = axis(second.dot, side);
      const int hi = axis(first.dot, side);
      if (lo < mid && mid < hi) out.push_back({first.dot, second.dot, side});
    }
  std::sort(out.begin(), out.end(),
            [side](const InteractingPair& a, const InteractingPair& b) {
              return std::pair(axis(a.first, side), axis(a.second, side)) <
                     std::pair(axis(b.first, side), axis(b.second, side));
            });
  return out;
}

Result<Cnat> switch_leaves(const Cnat& t, Dot l1, Dot l2) {
  if (!t.is_leaf(l1) || !t.is_leaf(l2) || l1 == l2)
    return Error{ErrorCode::not_interacting};
  const LeafInfo a = describe(t, l1);
  const LeafInfo b = describe(t, l2);
  if (a.side != b.side) return Error{ErrorCode::not_interacting};

  const Side side = a.side;
  auto between = [side](const LeafInfo& first, const LeafInfo& second) {
    return axis(first.parent, side) < axis(second.dot, side) &&
           axis(second.dot, side) < axis(first.dot, side);
  };
  if (!between(a, b) && !between(b, a))
    return Error{ErrorCode::not_interacting};

  // Exchanging the two row labels and exchanging the two column labels move
  // the same pair of cells.
  std::vector<Dot> dots(t.dots().begin(), t.dots().end());
  std::erase(dots, l1);
  std::erase(dots, l2);
  dots.push_back({l2.row, l1.col});
  dots.push_back({l1.row, l2.col});
  return revalidated(t, std::move(dots), "switch");
}

std::optional<InteractingPair> active_pair(const Cnat& t) {
  auto lefts = interacting_pairs(t, Side::left);
  if (!lefts.empty()) return lefts.back();
  auto rights = interacting_pairs(t, Side::right);
  if (!rights.empty()) return rights.back();
  return std::nullopt;
}

Cnat phi(const Cnat& t) {
  const auto pair = active_pair(t);
  if (!pair) return t;
  auto switched = switch_leaves(t, pair->first, pair->second);
  if (!switched.ok()) throw std::logic_error("active pair failed to switch");
  return std::move(switched).value();
}

Result<Cnat> reduce(const Cnat& t) {
  if (!is_all_short(t)) return Error{ErrorCode::not_all_short};
  if (t.size() % 2 != 0) return Error{ErrorCode::odd_size};

  const int n = t.size();
  std::vector<char> drop_row(n + 1, 0), drop_col(n + 1, 0);
  for (const LeafInfo& leaf : classify_leaves(t)) {
    if (leaf.side == Side::left)
      drop_row[leaf.dot.row] = 1;  // left leaves are alone in their row
    else
      drop_col[leaf.dot.col] = 1;  // right leaves are alone in their column
  }

  // Order-preserving renumbering of the surviving indices.
  std::vector<int> row_map(n + 1, 0), col_map(n + 1, 0);
  for (int i = 1, next = 1; i <= n; ++i)
    if (!drop_row[i]) row_map[i] = next++;
  for (int i = 1, next = 1; i <= n; ++i)
    if (!drop_col[i]) col_map[i] = next++;

  std::vector<Dot> kept;
  for (Dot d : t.dots())
    if (!drop_row[d.row] && !drop_col[d.col])
      kept.push_back({row_map[d.row], col_map[d.col]});

  auto shrunk = cnat_from_dots(n / 2, std::move(kept));
  if (!shrunk.ok())
    throw std::logic_error("reduce produced an invalid tree: " +
                           shrunk.error().message());
  return std::move(shrunk).value();
}

Cnat expand(const Cnat& t) {
  const int n = t.size();
  std::vector<char> leaf_row(n + 1, 0), leaf_col(n + 1, 0);
  for (Dot l : t.leaves()) {
    leaf_row[l.row] = 1;
    leaf_col[l.col] = 1;
  }
  // Shift each index past the rows/columns inserted above or left of it.
  std::vector<int> row_map(n + 1, 0), col_map(n + 1, 0);
  for (int i = 1, inserted = 0; i <= n; ++i) {
    row_map[i] = i + inserted;
    if (leaf_row[i]) ++inserted;
  }
  for (int i = 1, inserted = 0; i <= n; ++i) {
    col_map[i] = i + inserted;
    if (leaf_col[i]) ++inserted;
  }

  std::vector<Dot> grown;
  for (Dot d : t.dots()) grown.push_back({row_map[d.row], col_map[d.col]});
  for (Dot l : t.leaves()) {
    grown.push_back({row_map[l.row] + 1, col_map[l.col]});
    grown.push_back({row_map[l.row], col_map[l.col] + 1});
  }

  auto doubled = cnat_from_dots(2 * n, std::move(grown));
  if (!doubled.ok())
    throw std::logic_error("expand produced an invalid tree: " +
                           doubled.error().message());
  return std::move(doubled).value();
}

Permutation doubled_permutation(const Permutation& half) {
  std::vector<int> word;
  word.reserve(2 * half.word().size());
  for (int v : half.word()) {
    word.push_back(2 * v);
    word.push_back(2 * v - 1);
  }
  return Permutation(std::move(word));
}

}  // namespace cnat
