#include "cnat/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnat {

std::string to_string(Dot d) {
  return "(" + std::to_string(d.row) + "," + std::to_string(d.col) + ")";
}

std::string Error::message() const {
  switch (code) {
    case ErrorCode::missing_root:
      return "MissingRoot";
    case ErrorCode::ambiguous_dot:
      return "AmbiguousDot" + to_string(dot);
    case ErrorCode::orphan_dot:
      return "OrphanDot" + to_string(dot);
    case ErrorCode::empty_row:
      return "EmptyRow(" + std::to_string(index) + ")";
    case ErrorCode::empty_col:
      return "EmptyCol(" + std::to_string(index) + ")";
    case ErrorCode::incomplete_dot:
      return "IncompleteDot" + to_string(dot);
    case ErrorCode::not_square:
      return "NotSquare";
    case ErrorCode::not_interacting:
      return "NotInteracting";
    case ErrorCode::not_all_short:
      return "NotAllShort";
    case ErrorCode::odd_size:
      return "OddSize";
    case ErrorCode::bound_exceeded:
      return "BoundExceeded(n=" + std::to_string(index) + ")";
    case ErrorCode::oracle_bound_exceeded:
      return "OracleBoundExceeded(n=" + std::to_string(index) + ")";
    case ErrorCode::parse_error:
      return "ParseError: " + detail;
  }
  return "UnknownError";
}

namespace {

// Nearest neighbours of d within a sorted dot set, along its row or column.
std::optional<Dot> nearest_above(std::span<const Dot> dots, Dot d) {
  std::optional<Dot> best;
  for (Dot e : dots)
    if (e.col == d.col && e.row < d.row && (!best || e.row > best->row))
      best = e;
  return best;
}

std::optional<Dot> nearest_left(std::span<const Dot> dots, Dot d) {
  std::optional<Dot> best;
  for (Dot e : dots)
    if (e.row == d.row && e.col < d.col && (!best || e.col > best->col))
      best = e;
  return best;
}

std::optional<Dot> nearest_below(std::span<const Dot> dots, Dot d) {
  std::optional<Dot> best;
  for (Dot e : dots)
    if (e.col == d.col && e.row > d.row && (!best || e.row < best->row))
      best = e;
  return best;
}

std::optional<Dot> nearest_right(std::span<const Dot> dots, Dot d) {
  std::optional<Dot> best;
  for (Dot e : dots)
    if (e.row == d.row && e.col > d.col && (!best || e.col < best->col))
      best = e;
  return best;
}

}  // namespace

Result<NatGrid> validate_nat(int rows, int cols, std::vector<Dot> dots) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("empty grid");
  std::sort(dots.begin(), dots.end());
  dots.erase(std::unique(dots.begin(), dots.end()), dots.end());
  for (Dot d : dots)
    if (d.row < 1 || d.row > rows || d.col < 1 || d.col > cols)
      throw std::invalid_argument("dot " + to_string(d) + " out of bounds");

  if (dots.empty() || dots.front() != Dot{1, 1})
    return Error{ErrorCode::missing_root};

  for (Dot d : dots) {
    if (d == Dot{1, 1}) continue;
    const bool above = nearest_above(dots, d).has_value();
    const bool left = nearest_left(dots, d).has_value();
    if (above && left) return Error{ErrorCode::ambiguous_dot, d};
    if (!above && !left) return Error{ErrorCode::orphan_dot, d};
  }

  std::vector<char> row_used(rows + 1, 0), col_used(cols + 1, 0);
  for (Dot d : dots) {
    row_used[d.row] = 1;
    col_used[d.col] = 1;
  }
  for (int r = 1; r <= rows; ++r)
    if (!row_used[r]) return Error{ErrorCode::empty_row, {}, r};
  for (int c = 1; c <= cols; ++c)
    if (!col_used[c]) return Error{ErrorCode::empty_col, {}, c};

  NatGrid grid;
  grid.rows_ = rows;
  grid.cols_ = cols;
  grid.dots_ = std::move(dots);
  return grid;
}

Result<Cnat> validate_cnat(const NatGrid& grid) {
  const std::span<const Dot> dots = grid.dots();

  std::vector<Dot> leaves;
  for (Dot d : dots) {
    const bool below = nearest_below(dots, d).has_value();
    const bool right = nearest_right(dots, d).has_value();
    if (below != right) return Error{ErrorCode::incomplete_dot, d};
    if (!below) leaves.push_back(d);
  }

  const int n = static_cast<int>(leaves.size());
  if (grid.rows() != grid.cols() || n != grid.rows())
    return Error{ErrorCode::not_square, {}, n};

  Cnat out;
  out.size_ = n;
  out.dots_.assign(dots.begin(), dots.end());
  out.leaves_ = std::move(leaves);
  out.parents_.reserve(dots.size());
  for (Dot d : dots) {
    if (d == Cnat::root) {
      out.parents_.push_back(d);
      continue;
    }
    auto up = nearest_above(dots, d);
    out.parents_.push_back(up ? *up : *nearest_left(dots, d));
  }

  // Implied by completeness on a valid grid: 2n-1 dots, one leaf per row
  // and per column.
  assert(static_cast<int>(out.dots_.size()) == 2 * n - 1);
#ifndef NDEBUG
  {
    std::vector<char> row_leaf(n + 1, 0);
    std::vector<char> col_leaf(n + 1, 0);
    for (Dot l : out.leaves_) {
      assert(!row_leaf[l.row] && !col_leaf[l.col]);
      row_leaf[l.row] = 1;
      col_leaf[l.col] = 1;
    }
  }
#endif
  return out;
}

Result<Cnat> cnat_from_dots(int size, std::vector<Dot> dots) {
  auto grid = validate_nat(size, size, std::move(dots));
  if (!grid.ok()) return grid.error();
  return validate_cnat(grid.value());
}

bool Cnat::contains(Dot d) const {
  return std::binary_search(dots_.begin(), dots_.end(), d);
}

bool Cnat::is_leaf(Dot d) const {
  return std::binary_search(leaves_.begin(), leaves_.end(), d);
}

Dot Cnat::parent(Dot d) const {
  auto it = std::lower_bound(dots_.begin(), dots_.end(), d);
  if (it == dots_.end() || *it != d)
    throw std::invalid_argument("dot " + to_string(d) + " not in the tree");
  return parents_[static_cast<std::size_t>(it - dots_.begin())];
}

std::optional<Dot> Cnat::left_child(Dot d) const {
  assert(contains(d));
  return nearest_below(dots_, d);
}

std::optional<Dot> Cnat::right_child(Dot d) const {
  assert(contains(d));
  return nearest_right(dots_, d);
}

BitMatrix to_matrix(const Cnat& t) {
  BitMatrix m(t.size());
  for (Dot d : t.dots()) m.set(d.row, d.col, true);
  return m;
}

Result<Cnat> from_matrix(const BitMatrix& m) {
  std::vector<Dot> dots;
  for (int r = 1; r <= m.size(); ++r)
    for (int c = 1; c <= m.size(); ++c)
      if (m.at(r, c)) dots.push_back({r, c});
  return cnat_from_dots(m.size(), std::move(dots));
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<char> seen(word_.size(), 0);
  for (int v : word_) {
    if (v < 1 || v > size() || seen[v - 1])
      throw std::invalid_argument("word is not a permutation of 1..n");
    seen[v - 1] = 1;
  }
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (p.size() > 9 && i > 1) out += ' ';
    out += std::to_string(p.at(i));
  }
  return out;
}

Permutation leaf_permutation(const Cnat& t) {
  std::vector<int> word(t.leaves().size());
  for (Dot l : t.leaves()) {
    assert(l.row >= 1 && l.row <= t.size());
    word[l.row - 1] = l.col;
  }
  return Permutation(std::move(word));
}

std::int64_t inversions(const Permutation& p) {
  std::int64_t count = 0;
  const auto word = p.word();
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++count;
  return count;
}

int sign(const Permutation& p) { return inversions(p) % 2 == 0 ? +1 : -1; }

namespace {

// Laplace expansion along successive rows over the still-available columns.
std::int64_t cofactor_det(const BitMatrix& m, int row, std::uint32_t avail) {
  if (avail == 0) return 1;
  std::int64_t acc = 0;
  int position = 0;
  for (int col = 1; col <= m.size(); ++col) {
    const std::uint32_t bit = 1u << (col - 1);
    if (!(avail & bit)) continue;
    if (m.at(row, col)) {
      const std::int64_t minor = cofactor_det(m, row + 1, avail & ~bit);
      acc += (position % 2 == 0) ? minor : -minor;
    }
    ++position;
  }
  return acc;
}

}  // namespace

Result<std::int64_t> matrix_determinant(const BitMatrix& m, int bound) {
  if (m.size() > bound)
    return Error{ErrorCode::oracle_bound_exceeded, {}, m.size()};
  return cofactor_det(m, 1, (1u << m.size()) - 1);
}

}  // namespace cnat
