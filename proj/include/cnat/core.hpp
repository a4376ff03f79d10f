#pragma once
// Complete non-ambiguous trees: dotted square grids with a top-left root in
// which every other dot hangs from exactly one neighbour (above in its
// column or to its left in its row) and every dot has both a left child
// (below) and a right child (to the right), or neither.
//
// Everything is 1-based: row 1 is the top row, column 1 the leftmost column,
// matching the text formats and reports.

#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace cnat {

struct Dot {
  int row = 0;
  int col = 0;

  auto operator<=>(const Dot&) const = default;
};

std::string to_string(Dot d);  // "(row,col)"

enum class ErrorCode {
  missing_root,
  ambiguous_dot,  // a dot with both an upper and a left neighbour
  orphan_dot,     // a non-root dot with neither neighbour
  empty_row,
  empty_col,
  incomplete_dot,  // exactly one of the below/right companions present
  not_square,
  not_interacting,
  not_all_short,
  odd_size,
  bound_exceeded,
  oracle_bound_exceeded,
  parse_error,
};

struct Error {
  ErrorCode code{};
  Dot dot{};           // offending cell, for cell-shaped conditions
  int index = 0;       // offending row/column index or requested size
  std::string detail;  // parser context

  // Stable spelling used in CLI output and tests, e.g. "AmbiguousDot(3,2)".
  std::string message() const;
};

// Minimal expected-style carrier. Validation failures are ordinary data
// (filters and the CLI consume them), not exceptions.
template <class T>
class [[nodiscard]] Result {
 public:
  Result(T value) : state_(std::move(value)) {}
  Result(Error error) : state_(std::move(error)) {}

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(state_); }
  T&& value() && { return std::get<T>(std::move(state_)); }
  const Error& error() const { return std::get<Error>(state_); }

 private:
  std::variant<T, Error> state_;
};

// A validated non-ambiguous tree on a rows x cols grid: root at (1,1), every
// other dot has exactly one of {dot above in its column, dot to its left in
// its row}, and no empty row or column.
class NatGrid {
 public:
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::span<const Dot> dots() const { return dots_; }

 private:
  friend Result<NatGrid> validate_nat(int rows, int cols,
                                      std::vector<Dot> dots);

  NatGrid() = default;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Dot> dots_;  // sorted by (row, col)
};

// A complete non-ambiguous tree of size n: every dot has both a dot below in
// its column and a dot to its right in its row (internal dot) or neither
// (leaf). Size = number of leaves; the grid is necessarily n x n with one
// leaf per row and per column. Immutable once validated.
class Cnat {
 public:
  static constexpr Dot root{1, 1};

  int size() const { return size_; }
  std::span<const Dot> dots() const { return dots_; }      // sorted
  std::span<const Dot> leaves() const { return leaves_; }  // sorted

  bool contains(Dot d) const;
  bool is_leaf(Dot d) const;
  bool is_internal(Dot d) const { return contains(d) && !is_leaf(d); }

  // Nearest dot above in the column if one exists, else nearest to the left
  // in the row (exactly one exists for non-root dots). The root maps to
  // itself.
  Dot parent(Dot d) const;

  // Nearest dot below in the column / to the right in the row; nullopt on
  // leaves.
  std::optional<Dot> left_child(Dot d) const;
  std::optional<Dot> right_child(Dot d) const;

  bool operator==(const Cnat&) const = default;

 private:
  friend Result<Cnat> validate_cnat(const NatGrid& grid);

  Cnat() = default;

  int size_ = 0;
  std::vector<Dot> dots_;
  std::vector<Dot> leaves_;
  std::vector<Dot> parents_;  // parallel to dots_; root slot holds the root
};

// n x n 0/1 matrix; entry (row, col) is 1 iff the cell is dotted.
class BitMatrix {
 public:
  explicit BitMatrix(int n)
      : n_(n), cells_(static_cast<std::size_t>(n) * n, 0) {
    assert(n >= 1);
  }

  int size() const { return n_; }
  bool at(int row, int col) const { return cells_[index(row, col)] != 0; }
  void set(int row, int col, bool dotted) {
    cells_[index(row, col)] = dotted ? 1 : 0;
  }

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t index(int row, int col) const {
    assert(row >= 1 && row <= n_ && col >= 1 && col <= n_);
    return static_cast<std::size_t>(row - 1) * n_ + (col - 1);
  }

  int n_;
  std::vector<std::uint8_t> cells_;
};

// One-line notation word over {1..n}; construction rejects anything that is
// not a bijection.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);

  int size() const { return static_cast<int>(word_.size()); }
  int at(int position) const {  // 1-based
    assert(position >= 1 && position <= size());
    return word_[position - 1];
  }
  std::span<const int> word() const { return word_; }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

std::string to_string(const Permutation&);  // "45213"; space-separated past 9

// First violated condition wins: root, then per-dot conditions in (row, col)
// order, then empty rows top-down, then empty columns left-to-right.
// Out-of-bounds or non-positive input dots are a caller bug and throw
// std::invalid_argument; duplicates collapse (the input is a set).
Result<NatGrid> validate_nat(int rows, int cols, std::vector<Dot> dots);

// Checks completeness, classifies every dot, and resolves parents. A grid in
// which every dot is complete is necessarily square with one leaf per row
// and column; NotSquare stays as a contract guard.
Result<Cnat> validate_cnat(const NatGrid& grid);

// Both validation stages on an n x n dot set.
Result<Cnat> cnat_from_dots(int size, std::vector<Dot> dots);

BitMatrix to_matrix(const Cnat&);
Result<Cnat> from_matrix(const BitMatrix&);

// word[i] = column of the unique leaf in row i.
Permutation leaf_permutation(const Cnat&);

std::int64_t inversions(const Permutation&);  // pairs i<j with w[i] > w[j]
int sign(const Permutation&);                 // (-1)^inversions

inline constexpr int default_determinant_bound = 8;

// Exact integer determinant by cofactor expansion, kept independent of the
// permutation-sign route it is checked against. No floating point.
Result<std::int64_t> matrix_determinant(
    const BitMatrix&, int bound = default_determinant_bound);

}  // namespace cnat
