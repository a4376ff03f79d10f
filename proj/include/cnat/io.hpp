#pragma once
// Text formats. Matrix blocks and one-line JSON records are canonical and
// round-trip exactly; the ASCII and TikZ renderings are advisory.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cnat/core.hpp"

namespace cnat {

// n lines of n characters from {0,1}, newline-terminated, row 1 first.
std::string to_matrix_text(const BitMatrix&);
std::string to_matrix_text(const Cnat&);

// {"size":n,"dots":[[r,c],...]} with dots sorted lexicographically, one line.
std::string to_record(const Cnat&);

Result<BitMatrix> parse_matrix_text(const std::string& block);
Result<Cnat> parse_record(const std::string& line);

// A record as read, before validation.
struct RawRecord {
  int rows = 0;
  int cols = 0;
  std::vector<Dot> dots;
};

// Reads the next record from a stream: a JSON line if it starts with '{',
// otherwise a matrix block. Skips blank lines; nullopt at end of input.
std::optional<Result<RawRecord>> read_next_raw(std::istream&);

// read_next_raw plus both validation stages.
std::optional<Result<Cnat>> read_next_cnat(std::istream&);

// Grid picture with internal dots, leaves, and parent links; one glyph per
// cell with a one-column gutter so horizontal links stay connected.
std::string render_ascii(const Cnat&);

// Self-contained tikzpicture: labeled grid, thick parent links, black
// internal dots, blue leaves.
std::string render_tikz(const Cnat&);

}  // namespace cnat
