#include "cnat/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "json.hpp"

#include "cnat/transform.hpp"

namespace cnat {

namespace {

constexpr int max_record_size = 4096;

Error parse_error(std::string detail) {
  return Error{ErrorCode::parse_error, {}, 0, std::move(detail)};
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

std::string chomp(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

Result<RawRecord> raw_from_matrix_lines(const std::vector<std::string>& lines) {
  const int n = static_cast<int>(lines.front().size());
  RawRecord raw{n, n, {}};
  for (int r = 1; r <= n; ++r) {
    const std::string& line = lines[r - 1];
    if (static_cast<int>(line.size()) != n)
      return parse_error("row " + std::to_string(r) + " has " +
                         std::to_string(line.size()) + " characters, want " +
                         std::to_string(n));
    for (int c = 1; c <= n; ++c) {
      if (line[c - 1] == '1')
        raw.dots.push_back({r, c});
      else if (line[c - 1] != '0')
        return parse_error("row " + std::to_string(r) +
                           " contains a character other than 0/1");
    }
  }
  return raw;
}

Result<RawRecord> raw_from_record_line(const std::string& line) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    return parse_error(std::string("bad record JSON: ") + e.what());
  }
  if (!parsed.is_object() || !parsed.contains("size") ||
      !parsed.contains("dots"))
    return parse_error("record needs \"size\" and \"dots\"");
  if (!parsed["size"].is_number_integer())
    return parse_error("\"size\" must be an integer");
  const int n = parsed["size"].get<int>();
  if (n < 1 || n > max_record_size)
    return parse_error("\"size\" out of range: " + std::to_string(n));
  if (!parsed["dots"].is_array())
    return parse_error("\"dots\" must be an array of [row,col] pairs");

  RawRecord raw{n, n, {}};
  for (const auto& entry : parsed["dots"]) {
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer())
      return parse_error("\"dots\" must be an array of [row,col] pairs");
    const Dot d{entry[0].get<int>(), entry[1].get<int>()};
    if (d.row < 1 || d.row > n || d.col < 1 || d.col > n)
      return parse_error("dot " + to_string(d) + " outside the " +
                         std::to_string(n) + "x" + std::to_string(n) +
                         " grid");
    raw.dots.push_back(d);
  }
  return raw;
}

}  // namespace

std::string to_matrix_text(const BitMatrix& m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(m.size()) * (m.size() + 1));
  for (int r = 1; r <= m.size(); ++r) {
    for (int c = 1; c <= m.size(); ++c) out += m.at(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string to_matrix_text(const Cnat& t) { return to_matrix_text(to_matrix(t)); }

std::string to_record(const Cnat& t) {
  nlohmann::ordered_json record;
  record["size"] = t.size();
  auto dots = nlohmann::ordered_json::array();
  for (Dot d : t.dots()) dots.push_back({d.row, d.col});
  record["dots"] = std::move(dots);
  return record.dump() + "\n";
}

Result<BitMatrix> parse_matrix_text(const std::string& block) {
  std::istringstream in(block);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    line = chomp(line);
    if (blank(line)) {
      if (lines.empty()) continue;
      break;
    }
    lines.push_back(line);
  }
  if (lines.empty()) return parse_error("empty matrix block");
  const int n = static_cast<int>(lines.front().size());
  if (static_cast<int>(lines.size()) != n)
    return parse_error("matrix block has " + std::to_string(lines.size()) +
                       " rows, want " + std::to_string(n));
  auto raw = raw_from_matrix_lines(lines);
  if (!raw.ok()) return raw.error();
  BitMatrix m(n);
  for (Dot d : raw.value().dots) m.set(d.row, d.col, true);
  return m;
}

Result<Cnat> parse_record(const std::string& line) {
  auto raw = raw_from_record_line(chomp(line));
  if (!raw.ok()) return raw.error();
  return cnat_from_dots(raw.value().rows, std::move(raw.value().dots));
}

std::optional<Result<RawRecord>> read_next_raw(std::istream& in) {
  std::string line;
  do {
    if (!std::getline(in, line)) return std::nullopt;
    line = chomp(line);
  } while (blank(line));

  if (line.front() == '{') return raw_from_record_line(line);

  const int n = static_cast<int>(line.size());
  std::vector<std::string> lines{line};
  while (static_cast<int>(lines.size()) < n) {
    if (!std::getline(in, line))
      return Result<RawRecord>(parse_error(
          "matrix block ended after " + std::to_string(lines.size()) +
          " of " + std::to_string(n) + " rows"));
    lines.push_back(chomp(line));
  }
  return raw_from_matrix_lines(lines);
}

std::optional<Result<Cnat>> read_next_cnat(std::istream& in) {
  auto raw = read_next_raw(in);
  if (!raw) return std::nullopt;
  if (!raw->ok()) return Result<Cnat>(raw->error());
  if (raw->value().rows != raw->value().cols)
    return Result<Cnat>(
        Error{ErrorCode::not_square, {}, raw->value().rows});
  return cnat_from_dots(raw->value().rows, std::move(raw->value()).dots);
}

std::string render_ascii(const Cnat& t) {
  const int n = t.size();
  enum : char { empty, horiz, vert, cross, internal, leaf };
  std::vector<std::vector<char>> cell(n, std::vector<char>(n, empty));
  std::vector<std::vector<char>> gutter(n, std::vector<char>(n > 1 ? n - 1 : 0, empty));

  auto overlay = [](char& slot, char line) {
    if (slot == empty)
      slot = line;
    else if ((slot == horiz && line == vert) ||
             (slot == vert && line == horiz))
      slot = cross;
  };

  for (Dot d : t.dots()) {
    if (d == Cnat::root) continue;
    const Dot p = t.parent(d);
    if (p.col == d.col) {
      for (int r = p.row + 1; r < d.row; ++r)
        overlay(cell[r - 1][d.col - 1], vert);
    } else {
      for (int c = p.col + 1; c < d.col; ++c)
        overlay(cell[d.row - 1][c - 1], horiz);
      for (int c = p.col; c < d.col; ++c) gutter[d.row - 1][c - 1] = horiz;
    }
  }
  for (Dot d : t.dots()) cell[d.row - 1][d.col - 1] = t.is_leaf(d) ? leaf : internal;

  auto glyph = [](char token, bool in_gutter) -> const char* {
    switch (token) {
      case horiz:
        return "\u2500";  // ─
      case vert:
        return "\u2502";  // │
      case cross:
        return "\u253c";  // ┼
      case internal:
        return "\u25cf";  // ●
      case leaf:
        return "\u25cb";  // ○
      default:
        return in_gutter ? " " : "\u00b7";  // ·
    }
  };

  std::string out;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      out += glyph(cell[r][c], false);
      if (c + 1 < n) out += glyph(gutter[r][c], true);
    }
    out += '\n';
  }
  return out;
}

std::string render_tikz(const Cnat& t) {
  const int n = t.size();
  auto x = [](int col) { return 1 + 2 * col; };
  auto y = [](int row) { return 3 - 2 * row; };

  std::ostringstream out;
  out << "\\begin{tikzpicture}[scale=0.35]\n";
  out << "\\draw [step=2] (2,2) grid (" << 2 + 2 * n << "," << 2 - 2 * n
      << ");\n";
  out << "\\foreach \\x in {1,...," << n << "} \\node at (1+2*\\x,3) {\\x};\n";
  out << "\\foreach \\y in {1,...," << n
      << "} \\node at (1,3-2*\\y) {\\y};\n";
  for (Dot d : t.dots()) {
    if (d == Cnat::root) continue;
    const Dot p = t.parent(d);
    out << "\\draw [thick] (" << x(p.col) << "," << y(p.row) << ")--("
        << x(d.col) << "," << y(d.row) << ");\n";
  }
  for (Dot d : t.dots())
    out << "\\filldraw [" << (t.is_leaf(d) ? "blue" : "black") << "] ("
        << x(d.col) << "," << y(d.row) << ") circle (0.4);\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace cnat
