#include "qrep/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qrep/error.hpp"

namespace qrep {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

// Non-blank lines with comments stripped.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && (raw[pos] == ' ' || raw[pos] == '\t' || raw[pos] == '\r')) ++pos;
      const std::size_t begin = pos;
      while (pos < raw.size() && raw[pos] != ' ' && raw[pos] != '\t' && raw[pos] != '\r') ++pos;
      if (pos > begin) line.tokens.push_back({raw.substr(begin, pos - begin), begin + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, std::size_t index, const std::string& what) {
  const std::size_t column = index < line.tokens.size() ? line.tokens[index].column : 1;
  throw ParseError(line.number, column, what);
}

std::size_t parse_count(const Line& line, std::size_t index) {
  if (index >= line.tokens.size()) fail(line, index, "missing number");
  const auto tok = line.tokens[index].text;
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(line, index, "expected a nonnegative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

void expect_keyword(const Line& line, std::size_t index, std::string_view keyword) {
  if (index >= line.tokens.size() || line.tokens[index].text != keyword) {
    fail(line, index, "expected '" + std::string(keyword) + "'");
  }
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    fail(line, std::min(count, line.tokens.size() - 1),
         "expected " + std::to_string(count) + " tokens, got " + std::to_string(line.tokens.size()));
  }
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find_first_of(", ", start), text.size());
    if (end > start) parts.push_back(text.substr(start, end - start));
    if (end == text.size()) break;
    start = end + 1;
  }
  return parts;
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty quiver file");
  const Line& header = lines.front();
  expect_keyword(header, 0, "quiver");
  expect_arity(header, 2);
  const std::size_t n = parse_count(header, 1);
  if (n == 0) fail(header, 1, "a quiver needs at least one vertex");

  std::vector<Arrow> arrows;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    expect_keyword(line, 0, "arrow");
    expect_arity(line, 4);
    const std::size_t tail = parse_count(line, 2);
    const std::size_t head = parse_count(line, 3);
    if (tail < 1 || tail > n) fail(line, 2, "tail vertex out of range 1.." + std::to_string(n));
    if (head < 1 || head > n) fail(line, 3, "head vertex out of range 1.." + std::to_string(n));
    if (tail == head) fail(line, 3, "arrow " + std::string(line.tokens[1].text) + " is a loop");
    for (const auto& a : arrows) {
      if (a.label == line.tokens[1].text) fail(line, 1, "duplicate arrow label " + a.label);
    }
    arrows.push_back({std::string(line.tokens[1].text), tail - 1, head - 1});
  }
  return Quiver(n, std::move(arrows));
}

Representation parse_representation(std::string_view text, std::shared_ptr<const Quiver> quiver) {
  const auto lines = tokenize(text);
  if (lines.size() < 2) throw ParseError(lines.empty() ? 1 : lines.front().number, 1, "missing header or dims line");

  const Line& header = lines[0];
  expect_keyword(header, 0, "rep");
  expect_keyword(header, 1, "over");
  expect_arity(header, 3);
  Field field = Field::rationals();
  try {
    field = Field::parse(header.tokens[2].text);
  } catch (const ShapeError& e) {
    fail(header, 2, e.what());
  }

  const Line& dims_line = lines[1];
  expect_keyword(dims_line, 0, "dims");
  expect_arity(dims_line, quiver->vertex_count() + 1);
  std::vector<std::int64_t> dims;
  for (std::size_t i = 1; i < dims_line.tokens.size(); ++i) {
    dims.push_back(static_cast<std::int64_t>(parse_count(dims_line, i)));
  }

  std::vector<std::optional<Matrix>> maps(quiver->arrow_count());
  std::size_t l = 2;
  while (l < lines.size()) {
    const Line& line = lines[l++];
    expect_keyword(line, 0, "map");
    expect_arity(line, 3);
    const std::string label(line.tokens[1].text);
    std::size_t arrow = 0;
    try {
      arrow = quiver->arrow_index(label);
    } catch (const ShapeError&) {
      fail(line, 1, "unknown arrow " + label);
    }
    if (maps[arrow]) fail(line, 1, "map " + label + " given twice");

    const auto shape = line.tokens[2].text;
    const auto x = shape.find('x');
    std::size_t rows = 0;
    std::size_t cols = 0;
    const bool shape_ok =
        x != std::string_view::npos &&
        std::from_chars(shape.data(), shape.data() + x, rows).ptr == shape.data() + x && x > 0 &&
        std::from_chars(shape.data() + x + 1, shape.data() + shape.size(), cols).ptr == shape.data() + shape.size() &&
        x + 1 < shape.size();
    if (!shape_ok) fail(line, 2, "malformed shape '" + std::string(shape) + "', expected <rows>x<cols>");
    const auto& a = quiver->arrows()[arrow];
    const auto want_rows = static_cast<std::size_t>(dims[a.head]);
    const auto want_cols = static_cast<std::size_t>(dims[a.tail]);
    if (rows != want_rows || cols != want_cols) {
      fail(line, 2, "map " + label + " has shape " + std::string(shape) + ", expected " + std::to_string(want_rows) +
                        "x" + std::to_string(want_cols));
    }

    Matrix m(field, rows, cols);
    if (rows > 0 && cols > 0) {
      for (std::size_t r = 0; r < rows; ++r) {
        if (l >= lines.size()) {
          throw ParseError(line.number, 1, "map " + label + " ends after " + std::to_string(r) + " of " +
                                               std::to_string(rows) + " rows");
        }
        const Line& row = lines[l++];
        if (row.tokens.size() != cols) {
          fail(row, std::min(cols, row.tokens.size() - 1),
               "row " + std::to_string(r + 1) + " of map " + label + " has " + std::to_string(row.tokens.size()) +
                   " entries, expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
          try {
            m(r, c) = Scalar::parse(field, row.tokens[c].text);
          } catch (const ShapeError& e) {
            fail(row, c, e.what());
          }
        }
      }
    }
    maps[arrow] = std::move(m);
  }

  std::vector<Matrix> ordered;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (!maps[k]) {
      throw ParseError(lines.back().number, 1, "missing map for arrow " + quiver->arrows()[k].label);
    }
    ordered.push_back(std::move(*maps[k]));
  }
  return Representation(std::move(quiver), field, DimVector(std::move(dims)), std::move(ordered));
}

std::string format_quiver(const Quiver& q) {
  std::ostringstream os;
  os << "quiver " << q.vertex_count() << '\n';
  for (const auto& a : q.arrows()) os << "arrow " << a.label << ' ' << a.tail + 1 << ' ' << a.head + 1 << '\n';
  return os.str();
}

std::string format_representation(const Representation& x) {
  std::ostringstream os;
  os << "rep over " << x.field().name() << '\n';
  os << "dims";
  for (auto d : x.dims().coords()) os << ' ' << d;
  os << '\n';
  const auto& arrows = x.quiver().arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const Matrix& m = x.map(k);
    os << "map " << arrows[k].label << ' ' << m.rows() << 'x' << m.cols() << '\n';
    if (m.empty()) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).to_string();
      os << '\n';
    }
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

DimVector parse_dim_vector(std::string_view text, std::size_t vertex_count) {
  if (text.size() >= 2 && text.front() == 'e') {
    std::size_t i = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), i);
    if (ec != std::errc() || ptr != text.data() + text.size() || i < 1 || i > vertex_count) {
      throw ShapeError("bad unit vector '" + std::string(text) + "'");
    }
    return DimVector::unit(vertex_count, i - 1);
  }
  std::vector<std::int64_t> coords;
  for (auto part : split_list(text)) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw ShapeError("bad vector entry '" + std::string(part) + "'");
    }
    coords.push_back(v);
  }
  if (coords.size() != vertex_count) {
    throw ShapeError("vector has " + std::to_string(coords.size()) + " entries, expected " +
                     std::to_string(vertex_count));
  }
  return DimVector(std::move(coords));
}

ReflectionWord parse_word(std::string_view text, std::size_t vertex_count) {
  std::vector<std::size_t> letters;
  for (auto part : split_list(text)) {
    if (!part.empty() && part.front() == 's') part.remove_prefix(1);
    std::size_t i = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), i);
    if (ec != std::errc() || ptr != part.data() + part.size() || i < 1 || i > vertex_count) {
      throw ShapeError("bad word letter '" + std::string(part) + "'");
    }
    letters.push_back(i - 1);
  }
  return ReflectionWord(std::move(letters));
}

}  // namespace qrep
