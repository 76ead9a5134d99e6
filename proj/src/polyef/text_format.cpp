#include "polyef/text_format.hpp"

#include "polyef/errors.hpp"

#include <fstream>
#include <sstream>

namespace polyef {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

class BlockReader {
public:
  explicit BlockReader(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
      ++number;
      auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos || raw[first] == '#') continue;
      Line line{number, {}};
      std::istringstream words(raw);
      std::string tok;
      while (words >> tok) line.tokens.push_back(tok);
      lines_.push_back(std::move(line));
    }
    last_line_ = number;
  }

  // Consumes "begin <kind>" and returns <kind>.
  std::string begin() {
    const Line& l = next("expected 'begin'");
    if (l.tokens.size() != 2 || l.tokens[0] != "begin") fail(l, "expected 'begin <kind>'");
    return l.tokens[1];
  }

  const Line& next(const char* what) {
    if (pos_ >= lines_.size()) throw ParseError(std::string("unexpected end of input: ") + what, last_line_);
    return lines_[pos_++];
  }

  bool at_end_keyword() const { return pos_ < lines_.size() && lines_[pos_].tokens.front() == "end"; }

  void finish() {
    const Line& l = next("missing 'end'");
    if (l.tokens.size() != 1 || l.tokens[0] != "end") fail(l, "expected 'end'");
    if (pos_ < lines_.size()) fail(lines_[pos_], "content after 'end'");
  }

  [[noreturn]] static void fail(const Line& l, const std::string& msg) { throw ParseError(msg, l.number); }

private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
};

Rational number(const Line& l, const std::string& tok) {
  try {
    return Rational::parse(tok);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), l.number);
  }
}

std::size_t count(const Line& l, const std::string& tok) {
  Rational r = number(l, tok);
  if (!r.is_integer() || r.sign() < 0) BlockReader::fail(l, "expected a nonnegative integer, got '" + tok + "'");
  return static_cast<std::size_t>(r.numerator().get_ui());
}

Vector numbers(const Line& l, std::size_t from, std::size_t to, std::size_t expected) {
  if (to - from != expected)
    BlockReader::fail(l, "expected " + std::to_string(expected) + " entries, found " + std::to_string(to - from));
  Vector v;
  for (std::size_t i = from; i < to; ++i) v.push_back(number(l, l.tokens[i]));
  return v;
}

std::size_t read_dim(BlockReader& in, const char* keyword) {
  const Line& l = in.next("missing dimension line");
  if (l.tokens.size() != 2 || l.tokens[0] != keyword) BlockReader::fail(l, std::string("expected '") + keyword + " <n>'");
  return count(l, l.tokens[1]);
}

HPolyhedron parse_h_body(BlockReader& in) {
  const std::size_t dim = read_dim(in, "dim");
  HPolyhedron h(dim);
  while (!in.at_end_keyword()) {
    const Line& l = in.next("missing 'end'");
    const std::string& rel = l.tokens[0];
    if (rel != "<=" && rel != "=" && rel != ">=") BlockReader::fail(l, "unknown relation '" + rel + "'");
    std::size_t bar = 0;
    for (std::size_t i = 1; i < l.tokens.size(); ++i)
      if (l.tokens[i] == "|") bar = i;
    if (bar == 0 || bar + 2 != l.tokens.size()) BlockReader::fail(l, "row must end with '| <rhs>'");
    Vector coeffs = numbers(l, 1, bar, dim);
    Rational rhs = number(l, l.tokens[bar + 1]);
    if (rel == "<=")
      h.add_le(std::move(coeffs), std::move(rhs));
    else if (rel == ">=")
      h.add_ge(coeffs, rhs);
    else
      h.add_eq(std::move(coeffs), std::move(rhs));
  }
  return h;
}

VPolyhedron parse_v_body(BlockReader& in) {
  const std::size_t dim = read_dim(in, "dim");
  std::vector<Vector> verts, rays, lin;
  std::size_t first_direction_line = 0;
  while (!in.at_end_keyword()) {
    const Line& l = in.next("missing 'end'");
    const std::string& kind = l.tokens[0];
    Vector g = numbers(l, 1, l.tokens.size(), dim);
    if (kind == "vertex") {
      verts.push_back(std::move(g));
    } else if (kind == "ray" || kind == "lineality") {
      if (!first_direction_line) first_direction_line = l.number;
      (kind == "ray" ? rays : lin).push_back(std::move(g));
    } else {
      BlockReader::fail(l, "unknown generator kind '" + kind + "'");
    }
  }
  if (verts.empty() && first_direction_line)
    throw ParseError("rays or lineality given without any vertex", first_direction_line);
  return VPolyhedron(dim, std::move(verts), std::move(rays), std::move(lin));
}

void append_numbers(std::string& out, const Vector& v) {
  for (const auto& x : v) {
    out += ' ';
    out += x.to_string();
  }
}

} // namespace

AnyPolyhedron parse_polyhedron(std::string_view text) {
  BlockReader in(text);
  std::string kind = in.begin();
  AnyPolyhedron result;
  if (kind == "h")
    result = parse_h_body(in);
  else if (kind == "v")
    result = parse_v_body(in);
  else
    throw ParseError("expected a polyhedron block ('begin h' or 'begin v'), found 'begin " + kind + "'", 1);
  in.finish();
  return result;
}

LinearMap parse_map(std::string_view text) {
  BlockReader in(text);
  if (in.begin() != "map") throw ParseError("expected 'begin map'", 1);
  const Line& dims = in.next("missing 'dims' line");
  if (dims.tokens.size() != 3 || dims.tokens[0] != "dims") BlockReader::fail(dims, "expected 'dims <target> <source>'");
  const std::size_t target = count(dims, dims.tokens[1]);
  const std::size_t source = count(dims, dims.tokens[2]);
  std::vector<Vector> rows;
  std::optional<Vector> offset;
  while (!in.at_end_keyword()) {
    const Line& l = in.next("missing 'end'");
    if (l.tokens[0] == "row") {
      if (rows.size() == target) BlockReader::fail(l, "more than " + std::to_string(target) + " rows");
      rows.push_back(numbers(l, 1, l.tokens.size(), source));
    } else if (l.tokens[0] == "offset") {
      if (offset) BlockReader::fail(l, "duplicate 'offset'");
      offset = numbers(l, 1, l.tokens.size(), target);
    } else {
      BlockReader::fail(l, "unknown map keyword '" + l.tokens[0] + "'");
    }
  }
  const Line& end = in.next("missing 'end'");
  if (rows.size() != target)
    BlockReader::fail(end, "expected " + std::to_string(target) + " rows, found " + std::to_string(rows.size()));
  if (end.tokens.size() != 1) BlockReader::fail(end, "expected 'end'");
  return LinearMap(RatMatrix::from_rows(rows, source), std::move(offset));
}

GraphL parse_graph(std::string_view text) {
  BlockReader in(text);
  if (in.begin() != "graph") throw ParseError("expected 'begin graph'", 1);
  const Line& dims = in.next("missing 'dims' line");
  if (dims.tokens.size() != 4 || dims.tokens[0] != "dims") BlockReader::fail(dims, "expected 'dims <m> <p> <q>'");
  const std::size_t m = count(dims, dims.tokens[1]);
  const std::size_t p = count(dims, dims.tokens[2]);
  const std::size_t q = count(dims, dims.tokens[3]);
  std::vector<Vector> b_rows, c_rows;
  std::optional<Vector> rhs;
  while (!in.at_end_keyword()) {
    const Line& l = in.next("missing 'end'");
    const std::string& key = l.tokens[0];
    if (key == "B-row") {
      if (b_rows.size() == m) BlockReader::fail(l, "more than " + std::to_string(m) + " B-rows");
      b_rows.push_back(numbers(l, 1, l.tokens.size(), p));
    } else if (key == "C-row") {
      if (c_rows.size() == m) BlockReader::fail(l, "more than " + std::to_string(m) + " C-rows");
      c_rows.push_back(numbers(l, 1, l.tokens.size(), q));
    } else if (key == "b") {
      if (rhs) BlockReader::fail(l, "duplicate 'b'");
      rhs = numbers(l, 1, l.tokens.size(), m);
    } else {
      BlockReader::fail(l, "unknown graph keyword '" + key + "'");
    }
  }
  const Line& end = in.next("missing 'end'");
  if (b_rows.size() != m || c_rows.size() != m || (!rhs && m > 0))
    BlockReader::fail(end, "graph needs " + std::to_string(m) + " B-rows, " + std::to_string(m) + " C-rows and a 'b' line");
  return GraphL(RatMatrix::from_rows(b_rows, p), RatMatrix::from_rows(c_rows, q), rhs.value_or(Vector{}));
}

std::string format_polyhedron(const HPolyhedron& h) {
  std::string out = "begin h\ndim " + std::to_string(h.dim()) + "\n";
  for (const auto& r : h.rows()) {
    out += r.rel == Relation::Equal ? "=  " : "<=";
    append_numbers(out, r.coeffs);
    out += " | " + r.rhs.to_string() + "\n";
  }
  return out + "end\n";
}

std::string format_polyhedron(const VPolyhedron& v) {
  std::string out;
  if (v.is_empty()) out += "# empty polyhedron\n";
  out += "begin v\ndim " + std::to_string(v.dim()) + "\n";
  for (const auto& p : v.vertices()) {
    out += "vertex";
    append_numbers(out, p);
    out += '\n';
  }
  for (const auto& r : v.rays()) {
    out += "ray";
    append_numbers(out, r);
    out += '\n';
  }
  for (const auto& l : v.lineality()) {
    out += "lineality";
    append_numbers(out, l);
    out += '\n';
  }
  return out + "end\n";
}

std::string format_polyhedron(const AnyPolyhedron& p) {
  return std::visit([](const auto& x) { return format_polyhedron(x); }, p);
}

std::string format_map(const LinearMap& m) {
  std::string out = "begin map\ndims " + std::to_string(m.target_dim()) + " " + std::to_string(m.source_dim()) + "\n";
  for (std::size_t r = 0; r < m.target_dim(); ++r) {
    out += "row";
    append_numbers(out, m.matrix().row(r));
    out += '\n';
  }
  if (m.offset()) {
    out += "offset";
    append_numbers(out, *m.offset());
    out += '\n';
  }
  return out + "end\n";
}

std::string format_graph(const GraphL& g) {
  std::string out = "begin graph\ndims " + std::to_string(g.rows()) + " " + std::to_string(g.x_dim()) + " " +
                    std::to_string(g.y_dim()) + "\n";
  for (std::size_t r = 0; r < g.rows(); ++r) {
    out += "B-row";
    append_numbers(out, g.b_mat.row(r));
    out += '\n';
  }
  for (std::size_t r = 0; r < g.rows(); ++r) {
    out += "C-row";
    append_numbers(out, g.c_mat.row(r));
    out += '\n';
  }
  out += "b";
  append_numbers(out, g.rhs);
  return out + "\nend\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace polyef
