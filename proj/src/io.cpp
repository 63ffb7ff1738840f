#include "matreg/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "matreg/error.hpp"

namespace matreg {

namespace {

struct Line {
  int number = 0;
  std::string_view text;  // comment stripped, raw columns preserved
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
    bool blank = true;
    for (char ch : raw) blank = blank && std::isspace(static_cast<unsigned char>(ch));
    if (!blank) out.push_back({number, raw});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

class Cursor {
 public:
  Cursor(const Line& line) : line_(line) {}

  int column() const { return static_cast<int>(pos_) + 1; }
  bool done() {
    skip_space();
    return pos_ >= line_.text.size();
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_.number, column(), what); }

  void skip_space() {
    while (pos_ < line_.text.size() && std::isspace(static_cast<unsigned char>(line_.text[pos_]))) ++pos_;
  }
  bool peek(char ch) {
    skip_space();
    return pos_ < line_.text.size() && line_.text[pos_] == ch;
  }
  void expect(char ch) {
    if (!peek(ch)) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  void expect_word(std::string_view word) {
    skip_space();
    if (line_.text.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }
  int integer() {
    skip_space();
    int value = 0;
    const char* first = line_.text.data() + pos_;
    const char* last = line_.text.data() + line_.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }
  void finish() {
    if (!done()) fail("unexpected trailing text");
  }

  /// `{i j k} {..} ...` up to the end of the line.
  std::vector<ElementSet> set_list(int n) {
    std::vector<ElementSet> sets;
    while (!done()) {
      expect('{');
      ElementSet s;
      while (!peek('}')) {
        if (done()) fail("unterminated '{'");
        const int col = column();
        const int e = integer();
        if (e < 1 || e > n) throw ParseError(line_.number, col, "element " + std::to_string(e) + " out of range 1.." + std::to_string(n));
        s = s.with(e);
      }
      expect('}');
      sets.push_back(s);
    }
    return sets;
  }

 private:
  const Line& line_;
  std::size_t pos_ = 0;
};

const Line& line_at(const std::vector<Line>& lines, std::size_t i, std::string_view what) {
  if (i >= lines.size()) {
    const int last = lines.empty() ? 1 : lines.back().number + 1;
    throw ParseError(last, 1, "missing " + std::string(what));
  }
  return lines[i];
}

void expect_header(const std::vector<Line>& lines, std::string_view header) {
  Cursor c(line_at(lines, 0, "header"));
  c.expect_word(header);
  c.expect_word("v1");
  c.finish();
}

int keyed_integer(const Line& line, std::string_view key, int lo, int hi) {
  Cursor c(line);
  c.expect_word(key);
  c.expect('=');
  const int col = c.column() + 1;
  const int v = c.integer();
  c.finish();
  if (v < lo || v > hi) throw ParseError(line.number, col, std::string(key) + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  return v;
}

void no_extra_lines(const std::vector<Line>& lines, std::size_t used) {
  if (lines.size() > used) throw ParseError(lines[used].number, 1, "unexpected extra line");
}

std::string set_list_text(const std::vector<ElementSet>& sets) {
  std::string s;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) s += ' ';
    s += sets[i].to_string();
  }
  return s;
}

}  // namespace

Matroid parse_matroid(std::string_view text) {
  const auto lines = content_lines(text);
  expect_header(lines, "matroid");
  const int n = keyed_integer(line_at(lines, 1, "'n = ...'"), "n", 1, kMaxGround);
  Cursor c(line_at(lines, 2, "'bases = ...'"));
  c.expect_word("bases");
  c.expect('=');
  const auto bases = c.set_list(n);
  no_extra_lines(lines, 3);
  return from_bases(n, bases);
}

Graph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  expect_header(lines, "graph");
  Graph g;
  g.vertex_count = keyed_integer(line_at(lines, 1, "'vertices = ...'"), "vertices", 1, 1 << 20);
  Cursor c(line_at(lines, 2, "'edges = ...'"));
  c.expect_word("edges");
  c.expect('=');
  while (!c.done()) {
    const int col = c.column();
    const int a = c.integer();
    c.expect('-');
    const int b = c.integer();
    if (a < 1 || b < 1 || a > g.vertex_count || b > g.vertex_count) c.fail("endpoint out of range");
    if (a == b) throw ParseError(lines[2].number, col, "self-loop " + std::to_string(a) + "-" + std::to_string(b));
    g.edges.emplace_back(a, b);
  }
  no_extra_lines(lines, 3);
  if (g.edge_count() > kMaxGround) throw Error(ErrorKind::TooLarge, std::to_string(g.edge_count()) + " edges");
  return g;
}

SimplicialComplex parse_complex(std::string_view text) {
  const auto lines = content_lines(text);
  expect_header(lines, "complex");
  const int n = keyed_integer(line_at(lines, 1, "'vertices = ...'"), "vertices", 0, kMaxGround);
  Cursor c(line_at(lines, 2, "'facets = ...'"));
  c.expect_word("facets");
  c.expect('=');
  auto facets = c.set_list(n);
  no_extra_lines(lines, 3);
  return SimplicialComplex(n, std::move(facets));
}

Record parse_record(std::string_view text) {
  const auto lines = content_lines(text);
  const Line& first = line_at(lines, 0, "header");
  if (first.text.find("matroid") != std::string_view::npos) return parse_matroid(text);
  if (first.text.find("graph") != std::string_view::npos) return parse_graph(text);
  if (first.text.find("complex") != std::string_view::npos) return parse_complex(text);
  throw ParseError(first.number, 1, "unknown record type");
}

std::string format_matroid(const Matroid& m) {
  return "matroid v1\nn = " + std::to_string(m.ground_size()) + "\nbases = " + set_list_text(m.bases()) + "\n";
}

std::string format_graph(const Graph& g) {
  std::string s = "graph v1\nvertices = " + std::to_string(g.vertex_count) + "\nedges =";
  for (const auto& [a, b] : g.edges) s += " " + std::to_string(a) + "-" + std::to_string(b);
  return s + "\n";
}

std::string format_complex(const SimplicialComplex& c) {
  return "complex v1\nvertices = " + std::to_string(c.vertex_count()) + "\nfacets = " + set_list_text(c.facets()) + "\n";
}

std::string canonical_hash(const Matroid& m) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : format_matroid(m)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace matreg
