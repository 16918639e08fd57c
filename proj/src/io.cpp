#include "maxleaf/io.hpp"

#include <fstream>
#include <sstream>

#include "maxleaf/errors.hpp"

namespace maxleaf {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line split into exactly `count` integers.
  std::vector<long long> numbers(std::size_t count, const char* what) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      const auto first = text.find_first_not_of(" \t\r");
      if (first == std::string::npos || text[first] == '#') continue;
      std::istringstream ss(text);
      std::vector<long long> values;
      long long x = 0;
      while (ss >> x) values.push_back(x);
      ss.clear();
      std::string junk;
      if (ss >> junk) throw ParseError(line_, std::string("unexpected token '") + junk + "' in " + what);
      if (values.size() != count) {
        throw ParseError(line_, std::string("expected ") + std::to_string(count) + " integers in " + what);
      }
      return values;
    }
    throw ParseError(line_ + 1, std::string("unexpected end of input, expected ") + what);
  }

  void expect_end() {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      const auto first = text.find_first_not_of(" \t\r");
      if (first != std::string::npos && text[first] != '#') throw ParseError(line_, "trailing content");
    }
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

void check_vertex(long long v, long long n, int line, const char* role) {
  if (v < 0 || v >= n) {
    throw ParseError(line, std::string(role) + " " + std::to_string(v) + " out of range");
  }
}

}  // namespace

RootedDigraph read_graph(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.numbers(3, "header 'n m r'");
  const long long n = header[0];
  const long long m = header[1];
  if (n < 1 || n > 1'000'000) throw ParseError(reader.line(), "vertex count out of range");
  if (m < 0) throw ParseError(reader.line(), "negative arc count");
  check_vertex(header[2], n, reader.line(), "root");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const auto a = reader.numbers(2, "arc 'u v'");
    check_vertex(a[0], n, reader.line(), "tail");
    check_vertex(a[1], n, reader.line(), "head");
    if (a[0] == a[1]) throw ParseError(reader.line(), "loop at " + std::to_string(a[0]));
    arcs.push_back({static_cast<Vertex>(a[0]), static_cast<Vertex>(a[1])});
  }
  reader.expect_end();
  return RootedDigraph::build(static_cast<int>(n), static_cast<Vertex>(header[2]), arcs);
}

void write_graph(std::ostream& out, const RootedDigraph& d) {
  out << d.vertex_count() << ' ' << d.arc_count() << ' ' << d.root() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

Outbranching read_tree(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.numbers(2, "header 'n r'");
  const long long n = header[0];
  if (n < 1 || n > 1'000'000) throw ParseError(reader.line(), "vertex count out of range");
  check_vertex(header[1], n, reader.line(), "root");
  std::vector<Vertex> parent(static_cast<std::size_t>(n), kNoVertex);
  for (long long i = 0; i + 1 < n; ++i) {
    const auto a = reader.numbers(2, "tree arc 'child parent'");
    check_vertex(a[0], n, reader.line(), "child");
    check_vertex(a[1], n, reader.line(), "parent");
    if (a[0] == header[1]) throw ParseError(reader.line(), "root listed as a child");
    if (parent[a[0]] != kNoVertex) throw ParseError(reader.line(), "vertex " + std::to_string(a[0]) + " listed twice");
    parent[a[0]] = static_cast<Vertex>(a[1]);
  }
  reader.expect_end();
  return Outbranching(static_cast<Vertex>(header[1]), std::move(parent));
}

void write_tree(std::ostream& out, const Outbranching& t) {
  out << t.vertex_count() << ' ' << t.root() << '\n';
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (v != t.root()) out << v << ' ' << t.parent(v) << '\n';
  }
}

RootedDigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_graph(in);
}

Outbranching load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_tree(in);
}

void save_graph(const std::string& path, const RootedDigraph& d) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_graph(out, d);
}

void save_tree(const std::string& path, const Outbranching& t) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_tree(out, t);
}

}  // namespace maxleaf
