#include "cbenum/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cbenum::io {

namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

// Reads exactly two non-negative integers from `line`.
bool two_numbers(const std::string& line, unsigned long long& a, unsigned long long& b) {
  std::istringstream ss(line);
  std::string x;
  std::string y;
  std::string extra;
  if (!(ss >> x >> y) || (ss >> extra)) return false;
  try {
    std::size_t used = 0;
    if (x.find('-') != std::string::npos || y.find('-') != std::string::npos) return false;
    a = std::stoull(x, &used);
    if (used != x.size()) return false;
    b = std::stoull(y, &used);
    if (used != y.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  unsigned long long n = 0;
  unsigned long long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    unsigned long long a = 0;
    unsigned long long b = 0;
    if (!two_numbers(line, a, b)) {
      fail(line_no, have_header ? "expected an edge \"u v\"" : "expected a header \"n m\"");
    }
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (edges.size() == m) fail(line_no, "more edges than the header's m = " + std::to_string(m));
    if (a < 1 || a > n || b < 1 || b > n) fail(line_no, "endpoint outside [1, " + std::to_string(n) + "]");
    if (a == b) fail(line_no, "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw InputError("missing header \"n m\"");
  if (edges.size() != m) {
    throw InputError("header announces " + std::to_string(m) + " edges but " +
                     std::to_string(edges.size()) + " were given");
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Hypergraph parse_hypergraph(std::istream& in, std::vector<std::string>* warnings) {
  std::vector<std::vector<std::string>> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    std::istringstream ss(line);
    std::vector<std::string> labels;
    for (std::string tok; ss >> tok;) labels.push_back(tok);
    edges.push_back(std::move(labels));
  }
  Hypergraph h = Hypergraph::from_edges(edges);
  if (warnings && h.duplicates_dropped() > 0) {
    warnings->push_back("collapsed " + std::to_string(h.duplicates_dropped()) +
                        " duplicate hyperedge(s)");
  }
  return h;
}

Hypergraph read_hypergraph_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_hypergraph(in, warnings);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << h.label(e[i]);
    out << '\n';
  }
}

void write_solution(std::ostream& out, std::span<const Vertex> sorted_members) {
  for (std::size_t i = 0; i < sorted_members.size(); ++i) {
    if (i) out << ' ';
    out << sorted_members[i];
  }
  out << '\n';
}

}  // namespace cbenum::io
