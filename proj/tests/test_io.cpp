#include "doctest.h"

#include <sstream>

#include "cbenum/generators.hpp"
#include "cbenum/io.hpp"

using namespace cbenum;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return io::parse_graph(in);
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse_graph") {
  const Graph g = parse("# a square\n4 4\n1 2\n2 3\n\n3 4\n  # mid comment\n4 1\n");
  CHECK(g == gen::cycle_graph(4));
  CHECK(parse("0 0\n").num_vertices() == 0);
  CHECK(parse("3 0\n").num_edges() == 0);
}

TEST_CASE("parse_graph errors carry line numbers") {
  CHECK(error_of("") == "missing header \"n m\"");
  CHECK(error_of("3 1\n1 1\n") == "line 2: self-loop at vertex 1");
  CHECK(error_of("3 1\n1 4\n") == "line 2: endpoint outside [1, 3]");
  CHECK(error_of("3 1\n1 x\n") == "line 2: expected an edge \"u v\"");
  CHECK(error_of("3\n") == "line 1: expected a header \"n m\"");
  CHECK(error_of("3 1\n1 2\n2 3\n") == "line 3: more edges than the header's m = 1");
  CHECK(error_of("3 2\n1 2\n") == "header announces 2 edges but 1 were given");
  CHECK(error_of("3 2\n1 2\n2 1\n") == "duplicate edge {1, 2}");
  CHECK(error_of("3 1\n-1 2\n") == "line 2: expected an edge \"u v\"");
  CHECK_THROWS_AS(io::read_graph_file("/nonexistent/graph.txt"), InputError);
}

TEST_CASE("graph round trip") {
  gen::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Graph g = gen::random_gnp(1 + i % 10, 0.4, rng);
    std::ostringstream out;
    io::write_graph(out, g);
    CHECK(parse(out.str()) == g);
  }
}

TEST_CASE("write_solution") {
  std::ostringstream out;
  io::write_solution(out, std::vector<Vertex>{});
  io::write_solution(out, std::vector<Vertex>{1, 5, 7});
  CHECK(out.str() == "\n1 5 7\n");
}

TEST_CASE("hypergraph parsing") {
  std::istringstream in("# triangle\na b\nb c\n\nc a\nb a\n");
  std::vector<std::string> warnings;
  const Hypergraph h = io::parse_hypergraph(in, &warnings);
  CHECK(h.num_edges() == 3);
  CHECK(h.universe() == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0] == "collapsed 1 duplicate hyperedge(s)");

  std::ostringstream out;
  io::write_hypergraph(out, h);
  std::istringstream back(out.str());
  const Hypergraph again = io::parse_hypergraph(back);
  CHECK(again.edges() == h.edges());
  CHECK(again.universe() == h.universe());
}
