#ifndef CBENUM_IO_HPP
#define CBENUM_IO_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cbenum/graph.hpp"
#include "cbenum/hypergraph.hpp"

namespace cbenum::io {

/// Graph text format:
///
///     # comment lines start with '#'
///     n m
///     u v      (m lines, 1 <= u, v <= n)
///
/// Throws InputError (with a line number) on malformed input, self-loops,
/// duplicate edges, out-of-range endpoints or an edge count that does not
/// match the header.
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

/// Canonical form: header, then edges with u < v in lexicographic order.
void write_graph(std::ostream& out, const Graph& g);

/// One hyperedge per non-comment line, whitespace-separated labels. Blank
/// lines are skipped. Collapsed duplicate edges are reported in `warnings`.
Hypergraph parse_hypergraph(std::istream& in, std::vector<std::string>* warnings = nullptr);
Hypergraph read_hypergraph_file(const std::string& path,
                                std::vector<std::string>* warnings = nullptr);

void write_hypergraph(std::ostream& out, const Hypergraph& h);

/// Ascending, space-separated, newline-terminated. The empty set is an empty line.
void write_solution(std::ostream& out, std::span<const Vertex> sorted_members);

}  // namespace cbenum::io

#endif  // CBENUM_IO_HPP
