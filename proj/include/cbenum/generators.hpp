#ifndef CBENUM_GENERATORS_HPP
#define CBENUM_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cbenum/graph.hpp"
#include "cbenum/hypergraph.hpp"

namespace cbenum::gen {

using Rng = std::mt19937_64;

Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Sides 1..a and a+1..a+b.
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Center 1, leaves 2..leaves+1.
Graph star_graph(std::size_t leaves);
/// Row-major, vertex (i, j) is i * cols + j + 1.
Graph grid_graph(std::size_t rows, std::size_t cols);
/// Path 1..n with a pendant vertex n+i hanging off vertex i.
Graph path_with_pendants(std::size_t n);
/// Cycle 1..n with a pendant vertex n+i hanging off vertex i.
Graph cycle_with_pendants(std::size_t n);

/// Erdős–Rényi G(n, p).
Graph random_gnp(std::size_t n, double p, Rng& rng);
/// Random edges inserted in shuffled order, skipping any that would push a
/// degree above `max_degree`.
Graph random_bounded_degree(std::size_t n, std::size_t max_degree, double p, Rng& rng);
/// Random bipartite graph with sides 1..a and a+1..a+b.
Graph random_bipartite(std::size_t a, std::size_t b, double p, Rng& rng);
/// Bipartite chain graph: left vertex i is adjacent to right vertices
/// 1..t_i with non-decreasing thresholds t_i (then sides are shuffled).
Graph random_chain_graph(std::size_t a, std::size_t b, Rng& rng);

/// Random hypergraph on labels v1..v<num_vertices> with up to `num_edges`
/// non-empty edges (duplicates collapse).
Hypergraph random_hypergraph(std::size_t num_vertices, std::size_t num_edges, Rng& rng);

}  // namespace cbenum::gen

#endif  // CBENUM_GENERATORS_HPP
