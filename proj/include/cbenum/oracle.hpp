#ifndef CBENUM_ORACLE_HPP
#define CBENUM_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cbenum/graph.hpp"

// Exhaustive reference implementations. Nothing here touches the
// elimination or weak-simplicial code paths.
namespace cbenum::oracle {

inline constexpr std::size_t kDefaultGuard = 20;

/// Some chordless cycle of G[X] with at least `min_length` vertices, or
/// nullopt. Exponential in the worst case; starts from the smallest vertex
/// and explores neighbors in ascending order.
std::optional<std::vector<Vertex>> find_chordless_cycle(const Graph& g, const VertexSet& x,
                                                        std::size_t min_length);

/// Bipartite and no chordless cycle of length >= 6.
/// Throws InputError when |X| exceeds `guard`.
bool is_chordal_bipartite_bruteforce(const Graph& g, const VertexSet& x,
                                     std::size_t guard = kDefaultGuard);

/// Every X ⊆ V (∅ included) with G[X] chordal bipartite, in increasing
/// bitmask order. Throws InputError when n exceeds `guard`.
std::vector<VertexSet> brute_enumerate(const Graph& g, std::size_t guard = kDefaultGuard);

}  // namespace cbenum::oracle

#endif  // CBENUM_ORACLE_HPP
