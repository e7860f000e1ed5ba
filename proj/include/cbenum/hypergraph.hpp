#ifndef CBENUM_HYPERGRAPH_HPP
#define CBENUM_HYPERGRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cbenum/graph.hpp"

namespace cbenum {

/// Hypergraph over string labels. Hyperedges are stored as ascending lists of
/// universe indices, without duplicates.
class Hypergraph {
 public:
  using Hyperedge = std::vector<std::uint32_t>;

  Hypergraph() = default;
  /// Throws InputError when an edge mentions a label outside the universe or
  /// the universe repeats a label. Duplicate edges are dropped, and
  /// `duplicates_dropped()` reports how many.
  Hypergraph(std::vector<std::string> universe, const std::vector<std::vector<std::string>>& edges);

  /// Universe in order of first appearance.
  static Hypergraph from_edges(const std::vector<std::vector<std::string>>& edges);

  std::size_t num_vertices() const { return universe_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const std::string& label(std::uint32_t i) const { return universe_[i]; }
  std::size_t duplicates_dropped() const { return duplicates_; }

  /// Throws InputError for unknown labels.
  std::uint32_t index_of(const std::string& label) const;

  /// Indices of the edges containing vertex i.
  std::vector<std::size_t> incident_edges(std::uint32_t i) const;

  /// Residual hypergraph without vertex i: i is removed from the universe and
  /// from every edge; emptied and duplicate edges are dropped.
  Hypergraph without(std::uint32_t i) const;

 private:
  Hypergraph(std::vector<std::string> universe, std::vector<Hyperedge> edges, int);

  std::vector<std::string> universe_;
  std::vector<Hyperedge> edges_;
  std::size_t duplicates_ = 0;
};

/// Bipartite incidence graph: universe index i is vertex i + 1, edge j is
/// vertex num_vertices + j + 1.
struct IncidenceGraph {
  Graph graph;
  std::size_t left_size = 0;   // hypergraph vertices
  std::size_t right_size = 0;  // hyperedges

  Vertex vertex_node(std::uint32_t i) const { return static_cast<Vertex>(i + 1); }
  Vertex edge_node(std::size_t j) const { return static_cast<Vertex>(left_size + j + 1); }
};

IncidenceGraph incidence_graph(const Hypergraph& h);

/// The edges containing `label` are totally ordered by inclusion.
bool is_beta_leaf(const Hypergraph& h, const std::string& label);

/// Greedy elimination, taking the first beta-leaf in universe order each
/// round. nullopt when a non-empty residue has no beta-leaf.
std::optional<std::vector<std::string>> beta_elimination_ordering(const Hypergraph& h);

/// How to read the pure-cycle condition in the exhaustive beta-cycle search.
enum class CycleReading {
  /// After subtracting the common intersection, edges meet iff they are
  /// cyclically consecutive (the standard beta-cycle notion).
  Strict,
  /// Only consecutive edges are required to meet. Known to flag some
  /// beta-acyclic hypergraphs as cyclic; kept for comparison.
  Literal,
};

/// Exhaustive search over sequences of distinct edges of length >= 3.
/// Returns the edge indices of a beta-cycle, if any. Throws InputError when
/// the hypergraph has more than `guard` edges.
std::optional<std::vector<std::size_t>> find_beta_cycle(const Hypergraph& h,
                                                        CycleReading reading = CycleReading::Strict,
                                                        std::size_t guard = 8);

enum class AcyclicityMethod { Incidence, Elimination, Brute };

bool is_beta_acyclic(const Hypergraph& h, AcyclicityMethod method = AcyclicityMethod::Incidence);

/// (is_beta_leaf(h, label), weak-simplicial status of the label's node in the
/// incidence graph). The two always agree.
std::pair<bool, bool> beta_leaf_weak_simplicial_bridge(const Hypergraph& h,
                                                       const std::string& label);

/// Two vertices are neighbors when some edge other than the full universe
/// contains both.
bool are_neighbors_ignoring_universe_edge(const Hypergraph& h, std::uint32_t a, std::uint32_t b);

}  // namespace cbenum

#endif  // CBENUM_HYPERGRAPH_HPP
