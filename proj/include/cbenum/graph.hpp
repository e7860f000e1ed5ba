#ifndef CBENUM_GRAPH_HPP
#define CBENUM_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cbenum {

/// Vertex identities are 1-based; 0 is never a valid vertex.
using Vertex = std::uint32_t;

/// Vertex subset, kept sorted ascending by identity unless stated otherwise.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed arguments: out-of-range vertices, violated
/// preconditions that are cheap to check, bad input files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 1..n with sorted adjacency.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on self-loops, duplicate edges or endpoints outside [1, n].
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return m_; }
  std::size_t max_degree() const { return max_degree_; }

  bool contains(Vertex v) const { return v >= 1 && v <= n_; }
  void check_vertex(Vertex v) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// All vertices 1..n.
  VertexSet vertices() const;
  /// Edge list with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t max_degree_ = 0;
  std::vector<std::vector<Vertex>> adj_ = std::vector<std::vector<Vertex>>(1);
};

/// Dense membership bitmap over 0..n, used for fast "v in X" tests.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(std::size_t n) : bits_(n + 1, 0) {}
  VertexMask(std::size_t n, std::span<const Vertex> members);

  bool contains(Vertex v) const { return v < bits_.size() && bits_[v] != 0; }
  void insert(Vertex v) { bits_[v] = 1; }
  void erase(Vertex v) { bits_[v] = 0; }

 private:
  std::vector<std::uint8_t> bits_;
};

/// Generation-stamped marker: O(1) clear, O(1) mark/test.
class StampSet {
 public:
  StampSet() = default;
  explicit StampSet(std::size_t n) : stamp_(n + 1, 0) {}

  void resize(std::size_t n) { stamp_.assign(n + 1, 0), epoch_ = 1; }
  void clear() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  void mark(Vertex v) { stamp_[v] = epoch_; }
  bool marked(Vertex v) const { return stamp_[v] == epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
};

/// Relation of N_X(u) to N_X(v).
enum class Comparability { Subset, Superset, Equal, Incomparable };

std::string to_string(Comparability c);

/// True when the relation is one of Subset, Superset, Equal.
inline bool comparable(Comparability c) { return c != Comparability::Incomparable; }

/// Sorts and removes duplicates; throws InputError on out-of-range members.
VertexSet normalize_set(const Graph& g, VertexSet x);

/// N(v) ∩ X, ascending.
VertexSet neighbors_in(const Graph& g, const VertexSet& x, Vertex v);

/// Vertices of X at distance 1 or 2 from v inside G[X ∪ {v}]; v itself is
/// included iff `closed`.
VertexSet neighbors_within_2(const Graph& g, const VertexSet& x, Vertex v, bool closed);

/// Distance 1 or 2 from v in the whole graph.
VertexSet ambient_neighbors_within_2(const Graph& g, Vertex v, bool closed);

/// Throws InputError if u == v.
Comparability compare_neighborhoods(const Graph& g, const VertexSet& x, Vertex u, Vertex v);

struct BipartiteCheck {
  bool bipartite = true;
  /// Color classes (per component, the smallest vertex gets `left`).
  VertexSet left;
  VertexSet right;
  /// Chordless odd cycle when not bipartite, starting at its smallest vertex.
  std::vector<Vertex> odd_cycle;

  explicit operator bool() const { return bipartite; }
};

BipartiteCheck is_bipartite(const Graph& g, const VertexSet& x);

/// Graph induced by X, relabelled 1..|X| in ascending order of X.
Graph induced_subgraph(const Graph& g, const VertexSet& x);

namespace detail {

/// N(v) ∩ mask, ascending.
void neighbors_in(const Graph& g, const VertexMask& x, Vertex v, std::vector<Vertex>& out);
std::size_t degree_in(const Graph& g, const VertexMask& x, Vertex v);

/// Compares N_X(u) and N_X(v); `scratch` must be sized for g.
Comparability compare(const Graph& g, const VertexMask& x, Vertex u, Vertex v,
                      StampSet& scratch);

/// Rotates a cycle so it starts at its minimum vertex and continues toward
/// the smaller of the two adjacent entries.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);

}  // namespace detail

}  // namespace cbenum

#endif  // CBENUM_GRAPH_HPP
