#ifndef CBENUM_ORDERING_HPP
#define CBENUM_ORDERING_HPP

#include <cstdint>
#include <vector>

#include "cbenum/graph.hpp"

namespace cbenum {

/// Total order on vertices. Position 0 is reserved as a sentinel that
/// compares below every vertex.
class Ranking {
 public:
  Ranking() = default;

  /// `order[i]` is the vertex of rank i + 1. Throws InputError unless
  /// `order` is a permutation of 1..order.size().
  Ranking(std::vector<Vertex> order, std::uint32_t degeneracy);

  std::size_t size() const { return order_.size() - 1; }
  std::uint32_t rank(Vertex v) const { return rank_[v]; }
  Vertex vertex_at(std::uint32_t r) const { return order_[r]; }

  /// Largest number of lower-ranked neighbors any vertex has when this
  /// ranking came from `degeneracy_ranking`; see `natural_ranking` too.
  std::uint32_t degeneracy() const { return k_; }

  /// Vertices in ascending rank.
  std::vector<Vertex> order() const { return {order_.begin() + 1, order_.end()}; }

  bool less(Vertex a, Vertex b) const { return rank_[a] < rank_[b]; }

 private:
  std::vector<std::uint32_t> rank_ = std::vector<std::uint32_t>(1, 0);
  std::vector<Vertex> order_ = std::vector<Vertex>(1, 0);
  std::uint32_t k_ = 0;
};

/// Bucket peeling: repeatedly removes a minimum-degree vertex (smallest
/// identity on ties). The i-th removed vertex gets rank n - i + 1, so every
/// vertex has at most k lower-ranked neighbors.
Ranking degeneracy_ranking(const Graph& g);

/// rank(v) = v; k is the maximum number of smaller-identity neighbors.
Ranking natural_ranking(const Graph& g);

/// max over v of |{u in N(v) : rank(u) < rank(v)}|.
std::uint32_t max_lower_neighbors(const Graph& g, const Ranking& r);

}  // namespace cbenum

#endif  // CBENUM_ORDERING_HPP
