#ifndef CBENUM_WEAK_SIMPLICIAL_HPP
#define CBENUM_WEAK_SIMPLICIAL_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cbenum/graph.hpp"
#include "cbenum/ordering.hpp"

namespace cbenum {

/// Vertex set ordered by a Ranking. Insert/erase are logarithmic and the
/// maximum-rank member is available in constant time. The Ranking must
/// outlive the set.
template <class Tag>
class RankedSet {
 public:
  explicit RankedSet(const Ranking& r) : ranking_(&r) {}
  RankedSet(const Ranking& r, const VertexSet& members) : ranking_(&r) {
    for (Vertex v : members) insert(v);
  }

  void insert(Vertex v) { ranks_.insert(ranking_->rank(v)); }
  void erase(Vertex v) { ranks_.erase(ranking_->rank(v)); }
  bool contains(Vertex v) const { return ranks_.count(ranking_->rank(v)) != 0; }
  bool empty() const { return ranks_.empty(); }
  std::size_t size() const { return ranks_.size(); }

  std::optional<Vertex> max() const {
    if (ranks_.empty()) return std::nullopt;
    return ranking_->vertex_at(*ranks_.rbegin());
  }

  /// Members in ascending rank.
  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(ranks_.size());
    for (auto r : ranks_) out.push_back(ranking_->vertex_at(r));
    return out;
  }

  /// Members in ascending identity.
  VertexSet sorted_by_id() const {
    auto out = members();
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::set<std::uint32_t>& ranks() const { return ranks_; }
  const Ranking& ranking() const { return *ranking_; }

  friend bool operator==(const RankedSet& a, const RankedSet& b) { return a.ranks_ == b.ranks_; }

 private:
  const Ranking* ranking_;
  std::set<std::uint32_t> ranks_;
};

/// Weak-simplicial vertices of G[X].
using WsSet = RankedSet<struct WsTag>;
/// Vertices outside X that are weak-simplicial once added to X.
using AwsSet = RankedSet<struct AwsTag>;

/// Raised when a bipartite-only routine receives a graph with an odd cycle.
class NotBipartiteError : public std::runtime_error {
 public:
  explicit NotBipartiteError(std::vector<Vertex> cycle);
  const std::vector<Vertex>& odd_cycle() const { return cycle_; }

 private:
  std::vector<Vertex> cycle_;
};

/// N_X(v) is independent and totally ordered by inclusion of neighborhoods
/// in G[X]. Throws InputError if v is not in X.
bool is_weak_simplicial(const Graph& g, const VertexSet& x, Vertex v);

/// Every same-side pair of G[X] has comparable neighborhoods.
/// Throws NotBipartiteError when G[X] has an odd cycle.
bool is_bipartite_chain(const Graph& g, const VertexSet& x);

/// Chain test on G[N^{1:2}_X[v]]; agrees with `is_weak_simplicial` whenever
/// G[X] is chordal bipartite.
bool is_weak_simplicial_via_chain(const Graph& g, const VertexSet& x, Vertex v);

WsSet compute_ws(const Graph& g, const VertexSet& x, const Ranking& r);
AwsSet compute_aws(const Graph& g, const VertexSet& x, const Ranking& r);

// The incremental routines below require G[X] chordal bipartite and
// v in AWS(X). Those preconditions are not checked.

/// Members of WS(X) that stop being weak-simplicial once v joins X.
VertexSet delta_ws(const Graph& g, const VertexSet& x, Vertex v, const WsSet& ws);
/// Members of AWS(X) that stop being addable once v joins X.
VertexSet delta_aws(const Graph& g, const VertexSet& x, Vertex v, const AwsSet& aws);

/// WS(X ∪ {v}) = (WS(X) \ delta_ws) ∪ {v}.
WsSet update_ws(const Graph& g, const VertexSet& x, Vertex v, const WsSet& ws, const Ranking& r);
/// AWS(X ∪ {v}) = AWS(X) \ delta_aws \ {v}.
AwsSet update_aws(const Graph& g, const VertexSet& x, Vertex v, const AwsSet& aws,
                  const Ranking& r);

/// Mask-based core shared by the pure functions above and the enumerator.
/// Holds scratch buffers, so one instance per thread.
class WsKernel {
 public:
  explicit WsKernel(const Graph& g);

  bool weak_simplicial(const VertexMask& x, Vertex v);

  /// Appends delta_ws(X, v) to `out`. `x` must not contain v; it is
  /// temporarily modified and restored before returning.
  void delta_ws(VertexMask& x, Vertex v, const VertexMask& ws, std::vector<Vertex>& out);
  /// Appends delta_aws(X, v) to `out`; same contract on `x`.
  void delta_aws(VertexMask& x, Vertex v, const VertexMask& aws, std::vector<Vertex>& out);

 private:
  const Graph* g_;
  StampSet compare_scratch_;
  StampSet marks_;
  StampSet adjacent_to_v_;
  StampSet seen_;
  std::vector<Vertex> nbrs_;
  std::vector<std::pair<std::size_t, Vertex>> by_degree_;
};

}  // namespace cbenum

#endif  // CBENUM_WEAK_SIMPLICIAL_HPP
