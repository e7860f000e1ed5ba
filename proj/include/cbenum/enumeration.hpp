#ifndef CBENUM_ENUMERATION_HPP
#define CBENUM_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cbenum/graph.hpp"
#include "cbenum/ordering.hpp"
#include "cbenum/weak_simplicial.hpp"

namespace cbenum {

/// pv of the root state; rank 0, below every vertex.
inline constexpr Vertex kRootSentinel = 0;

/// One node of the family tree: a solution X with WS(X), AWS(X) and the
/// vertex whose removal gives the parent.
struct EnumState {
  VertexSet x;  // ascending identity
  WsSet ws;
  AwsSet aws;
  Vertex pv = kRootSentinel;
};

/// Root state: X = ∅, WS = ∅, AWS = V, sentinel pv.
EnumState root_state(const Graph& g, const Ranking& r);

/// (X \ {p}, p) where p is the maximum-rank weak-simplicial vertex of G[X].
/// Throws InputError for X = ∅ and std::logic_error when WS(X) is empty.
std::pair<VertexSet, Vertex> parent_of(const Graph& g, const VertexSet& x, const Ranking& r);

/// Members of AWS(X) ranked at or above pv(X), plus members of AWS(X) within
/// distance 2 of pv(X) in the whole graph. Ascending rank.
std::vector<Vertex> candidate_set(const Graph& g, const EnumState& st, const Ranking& r);

/// The child state for X ∪ {v} if v is its parent vertex, otherwise nullopt.
std::optional<EnumState> try_child(const Graph& g, const EnumState& st, Vertex v,
                                   const Ranking& r);

/// What the sink sees for each emitted solution. Views are valid only for the
/// duration of the callback.
struct StateView {
  std::span<const Vertex> members;  // insertion order (root to leaf)
  const WsSet& ws;
  const AwsSet& aws;
  Vertex pv;
  std::size_t depth;

  VertexSet sorted() const;
};

using SolutionSink = std::function<void(const StateView&)>;

struct EnumStats {
  std::uint64_t solutions = 0;
  std::uint64_t candidate_attempts = 0;
  std::uint64_t rejected = 0;
  std::size_t max_depth = 0;
  /// max over states of |cand(X)| - |ch(X)|
  std::uint64_t max_waste = 0;
  bool limit_reached = false;
};

struct EnumOptions {
  std::optional<std::uint64_t> limit;
  /// Called after each state's children are exhausted:
  /// (state size, |cand(X)|, |ch(X)|).
  std::function<void(std::size_t, std::size_t, std::size_t)> on_state_done;
};

/// Reverse-search traversal of the family tree from ∅ in DFS preorder,
/// trying candidates in ascending rank. Every X with G[X] chordal bipartite
/// is passed to `sink` exactly once, ∅ first. Exceptions thrown by the sink
/// abort the traversal and propagate.
EnumStats enumerate(const Graph& g, const Ranking& r, const SolutionSink& sink,
                    const EnumOptions& options = {});

/// Convenience: all solutions, each ascending, in emission order.
std::vector<VertexSet> enumerate_all(const Graph& g, const Ranking& r);

struct WasteReport {
  std::uint64_t max_waste = 0;
  std::uint64_t bound = 0;  // 2 k Δ
  std::uint64_t states = 0;
  std::uint64_t total_waste = 0;
  bool within_bound = true;
};

/// Runs `enumerate` and measures |cand(X)| - |ch(X)| at every state against
/// 2·k·Δ, with k taken from the ranking.
WasteReport waste_bound_report(const Graph& g, const Ranking& r);

}  // namespace cbenum

#endif  // CBENUM_ENUMERATION_HPP
