#include "cbenum/weak_simplicial.hpp"

#include <algorithm>
#include <limits>

namespace cbenum {

namespace {

std::string cycle_message(const std::vector<Vertex>& cycle) {
  std::string msg = "graph is not bipartite; odd cycle:";
  for (Vertex v : cycle) msg += " " + std::to_string(v);
  return msg;
}

// Same-side vertices sorted by degree in X form a chain iff every
// consecutive pair is nested.
bool side_is_chain(const Graph& g, const VertexMask& x, const VertexSet& side,
                   StampSet& scratch) {
  std::vector<std::pair<std::size_t, Vertex>> by_degree;
  by_degree.reserve(side.size());
  for (Vertex v : side) by_degree.emplace_back(detail::degree_in(g, x, v), v);
  std::sort(by_degree.begin(), by_degree.end());
  for (std::size_t i = 1; i < by_degree.size(); ++i) {
    auto rel = detail::compare(g, x, by_degree[i - 1].second, by_degree[i].second, scratch);
    if (rel != Comparability::Subset && rel != Comparability::Equal) return false;
  }
  return true;
}

}  // namespace

NotBipartiteError::NotBipartiteError(std::vector<Vertex> cycle)
    : std::runtime_error(cycle_message(cycle)), cycle_(std::move(cycle)) {}

WsKernel::WsKernel(const Graph& g)
    : g_(&g),
      compare_scratch_(g.num_vertices()),
      marks_(g.num_vertices()),
      adjacent_to_v_(g.num_vertices()),
      seen_(g.num_vertices()) {}

bool WsKernel::weak_simplicial(const VertexMask& x, Vertex v) {
  const Graph& g = *g_;
  detail::neighbors_in(g, x, v, nbrs_);
  marks_.clear();
  for (Vertex w : nbrs_) marks_.mark(w);

  by_degree_.clear();
  for (Vertex w : nbrs_) {
    std::size_t d = 0;
    for (Vertex z : g.neighbors(w)) {
      if (!x.contains(z)) continue;
      if (marks_.marked(z)) return false;  // two neighbors of v are adjacent
      ++d;
    }
    by_degree_.emplace_back(d, w);
  }
  std::sort(by_degree_.begin(), by_degree_.end());
  for (std::size_t i = 1; i < by_degree_.size(); ++i) {
    auto rel = detail::compare(g, x, by_degree_[i - 1].second, by_degree_[i].second,
                               compare_scratch_);
    if (rel != Comparability::Subset && rel != Comparability::Equal) return false;
  }
  return true;
}

void WsKernel::delta_ws(VertexMask& x, Vertex v, const VertexMask& ws,
                        std::vector<Vertex>& out) {
  const Graph& g = *g_;
  detail::neighbors_in(g, x, v, nbrs_);
  adjacent_to_v_.clear();
  for (Vertex u : nbrs_) adjacent_to_v_.mark(u);

  x.insert(v);
  // Distance 1: u leaves WS iff some w in N_X(u) is incomparable to v in G[Y].
  for (Vertex u : nbrs_) {
    if (!ws.contains(u)) continue;
    for (Vertex w : g.neighbors(u)) {
      if (w == v || !x.contains(w)) continue;
      if (detail::compare(g, x, w, v, compare_scratch_) == Comparability::Incomparable) {
        out.push_back(u);
        break;
      }
    }
  }
  x.erase(v);

  // Distance 2: N_X(u) is a chain, so strict inclusion is strict size order.
  // u leaves WS iff a neighbor adjacent to v has a strictly smaller
  // neighborhood in X than a neighbor not adjacent to v.
  seen_.clear();
  seen_.mark(v);
  for (Vertex u : nbrs_) seen_.mark(u);
  for (Vertex mid : nbrs_) {
    for (Vertex u : g.neighbors(mid)) {
      if (!x.contains(u) || seen_.marked(u)) continue;
      seen_.mark(u);
      if (!ws.contains(u)) continue;
      std::size_t min_adjacent = std::numeric_limits<std::size_t>::max();
      std::size_t max_other = 0;
      bool any_other = false;
      for (Vertex w : g.neighbors(u)) {
        if (!x.contains(w)) continue;
        const std::size_t d = detail::degree_in(g, x, w);
        if (adjacent_to_v_.marked(w)) {
          min_adjacent = std::min(min_adjacent, d);
        } else {
          max_other = std::max(max_other, d);
          any_other = true;
        }
      }
      if (any_other && min_adjacent < max_other) out.push_back(u);
    }
  }
}

void WsKernel::delta_aws(VertexMask& x, Vertex v, const VertexMask& aws,
                         std::vector<Vertex>& out) {
  const Graph& g = *g_;
  detail::neighbors_in(g, x, v, nbrs_);
  adjacent_to_v_.clear();
  for (Vertex w : nbrs_) adjacent_to_v_.mark(w);

  // Distance 1 (ambient neighbors of v): with Z = X ∪ {u, v}, u leaves AWS iff
  // some w in N_X(u) is incomparable to v in G[Z].
  x.insert(v);
  for (Vertex u : g.neighbors(v)) {
    if (x.contains(u) || !aws.contains(u)) continue;
    x.insert(u);
    for (Vertex w : g.neighbors(u)) {
      if (w == v || !x.contains(w)) continue;
      if (detail::compare(g, x, w, v, compare_scratch_) == Comparability::Incomparable) {
        out.push_back(u);
        break;
      }
    }
    x.erase(u);
  }
  x.erase(v);

  // Distance 2 through X: N_X(u) is a chain in G[X ∪ {u}]; compare sizes as
  // in delta_ws, where |N_{X∪{u}}(w)| = |N_X(w)| + 1 uniformly.
  seen_.clear();
  seen_.mark(v);
  for (Vertex u : g.neighbors(v)) seen_.mark(u);
  for (Vertex mid : nbrs_) {
    for (Vertex u : g.neighbors(mid)) {
      if (x.contains(u) || seen_.marked(u)) continue;
      seen_.mark(u);
      if (!aws.contains(u)) continue;
      std::size_t min_adjacent = std::numeric_limits<std::size_t>::max();
      std::size_t max_other = 0;
      bool any_other = false;
      for (Vertex w : g.neighbors(u)) {
        if (!x.contains(w)) continue;
        const std::size_t d = detail::degree_in(g, x, w);
        if (adjacent_to_v_.marked(w)) {
          min_adjacent = std::min(min_adjacent, d);
        } else {
          max_other = std::max(max_other, d);
          any_other = true;
        }
      }
      if (any_other && min_adjacent < max_other) out.push_back(u);
    }
  }
}

bool is_weak_simplicial(const Graph& g, const VertexSet& x_in, Vertex v) {
  g.check_vertex(v);
  const VertexSet x = normalize_set(g, x_in);
  if (!std::binary_search(x.begin(), x.end(), v)) {
    throw InputError("vertex " + std::to_string(v) + " is not in X");
  }
  WsKernel kernel(g);
  return kernel.weak_simplicial(VertexMask(g.num_vertices(), x), v);
}

bool is_bipartite_chain(const Graph& g, const VertexSet& x_in) {
  const VertexSet x = normalize_set(g, x_in);
  auto sides = is_bipartite(g, x);
  if (!sides) throw NotBipartiteError(sides.odd_cycle);
  const VertexMask mask(g.num_vertices(), x);
  StampSet scratch(g.num_vertices());
  return side_is_chain(g, mask, sides.left, scratch) &&
         side_is_chain(g, mask, sides.right, scratch);
}

bool is_weak_simplicial_via_chain(const Graph& g, const VertexSet& x_in, Vertex v) {
  g.check_vertex(v);
  const VertexSet x = normalize_set(g, x_in);
  if (!std::binary_search(x.begin(), x.end(), v)) {
    throw InputError("vertex " + std::to_string(v) + " is not in X");
  }
  return is_bipartite_chain(g, neighbors_within_2(g, x, v, /*closed=*/true));
}

WsSet compute_ws(const Graph& g, const VertexSet& x_in, const Ranking& r) {
  const VertexSet x = normalize_set(g, x_in);
  const VertexMask mask(g.num_vertices(), x);
  WsKernel kernel(g);
  WsSet ws(r);
  for (Vertex v : x) {
    if (kernel.weak_simplicial(mask, v)) ws.insert(v);
  }
  return ws;
}

AwsSet compute_aws(const Graph& g, const VertexSet& x_in, const Ranking& r) {
  const VertexSet x = normalize_set(g, x_in);
  VertexMask mask(g.num_vertices(), x);
  WsKernel kernel(g);
  AwsSet aws(r);
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (mask.contains(v)) continue;
    mask.insert(v);
    if (kernel.weak_simplicial(mask, v)) aws.insert(v);
    mask.erase(v);
  }
  return aws;
}

namespace {

template <class Set>
VertexMask mask_of(const Graph& g, const Set& s) {
  VertexMask m(g.num_vertices());
  for (Vertex v : s.members()) m.insert(v);
  return m;
}

VertexMask x_mask_without(const Graph& g, const VertexSet& x, Vertex v) {
  g.check_vertex(v);
  const VertexSet xs = normalize_set(g, x);
  if (std::binary_search(xs.begin(), xs.end(), v)) {
    throw InputError("vertex " + std::to_string(v) + " is already in X");
  }
  return VertexMask(g.num_vertices(), xs);
}

}  // namespace

VertexSet delta_ws(const Graph& g, const VertexSet& x, Vertex v, const WsSet& ws) {
  VertexMask mask = x_mask_without(g, x, v);
  WsKernel kernel(g);
  VertexSet out;
  kernel.delta_ws(mask, v, mask_of(g, ws), out);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet delta_aws(const Graph& g, const VertexSet& x, Vertex v, const AwsSet& aws) {
  VertexMask mask = x_mask_without(g, x, v);
  WsKernel kernel(g);
  VertexSet out;
  kernel.delta_aws(mask, v, mask_of(g, aws), out);
  std::sort(out.begin(), out.end());
  return out;
}

WsSet update_ws(const Graph& g, const VertexSet& x, Vertex v, const WsSet& ws, const Ranking& r) {
  WsSet next(r, ws.members());
  for (Vertex u : delta_ws(g, x, v, ws)) next.erase(u);
  next.insert(v);
  return next;
}

AwsSet update_aws(const Graph& g, const VertexSet& x, Vertex v, const AwsSet& aws,
                  const Ranking& r) {
  AwsSet next(r, aws.members());
  for (Vertex u : delta_aws(g, x, v, aws)) next.erase(u);
  next.erase(v);
  return next;
}

}  // namespace cbenum
