#include "cbenum/graph.hpp"

#include <algorithm>
#include <deque>

namespace cbenum {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n), adj_(n + 1) {
  for (const auto& [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw InputError("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                       "} has an endpoint outside [1, " + std::to_string(n) + "]");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (Vertex v = 1; v <= n_; ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    if (auto dup = std::adjacent_find(nb.begin(), nb.end()); dup != nb.end()) {
      throw InputError("duplicate edge {" + std::to_string(std::min(v, *dup)) + ", " +
                       std::to_string(std::max(v, *dup)) + "}");
    }
    max_degree_ = std::max(max_degree_, nb.size());
  }
  m_ = edges.size();
}

void Graph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw InputError("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n_) + "]");
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

VertexSet Graph::vertices() const {
  VertexSet all(n_);
  for (std::size_t i = 0; i < n_; ++i) all[i] = static_cast<Vertex>(i + 1);
  return all;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexMask::VertexMask(std::size_t n, std::span<const Vertex> members) : bits_(n + 1, 0) {
  for (Vertex v : members) bits_[v] = 1;
}

std::string to_string(Comparability c) {
  switch (c) {
    case Comparability::Subset: return "subset";
    case Comparability::Superset: return "superset";
    case Comparability::Equal: return "equal";
    case Comparability::Incomparable: return "incomparable";
  }
  return "?";
}

VertexSet normalize_set(const Graph& g, VertexSet x) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  for (Vertex v : x) g.check_vertex(v);
  return x;
}

namespace detail {

void neighbors_in(const Graph& g, const VertexMask& x, Vertex v, std::vector<Vertex>& out) {
  out.clear();
  for (Vertex w : g.neighbors(v)) {
    if (x.contains(w)) out.push_back(w);
  }
}

std::size_t degree_in(const Graph& g, const VertexMask& x, Vertex v) {
  std::size_t d = 0;
  for (Vertex w : g.neighbors(v)) d += x.contains(w) ? 1 : 0;
  return d;
}

Comparability compare(const Graph& g, const VertexMask& x, Vertex u, Vertex v,
                      StampSet& scratch) {
  scratch.clear();
  std::size_t size_v = 0;
  for (Vertex w : g.neighbors(v)) {
    if (x.contains(w)) {
      scratch.mark(w);
      ++size_v;
    }
  }
  std::size_t size_u = 0;
  std::size_t common = 0;
  for (Vertex w : g.neighbors(u)) {
    if (!x.contains(w)) continue;
    ++size_u;
    if (scratch.marked(w)) ++common;
  }
  const bool u_in_v = common == size_u;
  const bool v_in_u = common == size_v;
  if (u_in_v && v_in_u) return Comparability::Equal;
  if (u_in_v) return Comparability::Subset;
  if (v_in_u) return Comparability::Superset;
  return Comparability::Incomparable;
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  if (cycle.size() < 2) return cycle;
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

}  // namespace detail

VertexSet neighbors_in(const Graph& g, const VertexSet& x, Vertex v) {
  g.check_vertex(v);
  VertexSet out;
  for (Vertex w : g.neighbors(v)) {
    if (std::binary_search(x.begin(), x.end(), w)) out.push_back(w);
  }
  return out;
}

namespace {

VertexSet within_2(const Graph& g, const VertexMask& x, Vertex v, bool closed) {
  StampSet seen(g.num_vertices());
  seen.mark(v);
  VertexSet out;
  for (Vertex w : g.neighbors(v)) {
    if (!x.contains(w) || seen.marked(w)) continue;
    seen.mark(w);
    out.push_back(w);
  }
  const std::size_t first_ring = out.size();
  for (std::size_t i = 0; i < first_ring; ++i) {
    for (Vertex z : g.neighbors(out[i])) {
      if (!x.contains(z) || seen.marked(z)) continue;
      seen.mark(z);
      out.push_back(z);
    }
  }
  if (closed) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VertexSet neighbors_within_2(const Graph& g, const VertexSet& x, Vertex v, bool closed) {
  g.check_vertex(v);
  return within_2(g, VertexMask(g.num_vertices(), x), v, closed);
}

VertexSet ambient_neighbors_within_2(const Graph& g, Vertex v, bool closed) {
  g.check_vertex(v);
  const auto all = g.vertices();
  return within_2(g, VertexMask(g.num_vertices(), all), v, closed);
}

Comparability compare_neighborhoods(const Graph& g, const VertexSet& x, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw InputError("compare_neighborhoods needs two distinct vertices");
  StampSet scratch(g.num_vertices());
  return detail::compare(g, VertexMask(g.num_vertices(), x), u, v, scratch);
}

namespace {

// Shrinks an odd cycle along chords until it is chordless.
std::vector<Vertex> chordless_odd(const Graph& g, std::vector<Vertex> cyc) {
  bool changed = true;
  while (changed && cyc.size() > 3) {
    changed = false;
    const std::size_t len = cyc.size();
    for (std::size_t i = 0; i < len && !changed; ++i) {
      for (std::size_t j = i + 2; j < len && !changed; ++j) {
        if (i == 0 && j == len - 1) continue;
        if (!g.adjacent(cyc[i], cyc[j])) continue;
        // Chord splits the cycle into [i..j] and [j..len) + [0..i].
        std::vector<Vertex> inner(cyc.begin() + static_cast<std::ptrdiff_t>(i),
                                  cyc.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        if (inner.size() % 2 == 1) {
          cyc = std::move(inner);
        } else {
          std::vector<Vertex> outer(cyc.begin() + static_cast<std::ptrdiff_t>(j), cyc.end());
          outer.insert(outer.end(), cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          cyc = std::move(outer);
        }
        changed = true;
      }
    }
  }
  return cyc;
}

}  // namespace

BipartiteCheck is_bipartite(const Graph& g, const VertexSet& x_in) {
  const VertexSet x = normalize_set(g, x_in);
  const std::size_t n = g.num_vertices();
  VertexMask in_x(n, x);
  std::vector<int> color(n + 1, -1);
  std::vector<Vertex> parent(n + 1, 0);
  std::vector<std::size_t> depth(n + 1, 0);
  BipartiteCheck result;

  for (Vertex s : x) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (!in_x.contains(w)) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Walk both tree paths up to their meeting point.
          std::vector<Vertex> left_path{u};
          std::vector<Vertex> right_path{w};
          Vertex a = u;
          Vertex b = w;
          while (depth[a] > depth[b]) left_path.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right_path.push_back(b = parent[b]);
          while (a != b) {
            left_path.push_back(a = parent[a]);
            right_path.push_back(b = parent[b]);
          }
          right_path.pop_back();
          std::vector<Vertex> cycle(left_path.rbegin(), left_path.rend());
          cycle.insert(cycle.end(), right_path.begin(), right_path.end());
          // `cycle` currently runs lca .. u, w .. (child of lca); it is closed.
          result.bipartite = false;
          result.odd_cycle = detail::canonical_cycle(chordless_odd(g, std::move(cycle)));
          return result;
        }
      }
    }
  }
  for (Vertex v : x) (color[v] == 0 ? result.left : result.right).push_back(v);
  return result;
}

Graph induced_subgraph(const Graph& g, const VertexSet& x_in) {
  const VertexSet x = normalize_set(g, x_in);
  std::vector<Vertex> relabel(g.num_vertices() + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) relabel[x[i]] = static_cast<Vertex>(i + 1);
  std::vector<Edge> edges;
  for (Vertex u : x) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && relabel[v] != 0) edges.emplace_back(relabel[u], relabel[v]);
    }
  }
  return Graph(x.size(), edges);
}

}  // namespace cbenum
