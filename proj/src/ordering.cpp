#include "cbenum/ordering.hpp"

#include <algorithm>
#include <set>

namespace cbenum {

Ranking::Ranking(std::vector<Vertex> order, std::uint32_t degeneracy)
    : rank_(order.size() + 1, 0), order_(order.size() + 1, 0), k_(degeneracy) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v == 0 || v > order.size() || rank_[v] != 0) {
      throw InputError("ranking order is not a permutation of 1..n");
    }
    rank_[v] = static_cast<std::uint32_t>(i + 1);
    order_[i + 1] = v;
  }
}

Ranking degeneracy_ranking(const Graph& g) {
  const std::size_t n = g.num_vertices();
  // Buckets indexed by current degree; each bucket ordered by identity so the
  // smallest identity among minimum-degree vertices is peeled first.
  std::vector<std::set<Vertex>> buckets(g.max_degree() + 1);
  std::vector<std::size_t> degree(n + 1, 0);
  std::vector<bool> removed(n + 1, false);
  for (Vertex v = 1; v <= n; ++v) {
    degree[v] = g.degree(v);
    buckets[degree[v]].insert(v);
  }

  std::vector<Vertex> order(n, 0);
  std::size_t k = 0;
  std::size_t low = 0;
  for (std::size_t step = 0; step < n; ++step) {
    while (buckets[low].empty()) ++low;
    const Vertex v = *buckets[low].begin();
    buckets[low].erase(buckets[low].begin());
    removed[v] = true;
    k = std::max(k, degree[v]);
    order[n - 1 - step] = v;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      buckets[degree[w]].erase(w);
      --degree[w];
      buckets[degree[w]].insert(w);
    }
    if (low > 0) --low;
  }
  return Ranking(std::move(order), static_cast<std::uint32_t>(k));
}

Ranking natural_ranking(const Graph& g) {
  const Ranking identity(g.vertices(), 0);
  return Ranking(g.vertices(), max_lower_neighbors(g, identity));
}

std::uint32_t max_lower_neighbors(const Graph& g, const Ranking& r) {
  std::uint32_t best = 0;
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    std::uint32_t lower = 0;
    for (Vertex w : g.neighbors(v)) lower += r.less(w, v) ? 1 : 0;
    best = std::max(best, lower);
  }
  return best;
}

}  // namespace cbenum
