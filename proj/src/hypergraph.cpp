#include "cbenum/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cbenum/recognition.hpp"
#include "cbenum/weak_simplicial.hpp"

namespace cbenum {

namespace {

bool includes(const Hypergraph::Hyperedge& big, const Hypergraph::Hyperedge& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool meet(const Hypergraph::Hyperedge& a, const Hypergraph::Hyperedge& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    *i < *j ? ++i : ++j;
  }
  return false;
}

Hypergraph::Hyperedge intersection(const Hypergraph::Hyperedge& a, const Hypergraph::Hyperedge& b) {
  Hypergraph::Hyperedge out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool totally_ordered(std::vector<const Hypergraph::Hyperedge*> family) {
  std::sort(family.begin(), family.end(),
            [](const auto* a, const auto* b) { return a->size() < b->size(); });
  for (std::size_t i = 1; i < family.size(); ++i) {
    if (!includes(*family[i], *family[i - 1])) return false;
  }
  return true;
}

}  // namespace

Hypergraph::Hypergraph(std::vector<std::string> universe,
                       const std::vector<std::vector<std::string>>& edges)
    : universe_(std::move(universe)) {
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < universe_.size(); ++i) {
    if (!index.emplace(universe_[i], i).second) {
      throw InputError("label '" + universe_[i] + "' appears twice in the universe");
    }
  }
  for (const auto& labels : edges) {
    Hyperedge e;
    for (const auto& l : labels) {
      auto it = index.find(l);
      if (it == index.end()) throw InputError("label '" + l + "' is not in the universe");
      e.push_back(it->second);
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) {
      ++duplicates_;
      continue;
    }
    edges_.push_back(std::move(e));
  }
}

Hypergraph::Hypergraph(std::vector<std::string> universe, std::vector<Hyperedge> edges, int)
    : universe_(std::move(universe)), edges_(std::move(edges)) {}

Hypergraph Hypergraph::from_edges(const std::vector<std::vector<std::string>>& edges) {
  std::vector<std::string> universe;
  for (const auto& e : edges) {
    for (const auto& l : e) {
      if (std::find(universe.begin(), universe.end(), l) == universe.end()) universe.push_back(l);
    }
  }
  return Hypergraph(std::move(universe), edges);
}

std::uint32_t Hypergraph::index_of(const std::string& label) const {
  auto it = std::find(universe_.begin(), universe_.end(), label);
  if (it == universe_.end()) throw InputError("unknown hypergraph vertex '" + label + "'");
  return static_cast<std::uint32_t>(it - universe_.begin());
}

std::vector<std::size_t> Hypergraph::incident_edges(std::uint32_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    if (std::binary_search(edges_[j].begin(), edges_[j].end(), i)) out.push_back(j);
  }
  return out;
}

Hypergraph Hypergraph::without(std::uint32_t removed) const {
  std::vector<std::string> universe;
  for (std::uint32_t i = 0; i < universe_.size(); ++i) {
    if (i != removed) universe.push_back(universe_[i]);
  }
  std::vector<Hyperedge> edges;
  for (const auto& e : edges_) {
    Hyperedge next;
    for (auto i : e) {
      if (i != removed) next.push_back(i > removed ? i - 1 : i);
    }
    if (next.empty() || std::find(edges.begin(), edges.end(), next) != edges.end()) continue;
    edges.push_back(std::move(next));
  }
  return Hypergraph(std::move(universe), std::move(edges), 0);
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
  IncidenceGraph out;
  out.left_size = h.num_vertices();
  out.right_size = h.num_edges();
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < h.num_edges(); ++j) {
    for (auto i : h.edges()[j]) edges.emplace_back(out.vertex_node(i), out.edge_node(j));
  }
  out.graph = Graph(out.left_size + out.right_size, edges);
  return out;
}

namespace {

bool leaf_at(const Hypergraph& h, std::uint32_t i) {
  std::vector<const Hypergraph::Hyperedge*> family;
  for (auto j : h.incident_edges(i)) family.push_back(&h.edges()[j]);
  return totally_ordered(std::move(family));
}

}  // namespace

bool is_beta_leaf(const Hypergraph& h, const std::string& label) {
  return leaf_at(h, h.index_of(label));
}

std::optional<std::vector<std::string>> beta_elimination_ordering(const Hypergraph& h) {
  std::vector<std::string> order;
  Hypergraph residue = h;
  while (residue.num_vertices() > 0) {
    std::optional<std::uint32_t> leaf;
    for (std::uint32_t i = 0; i < residue.num_vertices() && !leaf; ++i) {
      if (leaf_at(residue, i)) leaf = i;
    }
    if (!leaf) return std::nullopt;
    order.push_back(residue.label(*leaf));
    residue = residue.without(*leaf);
  }
  return order;
}

namespace {

// Distinct representatives v_i in links[i] (backtracking; sets are tiny).
bool distinct_representatives(const std::vector<Hypergraph::Hyperedge>& links, std::size_t at,
                              std::vector<std::uint32_t>& used) {
  if (at == links.size()) return true;
  for (auto v : links[at]) {
    if (std::find(used.begin(), used.end(), v) != used.end()) continue;
    used.push_back(v);
    if (distinct_representatives(links, at + 1, used)) return true;
    used.pop_back();
  }
  return false;
}

bool is_cycle_order(const std::vector<Hypergraph::Hyperedge>& reduced,
                    const std::vector<std::size_t>& order, CycleReading reading) {
  const std::size_t k = order.size();
  std::vector<Hypergraph::Hyperedge> links;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& a = reduced[order[i]];
    const auto& b = reduced[order[(i + 1) % k]];
    auto link = intersection(a, b);
    if (link.empty()) return false;
    links.push_back(std::move(link));
  }
  if (reading == CycleReading::Strict) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 2; j < k; ++j) {
        if (i == 0 && j == k - 1) continue;
        if (meet(reduced[order[i]], reduced[order[j]])) return false;
      }
    }
  }
  std::vector<std::uint32_t> used;
  return distinct_representatives(links, 0, used);
}

}  // namespace

std::optional<std::vector<std::size_t>> find_beta_cycle(const Hypergraph& h, CycleReading reading,
                                                        std::size_t guard) {
  const std::size_t m = h.num_edges();
  if (m > guard || m > 20) {
    throw InputError("beta-cycle search: " + std::to_string(m) + " edges exceed the guard of " +
                     std::to_string(guard));
  }
  const auto& edges = h.edges();
  for (std::uint32_t subset = 0; subset < (1U << m); ++subset) {
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < m; ++j) {
      if (subset & (1U << j)) chosen.push_back(j);
    }
    if (chosen.size() < 3) continue;
    Hypergraph::Hyperedge common = edges[chosen[0]];
    for (std::size_t j : chosen) common = intersection(common, edges[j]);
    std::vector<Hypergraph::Hyperedge> reduced(m);
    for (std::size_t j : chosen) {
      std::set_difference(edges[j].begin(), edges[j].end(), common.begin(), common.end(),
                          std::back_inserter(reduced[j]));
    }
    // First edge fixed to the smallest index; permute the rest.
    std::vector<std::size_t> order = chosen;
    do {
      if (is_cycle_order(reduced, order, reading)) return order;
    } while (std::next_permutation(order.begin() + 1, order.end()));
  }
  return std::nullopt;
}

bool is_beta_acyclic(const Hypergraph& h, AcyclicityMethod method) {
  switch (method) {
    case AcyclicityMethod::Incidence:
      return is_chordal_bipartite(incidence_graph(h).graph).chordal_bipartite;
    case AcyclicityMethod::Elimination:
      return beta_elimination_ordering(h).has_value();
    case AcyclicityMethod::Brute:
      return !find_beta_cycle(h, CycleReading::Strict).has_value();
  }
  return false;
}

std::pair<bool, bool> beta_leaf_weak_simplicial_bridge(const Hypergraph& h,
                                                       const std::string& label) {
  const auto i = h.index_of(label);
  const auto inc = incidence_graph(h);
  return {leaf_at(h, i), is_weak_simplicial(inc.graph, inc.graph.vertices(), inc.vertex_node(i))};
}

bool are_neighbors_ignoring_universe_edge(const Hypergraph& h, std::uint32_t a, std::uint32_t b) {
  for (const auto& e : h.edges()) {
    if (e.size() == h.num_vertices()) continue;
    if (std::binary_search(e.begin(), e.end(), a) && std::binary_search(e.begin(), e.end(), b)) {
      return true;
    }
  }
  return false;
}

}  // namespace cbenum
