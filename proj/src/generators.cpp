#include "cbenum/generators.hpp"

#include <algorithm>
#include <numeric>

namespace cbenum::gen {

namespace {

Vertex vx(std::size_t i) { return static_cast<Vertex>(i); }

}  // namespace

Graph empty_graph(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(vx(i), vx(i + 1));
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(vx(i), vx(i + 1));
  edges.emplace_back(vx(n), vx(1));
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) edges.emplace_back(vx(i), vx(j));
  }
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= a; ++i) {
    for (std::size_t j = 1; j <= b; ++j) edges.emplace_back(vx(i), vx(a + j));
  }
  return Graph(a + b, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < leaves; ++i) edges.emplace_back(1, vx(i + 2));
  return Graph(leaves + 1, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  auto id = [cols](std::size_t i, std::size_t j) { return vx(i * cols + j + 1); };
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.emplace_back(id(i, j), id(i, j + 1));
      if (i + 1 < rows) edges.emplace_back(id(i, j), id(i + 1, j));
    }
  }
  return Graph(rows * cols, edges);
}

Graph path_with_pendants(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(vx(i), vx(i + 1));
  for (std::size_t i = 1; i <= n; ++i) edges.emplace_back(vx(i), vx(n + i));
  return Graph(2 * n, edges);
}

Graph cycle_with_pendants(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(vx(i), vx(i + 1));
  edges.emplace_back(vx(n), vx(1));
  for (std::size_t i = 1; i <= n; ++i) edges.emplace_back(vx(i), vx(n + i));
  return Graph(2 * n, edges);
}

Graph random_gnp(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (coin(rng)) edges.emplace_back(vx(i), vx(j));
    }
  }
  return Graph(n, edges);
}

Graph random_bounded_degree(std::size_t n, std::size_t max_degree, double p, Rng& rng) {
  std::vector<Edge> all;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) all.emplace_back(vx(i), vx(j));
  }
  std::shuffle(all.begin(), all.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<std::size_t> degree(n + 1, 0);
  std::vector<Edge> edges;
  for (const auto& [u, v] : all) {
    if (!coin(rng) || degree[u] >= max_degree || degree[v] >= max_degree) continue;
    ++degree[u];
    ++degree[v];
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph random_bipartite(std::size_t a, std::size_t b, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= a; ++i) {
    for (std::size_t j = 1; j <= b; ++j) {
      if (coin(rng)) edges.emplace_back(vx(i), vx(a + j));
    }
  }
  return Graph(a + b, edges);
}

Graph random_chain_graph(std::size_t a, std::size_t b, Rng& rng) {
  std::uniform_int_distribution<std::size_t> threshold(0, b);
  std::vector<std::size_t> t(a);
  for (auto& x : t) x = threshold(rng);
  std::sort(t.begin(), t.end());
  // Shuffle identities so the nesting is not visible in the labels.
  std::vector<Vertex> label(a + b);
  std::iota(label.begin(), label.end(), 1);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < t[i]; ++j) edges.emplace_back(label[i], label[a + j]);
  }
  return Graph(a + b, edges);
}

Hypergraph random_hypergraph(std::size_t num_vertices, std::size_t num_edges, Rng& rng) {
  std::vector<std::string> universe;
  for (std::size_t i = 1; i <= num_vertices; ++i) universe.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<std::uint32_t> pick(1, (1U << num_vertices) - 1);
  std::vector<std::vector<std::string>> edges;
  for (std::size_t j = 0; j < num_edges; ++j) {
    const auto bits = pick(rng);
    std::vector<std::string> e;
    for (std::size_t i = 0; i < num_vertices; ++i) {
      if (bits & (1U << i)) e.push_back(universe[i]);
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(std::move(universe), edges);
}

}  // namespace cbenum::gen
