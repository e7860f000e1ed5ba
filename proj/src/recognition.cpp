#include "cbenum/recognition.hpp"

#include <algorithm>
#include <set>

#include "cbenum/oracle.hpp"
#include "cbenum/weak_simplicial.hpp"

namespace cbenum {

Certificate find_cbeo(const Graph& g, const VertexSet& x_in, const Ranking& r) {
  const VertexSet x = normalize_set(g, x_in);
  VertexMask residue(g.num_vertices(), x);
  WsKernel kernel(g);

  std::set<std::uint32_t> removable;  // ranks of weak-simplicial residue vertices
  for (Vertex v : x) {
    if (kernel.weak_simplicial(residue, v)) removable.insert(r.rank(v));
  }

  Cbeo cbeo;
  cbeo.order.reserve(x.size());
  std::vector<Vertex> nearby;
  while (!removable.empty()) {
    const Vertex v = r.vertex_at(*removable.rbegin());
    removable.erase(std::prev(removable.end()));
    // Deleting v can only change the status of vertices within distance 2.
    nearby.clear();
    for (Vertex w : g.neighbors(v)) {
      if (!residue.contains(w)) continue;
      nearby.push_back(w);
      for (Vertex z : g.neighbors(w)) {
        if (z != v && residue.contains(z)) nearby.push_back(z);
      }
    }
    residue.erase(v);
    cbeo.order.push_back(v);
    std::sort(nearby.begin(), nearby.end());
    nearby.erase(std::unique(nearby.begin(), nearby.end()), nearby.end());
    for (Vertex u : nearby) {
      if (kernel.weak_simplicial(residue, u)) {
        removable.insert(r.rank(u));
      } else {
        removable.erase(r.rank(u));
      }
    }
  }

  if (cbeo.order.size() == x.size()) return CbeoFound{std::move(cbeo)};
  VertexSet stuck;
  for (Vertex v : x) {
    if (residue.contains(v)) stuck.push_back(v);
  }
  return StuckResidue{std::move(stuck)};
}

Recognition is_chordal_bipartite(const Graph& g, const VertexSet& x_in) {
  const VertexSet x = normalize_set(g, x_in);
  auto sides = is_bipartite(g, x);
  if (!sides) return {false, OddCycle{std::move(sides.odd_cycle)}};

  const Ranking identity(g.vertices(), 0);
  Certificate cert = find_cbeo(g, x, identity);
  if (std::holds_alternative<CbeoFound>(cert)) return {true, std::move(cert)};

  const auto& residue = std::get<StuckResidue>(cert).residue;
  if (auto cycle = oracle::find_chordless_cycle(g, residue, 6)) {
    return {false, LongInducedCycle{std::move(*cycle)}};
  }
  return {false, std::move(cert)};
}

Recognition is_chordal_bipartite(const Graph& g) { return is_chordal_bipartite(g, g.vertices()); }

bool verify_cbeo(const Graph& g, const VertexSet& x_in, const Cbeo& cbeo) {
  const VertexSet x = normalize_set(g, x_in);
  VertexSet sorted = cbeo.order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != x) throw InputError("elimination order is not a permutation of X");

  VertexMask residue(g.num_vertices(), x);
  WsKernel kernel(g);
  for (Vertex v : cbeo.order) {
    if (!kernel.weak_simplicial(residue, v)) return false;
    residue.erase(v);
  }
  return true;
}

bool is_chordless_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 3) return false;
  for (Vertex v : cycle) {
    if (!g.contains(v)) return false;
  }
  VertexSet distinct = cycle;
  std::sort(distinct.begin(), distinct.end());
  if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

namespace {

bool within(const VertexSet& x, const std::vector<Vertex>& vs) {
  return std::all_of(vs.begin(), vs.end(),
                     [&](Vertex v) { return std::binary_search(x.begin(), x.end(), v); });
}

}  // namespace

bool verify_certificate(const Graph& g, const VertexSet& x_in, const Certificate& c) {
  const VertexSet x = normalize_set(g, x_in);
  if (const auto* found = std::get_if<CbeoFound>(&c)) {
    VertexSet sorted = found->cbeo.order;
    std::sort(sorted.begin(), sorted.end());
    return sorted == x && verify_cbeo(g, x, found->cbeo);
  }
  if (const auto* odd = std::get_if<OddCycle>(&c)) {
    return odd->cycle.size() % 2 == 1 && within(x, odd->cycle) && is_chordless_cycle(g, odd->cycle);
  }
  if (const auto* hole = std::get_if<LongInducedCycle>(&c)) {
    return hole->cycle.size() >= 6 && within(x, hole->cycle) && is_chordless_cycle(g, hole->cycle);
  }
  const auto& stuck = std::get<StuckResidue>(c).residue;
  if (stuck.empty() || !within(x, stuck)) return false;
  VertexMask mask(g.num_vertices(), stuck);
  WsKernel kernel(g);
  return std::none_of(stuck.begin(), stuck.end(),
                      [&](Vertex v) { return kernel.weak_simplicial(mask, v); });
}

std::string describe(const Certificate& c) {
  auto join = [](const char* tag, const std::vector<Vertex>& vs) {
    std::string s = tag;
    for (Vertex v : vs) s += " " + std::to_string(v);
    return s;
  };
  if (const auto* found = std::get_if<CbeoFound>(&c)) return join("cbeo", found->cbeo.order);
  if (const auto* odd = std::get_if<OddCycle>(&c)) return join("odd-cycle", odd->cycle);
  if (const auto* hole = std::get_if<LongInducedCycle>(&c)) return join("induced-cycle", hole->cycle);
  return join("stuck-residue", std::get<StuckResidue>(c).residue);
}

}  // namespace cbenum
