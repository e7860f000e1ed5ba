#include "cbenum/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace cbenum::oracle {

namespace {

// Induced-path search for a chordless cycle through `start`, whose other
// vertices all exceed `start`. `blocked[z] > 0` iff z is adjacent to (or is)
// an interior path vertex.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, const VertexMask& x, std::size_t min_length)
      : g_(g), x_(x), min_length_(min_length), blocked_(g.num_vertices() + 1, 0),
        on_path_(g.num_vertices() + 1, 0) {}

  bool from(Vertex start) {
    path_.assign(1, start);
    on_path_[start] = 1;
    const bool found = extend();
    on_path_[start] = 0;
    return found;
  }

  const std::vector<Vertex>& path() const { return path_; }

 private:
  bool extend() {
    const Vertex start = path_.front();
    const Vertex last = path_.back();
    for (Vertex z : g_.neighbors(last)) {
      if (!x_.contains(z) || z <= start || on_path_[z] || blocked_[z] > 0) continue;
      if (path_.size() >= 2 && g_.adjacent(z, start)) {
        if (path_.size() + 1 >= min_length_) {
          path_.push_back(z);
          return true;
        }
        continue;
      }
      if (path_.size() >= 2) block(last, +1);
      path_.push_back(z);
      on_path_[z] = 1;
      if (extend()) return true;
      on_path_[z] = 0;
      path_.pop_back();
      if (path_.size() >= 2) block(last, -1);
    }
    return false;
  }

  void block(Vertex v, int delta) {
    blocked_[v] += delta;
    for (Vertex w : g_.neighbors(v)) blocked_[w] += delta;
  }

  const Graph& g_;
  const VertexMask& x_;
  std::size_t min_length_;
  std::vector<int> blocked_;
  std::vector<std::uint8_t> on_path_;
  std::vector<Vertex> path_;
};

// Bitmask versions for the exhaustive subset sweep (n <= 64).
using Bits = std::uint64_t;

bool bits_bipartite(const std::vector<Bits>& adj, Bits subset) {
  Bits uncolored = subset;
  while (uncolored) {
    const int s = std::countr_zero(uncolored);
    Bits side[2] = {Bits{1} << s, 0};
    Bits frontier = Bits{1} << s;
    uncolored &= ~frontier;
    int parity = 0;
    while (frontier) {
      Bits next = 0;
      for (Bits f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= subset;
      if (next & side[parity]) return false;
      parity ^= 1;
      const Bits fresh = next & uncolored;
      side[parity] |= next;
      uncolored &= ~fresh;
      frontier = fresh;
    }
    if (side[0] & side[1]) return false;
  }
  return true;
}

bool bits_long_hole_from(const std::vector<Bits>& adj, Bits subset, int start, int last,
                         Bits on_path, Bits blocked, int length) {
  const Bits start_bit = Bits{1} << start;
  const Bits above_start = ~((start_bit << 1) - 1);
  Bits options = adj[static_cast<std::size_t>(last)] & subset & above_start & ~on_path & ~blocked;
  for (; options; options &= options - 1) {
    const int z = std::countr_zero(options);
    if (length >= 2 && (adj[static_cast<std::size_t>(z)] & start_bit)) {
      if (length + 1 >= 6) return true;
      continue;
    }
    const Bits next_blocked =
        length >= 2 ? blocked | adj[static_cast<std::size_t>(last)] | (Bits{1} << last) : blocked;
    if (bits_long_hole_from(adj, subset, start, z, on_path | (Bits{1} << z), next_blocked,
                            length + 1)) {
      return true;
    }
  }
  return false;
}

bool bits_chordal_bipartite(const std::vector<Bits>& adj, Bits subset) {
  if (!bits_bipartite(adj, subset)) return false;
  for (Bits s = subset; s; s &= s - 1) {
    const int start = std::countr_zero(s);
    if (bits_long_hole_from(adj, subset, start, start, Bits{1} << start, 0, 1)) return false;
  }
  return true;
}

std::vector<Bits> bit_adjacency(const Graph& g) {
  std::vector<Bits> adj(g.num_vertices(), 0);
  for (Vertex u = 1; u <= g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) adj[u - 1] |= Bits{1} << (v - 1);
  }
  return adj;
}

void check_guard(std::size_t size, std::size_t guard, const char* what) {
  if (size > guard || size > 64) {
    throw InputError(std::string(what) + ": size " + std::to_string(size) +
                     " exceeds the exhaustive-search guard of " + std::to_string(std::min<std::size_t>(guard, 64)));
  }
}

}  // namespace

std::optional<std::vector<Vertex>> find_chordless_cycle(const Graph& g, const VertexSet& x_in,
                                                        std::size_t min_length) {
  const VertexSet x = normalize_set(g, x_in);
  const VertexMask mask(g.num_vertices(), x);
  CycleSearch search(g, mask, std::max<std::size_t>(min_length, 3));
  for (Vertex start : x) {
    if (search.from(start)) return search.path();
  }
  return std::nullopt;
}

bool is_chordal_bipartite_bruteforce(const Graph& g, const VertexSet& x_in, std::size_t guard) {
  const VertexSet x = normalize_set(g, x_in);
  check_guard(x.size(), guard, "is_chordal_bipartite_bruteforce");
  if (x.empty()) return true;
  // Compact X to positions 0..|X|-1 so any graph size works.
  std::vector<int> pos(g.num_vertices() + 1, -1);
  for (std::size_t i = 0; i < x.size(); ++i) pos[x[i]] = static_cast<int>(i);
  std::vector<Bits> adj(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (Vertex w : g.neighbors(x[i])) {
      if (pos[w] >= 0) adj[i] |= Bits{1} << pos[w];
    }
  }
  const Bits all = x.size() == 64 ? ~Bits{0} : (Bits{1} << x.size()) - 1;
  return bits_chordal_bipartite(adj, all);
}

std::vector<VertexSet> brute_enumerate(const Graph& g, std::size_t guard) {
  const std::size_t n = g.num_vertices();
  check_guard(n, std::min<std::size_t>(guard, 30), "brute_enumerate");
  const auto adj = bit_adjacency(g);
  std::vector<VertexSet> out;
  const Bits limit = Bits{1} << n;
  for (Bits subset = 0; subset < limit; ++subset) {
    if (!bits_chordal_bipartite(adj, subset)) continue;
    VertexSet members;
    for (Bits s = subset; s; s &= s - 1) members.push_back(static_cast<Vertex>(std::countr_zero(s) + 1));
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace cbenum::oracle
