#include "doctest.h"

#include <bit>

#include "cbenum/generators.hpp"
#include "cbenum/ordering.hpp"
#include "support/corpus.hpp"

using namespace cbenum;

namespace {

// max over non-empty induced subgraphs of the minimum degree.
std::uint32_t brute_degeneracy(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::uint32_t best = 0;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    std::uint32_t min_deg = UINT32_MAX;
    for (std::size_t v = 1; v <= n; ++v) {
      if (!(s & (1U << (v - 1)))) continue;
      std::uint32_t d = 0;
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) d += (s >> (w - 1)) & 1U;
      min_deg = std::min(min_deg, d);
    }
    best = std::max(best, min_deg);
  }
  return best;
}

}  // namespace

TEST_CASE("degeneracy of named graphs") {
  CHECK(degeneracy_ranking(testing::c6()).degeneracy() == 2);
  CHECK(degeneracy_ranking(gen::star_graph(5)).degeneracy() == 1);
  CHECK(degeneracy_ranking(testing::k3()).degeneracy() == 2);
  const Ranking empty = degeneracy_ranking(gen::empty_graph(0));
  CHECK(empty.degeneracy() == 0);
  CHECK(empty.size() == 0);
}

TEST_CASE("degeneracy ranking tie-break is deterministic") {
  // P4: degrees 1,2,2,1. Peel 1 (smallest min-degree), then 2, then 3, then 4.
  const Ranking r = degeneracy_ranking(testing::p4());
  CHECK(r.rank(1) == 4);
  CHECK(r.rank(2) == 3);
  CHECK(r.rank(3) == 2);
  CHECK(r.rank(4) == 1);
  CHECK(r.order() == std::vector<Vertex>{4, 3, 2, 1});
}

TEST_CASE("natural ranking") {
  const Ranking p = natural_ranking(testing::p4());
  CHECK(p.degeneracy() == 1);
  for (Vertex v = 1; v <= 4; ++v) CHECK(p.rank(v) == v);
  CHECK(natural_ranking(testing::c6()).degeneracy() == 2);
  const Ranking single = natural_ranking(gen::empty_graph(1));
  CHECK(single.rank(1) == 1);
  CHECK(single.degeneracy() == 0);
}

TEST_CASE("Ranking rejects non-permutations") {
  CHECK_THROWS_AS(Ranking({1, 1, 2}, 0), InputError);
  CHECK_THROWS_AS(Ranking({1, 4}, 0), InputError);
}

TEST_CASE("degeneracy ranking matches brute force and bounds lower neighbors") {
  gen::Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const Graph g = gen::random_gnp(n, 0.15 + 0.1 * (trial % 6), rng);
    const Ranking r = degeneracy_ranking(g);
    CHECK(r.degeneracy() == brute_degeneracy(g));
    CHECK(max_lower_neighbors(g, r) <= r.degeneracy());
  }
}
