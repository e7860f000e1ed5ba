#include "doctest.h"

#include <map>
#include <set>
#include <stdexcept>

#include "cbenum/enumeration.hpp"
#include "cbenum/generators.hpp"
#include "cbenum/oracle.hpp"
#include "support/corpus.hpp"

using namespace cbenum;
using namespace cbenum::testing;

namespace {

EnumState state_of(const Graph& g, const VertexSet& x, const Ranking& r) {
  if (x.empty()) return root_state(g, r);
  EnumState st{x, compute_ws(g, x, r), compute_aws(g, x, r), kRootSentinel};
  st.pv = *st.ws.max();
  return st;
}

std::set<VertexSet> as_set(const std::vector<VertexSet>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("parent_of") {
  const Ranking rp = natural_ranking(p4());
  const auto [parent, pv] = parent_of(p4(), {1, 2, 3}, rp);
  CHECK(parent == VertexSet{1, 2});
  CHECK(pv == 3);

  const auto [empty, single] = parent_of(p4(), {2}, rp);
  CHECK(empty.empty());
  CHECK(single == 2);

  const Ranking rc = natural_ranking(c6());
  const auto [c_parent, c_pv] = parent_of(c6(), {1, 2, 3, 4, 5}, rc);
  CHECK(c_parent == VertexSet{1, 2, 3, 4});
  CHECK(c_pv == 5);

  CHECK_THROWS_AS(parent_of(p4(), {}, rp), InputError);
  CHECK_THROWS_AS(parent_of(c6(), c6().vertices(), rc), std::logic_error);
}

TEST_CASE("candidate_set") {
  const Ranking rp = natural_ranking(p4());
  CHECK(candidate_set(p4(), root_state(p4(), rp), rp) == std::vector<Vertex>{1, 2, 3, 4});
  const EnumState st = state_of(p4(), {1, 2}, rp);
  CHECK(st.pv == 2);
  CHECK(candidate_set(p4(), st, rp) == std::vector<Vertex>{3, 4});

  const Ranking rc = natural_ranking(c6());
  CHECK(candidate_set(c6(), state_of(c6(), {1, 2, 3, 4, 5}, rc), rc).empty());

  SUBCASE("low-ranked vertices near pv are included") {
    // Path 1-2-3, X = {3}; AWS = {1, 2}, both below pv = 3 but within distance 2.
    const Graph g = gen::path_graph(3);
    const Ranking r = natural_ranking(g);
    CHECK(candidate_set(g, state_of(g, {3}, r), r) == std::vector<Vertex>{1, 2});
  }
}

TEST_CASE("try_child") {
  const Ranking rp = natural_ranking(p4());
  const auto child = try_child(p4(), state_of(p4(), {1, 2}, rp), 3, rp);
  REQUIRE(child);
  CHECK(child->x == VertexSet{1, 2, 3});
  CHECK(child->pv == 3);
  CHECK(child->ws.members() == std::vector<Vertex>{1, 2, 3});
  CHECK(child->aws.members() == std::vector<Vertex>{4});

  CHECK_FALSE(try_child(p4(), state_of(p4(), {1, 3}, rp), 2, rp));

  for (Vertex v = 1; v <= 4; ++v) {
    const auto c = try_child(p4(), root_state(p4(), rp), v, rp);
    REQUIRE(c);
    CHECK(c->x == VertexSet{v});
  }
}

TEST_CASE("solution counts") {
  struct Case {
    const char* name;
    Graph g;
    std::size_t count;
  };
  const Case cases[] = {{"K3", k3(), 7},   {"C6", c6(), 63},  {"C4", c4(), 16},
                        {"P4", p4(), 16},  {"C8", c8(), 255}, {"K2,3", gen::complete_bipartite(2, 3), 32}};
  for (const auto& c : cases) {
    CAPTURE(c.name);
    CHECK(enumerate_all(c.g, degeneracy_ranking(c.g)).size() == c.count);
    CHECK(enumerate_all(c.g, natural_ranking(c.g)).size() == c.count);
    CHECK(oracle::brute_enumerate(c.g).size() == c.count);
  }
  CHECK(enumerate_all(gen::empty_graph(0), natural_ranking(gen::empty_graph(0))).size() == 1);
}

TEST_CASE("enumeration matches the exhaustive oracle") {
  auto corpus = random_corpus(200, 1, 8, 2024);
  for (auto& named : named_graphs()) corpus.push_back(named);
  for (const auto& [name, g] : corpus) {
    CAPTURE(name);
    const auto expected = as_set(oracle::brute_enumerate(g));
    for (const Ranking& r : {degeneracy_ranking(g), natural_ranking(g)}) {
      const auto got = enumerate_all(g, r);
      CHECK(got.size() == expected.size());
      CHECK(as_set(got) == expected);
    }
  }
}

TEST_CASE("family tree structure") {
  for (const auto& [name, g] : random_corpus(80, 3, 8, 31)) {
    CAPTURE(name);
    const Ranking r = degeneracy_ranking(g);
    const auto all = enumerate_all(g, r);
    const auto family = as_set(all);
    REQUIRE(all.front().empty());

    for (const auto& x : all) {
      // Rootedness.
      VertexSet cur = x;
      std::size_t steps = 0;
      while (!cur.empty()) {
        cur = parent_of(g, cur, r).first;
        CHECK(family.count(cur) == 1);
        ++steps;
      }
      CHECK(steps == x.size());
      // Hereditarity: dropping any single vertex stays in the family.
      for (std::size_t i = 0; i < x.size(); ++i) {
        VertexSet smaller = x;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        CHECK(family.count(smaller) == 1);
      }
    }
  }
}

TEST_CASE("visited states carry exact WS/AWS and candidates are complete") {
  for (const auto& [name, g] : random_corpus(120, 2, 9, 77)) {
    CAPTURE(name);
    const Ranking r = degeneracy_ranking(g);
    std::uint64_t bad_ws = 0, bad_aws = 0, bad_pv = 0, missing = 0, bad_update = 0;
    enumerate(g, r, [&](const StateView& s) {
      const VertexSet x = s.sorted();
      bad_ws += s.ws == compute_ws(g, x, r) ? 0 : 1;
      bad_aws += s.aws == compute_aws(g, x, r) ? 0 : 1;
      if (!x.empty()) bad_pv += s.pv == *s.ws.max() ? 0 : 1;

      const EnumState st = state_of(g, x, r);
      const auto cand = candidate_set(g, st, r);
      for (Vertex v : st.aws.members()) {
        const VertexSet y = with(x, v);
        // Rejected candidates too: the update must match recomputation.
        bad_update += update_ws(g, x, v, st.ws, r) == compute_ws(g, y, r) ? 0 : 1;
        bad_update += update_aws(g, x, v, st.aws, r) == compute_aws(g, y, r) ? 0 : 1;
        if (parent_of(g, y, r).first == x) {
          missing += std::find(cand.begin(), cand.end(), v) == cand.end() ? 1 : 0;
        }
      }
    });
    CHECK(bad_ws == 0);
    CHECK(bad_aws == 0);
    CHECK(bad_pv == 0);
    CHECK(bad_update == 0);
    CHECK(missing == 0);
  }
}

TEST_CASE("waste bound") {
  for (const Graph& g : {c4(), c6(), gen::grid_graph(3, 3)}) {
    const auto report = waste_bound_report(g, degeneracy_ranking(g));
    CHECK(report.bound == 2ULL * degeneracy_ranking(g).degeneracy() * g.max_degree());
    CHECK(report.within_bound);
    CHECK(report.max_waste <= report.bound);
  }
  CHECK(waste_bound_report(c4(), degeneracy_ranking(c4())).bound == 8);

  const Graph edgeless = gen::empty_graph(5);
  const auto flat = waste_bound_report(edgeless, degeneracy_ranking(edgeless));
  CHECK(flat.max_waste == 0);
  CHECK(flat.states == 32);

  for (const auto& [name, g] : random_corpus(150, 3, 9, 5)) {
    CAPTURE(name);
    CHECK(waste_bound_report(g, degeneracy_ranking(g)).within_bound);
  }
}

TEST_CASE("limit, sink errors and ordering") {
  const Graph g = c6();
  const Ranking r = degeneracy_ranking(g);

  EnumOptions opts;
  opts.limit = 10;
  std::size_t seen = 0;
  const auto stats = enumerate(g, r, [&](const StateView&) { ++seen; }, opts);
  CHECK(seen == 10);
  CHECK(stats.solutions == 10);
  CHECK(stats.limit_reached);

  std::size_t calls = 0;
  CHECK_THROWS_AS(enumerate(g, r,
                            [&](const StateView&) {
                              if (++calls == 5) throw std::runtime_error("sink full");
                            }),
                  std::runtime_error);
  CHECK(calls == 5);

  const auto first = enumerate_all(g, r);
  CHECK(first.front().empty());
  CHECK(first == enumerate_all(g, r));

  const auto full = enumerate(g, r, [](const StateView&) {});
  CHECK(full.solutions == 63);
  CHECK_FALSE(full.limit_reached);
  CHECK(full.max_depth == 5);
  CHECK(full.candidate_attempts == full.solutions - 1 + full.rejected);
}
