// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>

#include "cbenum/enumeration.hpp"
#include "cbenum/generators.hpp"
#include "cbenum/hypergraph.hpp"
#include "cbenum/oracle.hpp"
#include "cbenum/recognition.hpp"
#include "support/corpus.hpp"

using namespace cbenum;
using namespace cbenum::testing;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  failures += ok ? 0 : 1;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<NamedGraph> small_corpus() {
  auto corpus = random_corpus(500, 1, 8, 20240501);
  for (auto& g : named_graphs()) corpus.push_back(g);
  return corpus;
}

void oracle_equivalence() {
  const auto t0 = Clock::now();
  std::size_t bad = 0, dups = 0, graphs = 0;
  for (const auto& [name, g] : small_corpus()) {
    ++graphs;
    std::map<VertexSet, int> seen;
    enumerate(g, degeneracy_ranking(g), [&](const StateView& s) { ++seen[s.sorted()]; });
    std::set<VertexSet> got;
    for (const auto& [x, c] : seen) {
      dups += static_cast<std::size_t>(c - 1);
      got.insert(x);
    }
    const auto expected = oracle::brute_enumerate(g);
    if (got != std::set<VertexSet>(expected.begin(), expected.end())) {
      ++bad;
      std::printf("  mismatch on %s\n", name.c_str());
    }
  }
  const double secs = seconds_since(t0);
  report(1, "oracle-equivalence", bad == 0 && dups == 0 && secs < 60,
         fmt("%zu graphs, %zu mismatches, %zu duplicates, %.2f s", graphs, bad, dups, secs));
}

void derived_counts() {
  const std::pair<const char*, std::pair<Graph, std::size_t>> cases[] = {
      {"C4", {c4(), 16}}, {"C6", {c6(), 63}}, {"C8", {c8(), 255}},
      {"K3", {k3(), 7}},  {"P4", {p4(), 16}}, {"K2,3", {gen::complete_bipartite(2, 3), 32}}};
  std::string detail;
  bool ok = true;
  for (const auto& [name, c] : cases) {
    const auto& [g, want] = c;
    const std::size_t got = enumerate_all(g, degeneracy_ranking(g)).size();
    ok = ok && got == want;
    detail += fmt("%s=%zu ", name, got);
  }
  report(2, "derived-counts", ok, detail);
}

std::vector<NamedGraph> recognition_corpus() {
  auto corpus = random_corpus(400, 1, 12, 777);
  gen::Rng rng(778);
  for (int i = 0; i < 200; ++i) {
    corpus.push_back({"bip#" + std::to_string(i),
                      gen::random_bipartite(1 + i % 6, 1 + (i / 6) % 6, 0.25 + 0.1 * (i % 5), rng)});
  }
  for (auto& g : named_graphs()) corpus.push_back(g);
  return corpus;
}

void recognition_and_cbeo() {
  const auto t0 = Clock::now();
  std::size_t disagree = 0, bad_cert = 0, graphs = 0, positives = 0;
  std::size_t bipartite = 0, cbeo_mismatch = 0, cbeo_invalid = 0;
  for (const auto& [name, g] : recognition_corpus()) {
    ++graphs;
    const bool expected = oracle::is_chordal_bipartite_bruteforce(g, g.vertices());
    positives += expected ? 1 : 0;
    const Recognition r = is_chordal_bipartite(g);
    disagree += r.chordal_bipartite == expected ? 0 : 1;
    bad_cert += verify_certificate(g, g.vertices(), r.certificate) ? 0 : 1;
    if (!is_bipartite(g, g.vertices())) continue;
    ++bipartite;
    const Certificate c = find_cbeo(g, g.vertices(), degeneracy_ranking(g));
    const auto* found = std::get_if<CbeoFound>(&c);
    cbeo_mismatch += (found != nullptr) == expected ? 0 : 1;
    if (found && !verify_cbeo(g, g.vertices(), found->cbeo)) ++cbeo_invalid;
  }
  const double secs = seconds_since(t0);
  report(3, "recognition-agreement", disagree == 0 && bad_cert == 0 && secs < 120,
         fmt("%zu graphs (n<=12, %zu positive), %zu disagreements, %zu bad certificates, %.2f s",
             graphs, positives, disagree, bad_cert, secs));
  report(4, "cbeo-soundness", cbeo_mismatch == 0 && cbeo_invalid == 0,
         fmt("%zu bipartite graphs, %zu found/oracle mismatches, %zu invalid orders", bipartite,
             cbeo_mismatch, cbeo_invalid));
}

void incremental() {
  std::size_t states = 0, updates = 0, bad = 0;
  for (const auto& [name, g] : random_corpus(200, 2, 10, 555)) {
    const Ranking r = degeneracy_ranking(g);
    enumerate(g, r, [&](const StateView& s) {
      ++states;
      const VertexSet x = s.sorted();
      const WsSet ws = compute_ws(g, x, r);
      const AwsSet aws = compute_aws(g, x, r);
      bad += (s.ws == ws && s.aws == aws) ? 0 : 1;
      // Every addable vertex, accepted as a child or not.
      for (Vertex v : aws.members()) {
        ++updates;
        const VertexSet y = with(x, v);
        const bool ok = update_ws(g, x, v, ws, r) == compute_ws(g, y, r) &&
                        update_aws(g, x, v, aws, r) == compute_aws(g, y, r);
        bad += ok ? 0 : 1;
      }
    });
  }
  report(5, "incremental-correctness", bad == 0,
         fmt("%zu states, %zu single-vertex updates, %zu mismatches", states, updates, bad));
}

void candidates_and_waste() {
  std::size_t states = 0, children = 0, missing = 0, over = 0;
  std::uint64_t worst = 0, worst_bound = 0;
  auto corpus = random_corpus(300, 2, 10, 999);
  for (auto& g : named_graphs()) corpus.push_back(g);
  corpus.push_back({"grid4", gen::grid_graph(4, 4)});
  for (const auto& [name, g] : corpus) {
    const Ranking r = degeneracy_ranking(g);
    const std::uint64_t bound = 2ULL * r.degeneracy() * g.max_degree();
    EnumOptions opts;
    opts.on_state_done = [&](std::size_t, std::size_t cand, std::size_t ch) {
      const std::uint64_t waste = cand - ch;
      over += waste > bound ? 1 : 0;
      if (waste > worst || (waste == worst && bound < worst_bound)) {
        worst = waste;
        worst_bound = bound;
      }
    };
    const bool check_children = g.num_vertices() <= 10;
    enumerate(
        g, r,
        [&](const StateView& s) {
          ++states;
          if (!check_children) return;
          const VertexSet x = s.sorted();
          EnumState st{x, compute_ws(g, x, r), compute_aws(g, x, r), kRootSentinel};
          if (!x.empty()) st.pv = *st.ws.max();
          const auto cand = candidate_set(g, st, r);
          for (Vertex v : st.aws.members()) {
            if (parent_of(g, with(x, v), r).first != x) continue;
            ++children;
            missing += std::find(cand.begin(), cand.end(), v) == cand.end() ? 1 : 0;
          }
        },
        opts);
  }
  report(6, "candidates-and-waste", missing == 0 && over == 0,
         fmt("%zu states, %zu children checked, %zu outside cand, %zu states over 2k*delta "
             "(worst waste %llu with bound %llu)",
             states, children, missing, over, static_cast<unsigned long long>(worst),
             static_cast<unsigned long long>(worst_bound)));
}

void hypergraphs() {
  gen::Rng rng(4711);
  std::size_t disagree = 0, bridge_bad = 0, acyclic = 0, brute_disagree = 0;
  for (int i = 0; i < 300; ++i) {
    const Hypergraph h = gen::random_hypergraph(1 + i % 6, 1 + (i / 6) % 6, rng);
    const bool inc = is_beta_acyclic(h, AcyclicityMethod::Incidence);
    acyclic += inc ? 1 : 0;
    disagree += inc == is_beta_acyclic(h, AcyclicityMethod::Elimination) ? 0 : 1;
    brute_disagree += inc == is_beta_acyclic(h, AcyclicityMethod::Brute) ? 0 : 1;
    for (const auto& label : h.universe()) {
      const auto [leaf, ws] = beta_leaf_weak_simplicial_bridge(h, label);
      bridge_bad += leaf == ws ? 0 : 1;
    }
  }
  const Hypergraph tri = Hypergraph::from_edges({{"a", "b"}, {"b", "c"}, {"c", "a"}});
  const Hypergraph path = Hypergraph::from_edges({{"a", "b"}, {"b", "c"}});
  const bool named = !is_beta_acyclic(tri) && is_beta_acyclic(path);
  report(7, "hypergraph-bridge", disagree == 0 && bridge_bad == 0 && brute_disagree == 0 && named,
         fmt("300 hypergraphs (%zu beta-acyclic), %zu incidence/elimination disagreements, "
             "%zu brute disagreements, %zu bridge mismatches, triangle/path %s",
             acyclic, disagree, brute_disagree, bridge_bad, named ? "ok" : "wrong"));
}

void structural_lemmas() {
  gen::Rng rng(8080);
  std::size_t chain_checks = 0, chain_bad = 0;
  std::size_t cb_graphs = 0, bchain_bad = 0;
  std::size_t twoweak_graphs = 0, twoweak_bad = 0;

  for (int i = 0; i < 400; ++i) {
    const Graph g = gen::random_chain_graph(1 + i % 7, 1 + (i / 7) % 7, rng);
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
      ++chain_checks;
      const auto ball = neighbors_within_2(g, g.vertices(), v, false);
      const std::size_t second = ball.size() - g.degree(v);
      chain_bad += second <= g.max_degree() ? 0 : 1;
    }
  }

  for (int i = 0; i < 1500; ++i) {
    const std::size_t a = 1 + i % 6;
    const std::size_t b = 1 + (i / 6) % 6;
    const Graph g = gen::random_bipartite(a, b, 0.3 + 0.1 * (i % 4), rng);
    if (!oracle::is_chordal_bipartite_bruteforce(g, g.vertices())) continue;
    ++cb_graphs;
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
      bchain_bad += is_weak_simplicial(g, g.vertices(), v) ==
                            is_weak_simplicial_via_chain(g, g.vertices(), v)
                        ? 0
                        : 1;
    }
    bool dominating = false;
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
      dominating = dominating || g.degree(v) == (v <= a ? b : a);
    }
    if (dominating) continue;
    ++twoweak_graphs;
    const auto ws = compute_ws(g, g.vertices(), natural_ranking(g)).sorted_by_id();
    bool found = false;
    for (std::size_t p = 0; p < ws.size() && !found; ++p) {
      for (std::size_t q = p + 1; q < ws.size() && !found; ++q) found = !g.adjacent(ws[p], ws[q]);
    }
    twoweak_bad += found ? 0 : 1;
  }
  report(8, "structural-lemmas", chain_bad == 0 && bchain_bad == 0 && twoweak_bad == 0,
         fmt("chain-graph second neighborhoods %zu checked/%zu bad; chain equivalence on %zu "
             "chordal bipartite graphs/%zu bad; two non-adjacent weak-simplicial on %zu graphs/%zu bad",
             chain_checks, chain_bad, cb_graphs, bchain_bad, twoweak_graphs, twoweak_bad));
}

// Seconds per solution, repeating small instances so each measurement spans
// at least ~0.2 s.
double per_solution(const Graph& g, std::uint64_t& count) {
  const Ranking r = degeneracy_ranking(g);
  double best = 1e9;
  for (int trial = 0; trial < 3; ++trial) {
    std::uint64_t total = 0;
    const auto t0 = Clock::now();
    do {
      total += enumerate(g, r, [](const StateView&) {}).solutions;
    } while (seconds_since(t0) < 0.2);
    best = std::min(best, seconds_since(t0) / static_cast<double>(total));
  }
  count = enumerate(g, r, [](const StateView&) {}).solutions;
  return best;
}

void performance() {
  std::string detail;
  bool counts_ok = true;
  double first = 0, last = 0;
  for (std::size_t n = 12; n <= 20; n += 2) {
    std::uint64_t count = 0;
    const double t = per_solution(gen::path_graph(n), count);
    counts_ok = counts_ok && count == (std::uint64_t{1} << n);
    if (n == 12) first = t;
    last = t;
    detail += fmt("P%zu %.0f ns/sol; ", n, t * 1e9);
  }
  const double growth = last / first;

  const Graph grid = gen::grid_graph(4, 4);
  const auto t0 = Clock::now();
  const std::uint64_t grid_count = enumerate(grid, degeneracy_ranking(grid), [](const StateView&) {}).solutions;
  const double grid_secs = seconds_since(t0);
  const std::size_t grid_oracle = oracle::brute_enumerate(grid).size();

  detail += fmt("growth %.2fx; grid 4x4 %llu solutions in %.3f s (oracle %zu)", growth,
                static_cast<unsigned long long>(grid_count), grid_secs, grid_oracle);
  report(9, "performance-trend",
         counts_ok && growth <= 4.0 && grid_secs < 10.0 && grid_count == grid_oracle, detail);
}

}  // namespace

int main() {
  oracle_equivalence();
  derived_counts();
  recognition_and_cbeo();
  incremental();
  candidates_and_waste();
  hypergraphs();
  structural_lemmas();
  performance();
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
