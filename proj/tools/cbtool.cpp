// cbtool: command-line front end for chordal bipartite recognition,
// induced-subgraph enumeration and beta-acyclicity tests.
//
// Exit codes: 0 = yes / success, 1 = no, 2 = error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cbenum/bench.hpp"
#include "cbenum/enumeration.hpp"
#include "cbenum/hypergraph.hpp"
#include "cbenum/io.hpp"
#include "cbenum/oracle.hpp"
#include "cbenum/ordering.hpp"
#include "cbenum/recognition.hpp"

namespace {

using namespace cbenum;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

Ranking make_ranking(const Graph& g, const std::string& kind) {
  return kind == "natural" ? natural_ranking(g) : degeneracy_ranking(g);
}

struct EnumerateArgs {
  std::string file;
  bool count_only = false;
  bool no_empty = false;
  bool stats = false;
  std::uint64_t limit = 0;
  std::string ranking = "degeneracy";
};

int run_enumerate(const EnumerateArgs& a) {
  const Graph g = io::read_graph_file(a.file);
  const Ranking r = make_ranking(g, a.ranking);

  EnumOptions options;
  if (a.limit > 0) options.limit = a.limit + (a.no_empty ? 1 : 0);
  std::uint64_t printed = 0;
  std::ios::sync_with_stdio(false);
  const EnumStats stats = enumerate(
      g, r,
      [&](const StateView& s) {
        if (a.no_empty && s.members.empty()) return;
        ++printed;
        if (!a.count_only) io::write_solution(std::cout, s.sorted());
      },
      options);

  if (a.count_only) std::cout << printed << '\n';
  std::cout.flush();
  if (a.stats) {
    std::cerr << "solutions " << printed << '\n'
              << "candidate_attempts " << stats.candidate_attempts << '\n'
              << "rejected " << stats.rejected << '\n'
              << "max_waste " << stats.max_waste << '\n'
              << "waste_bound " << 2ULL * r.degeneracy() * g.max_degree() << '\n'
              << "max_depth " << stats.max_depth << '\n';
  }
  if (stats.limit_reached) {
    std::cerr << "note: limit of " << a.limit << " solutions reached; output is partial\n";
  }
  return kYes;
}

int run_recognize(const std::string& file) {
  const Graph g = io::read_graph_file(file);
  const Recognition result = is_chordal_bipartite(g);
  std::cout << (result.chordal_bipartite ? "yes" : "no") << '\n'
            << describe(result.certificate) << '\n';
  return result.chordal_bipartite ? kYes : kNo;
}

int run_cbeo(const std::string& file, const std::string& ranking) {
  const Graph g = io::read_graph_file(file);
  const Certificate cert = find_cbeo(g, g.vertices(), make_ranking(g, ranking));
  if (const auto* found = std::get_if<CbeoFound>(&cert)) {
    io::write_solution(std::cout, found->cbeo.order);
    return kYes;
  }
  std::cout << "none\n" << describe(cert) << '\n';
  return kNo;
}

int run_degeneracy(const std::string& file) {
  const Graph g = io::read_graph_file(file);
  const Ranking r = degeneracy_ranking(g);
  std::cout << r.degeneracy() << '\n';
  io::write_solution(std::cout, r.order());
  return kYes;
}

int run_beta_acyclic(const std::string& file, const std::string& method) {
  std::vector<std::string> warnings;
  const Hypergraph h = io::read_hypergraph_file(file, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';

  if (method == "elimination") {
    const auto order = beta_elimination_ordering(h);
    std::cout << (order ? "yes" : "no") << '\n';
    if (order) {
      std::cout << "elimination-order";
      for (const auto& l : *order) std::cout << ' ' << l;
      std::cout << '\n';
    }
    return order ? kYes : kNo;
  }
  if (method == "brute") {
    const auto cycle = find_beta_cycle(h);
    std::cout << (cycle ? "no" : "yes") << '\n';
    if (cycle) {
      std::cout << "beta-cycle";
      for (auto j : *cycle) std::cout << ' ' << 'e' << (j + 1);
      std::cout << '\n';
    }
    return cycle ? kNo : kYes;
  }
  const auto inc = incidence_graph(h);
  const Recognition result = is_chordal_bipartite(inc.graph);
  std::cout << (result.chordal_bipartite ? "yes" : "no") << '\n';
  return result.chordal_bipartite ? kYes : kNo;
}

int run_oracle_enumerate(const std::string& file, bool count_only, bool no_empty) {
  const Graph g = io::read_graph_file(file);
  const auto all = oracle::brute_enumerate(g);
  std::uint64_t printed = 0;
  for (const auto& x : all) {
    if (no_empty && x.empty()) continue;
    ++printed;
    if (!count_only) io::write_solution(std::cout, x);
  }
  if (count_only) std::cout << printed << '\n';
  return kYes;
}

int run_compare(const std::string& file, const std::string& ranking) {
  const Graph g = io::read_graph_file(file);
  const auto expected = oracle::brute_enumerate(g);
  const Ranking r = make_ranking(g, ranking);
  std::map<VertexSet, std::size_t> seen;
  std::uint64_t emitted = 0;
  enumerate(g, r, [&](const StateView& s) {
    ++emitted;
    ++seen[s.sorted()];
  });
  std::size_t duplicates = 0;
  for (const auto& [x, count] : seen) duplicates += count - 1;
  const std::set<VertexSet> oracle_set(expected.begin(), expected.end());
  std::size_t missing = 0;
  for (const auto& x : oracle_set) missing += seen.count(x) ? 0 : 1;
  std::size_t extra = 0;
  for (const auto& [x, count] : seen) extra += oracle_set.count(x) ? 0 : 1;

  if (missing == 0 && extra == 0 && duplicates == 0) {
    std::cout << "match: " << emitted << " solutions\n";
    return kYes;
  }
  std::cout << "mismatch: enumerate " << emitted << ", oracle " << expected.size() << ", missing "
            << missing << ", extra " << extra << ", duplicates " << duplicates << '\n';
  return kNo;
}

int run_bench_cmd(const std::vector<std::string>& families, const std::vector<std::size_t>& sizes,
                  std::uint64_t cap, std::uint64_t seed, const std::string& output) {
  std::vector<bench::BenchRecord> records;
  for (const auto& family : families) {
    auto part = bench::run_bench(bench::make_family(family, sizes, seed), cap);
    records.insert(records.end(), part.begin(), part.end());
  }
  if (output.empty() || output == "-") {
    bench::write_csv(std::cout, records);
  } else {
    std::ofstream out(output);
    if (!out) throw InputError("cannot write '" + output + "'");
    bench::write_csv(out, records);
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cbtool: chordal bipartite recognition and induced-subgraph enumeration.\n"
      "Graph files: '#' comments, header \"n m\", then m lines \"u v\" (1-based).\n"
      "Solutions print one per line, ascending; the empty set is an empty line,\n"
      "so `wc -l` equals the solution count."};
  app.require_subcommand(1);

  EnumerateArgs ea;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate chordal bipartite induced subgraphs");
  enumerate_cmd->add_option("file", ea.file, "Graph file")->required();
  enumerate_cmd->add_flag("--count-only", ea.count_only, "Print only the number of solutions");
  enumerate_cmd->add_flag("--no-empty", ea.no_empty, "Do not print the empty solution");
  enumerate_cmd->add_flag("--stats", ea.stats, "Print traversal statistics to stderr");
  enumerate_cmd->add_option("--limit", ea.limit, "Stop after N solutions");
  enumerate_cmd->add_option("--ranking", ea.ranking, "Vertex ranking")
      ->check(CLI::IsMember({"natural", "degeneracy"}));

  std::string file;
  auto* recognize_cmd = app.add_subcommand("recognize", "Decide chordal bipartiteness with a certificate");
  recognize_cmd->add_option("file", file, "Graph file")->required();

  std::string ranking = "degeneracy";
  auto* cbeo_cmd = app.add_subcommand("cbeo", "Print a chordal-bipartite elimination ordering");
  cbeo_cmd->add_option("file", file, "Graph file")->required();
  cbeo_cmd->add_option("--ranking", ranking, "Tie-break ranking (highest rank removed first)")
      ->check(CLI::IsMember({"natural", "degeneracy"}));

  auto* degeneracy_cmd = app.add_subcommand("degeneracy", "Print k, then vertices in ascending rank");
  degeneracy_cmd->add_option("file", file, "Graph file")->required();

  std::string method = "incidence";
  auto* beta_cmd = app.add_subcommand("beta-acyclic", "Test a hypergraph for beta-acyclicity");
  beta_cmd->add_option("file", file, "Hypergraph file (one edge per line)")->required();
  beta_cmd->add_option("--method", method, "Decision method")
      ->check(CLI::IsMember({"incidence", "elimination", "brute"}));

  bool oracle_count_only = false;
  bool oracle_no_empty = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive reference computations");
  oracle_cmd->require_subcommand(1);
  auto* oracle_enum = oracle_cmd->add_subcommand("enumerate", "Brute-force solution list (n <= 20)");
  oracle_enum->add_option("file", file, "Graph file")->required();
  oracle_enum->add_flag("--count-only", oracle_count_only, "Print only the number of solutions");
  oracle_enum->add_flag("--no-empty", oracle_no_empty, "Do not print the empty solution");

  auto* compare_cmd = app.add_subcommand("compare", "Check enumerate against the brute-force oracle");
  compare_cmd->add_option("file", file, "Graph file")->required();
  compare_cmd->add_option("--ranking", ranking, "Vertex ranking")
      ->check(CLI::IsMember({"natural", "degeneracy"}));

  std::vector<std::string> families{"path"};
  std::vector<std::size_t> sizes{12, 14, 16, 18, 20};
  std::uint64_t cap = std::uint64_t{1} << 20;
  std::uint64_t seed = 1;
  std::string output;
  auto* bench_cmd = app.add_subcommand("bench", "Time enumeration on generated families (CSV)");
  bench_cmd->add_option("--family", families, "path, path-pendants, cycle-pendants, grid, random-deg4");
  bench_cmd->add_option("--sizes", sizes, "Instance sizes");
  bench_cmd->add_option("--cap", cap, "Skip instances with more solutions than this");
  bench_cmd->add_option("--seed", seed, "Seed for random families");
  bench_cmd->add_option("--output,-o", output, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }

  try {
    if (*enumerate_cmd) return run_enumerate(ea);
    if (*recognize_cmd) return run_recognize(file);
    if (*cbeo_cmd) return run_cbeo(file, ranking);
    if (*degeneracy_cmd) return run_degeneracy(file);
    if (*beta_cmd) return run_beta_acyclic(file, method);
    if (*oracle_enum) return run_oracle_enumerate(file, oracle_count_only, oracle_no_empty);
    if (*compare_cmd) return run_compare(file, ranking);
    if (*bench_cmd) return run_bench_cmd(families, sizes, cap, seed, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
