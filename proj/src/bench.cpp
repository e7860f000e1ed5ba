#include "cbenum/bench.hpp"

#include <chrono>
#include <ostream>

#include "cbenum/enumeration.hpp"
#include "cbenum/generators.hpp"
#include "cbenum/ordering.hpp"

namespace cbenum::bench {

std::vector<BenchInstance> make_family(const std::string& family,
                                       const std::vector<std::size_t>& sizes, std::uint64_t seed) {
  std::vector<BenchInstance> out;
  gen::Rng rng(seed);
  for (std::size_t s : sizes) {
    const std::string name = family + "-" + std::to_string(s);
    if (family == "path") {
      out.push_back({name, gen::path_graph(s)});
    } else if (family == "cycle-pendants") {
      out.push_back({name, gen::cycle_with_pendants(s)});
    } else if (family == "path-pendants") {
      out.push_back({name, gen::path_with_pendants(s)});
    } else if (family == "grid") {
      out.push_back({name, gen::grid_graph(s, s)});
    } else if (family == "random-deg4") {
      out.push_back({name, gen::random_bounded_degree(s, 4, 0.5, rng)});
    } else {
      throw InputError("unknown bench family '" + family + "'");
    }
  }
  return out;
}

BenchRecord run_one(const BenchInstance& instance, std::uint64_t cap) {
  const Graph& g = instance.graph;
  const Ranking r = degeneracy_ranking(g);
  BenchRecord rec;
  rec.name = instance.name;
  rec.n = g.num_vertices();
  rec.m = g.num_edges();
  rec.max_degree = g.max_degree();
  rec.degeneracy = r.degeneracy();
  rec.waste_bound = 2ULL * r.degeneracy() * g.max_degree();

  EnumOptions options;
  options.limit = cap + 1;
  const auto start = std::chrono::steady_clock::now();
  const EnumStats stats = enumerate(g, r, [](const StateView&) {}, options);
  const auto stop = std::chrono::steady_clock::now();

  rec.solutions = stats.solutions;
  rec.seconds = std::chrono::duration<double>(stop - start).count();
  rec.seconds_per_solution = rec.solutions ? rec.seconds / static_cast<double>(rec.solutions) : 0.0;
  rec.max_waste = stats.max_waste;
  if (stats.solutions > cap) {
    rec.skipped = true;
    rec.note = "more than " + std::to_string(cap) + " solutions; stopped at the cap";
  }
  return rec;
}

std::vector<BenchRecord> run_bench(const std::vector<BenchInstance>& instances, std::uint64_t cap) {
  std::vector<BenchRecord> out;
  out.reserve(instances.size());
  for (const auto& inst : instances) out.push_back(run_one(inst, cap));
  return out;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "name,n,m,max_degree,degeneracy,solutions,seconds,seconds_per_solution,max_waste,"
         "waste_bound,bound_margin,skipped,note\n";
  for (const auto& r : records) {
    out << r.name << ',' << r.n << ',' << r.m << ',' << r.max_degree << ',' << r.degeneracy << ','
        << r.solutions << ',' << r.seconds << ',' << r.seconds_per_solution << ',' << r.max_waste
        << ',' << r.waste_bound << ',' << r.bound_margin() << ',' << (r.skipped ? 1 : 0) << ','
        << '"' << r.note << '"' << '\n';
  }
}

}  // namespace cbenum::bench
