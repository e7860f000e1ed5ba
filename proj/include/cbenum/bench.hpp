#ifndef CBENUM_BENCH_HPP
#define CBENUM_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cbenum/graph.hpp"

namespace cbenum::bench {

struct BenchInstance {
  std::string name;
  Graph graph;
};

struct BenchRecord {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::uint32_t degeneracy = 0;
  std::uint64_t solutions = 0;
  double seconds = 0.0;
  double seconds_per_solution = 0.0;
  std::uint64_t max_waste = 0;
  std::uint64_t waste_bound = 0;  // 2 k Δ
  bool skipped = false;
  std::string note;

  /// waste_bound - max_waste (negative would mean the bound failed).
  std::int64_t bound_margin() const {
    return static_cast<std::int64_t>(waste_bound) - static_cast<std::int64_t>(max_waste);
  }
};

/// Families: "path", "cycle-pendants", "path-pendants", "grid" (size = side
/// length), "random-deg4" (bounded-degree random, Δ <= 4, fixed seed).
std::vector<BenchInstance> make_family(const std::string& family, const std::vector<std::size_t>& sizes,
                                       std::uint64_t seed = 1);

/// Enumerates each instance under its degeneracy ranking. Instances with more
/// than `cap` solutions are stopped at the cap and marked skipped.
std::vector<BenchRecord> run_bench(const std::vector<BenchInstance>& instances,
                                   std::uint64_t cap = std::uint64_t{1} << 20);

BenchRecord run_one(const BenchInstance& instance, std::uint64_t cap = std::uint64_t{1} << 20);

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace cbenum::bench

#endif  // CBENUM_BENCH_HPP
