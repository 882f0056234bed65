#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace firebreak {

struct BenchRecord {
  std::string id;
  int vertices = 0;
  int edges = 0;
  long long budget = 0;
  std::string algo;
  double millis = 0.0;  // average per solve over the case's repetitions
  double value = 0.0;   // saved value reported by the solver
};

// Columns fixed for regression tracking of the |V| * B^2 scaling claim.
std::string bench_csv(const std::vector<BenchRecord>& records);

// Suite file: {"cases": [{"id": str, "kind": "tree"|"file", "n": int,
// "budget": int, "seed": int, "burn_rate": num, "algo":
// "tree"|"exhaustive", "reps": int, "file": str}]}.
std::vector<BenchRecord> run_bench_suite(const std::string& suite_json);

// One generated-tree measurement, shared with the scaling check.
BenchRecord bench_tree_case(const std::string& id, int n, long long budget,
                            std::uint64_t seed, double burn_rate, int reps);

}  // namespace firebreak
