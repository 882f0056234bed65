#include "firebreak/generators.hpp"

#include <stdexcept>

#include "firebreak/rng.hpp"

namespace firebreak {

Instance<double> gen_tree(int n, std::uint64_t seed, double burn_rate, long long budget) {
  if (n < 1) throw std::invalid_argument("tree size must be positive");
  SplitMix64 rng(seed);
  std::vector<VertexSpec<double>> vs;
  vs.reserve(n);
  for (int v = 0; v < n; ++v)
    vs.push_back({1.0, rng.next_double() < burn_rate ? 1.0 : 0.0});
  std::vector<EdgeSpec<double>> es;
  es.reserve(n - 1);
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng.next_below(v));
    es.push_back({parent, v, false, 1.0, 1.0});
  }
  return Instance<double>{build_graph<double>(std::move(vs), std::move(es)),
                          static_cast<double>(budget), {}};
}

Instance<double> gen_grid(int n, std::uint64_t seed, double burn_rate, long long budget) {
  if (n < 1) throw std::invalid_argument("grid side must be positive");
  SplitMix64 rng(seed);
  std::vector<VertexSpec<double>> vs;
  vs.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n * n; ++i)
    vs.push_back({1.0, rng.next_double() < burn_rate ? 1.0 : 0.0});
  std::vector<EdgeSpec<double>> es;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n) es.push_back({r * n + c, r * n + c + 1, false, 1.0, 1.0});
      if (r + 1 < n) es.push_back({r * n + c, (r + 1) * n + c, false, 1.0, 1.0});
    }
  return Instance<double>{build_graph<double>(std::move(vs), std::move(es)),
                          static_cast<double>(budget), {}};
}

Instance<double> gen_random(int n, std::uint64_t seed, double edge_prob, long long budget) {
  if (n < 1) throw std::invalid_argument("graph size must be positive");
  SplitMix64 rng(seed);
  std::vector<VertexSpec<double>> vs;
  for (int v = 0; v < n; ++v)
    vs.push_back({1.0 + static_cast<double>(rng.next_below(5)), rng.next_double()});
  std::vector<EdgeSpec<double>> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (rng.next_double() >= edge_prob) continue;
      double cost = 1.0 + static_cast<double>(rng.next_below(3));
      std::uint64_t kind = rng.next_below(10);
      if (kind < 5) {
        es.push_back({a, b, false, rng.next_double(), cost});
      } else if (kind < 8) {
        bool forward = rng.next_below(2) == 0;
        es.push_back({forward ? a : b, forward ? b : a, true, rng.next_double(), cost});
      } else {
        es.push_back({a, b, true, rng.next_double(), cost});
        es.push_back({b, a, true, rng.next_double(), cost});
      }
    }
  return Instance<double>{build_graph<double>(std::move(vs), std::move(es)),
                          static_cast<double>(budget), {}};
}

PartitionStarResult gen_star(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("star size must be positive");
  SplitMix64 rng(seed);
  std::vector<long long> weights;
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    long long w = 1 + static_cast<long long>(rng.next_below(9));
    weights.push_back(w);
    total += w;
  }
  if (total % 2 != 0) ++weights.back();
  return partition_to_star(weights);
}

}  // namespace firebreak
