#pragma once

#include <vector>

#include "firebreak/graph.hpp"
#include "firebreak/rng.hpp"

namespace firebreak::testing {

// Random probability p/q with small denominator, endpoints included.
inline Rational random_probability(SplitMix64& rng, int max_den = 6) {
  long long q = 1 + static_cast<long long>(rng.next_below(max_den));
  long long p = static_cast<long long>(rng.next_below(q + 1));
  return Rational(p, q);
}

// Random mixed graph in rational mode: a mix of undirected edges, lone
// directed edges and mutual directed pairs, no parallel duplicates.
inline MixedGraph<Rational> random_mixed_graph(SplitMix64& rng, int max_vertices,
                                               int max_links, bool windy) {
  int n = 1 + static_cast<int>(rng.next_below(max_vertices));
  std::vector<VertexSpec<Rational>> vs;
  for (int v = 0; v < n; ++v)
    vs.push_back({Rational(rng.next_below(4)), random_probability(rng)});

  std::vector<EdgeSpec<Rational>> es;
  std::vector<std::pair<int, int>> used;
  int want = static_cast<int>(rng.next_below(max_links + 1));
  for (int k = 0; k < want; ++k) {
    if (n < 2) break;
    int a = static_cast<int>(rng.next_below(n));
    int b = static_cast<int>(rng.next_below(n));
    if (a == b) continue;
    auto key = std::minmax(a, b);
    bool dup = false;
    for (auto& u : used)
      if (u == std::pair<int, int>(key.first, key.second)) dup = true;
    if (dup) continue;
    used.push_back({key.first, key.second});

    Rational cost(1 + rng.next_below(4));
    auto spread = [&]() { return windy ? Rational(1) : random_probability(rng); };
    switch (rng.next_below(3)) {
      case 0:
        es.push_back({a, b, false, spread(), cost});
        break;
      case 1:
        es.push_back({a, b, true, spread(), cost});
        break;
      default:
        es.push_back({a, b, true, spread(), cost});
        es.push_back({b, a, true, spread(), cost});
        break;
    }
  }
  return build_graph<Rational>(std::move(vs), std::move(es));
}

// Random tree instance (windy, undirected) with binary ignitions.
template <class T>
Instance<T> random_tree_instance(SplitMix64& rng, int n, long long budget,
                                 int max_value, int max_cost, double burn_rate = 0.35) {
  std::vector<VertexSpec<T>> vs;
  for (int v = 0; v < n; ++v) {
    T value = num_traits<T>::from_int(max_value <= 1 ? 1 : 1 + static_cast<long long>(rng.next_below(max_value)));
    T ign = num_traits<T>::from_int(rng.next_double() < burn_rate ? 1 : 0);
    vs.push_back({value, ign});
  }
  std::vector<EdgeSpec<T>> es;
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng.next_below(v));
    T cost = num_traits<T>::from_int(max_cost <= 1 ? 1 : 1 + static_cast<long long>(rng.next_below(max_cost)));
    es.push_back({parent, v, false, num_traits<T>::from_int(1), cost});
  }
  return Instance<T>{build_graph<T>(std::move(vs), std::move(es)),
                     num_traits<T>::from_int(budget), {}};
}

}  // namespace firebreak::testing
