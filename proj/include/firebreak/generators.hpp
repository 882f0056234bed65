#pragma once

#include <cstdint>
#include <vector>

#include "firebreak/graph.hpp"
#include "firebreak/reductions.hpp"

namespace firebreak {

// Deterministic instance generators: the same (kind, params, seed)
// always produces the same instance, hence byte-identical files.

// Uniform random tree via parent sampling; unit values and costs,
// binary ignitions drawn at burn_rate.
Instance<double> gen_tree(int n, std::uint64_t seed, double burn_rate, long long budget);

// n x n grid, unit values and costs, binary ignitions.
Instance<double> gen_grid(int n, std::uint64_t seed, double burn_rate, long long budget);

// Random mixed graph in float mode: undirected edges, lone directed
// edges and mutual pairs, with general probabilities.
Instance<double> gen_random(int n, std::uint64_t seed, double edge_prob, long long budget);

// Star wired through the partition reduction; weights drawn in 1..9 and
// patched to an even sum.
PartitionStarResult gen_star(int n, std::uint64_t seed);

}  // namespace firebreak
