#pragma once

#include <string>
#include <utility>
#include <vector>

#include "firebreak/graph.hpp"
#include "firebreak/sat.hpp"

namespace firebreak {

// Traceability record emitted next to every constructed instance: the
// defining parameters as exact strings plus a per-element provenance
// map naming the gadget each vertex/edge came from.
struct ReductionCertificate {
  std::string kind;
  std::string source;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> vertex_origin;
  std::vector<std::string> edge_origin;
};

std::string certificate_json(const ReductionCertificate& cert);

// Partition -> star: center burns, leaf i has value s_i and its edge
// costs s_i; B = R = S where 2S is the total. Rejects odd totals.
struct PartitionStarResult {
  Instance<Rational> instance;
  ReductionCertificate certificate;
};
PartitionStarResult partition_to_star(const std::vector<long long>& weights);

// Max2SAT -> windy firebreak instance on the bipartite degree-5 gadget
// graph: a value-nu P3 per variable, a value-omega P3 per clause, and a
// unit-value binding vertex fed by two uncuttable directed edges per
// (literal, clause) incidence. Parameters follow the closed forms
// s = m+1, q = 1 - 1/(2K-1), omega = 8m(2K-1), nu = 8m(5 omega/2 + 2),
// B = ns + m, R = 2 n nu + m omega (3/2 + q) + m (7/4 + q/8) - K/8.
// Requires K >= 1 and every literal in at most four clauses.
struct WflReductionResult {
  Instance<Rational> instance;
  ReductionCertificate certificate;
  Rational s, q, omega, nu;
  std::vector<int> variable_path_vertices;  // 3 per variable: x, x', x-bar
};
WflReductionResult max2sat_to_wfl(const Max2SatInstance& phi);

// Value flattening: subdivide edges so every vertex value becomes 1,
// preserving risk for every affordable cut system. All of a vertex's
// surplus goes onto its first incident edge (lowest edge id); edges
// interior to an expanded vertex cost B+1. Requires a windy instance
// with positive integer values.
struct FlattenValuesResult {
  Instance<Rational> instance;
  ReductionCertificate certificate;
  std::vector<int> boundary_edge;  // original edge id -> target edge id
};
FlattenValuesResult flatten_values(const Instance<Rational>& inst);

// Cost flattening: every vertex becomes an M x M unit grid, every edge
// a bundle of kappa unit-cost joining edges spread along the grid
// perimeters; grid vertices get ignition 1 - (1 - pi_x)^(1/M^2). B is
// unchanged and the threshold scales to M^2 R. Requires a windy
// undirected instance with unit values, integer costs <= f_bound,
// f_bound * pi_i integral, an integral budget and a threshold.
struct FlattenCostsResult {
  Instance<double> instance;
  ReductionCertificate certificate;
  std::vector<std::vector<int>> joining_edges;  // original edge id -> target ids
  long long m_param = 0;
  long long c_param = 0;
};
FlattenCostsResult flatten_costs(const Instance<Rational>& inst, long long f_bound);

struct StructureReport {
  int max_degree = 0;  // incident links, a mutual directed pair counts once
  bool bipartite = false;
  bool windy = false;
  bool unit_values = false;
  bool unit_costs = false;
  std::string planarity = "not checked";
};

template <class T>
StructureReport check_structure(const MixedGraph<T>& g) {
  StructureReport report;
  report.windy = is_windy(g);

  std::vector<int> degree(g.vertex_count(), 0);
  std::vector<std::vector<int>> nbr(g.vertex_count());
  for (const auto& link : cut_links(g)) {
    const auto& e = g.edge(link.edge_ids.front());
    ++degree[e.tail];
    ++degree[e.head];
    nbr[e.tail].push_back(e.head);
    nbr[e.head].push_back(e.tail);
  }
  for (int d : degree) report.max_degree = std::max(report.max_degree, d);

  report.bipartite = true;
  std::vector<int> color(g.vertex_count(), -1);
  for (int s = 0; s < g.vertex_count() && report.bipartite; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty() && report.bipartite) {
      int v = stack.back();
      stack.pop_back();
      for (int w : nbr[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          report.bipartite = false;
          break;
        }
      }
    }
  }

  report.unit_values = true;
  for (const auto& v : g.vertices())
    if (v.value != T(1)) report.unit_values = false;
  report.unit_costs = true;
  for (const auto& e : g.edges())
    if (e.cost != T(1)) report.unit_costs = false;
  return report;
}

}  // namespace firebreak
