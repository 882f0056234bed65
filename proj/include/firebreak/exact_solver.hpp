#pragma once

#include <vector>

#include "firebreak/graph.hpp"
#include "firebreak/risk.hpp"

namespace firebreak {

template <class T>
struct Solution {
  CutSystem cut;
  T cost{};
  T risk{};
  T saved{};
};

struct ExactSolverOptions {
  int max_links = 22;          // affordable cut links enumerated exhaustively
  int enumeration_bound = 20;  // spread-realization bound for non-windy risk
};

namespace detail {

template <class T>
T masked_risk(const MixedGraph<T>& g, const std::vector<char>& removed, int enumeration_bound) {
  if (is_windy(g)) return windy_risk_masked<T>(g, &removed);
  // Non-windy: enumerate spread realizations over surviving edges.
  std::vector<int> random_edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (removed[e]) continue;
    const T& s = g.edge(e).spread;
    if (s != T(0) && s != T(1)) random_edges.push_back(e);
  }
  if (static_cast<int>(random_edges.size()) > enumeration_bound)
    graph_error("exact_risk enumeration bound exceeded");
  std::vector<char> mask = removed;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!removed[e] && g.edge(e).spread == T(0)) mask[e] = 1;
  const std::size_t m = random_edges.size();
  T risk(0);
  for (std::uint64_t bits = 0; bits < (1ull << m); ++bits) {
    T weight(1);
    for (std::size_t i = 0; i < m; ++i) {
      const T& s = g.edge(random_edges[i]).spread;
      if (bits & (1ull << i)) {
        mask[random_edges[i]] = 0;
        weight *= s;
      } else {
        mask[random_edges[i]] = 1;
        weight *= T(1) - s;
      }
    }
    if (weight != T(0)) risk += weight * windy_risk_masked<T>(g, &mask);
  }
  return risk;
}

}  // namespace detail

// Exhaustive minimum-risk cut system of cost <= B. Enumerates subsets of
// cut links (closure holds by construction); links costing more than
// the budget are pruned upfront, and branches are cut once the budget
// is spent. Ties on risk resolve to the lexicographically smallest
// member set.
template <class T>
Solution<T> solve_exhaustive(const Instance<T>& inst, const ExactSolverOptions& opts = {}) {
  inst.validate();
  const auto& g = inst.graph;

  struct AffordableLink {
    T cost;
    std::vector<int> edge_ids;
  };
  std::vector<AffordableLink> links;
  for (const auto& link : cut_links(g)) {
    T c = link_cost(g, link);
    if (c <= inst.budget) links.push_back({c, link.edge_ids});
  }
  if (static_cast<int>(links.size()) > opts.max_links)
    detail::graph_error("solve_exhaustive link bound exceeded");

  std::vector<char> removed(g.edge_count(), 0);
  std::vector<int> chosen_edges;
  Solution<T> best;
  bool have_best = false;

  auto evaluate = [&]() {
    T risk = detail::masked_risk<T>(g, removed, opts.enumeration_bound);
    if (have_best && risk > best.risk) return;
    std::vector<int> members = chosen_edges;
    std::sort(members.begin(), members.end());
    if (!have_best || risk < best.risk ||
        std::lexicographical_compare(members.begin(), members.end(),
                                     best.cut.members.begin(), best.cut.members.end())) {
      have_best = true;
      best.cut.members = std::move(members);
      best.risk = risk;
    }
  };

  auto rec = [&](auto&& self, std::size_t idx, T remaining) -> void {
    if (idx == links.size()) {
      evaluate();
      return;
    }
    self(self, idx + 1, remaining);
    if (links[idx].cost <= remaining) {
      for (int e : links[idx].edge_ids) {
        removed[e] = 1;
        chosen_edges.push_back(e);
      }
      self(self, idx + 1, remaining - links[idx].cost);
      for (std::size_t k = 0; k < links[idx].edge_ids.size(); ++k) chosen_edges.pop_back();
      for (int e : links[idx].edge_ids) removed[e] = 0;
    }
  };
  rec(rec, 0, inst.budget);

  best.cost = cut_cost(g, best.cut);
  best.saved = total_value(g) - best.risk;
  return best;
}

// Decision form: is there a cut system with cost <= B and risk <= R?
// Enumerates like solve_exhaustive but stops at the first witness,
// which is equivalent to comparing the optimum against R.
template <class T>
bool decide(const Instance<T>& inst, const ExactSolverOptions& opts = {}) {
  if (!inst.risk_threshold) detail::graph_error("decide requires a risk threshold");
  inst.validate();
  const auto& g = inst.graph;
  const T& threshold = *inst.risk_threshold;

  struct AffordableLink {
    T cost;
    std::vector<int> edge_ids;
  };
  std::vector<AffordableLink> links;
  for (const auto& link : cut_links(g)) {
    T c = link_cost(g, link);
    if (c <= inst.budget) links.push_back({c, link.edge_ids});
  }
  if (static_cast<int>(links.size()) > opts.max_links)
    detail::graph_error("decide link bound exceeded");

  std::vector<char> removed(g.edge_count(), 0);
  auto rec = [&](auto&& self, std::size_t idx, T remaining) -> bool {
    if (idx == links.size())
      return detail::masked_risk<T>(g, removed, opts.enumeration_bound) <= threshold;
    if (self(self, idx + 1, remaining)) return true;
    if (links[idx].cost <= remaining) {
      for (int e : links[idx].edge_ids) removed[e] = 1;
      bool found = self(self, idx + 1, remaining - links[idx].cost);
      for (int e : links[idx].edge_ids) removed[e] = 0;
      if (found) return true;
    }
    return false;
  };
  return rec(rec, 0, inst.budget);
}

}  // namespace firebreak
