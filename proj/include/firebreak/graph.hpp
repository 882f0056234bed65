#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "firebreak/rational.hpp"

namespace firebreak {

// Mixed graph: vertices carry a value phi and an ignition probability,
// edges carry a spread probability and a removal cost. Two opposite
// directed edges between the same endpoints are stored separately but
// linked through `pair`, and must share one cost (removing the link
// removes both). An undirected edge has pair == -1 and is atomic.
template <class T>
struct Vertex {
  T value{};
  T ignition{};
};

template <class T>
struct Edge {
  int tail = -1;
  int head = -1;
  bool directed = false;
  T spread{};
  T cost{};
  int pair = -1;  // opposite directed edge, -1 if none
};

template <class T>
struct VertexSpec {
  T value{};
  T ignition{};
};

template <class T>
struct EdgeSpec {
  int tail = -1;
  int head = -1;
  bool directed = false;
  T spread{};
  T cost{};
};

namespace detail {
[[noreturn]] void graph_error(const std::string& what);
}

// Edge subset closed under the opposite-edge pairing rule; members are
// sorted unique edge ids.
struct CutSystem {
  std::vector<int> members;

  bool contains(int edge_id) const {
    return std::binary_search(members.begin(), members.end(), edge_id);
  }
  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  friend bool operator==(const CutSystem&, const CutSystem&) = default;
};

template <class T>
class MixedGraph {
 public:
  MixedGraph() = default;

  // Validates specs, resolves opposite-pair links, builds adjacency.
  static MixedGraph build(std::vector<VertexSpec<T>> vertices,
                          std::vector<EdgeSpec<T>> edges) {
    MixedGraph g;
    g.vertices_.reserve(vertices.size());
    for (const auto& vs : vertices) {
      if (vs.value < T(0)) detail::graph_error("vertex value must be non-negative");
      if (vs.ignition < T(0) || vs.ignition > T(1))
        detail::graph_error("ignition probability out of [0,1]");
      g.vertices_.push_back(Vertex<T>{vs.value, vs.ignition});
    }
    const int n = static_cast<int>(g.vertices_.size());
    g.edges_.reserve(edges.size());
    for (const auto& es : edges) {
      if (es.tail < 0 || es.tail >= n || es.head < 0 || es.head >= n)
        detail::graph_error("edge endpoint out of range");
      if (es.tail == es.head) detail::graph_error("self-loops are not allowed");
      if (es.spread < T(0) || es.spread > T(1))
        detail::graph_error("spread probability out of [0,1]");
      if (es.cost < T(0)) detail::graph_error("edge cost must be non-negative");
      g.edges_.push_back(Edge<T>{es.tail, es.head, es.directed, es.spread, es.cost, -1});
    }
    g.link_pairs();
    g.rebuild_adjacency();
    return g;
  }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Vertex<T>& vertex(int v) const { return vertices_[v]; }
  const Edge<T>& edge(int e) const { return edges_[e]; }
  const std::vector<Vertex<T>>& vertices() const { return vertices_; }
  const std::vector<Edge<T>>& edges() const { return edges_; }

  // Edges usable to leave v (undirected edges appear for both endpoints).
  std::span<const int> out_edges(int v) const { return out_[v]; }
  // Edges usable to enter v.
  std::span<const int> in_edges(int v) const { return in_[v]; }

  int other_end(int edge_id, int v) const {
    const auto& e = edges_[edge_id];
    return e.tail == v ? e.head : e.tail;
  }

 private:
  void link_pairs() {
    // Key: tail * n + head for directed, unordered key for undirected.
    const long long n = vertex_count();
    std::vector<std::pair<long long, int>> directed_keys;
    std::vector<long long> undirected_keys;
    for (int i = 0; i < edge_count(); ++i) {
      const auto& e = edges_[i];
      long long lo = std::min(e.tail, e.head), hi = std::max(e.tail, e.head);
      if (e.directed)
        directed_keys.emplace_back(e.tail * n + e.head, i);
      else
        undirected_keys.push_back(lo * n + hi);
    }
    std::sort(undirected_keys.begin(), undirected_keys.end());
    if (std::adjacent_find(undirected_keys.begin(), undirected_keys.end()) !=
        undirected_keys.end())
      detail::graph_error("duplicate undirected edge between the same endpoints");

    std::sort(directed_keys.begin(), directed_keys.end());
    for (std::size_t k = 1; k < directed_keys.size(); ++k)
      if (directed_keys[k].first == directed_keys[k - 1].first)
        detail::graph_error("duplicate directed edge between the same endpoints");

    auto find_directed = [&](long long key) -> int {
      auto it = std::lower_bound(directed_keys.begin(), directed_keys.end(),
                                 std::make_pair(key, -1));
      if (it != directed_keys.end() && it->first == key) return it->second;
      return -1;
    };

    for (int i = 0; i < edge_count(); ++i) {
      auto& e = edges_[i];
      long long lo = std::min(e.tail, e.head), hi = std::max(e.tail, e.head);
      if (!e.directed) {
        if (find_directed(e.tail * n + e.head) >= 0 ||
            find_directed(e.head * n + e.tail) >= 0)
          detail::graph_error("undirected and directed edges between the same endpoints");
        (void)lo;
        (void)hi;
        continue;
      }
      int opp = find_directed(e.head * n + e.tail);
      if (opp >= 0) {
        if (edges_[opp].cost != e.cost)
          detail::graph_error("opposite directed edges must have equal costs");
        e.pair = opp;
      }
    }
  }

  void rebuild_adjacency() {
    out_.assign(vertex_count(), {});
    in_.assign(vertex_count(), {});
    for (int i = 0; i < edge_count(); ++i) {
      const auto& e = edges_[i];
      out_[e.tail].push_back(i);
      in_[e.head].push_back(i);
      if (!e.directed) {
        out_[e.head].push_back(i);
        in_[e.tail].push_back(i);
      }
    }
  }

  std::vector<Vertex<T>> vertices_;
  std::vector<Edge<T>> edges_;
  std::vector<std::vector<int>> out_, in_;
};

template <class T>
MixedGraph<T> build_graph(std::vector<VertexSpec<T>> vertices,
                          std::vector<EdgeSpec<T>> edges) {
  return MixedGraph<T>::build(std::move(vertices), std::move(edges));
}

// Closure of an edge subset: every opposite edge of a member joins it.
template <class T>
CutSystem close_cut(const MixedGraph<T>& g, std::span<const int> edge_ids) {
  std::vector<int> members;
  members.reserve(edge_ids.size() * 2);
  for (int e : edge_ids) {
    if (e < 0 || e >= g.edge_count()) detail::graph_error("cut edge id out of range");
    members.push_back(e);
    if (g.edge(e).pair >= 0) members.push_back(g.edge(e).pair);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return CutSystem{std::move(members)};
}

template <class T>
CutSystem close_cut(const MixedGraph<T>& g, std::initializer_list<int> ids) {
  return close_cut(g, std::span<const int>(ids.begin(), ids.size()));
}

template <class T>
bool is_closed(const MixedGraph<T>& g, const CutSystem& h) {
  for (int e : h.members) {
    if (e < 0 || e >= g.edge_count()) return false;
    int p = g.edge(e).pair;
    if (p >= 0 && !h.contains(p)) return false;
  }
  return true;
}

// G \ H on the same vertex set. Edge ids are renumbered densely; pair
// links and adjacency are rebuilt.
template <class T>
MixedGraph<T> remove_cut(const MixedGraph<T>& g, const CutSystem& h) {
  if (!is_closed(g, h)) detail::graph_error("remove_cut requires a closed cut system");
  std::vector<VertexSpec<T>> vs;
  vs.reserve(g.vertex_count());
  for (const auto& v : g.vertices()) vs.push_back({v.value, v.ignition});
  std::vector<EdgeSpec<T>> es;
  es.reserve(g.edge_count() - h.size());
  for (int i = 0; i < g.edge_count(); ++i) {
    if (h.contains(i)) continue;
    const auto& e = g.edge(i);
    es.push_back({e.tail, e.head, e.directed, e.spread, e.cost});
  }
  return MixedGraph<T>::build(std::move(vs), std::move(es));
}

// Total removal cost: each link (undirected edge, or a mutual directed
// pair) contributes its kappa once. Half-plus-half for pairs collapses
// to a single full charge.
template <class T>
T cut_cost(const MixedGraph<T>& g, const CutSystem& h) {
  if (!is_closed(g, h)) detail::graph_error("cut_cost requires a closed cut system");
  T total(0);
  for (int e : h.members) {
    const auto& edge = g.edge(e);
    if (edge.pair >= 0 && edge.pair < e) continue;  // charged at the partner
    total += edge.cost;
  }
  return total;
}

template <class T>
T total_value(const MixedGraph<T>& g, std::span<const int> vs) {
  T total(0);
  for (int v : vs) {
    if (v < 0 || v >= g.vertex_count()) detail::graph_error("vertex id out of range");
    total += g.vertex(v).value;
  }
  return total;
}

template <class T>
T total_value(const MixedGraph<T>& g, std::initializer_list<int> vs) {
  return total_value(g, std::span<const int>(vs.begin(), vs.size()));
}

template <class T>
T total_value(const MixedGraph<T>& g) {
  T total(0);
  for (const auto& v : g.vertices()) total += v.value;
  return total;
}

namespace detail {

// BFS closure over out-edges, optionally ignoring removed edges.
template <class T>
void reach_mask(const MixedGraph<T>& g, std::span<const int> sources,
                const std::vector<char>* removed_edges, std::vector<char>& seen) {
  seen.assign(g.vertex_count(), 0);
  std::vector<int> stack;
  for (int s : sources) {
    if (s < 0 || s >= g.vertex_count()) graph_error("vertex id out of range");
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : g.out_edges(v)) {
      if (removed_edges && (*removed_edges)[e]) continue;
      int w = g.other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
}

}  // namespace detail

// r_G(sources): vertices reachable from the source set, sources included.
template <class T>
std::vector<int> reachable_set(const MixedGraph<T>& g, std::span<const int> sources) {
  std::vector<char> seen;
  detail::reach_mask(g, sources, nullptr, seen);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

template <class T>
std::vector<int> reachable_set(const MixedGraph<T>& g, std::initializer_list<int> sources) {
  return reachable_set(g, std::span<const int>(sources.begin(), sources.size()));
}

// U_x = { t : t can reach x }, x itself included.
template <class T>
std::vector<int> ancestors(const MixedGraph<T>& g, int x) {
  if (x < 0 || x >= g.vertex_count()) detail::graph_error("vertex id out of range");
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : g.in_edges(v)) {
      int w = g.other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

template <class T>
bool is_windy(const MixedGraph<T>& g) {
  for (const auto& e : g.edges())
    if (e.spread != T(1)) return false;
  return true;
}

// In the windy case a mutual directed pair behaves exactly like one
// undirected edge; this collapses every pair accordingly.
template <class T>
MixedGraph<T> normalize_windy(const MixedGraph<T>& g) {
  if (!is_windy(g)) detail::graph_error("normalize_windy requires spread 1 on every edge");
  std::vector<VertexSpec<T>> vs;
  vs.reserve(g.vertex_count());
  for (const auto& v : g.vertices()) vs.push_back({v.value, v.ignition});
  std::vector<EdgeSpec<T>> es;
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    if (e.pair >= 0) {
      if (e.pair < i) continue;
      es.push_back({e.tail, e.head, false, e.spread, e.cost});
    } else {
      es.push_back({e.tail, e.head, e.directed, e.spread, e.cost});
    }
  }
  return MixedGraph<T>::build(std::move(vs), std::move(es));
}

// Problem instance: graph, budget, optional decision threshold. Graphs
// and cut systems are immutable after construction, so instances can be
// shared freely across threads.
template <class T>
struct Instance {
  MixedGraph<T> graph;
  T budget{};
  std::optional<T> risk_threshold;

  void validate() const {
    if (budget < T(0)) detail::graph_error("budget must be non-negative");
    if (risk_threshold && *risk_threshold < T(0))
      detail::graph_error("risk threshold must be non-negative");
  }
};

// One cuttable unit: an undirected edge, a mutual directed pair, or a
// lone directed edge. Cutting by links keeps cut systems closed by
// construction.
struct CutLink {
  std::vector<int> edge_ids;  // 1 or 2 edges
};

template <class T>
std::vector<CutLink> cut_links(const MixedGraph<T>& g) {
  std::vector<CutLink> links;
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    if (e.pair >= 0 && e.pair < i) continue;
    CutLink link;
    link.edge_ids.push_back(i);
    if (e.pair >= 0) link.edge_ids.push_back(e.pair);
    links.push_back(std::move(link));
  }
  return links;
}

template <class T>
T link_cost(const MixedGraph<T>& g, const CutLink& link) {
  return g.edge(link.edge_ids.front()).cost;
}

}  // namespace firebreak
