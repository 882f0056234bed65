#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "firebreak/graph.hpp"
#include "firebreak/risk.hpp"

namespace firebreak {

// Optimal cut system on windy trees with binary ignition probabilities,
// integer edge costs and an integer budget, via a double dynamic
// program: an outer table over post-order subtrees and, per vertex, an
// inner table folding children one at a time. Each cell keeps the best
// saved value and a cut system for both burn states of the subtree
// root. Runs in O(|V| * B^2).
template <class T>
struct TreeSolution {
  CutSystem cut;
  T saved{};
  T risk{};
  T cost{};
};

// Snapshot of one dynamic-programming cell: best saved value (and cut
// system) when the subtree root burns / does not burn. An absent value
// is the infeasible sentinel (the paper's -infinity).
template <class T>
struct DpCellView {
  std::optional<T> burn_saved;
  std::optional<T> safe_saved;
  CutSystem burn_cut;
  CutSystem safe_cut;
};

template <class T>
class TreeDp {
 public:
  // Validates and prepares the instance; `root` defaults to the highest
  // vertex id. Children are visited in ascending id order, which makes
  // the produced cut systems deterministic.
  explicit TreeDp(const Instance<T>& inst, std::optional<int> root = {})
      : original_(&inst.graph) {
    const auto& g = inst.graph;
    const int n = g.vertex_count();
    if (n == 0) detail::graph_error("tree instance must have at least one vertex");
    detail::require_windy(g);
    for (int v = 0; v < n; ++v) {
      const T& p = g.vertex(v).ignition;
      if (p != T(0) && p != T(1))
        detail::graph_error("tree solver requires binary ignition probabilities");
    }
    inst.validate();
    budget_ = num_traits<T>::to_int(inst.budget);
    if (budget_ < 0) detail::graph_error("budget must be non-negative");

    // Collapse mutual directed pairs into single links; afterwards every
    // link must be undirected for the graph to qualify as a tree.
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      if (ed.pair >= 0 && ed.pair < e) continue;
      Link link;
      link.a = ed.tail;
      link.b = ed.head;
      link.cost = num_traits<T>::to_int(ed.cost);
      if (link.cost < 0) detail::graph_error("edge costs must be non-negative integers");
      link.original_ids.push_back(e);
      if (ed.pair >= 0)
        link.original_ids.push_back(ed.pair);
      else if (ed.directed)
        detail::graph_error("tree solver requires an undirected tree");
      links_.push_back(std::move(link));
    }
    if (static_cast<int>(links_.size()) != n - 1)
      detail::graph_error("graph is not a tree (wrong edge count)");

    adjacency_.assign(n, {});
    for (int l = 0; l < static_cast<int>(links_.size()); ++l) {
      adjacency_[links_[l].a].push_back(l);
      adjacency_[links_[l].b].push_back(l);
    }

    root_ = root.value_or(n - 1);
    if (root_ < 0 || root_ >= n) detail::graph_error("root vertex out of range");

    long long total_cost = 0;
    for (const auto& l : links_) total_cost += l.cost;
    // Saved values cannot improve past the all-edges budget.
    width_ = static_cast<int>(std::min<long long>(budget_, total_cost)) + 1;

    build_postorder();
    run();
  }

  // Best saved value and cut system for subtree T_v at the given budget.
  DpCellView<T> cell(int v, int budget) const {
    if (v < 0 || v >= original_->vertex_count() || budget < 0 || budget > budget_)
      detail::graph_error("dp cell out of range");
    int b = std::min(budget, width_ - 1);
    const Cell& c = table_[static_cast<std::size_t>(rank_[v]) * width_ + b];
    DpCellView<T> view;
    if (c.plus_ok) {
      view.burn_saved = c.plus;
      view.burn_cut = materialize(c.h_plus);
    }
    if (c.minus_ok) {
      view.safe_saved = c.minus;
      view.safe_cut = materialize(c.h_minus);
    }
    return view;
  }

  TreeSolution<T> solution() const {
    const Cell& rootc = table_[static_cast<std::size_t>(rank_[root_]) * width_ + (width_ - 1)];
    TreeSolution<T> sol;
    // Ties go to the burning-root state.
    if (rootc.minus_ok && (!rootc.plus_ok || rootc.minus > rootc.plus)) {
      sol.saved = rootc.minus;
      sol.cut = materialize(rootc.h_minus);
    } else {
      sol.saved = rootc.plus;
      sol.cut = materialize(rootc.h_plus);
    }
    sol.risk = total_value(*original_) - sol.saved;
    sol.cost = cut_cost(*original_, sol.cut);
    return sol;
  }

  int root() const { return root_; }

 private:
  struct Link {
    int a = -1, b = -1;
    long long cost = 0;
    std::vector<int> original_ids;
  };

  struct Cell {
    T plus{};
    T minus{};
    std::int32_t h_plus = -1;
    std::int32_t h_minus = -1;
    bool plus_ok = false;
    bool minus_ok = false;
  };

  // Persistent cut sets: a node is either a leaf (one link) or the
  // union of two earlier sets. Unions are O(1); sets are flattened only
  // when a solution is extracted.
  struct SetNode {
    std::int32_t link = -1;
    std::int32_t left = -1;
    std::int32_t right = -1;
  };

  std::int32_t make_leaf(std::int32_t link) {
    arena_.push_back(SetNode{link, -1, -1});
    return static_cast<std::int32_t>(arena_.size() - 1);
  }

  std::int32_t join(std::int32_t a, std::int32_t b) {
    if (a < 0) return b;
    if (b < 0) return a;
    arena_.push_back(SetNode{-1, a, b});
    return static_cast<std::int32_t>(arena_.size() - 1);
  }

  CutSystem materialize(std::int32_t node) const {
    std::vector<int> edges;
    std::vector<std::int32_t> stack;
    if (node >= 0) stack.push_back(node);
    while (!stack.empty()) {
      const SetNode& sn = arena_[stack.back()];
      stack.pop_back();
      if (sn.link >= 0) {
        for (int id : links_[sn.link].original_ids) edges.push_back(id);
      } else {
        stack.push_back(sn.left);
        stack.push_back(sn.right);
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return CutSystem{std::move(edges)};
  }

  void build_postorder() {
    const int n = original_->vertex_count();
    parent_link_.assign(n, -1);
    rank_.assign(n, -1);
    postorder_.clear();
    postorder_.reserve(n);
    children_.assign(n, {});

    std::vector<char> visited(n, 0);
    // Children in ascending vertex id; adjacency_ lists are built in
    // link order which is ascending in the smaller endpoint, so sort
    // neighbor ids explicitly.
    struct Frame {
      int v;
      std::size_t pos;
    };
    std::vector<std::vector<int>> kids(n);
    {
      std::vector<Frame> stack{{root_, 0}};
      visited[root_] = 1;
      std::vector<std::vector<std::pair<int, int>>> nbr(n);  // (neighbor, link)
      for (int v = 0; v < n; ++v) {
        for (int l : adjacency_[v]) {
          int w = links_[l].a == v ? links_[l].b : links_[l].a;
          nbr[v].push_back({w, l});
        }
        std::sort(nbr[v].begin(), nbr[v].end());
      }
      while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.pos < nbr[fr.v].size()) {
          auto [w, l] = nbr[fr.v][fr.pos++];
          if (!visited[w]) {
            visited[w] = 1;
            parent_link_[w] = l;
            kids[fr.v].push_back(w);
            stack.push_back({w, 0});
          }
        } else {
          postorder_.push_back(fr.v);
          stack.pop_back();
        }
      }
    }
    if (static_cast<int>(postorder_.size()) != n)
      detail::graph_error("graph is not a tree (disconnected)");
    for (int i = 0; i < n; ++i) rank_[postorder_[i]] = i;
    children_ = std::move(kids);
  }

  void run() {
    const auto& g = *original_;
    const int n = g.vertex_count();
    const int w = width_;
    table_.assign(static_cast<std::size_t>(n) * w, Cell{});

    std::vector<Cell> prev(w), cur(w);
    for (int v : postorder_) {
      const bool burns_for_sure = g.vertex(v).ignition == T(1);
      // Inner table row 0: the root alone.
      for (int b = 0; b < w; ++b) {
        prev[b] = Cell{};
        prev[b].plus = T(0);
        prev[b].plus_ok = true;
        if (!burns_for_sure) {
          prev[b].minus = g.vertex(v).value;
          prev[b].minus_ok = true;
        }
      }

      for (int child : children_[v]) {
        const int link = parent_link_[child];
        const long long c = links_[link].cost;
        const Cell* child_row = &table_[static_cast<std::size_t>(rank_[child]) * w];
        const bool child_burns_for_sure = g.vertex(child).ignition == T(1);

        for (int b = 0; b < w; ++b) {
          Cell out{};

          // v burns. Concordant: child burns too, no cut; split b = x + (b-x).
          for (int x = 0; x <= b; ++x) {
            if (!prev[x].plus_ok || !child_row[b - x].plus_ok) continue;
            T val = prev[x].plus + child_row[b - x].plus;
            if (!out.plus_ok || val > out.plus) {
              out.plus = val;
              out.plus_ok = true;
              out.h_plus = join(prev[x].h_plus, child_row[b - x].h_plus);
            }
          }
          // Discordant: child saved, so the edge is cut at cost c. The
          // explicit ignition guard duplicates what the infeasibility
          // sentinel already enforces.
          if (!child_burns_for_sure && b >= c) {
            bool found = false;
            T best{};
            int best_x = 0;
            for (int x = 0; x + c <= b; ++x) {
              int rest = b - static_cast<int>(c) - x;
              if (!prev[x].plus_ok || !child_row[rest].minus_ok) continue;
              T val = prev[x].plus + child_row[rest].minus;
              if (!found || val > best) {
                found = true;
                best = val;
                best_x = x;
              }
            }
            // Strict improvement only: on ties the uncut candidate wins.
            if (found && (!out.plus_ok || best > out.plus)) {
              out.plus = best;
              out.plus_ok = true;
              out.h_plus = join(join(prev[best_x].h_plus,
                                     child_row[b - static_cast<int>(c) - best_x].h_minus),
                                make_leaf(link));
            }
          }

          if (!burns_for_sure) {
            // v stays safe. Concordant: child safe as well, no cut.
            for (int x = 0; x <= b; ++x) {
              if (!prev[x].minus_ok || !child_row[b - x].minus_ok) continue;
              T val = prev[x].minus + child_row[b - x].minus;
              if (!out.minus_ok || val > out.minus) {
                out.minus = val;
                out.minus_ok = true;
                out.h_minus = join(prev[x].h_minus, child_row[b - x].h_minus);
              }
            }
            // Discordant: child burns, edge cut.
            if (b >= c) {
              bool found = false;
              T best{};
              int best_x = 0;
              for (int x = 0; x + c <= b; ++x) {
                int rest = b - static_cast<int>(c) - x;
                if (!prev[x].minus_ok || !child_row[rest].plus_ok) continue;
                T val = prev[x].minus + child_row[rest].plus;
                if (!found || val > best) {
                  found = true;
                  best = val;
                  best_x = x;
                }
              }
              if (found && (!out.minus_ok || best > out.minus)) {
                out.minus = best;
                out.minus_ok = true;
                out.h_minus = join(join(prev[best_x].h_minus,
                                        child_row[b - static_cast<int>(c) - best_x].h_plus),
                                   make_leaf(link));
              }
            }
          }

          cur[b] = out;
        }
        std::swap(prev, cur);
      }

      Cell* row = &table_[static_cast<std::size_t>(rank_[v]) * w];
      for (int b = 0; b < w; ++b) row[b] = prev[b];
    }
  }

  const MixedGraph<T>* original_;
  long long budget_ = 0;
  int width_ = 1;  // effective budget + 1 (clamped at total edge cost)
  int root_ = 0;
  std::vector<Link> links_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> parent_link_;
  std::vector<std::vector<int>> children_;
  std::vector<int> postorder_;
  std::vector<int> rank_;
  std::vector<Cell> table_;
  std::vector<SetNode> arena_;
};

template <class T>
TreeSolution<T> solve_tree(const Instance<T>& inst, std::optional<int> root = {}) {
  return TreeDp<T>(inst, root).solution();
}

// Re-evaluates a claimed solution through the risk engine: the cut must
// be closed and affordable, and saved + risk must partition the total
// value.
template <class T>
bool verify_solution(const Instance<T>& inst, const TreeSolution<T>& sol) {
  const auto& g = inst.graph;
  if (!is_closed(g, sol.cut)) return false;
  T cost = cut_cost(g, sol.cut);
  if (cost > inst.budget) return false;
  std::vector<char> removed(g.edge_count(), 0);
  for (int e : sol.cut.members) removed[e] = 1;
  T risk = detail::windy_risk_masked<T>(g, &removed);
  return risk + sol.saved == total_value(g);
}

}  // namespace firebreak
