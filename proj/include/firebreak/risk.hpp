#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "firebreak/graph.hpp"
#include "firebreak/rng.hpp"

namespace firebreak {

enum class RiskMethod { windy_exact, enumeration, monte_carlo };

template <class T>
struct RiskResult {
  T value{};
  RiskMethod method = RiskMethod::windy_exact;
  std::optional<double> std_error;     // Monte Carlo only
  std::optional<std::uint64_t> samples;  // Monte Carlo only
};

// prod_{v in I} pi_i(v) * prod_{v not in I} (1 - pi_i(v))
template <class T>
T ignition_probability(const MixedGraph<T>& g, std::span<const int> ignited) {
  std::vector<char> in_set(g.vertex_count(), 0);
  for (int v : ignited) {
    if (v < 0 || v >= g.vertex_count()) detail::graph_error("vertex id out of range");
    in_set[v] = 1;
  }
  T p(1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    p *= in_set[v] ? g.vertex(v).ignition : T(1) - g.vertex(v).ignition;
    if (p == T(0)) return p;
  }
  return p;
}

template <class T>
T ignition_probability(const MixedGraph<T>& g, std::initializer_list<int> ignited) {
  return ignition_probability(g, std::span<const int>(ignited.begin(), ignited.size()));
}

// prod_{e kept} pi_s(e) * prod_{e dropped} (1 - pi_s(e))
template <class T>
T spread_probability(const MixedGraph<T>& g, std::span<const int> kept_edges) {
  std::vector<char> kept(g.edge_count(), 0);
  for (int e : kept_edges) {
    if (e < 0 || e >= g.edge_count()) detail::graph_error("edge id out of range");
    kept[e] = 1;
  }
  T p(1);
  for (int e = 0; e < g.edge_count(); ++e) {
    p *= kept[e] ? g.edge(e).spread : T(1) - g.edge(e).spread;
    if (p == T(0)) return p;
  }
  return p;
}

template <class T>
T spread_probability(const MixedGraph<T>& g, std::initializer_list<int> kept) {
  return spread_probability(g, std::span<const int>(kept.begin(), kept.size()));
}

// Value reachable from the ignited set in a fixed spreading graph.
template <class T>
T loss(const MixedGraph<T>& g_s, std::span<const int> ignited) {
  std::vector<char> seen;
  detail::reach_mask(g_s, ignited, nullptr, seen);
  T total(0);
  for (int v = 0; v < g_s.vertex_count(); ++v)
    if (seen[v]) total += g_s.vertex(v).value;
  return total;
}

template <class T>
T loss(const MixedGraph<T>& g_s, std::initializer_list<int> ignited) {
  return loss(g_s, std::span<const int>(ignited.begin(), ignited.size()));
}

namespace detail {

// Survival product prod (1 - pi_i(t)) over a factor list. In float mode
// tiny factors push the product through log space to dodge underflow;
// rational mode multiplies exactly.
inline double survival_product(const std::vector<double>& factors) {
  bool tiny = false;
  for (double f : factors)
    if (f != 0.0 && f < 1e-8) tiny = true;
  if (!tiny) {
    double p = 1.0;
    for (double f : factors) p *= f;
    return p;
  }
  double log_sum = 0.0;
  for (double f : factors) {
    if (f == 0.0) return 0.0;
    log_sum += std::log(f);
  }
  return std::exp(log_sum);
}

inline Rational survival_product(const std::vector<Rational>& factors) {
  Rational p(1);
  for (const auto& f : factors) {
    if (f == 0) return Rational(0);
    p *= f;
  }
  return p;
}

// Tarjan SCC over the graph with `removed` edges ignored (undirected
// edges act as two arcs). Returns component ids and their count.
template <class T>
int strongly_connected_components(const MixedGraph<T>& g,
                                  const std::vector<char>* removed,
                                  std::vector<int>& comp) {
  const int n = g.vertex_count();
  comp.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0), stack;
  int next_index = 0, comp_count = 0;

  struct Frame {
    int v;
    std::size_t edge_pos;
  };
  std::vector<Frame> call;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& fr = call.back();
      auto edges = g.out_edges(fr.v);
      bool descended = false;
      while (fr.edge_pos < edges.size()) {
        int e = edges[fr.edge_pos++];
        if (removed && (*removed)[e]) continue;
        int w = g.other_end(e, fr.v);
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[fr.v] = std::min(low[fr.v], index[w]);
      }
      if (descended) continue;
      int v = fr.v;
      call.pop_back();
      if (low[v] == index[v]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comp_count;
          if (w == v) break;
        }
        ++comp_count;
      }
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }
  return comp_count;
}

template <class T>
bool has_directed_edge(const MixedGraph<T>& g, const std::vector<char>* removed) {
  for (int e = 0; e < g.edge_count(); ++e) {
    if (removed && (*removed)[e]) continue;
    if (g.edge(e).directed) return true;
  }
  return false;
}

// Windy risk with an optional removed-edge mask, so enumeration loops
// need not materialise subgraphs.
template <class T>
T windy_risk_masked(const MixedGraph<T>& g, const std::vector<char>* removed) {
  const int n = g.vertex_count();
  if (n == 0) return T(0);

  if (!has_directed_edge(g, removed)) {
    // Undirected: each connected component burns as one unit.
    std::vector<int> comp;
    int nc = strongly_connected_components(g, removed, comp);
    std::vector<std::vector<T>> factors(nc);
    std::vector<T> comp_value(nc, T(0));
    for (int v = 0; v < n; ++v) {
      factors[comp[v]].push_back(T(1) - g.vertex(v).ignition);
      comp_value[comp[v]] += g.vertex(v).value;
    }
    T risk(0);
    for (int c = 0; c < nc; ++c)
      risk += (T(1) - survival_product(factors[c])) * comp_value[c];
    return risk;
  }

  // Mixed/directed: collapse strongly connected components, then take
  // per-node products over full ancestor sets in the condensation.
  std::vector<int> comp;
  int nc = strongly_connected_components(g, removed, comp);
  std::vector<T> comp_weight(nc, T(1));  // prod (1 - pi_i) within the SCC
  std::vector<T> comp_value(nc, T(0));
  for (int v = 0; v < n; ++v) {
    comp_weight[comp[v]] *= T(1) - g.vertex(v).ignition;
    comp_value[comp[v]] += g.vertex(v).value;
  }

  // Condensation arcs, deduplicated.
  std::vector<std::vector<int>> preds(nc);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (removed && (*removed)[e]) continue;
    const auto& ed = g.edge(e);
    int a = comp[ed.tail], b = comp[ed.head];
    if (a != b) {
      preds[b].push_back(a);
      if (!ed.directed) preds[a].push_back(b);
    }
  }
  for (auto& p : preds) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }

  // Tarjan emits components in reverse topological order: predecessors
  // of c (sources of arcs into c) have larger component ids.
  const std::size_t words = (nc + 63) / 64;
  std::vector<std::uint64_t> anc(static_cast<std::size_t>(nc) * words, 0);
  for (int c = nc - 1; c >= 0; --c) {
    auto* row = &anc[static_cast<std::size_t>(c) * words];
    row[c / 64] |= 1ull << (c % 64);
    for (int p : preds[c]) {
      const auto* prow = &anc[static_cast<std::size_t>(p) * words];
      for (std::size_t w = 0; w < words; ++w) row[w] |= prow[w];
    }
  }

  T risk(0);
  for (int c = 0; c < nc; ++c) {
    if (comp_value[c] == T(0)) continue;
    T survive(1);
    const auto* row = &anc[static_cast<std::size_t>(c) * words];
    for (std::size_t w = 0; w < words && survive != T(0); ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        int t = static_cast<int>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        survive *= comp_weight[t];
        if (survive == T(0)) break;
      }
    }
    risk += (T(1) - survive) * comp_value[c];
  }
  return risk;
}

template <class T>
void require_windy(const MixedGraph<T>& g) {
  if (!is_windy(g)) graph_error("operation requires a windy graph (all spread probabilities 1)");
}

}  // namespace detail

// Probability that x burns when fire spreads deterministically:
// 1 - prod over ancestors of (1 - pi_i).
template <class T>
T burn_probability(const MixedGraph<T>& g, int x) {
  detail::require_windy(g);
  std::vector<T> factors;
  for (int t : ancestors(g, x)) factors.push_back(T(1) - g.vertex(t).ignition);
  return T(1) - detail::survival_product(factors);
}

// Windy closed form: rho = sum_x p_x phi(x).
template <class T>
RiskResult<T> windy_risk(const MixedGraph<T>& g) {
  detail::require_windy(g);
  return RiskResult<T>{detail::windy_risk_masked<T>(g, nullptr), RiskMethod::windy_exact, {}, {}};
}

// Exact risk for general spread probabilities: enumerate spread
// realizations over the non-degenerate edges (0 < pi_s < 1) and fold the
// ignition sum analytically per realization via the windy closed form.
// The two random phases are independent, so this equals the literal
// double sum.
template <class T>
RiskResult<T> exact_risk(const MixedGraph<T>& g, int enumeration_bound = 20) {
  std::vector<int> random_edges;
  std::vector<char> removed(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const T& s = g.edge(e).spread;
    if (s == T(0))
      removed[e] = 1;
    else if (s != T(1))
      random_edges.push_back(e);
  }
  if (static_cast<int>(random_edges.size()) > enumeration_bound)
    detail::graph_error("exact_risk enumeration bound exceeded");

  const std::size_t m = random_edges.size();
  T risk(0);
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    T weight(1);
    for (std::size_t i = 0; i < m; ++i) {
      const T& s = g.edge(random_edges[i]).spread;
      if (mask & (1ull << i)) {
        removed[random_edges[i]] = 0;
        weight *= s;
      } else {
        removed[random_edges[i]] = 1;
        weight *= T(1) - s;
      }
    }
    if (weight != T(0)) risk += weight * detail::windy_risk_masked<T>(g, &removed);
  }
  return RiskResult<T>{risk, RiskMethod::enumeration, {}, {}};
}

// Literal double enumeration of Eq.-style risk; the ground-truth oracle.
template <class T>
RiskResult<T> naive_risk(const MixedGraph<T>& g) {
  const int n = g.vertex_count(), m = g.edge_count();
  if (n + m > 16) detail::graph_error("naive_risk size bound exceeded");
  T risk(0);
  std::vector<int> ignited;
  std::vector<char> removed(m, 0), seen;
  for (std::uint32_t vmask = 0; vmask < (1u << n); ++vmask) {
    ignited.clear();
    for (int v = 0; v < n; ++v)
      if (vmask & (1u << v)) ignited.push_back(v);
    T pi = ignition_probability(g, std::span<const int>(ignited));
    if (pi == T(0)) continue;
    for (std::uint32_t emask = 0; emask < (1u << m); ++emask) {
      T ps(1);
      for (int e = 0; e < m; ++e) {
        bool kept = emask & (1u << e);
        ps *= kept ? g.edge(e).spread : T(1) - g.edge(e).spread;
        removed[e] = kept ? 0 : 1;
      }
      if (ps == T(0)) continue;
      detail::reach_mask(g, std::span<const int>(ignited), &removed, seen);
      T lambda(0);
      for (int v = 0; v < n; ++v)
        if (seen[v]) lambda += g.vertex(v).value;
      risk += pi * ps * lambda;
    }
  }
  return RiskResult<T>{risk, RiskMethod::enumeration, {}, {}};
}

// Monte Carlo estimate: independent Bernoulli draws for ignitions and
// spreads per replication. Each replication derives its own stream from
// (seed, index), so the result is bit-identical for a fixed (seed,
// samples) pair no matter how replications are scheduled.
template <class T>
RiskResult<double> mc_risk(const MixedGraph<T>& g, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) detail::graph_error("mc_risk requires at least one sample");
  const int n = g.vertex_count(), m = g.edge_count();
  std::vector<double> pi(n), ps(m), value(n);
  for (int v = 0; v < n; ++v) {
    pi[v] = to_double(g.vertex(v).ignition);
    value[v] = to_double(g.vertex(v).value);
  }
  for (int e = 0; e < m; ++e) ps[e] = to_double(g.edge(e).spread);

  double sum = 0.0, sum_sq = 0.0;
  std::vector<char> removed(m, 0), seen;
  std::vector<int> ignited;
  for (std::uint64_t rep = 0; rep < samples; ++rep) {
    SplitMix64 rng = replication_stream(seed, rep);
    ignited.clear();
    for (int v = 0; v < n; ++v)
      if (rng.next_double() < pi[v]) ignited.push_back(v);
    for (int e = 0; e < m; ++e) removed[e] = rng.next_double() < ps[e] ? 0 : 1;
    double x = 0.0;
    if (!ignited.empty()) {
      detail::reach_mask(g, std::span<const int>(ignited), &removed, seen);
      for (int v = 0; v < n; ++v)
        if (seen[v]) x += value[v];
    }
    sum += x;
    sum_sq += x * x;
  }
  double mean = sum / static_cast<double>(samples);
  double se = 0.0;
  if (samples > 1) {
    double var = (sum_sq - sum * mean) / static_cast<double>(samples - 1);
    se = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
  }
  return RiskResult<double>{mean, RiskMethod::monte_carlo, se, samples};
}

}  // namespace firebreak
