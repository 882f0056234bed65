#include "firebreak/reductions.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include <json.hpp>

namespace firebreak {

namespace {

std::string fmt(long long v) { return std::to_string(v); }

void add_param(ReductionCertificate& cert, const std::string& name, const Rational& v) {
  cert.parameters.emplace_back(name, fraction_string(v));
}

void add_param(ReductionCertificate& cert, const std::string& name, long long v) {
  cert.parameters.emplace_back(name, fmt(v));
}

}  // namespace

std::string certificate_json(const ReductionCertificate& cert) {
  nlohmann::ordered_json j;
  j["kind"] = cert.kind;
  j["source"] = cert.source;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : cert.parameters) params[name] = value;
  j["parameters"] = params;
  j["vertex_origin"] = cert.vertex_origin;
  j["edge_origin"] = cert.edge_origin;
  return j.dump(2) + "\n";
}

PartitionStarResult partition_to_star(const std::vector<long long>& weights) {
  long long total = 0;
  for (long long w : weights) {
    if (w <= 0) throw std::invalid_argument("partition weights must be positive");
    total += w;
  }
  if (total % 2 != 0) throw std::invalid_argument("partition total must be even");
  const long long half = total / 2;

  ReductionCertificate cert;
  cert.kind = "partition_to_star";
  {
    std::ostringstream src;
    src << "partition instance with " << weights.size() << " integers";
    cert.source = src.str();
  }
  add_param(cert, "S", half);
  add_param(cert, "B", half);
  add_param(cert, "R", half);

  std::vector<VertexSpec<Rational>> vs = {{Rational(0), Rational(1)}};
  cert.vertex_origin.push_back("center");
  std::vector<EdgeSpec<Rational>> es;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    vs.push_back({Rational(weights[i]), Rational(0)});
    es.push_back({0, static_cast<int>(i) + 1, false, Rational(1), Rational(weights[i])});
    cert.vertex_origin.push_back("leaf s_" + fmt(static_cast<long long>(i)));
    cert.edge_origin.push_back("spoke s_" + fmt(static_cast<long long>(i)));
  }

  Instance<Rational> inst{build_graph<Rational>(std::move(vs), std::move(es)),
                          Rational(half), Rational(half)};
  return PartitionStarResult{std::move(inst), std::move(cert)};
}

WflReductionResult max2sat_to_wfl(const Max2SatInstance& phi) {
  const long long n = phi.num_vars;
  const long long m = static_cast<long long>(phi.clauses.size());
  const long long K = phi.k;
  if (K < 1) throw std::invalid_argument("the reduction requires K >= 1");

  std::map<int, int> literal_uses;
  for (const auto& c : phi.clauses)
    for (int lit : c)
      if (++literal_uses[lit] > 4)
        throw std::invalid_argument("each literal may appear in at most four clauses");

  const Rational q = Rational(1) - Rational(1, 2 * K - 1);
  const Rational omega = Rational(8 * m) * (2 * K - 1);  // 8m / (1 - q)
  const Rational nu = Rational(8 * m) * (Rational(5, 2) * omega + 2);
  const Rational s(m + 1);
  const Rational budget = Rational(n) * s + m;
  const Rational risk = Rational(2 * n) * nu + Rational(m) * omega * (Rational(3, 2) + q) +
                        Rational(m) * (Rational(7, 4) + q / 8) - Rational(K, 8);

  WflReductionResult result;
  result.s = s;
  result.q = q;
  result.omega = omega;
  result.nu = nu;

  ReductionCertificate cert;
  cert.kind = "max2sat_to_wfl";
  {
    std::ostringstream src;
    src << "max2sat instance, n=" << n << " m=" << m << " K=" << K;
    cert.source = src.str();
  }
  add_param(cert, "n", n);
  add_param(cert, "m", m);
  add_param(cert, "K", K);
  add_param(cert, "s", s);
  add_param(cert, "q", q);
  add_param(cert, "omega", omega);
  add_param(cert, "nu", nu);
  add_param(cert, "B", budget);
  add_param(cert, "R", risk);

  std::vector<VertexSpec<Rational>> vs;
  std::vector<EdgeSpec<Rational>> es;
  const Rational half(1, 2), one(1), uncuttable = budget + 1;

  // Variable paths x -- x' -- x-bar; ids 3(v-1)..3(v-1)+2.
  auto pos_vertex = [](int var) { return 3 * (var - 1); };
  auto neg_vertex = [](int var) { return 3 * (var - 1) + 2; };
  for (long long v = 1; v <= n; ++v) {
    for (int part = 0; part < 3; ++part) {
      vs.push_back({nu, half});
      result.variable_path_vertices.push_back(static_cast<int>(vs.size()) - 1);
    }
    std::string name = "x" + fmt(v);
    cert.vertex_origin.push_back(name);
    cert.vertex_origin.push_back(name + "'");
    cert.vertex_origin.push_back("~" + name);
    int base = static_cast<int>(vs.size()) - 3;
    es.push_back({base, base + 1, false, one, s});
    es.push_back({base + 1, base + 2, false, one, s});
    cert.edge_origin.push_back(name + " path");
    cert.edge_origin.push_back(name + " path");
  }

  // Clause paths and binding vertices.
  for (long long j = 0; j < m; ++j) {
    const auto& clause = phi.clauses[j];
    int base = static_cast<int>(vs.size());
    vs.push_back({omega, half});  // left literal copy
    vs.push_back({omega, q});     // c'
    vs.push_back({omega, half});  // right literal copy
    std::string cname = "c" + fmt(j);
    cert.vertex_origin.push_back(cname + " left literal");
    cert.vertex_origin.push_back(cname + "'");
    cert.vertex_origin.push_back(cname + " right literal");
    es.push_back({base, base + 1, false, one, one});
    es.push_back({base + 1, base + 2, false, one, one});
    cert.edge_origin.push_back(cname + " path");
    cert.edge_origin.push_back(cname + " path");

    for (int side = 0; side < 2; ++side) {
      int lit = clause[side];
      int literal_vertex = lit > 0 ? pos_vertex(lit) : neg_vertex(-lit);
      int copy_vertex = side == 0 ? base : base + 2;
      int binding = static_cast<int>(vs.size());
      vs.push_back({one, Rational(0)});
      cert.vertex_origin.push_back(cname + (side == 0 ? " left" : " right") + " binding");
      es.push_back({literal_vertex, binding, true, one, uncuttable});
      es.push_back({copy_vertex, binding, true, one, uncuttable});
      cert.edge_origin.push_back(cname + " binding (from literal)");
      cert.edge_origin.push_back(cname + " binding (from clause copy)");
    }
  }

  result.instance = Instance<Rational>{build_graph<Rational>(std::move(vs), std::move(es)),
                                       budget, risk};
  result.certificate = std::move(cert);
  return result;
}

FlattenValuesResult flatten_values(const Instance<Rational>& inst) {
  const auto& g = inst.graph;
  if (!is_windy(g)) throw std::invalid_argument("flatten_values requires a windy instance");
  inst.validate();
  // A mutual directed pair would flatten into two unrelated directed
  // edges, silently doubling its cut cost; collapse pairs first.
  for (const auto& e : g.edges())
    if (e.pair >= 0)
      throw std::invalid_argument(
          "flatten_values requires pair-free input; apply normalize_windy first");

  std::vector<long long> value(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Rational& phi = g.vertex(v).value;
    if (!is_integer(phi) || phi < 1)
      throw std::invalid_argument("flatten_values requires positive integer values");
    value[v] = num_traits<Rational>::to_int(phi);
  }

  // First incident edge of each vertex, in edge-id order.
  std::vector<int> first_edge(g.vertex_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    for (int v : {ed.tail, ed.head})
      if (first_edge[v] < 0) first_edge[v] = e;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (value[v] > 1 && first_edge[v] < 0)
      throw std::invalid_argument("vertex with surplus value has no incident edge");

  const Rational uncuttable = inst.budget + 1;
  ReductionCertificate cert;
  cert.kind = "flatten_values";
  cert.source = "windy instance with integer values";
  add_param(cert, "B", inst.budget);

  std::vector<VertexSpec<Rational>> vs;
  std::vector<EdgeSpec<Rational>> es;
  std::vector<std::string> edge_origin;
  for (int v = 0; v < g.vertex_count(); ++v) {
    vs.push_back({Rational(1), g.vertex(v).ignition});
    cert.vertex_origin.push_back("original " + fmt(v));
  }

  // Chains hang off their owner vertex; the boundary edge between the
  // two chain ends keeps the original cost and orientation.
  FlattenValuesResult result;
  result.boundary_edge.assign(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    auto extend = [&](int owner) {
      int attach = owner;
      if (first_edge[owner] == e) {
        long long mu = value[owner] - 1;
        for (long long i = 0; i < mu; ++i) {
          int nv = static_cast<int>(vs.size());
          vs.push_back({Rational(1), Rational(0)});
          cert.vertex_origin.push_back("inserted for " + fmt(owner) + " #" + fmt(i));
          es.push_back({attach, nv, false, Rational(1), uncuttable});
          edge_origin.push_back("interior of " + fmt(owner));
          attach = nv;
        }
      }
      return attach;
    };
    int tail_end = extend(ed.tail);
    int head_end = extend(ed.head);
    result.boundary_edge[e] = static_cast<int>(es.size());
    es.push_back({tail_end, head_end, ed.directed, Rational(1), ed.cost});
    edge_origin.push_back("boundary of original edge " + fmt(e));
  }
  cert.edge_origin = std::move(edge_origin);

  result.instance = Instance<Rational>{build_graph<Rational>(std::move(vs), std::move(es)),
                                       inst.budget, inst.risk_threshold};
  result.certificate = std::move(cert);
  return result;
}

namespace {

// Smallest integer t >= 0 with t*t >= x.
long long ceil_sqrt(const Rational& x) {
  if (x <= 0) return 0;
  long long t = static_cast<long long>(std::ceil(std::sqrt(to_double(x))));
  while (t > 0 && Rational((t - 1)) * (t - 1) >= x) --t;
  while (Rational(t) * t < x) ++t;
  return t;
}

// Clockwise perimeter walk of an M x M grid starting at the top-left
// corner; cell (r, c) has index r * M + c.
std::vector<int> perimeter_cells(long long m) {
  std::vector<int> cells;
  if (m == 1) return {0};
  for (long long c = 0; c < m; ++c) cells.push_back(static_cast<int>(c));
  for (long long r = 1; r < m; ++r) cells.push_back(static_cast<int>(r * m + (m - 1)));
  for (long long c = m - 2; c >= 0; --c) cells.push_back(static_cast<int>((m - 1) * m + c));
  for (long long r = m - 2; r >= 1; --r) cells.push_back(static_cast<int>(r * m));
  return cells;
}

}  // namespace

FlattenCostsResult flatten_costs(const Instance<Rational>& inst, long long f_bound) {
  const auto& g = inst.graph;
  if (!is_windy(g)) throw std::invalid_argument("flatten_costs requires a windy instance");
  if (f_bound <= 0) throw std::invalid_argument("f bound must be positive");
  if (!inst.risk_threshold)
    throw std::invalid_argument("flatten_costs requires a risk threshold");
  inst.validate();
  if (!is_integer(inst.budget) || inst.budget < 0)
    throw std::invalid_argument("flatten_costs requires an integral budget");

  std::vector<long long> cost(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.directed)
      throw std::invalid_argument("flatten_costs is defined for undirected instances");
    if (!is_integer(ed.cost) || ed.cost < 1 || ed.cost > Rational(f_bound))
      throw std::invalid_argument("edge costs must be integers in [1, f]");
    cost[e] = num_traits<Rational>::to_int(ed.cost);
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex(v).value != 1)
      throw std::invalid_argument("flatten_costs requires unit vertex values");
    if (!is_integer(g.vertex(v).ignition * f_bound))
      throw std::invalid_argument("f * ignition must be integral for every vertex");
  }

  const long long budget = num_traits<Rational>::to_int(inst.budget);
  const Rational risk = *inst.risk_threshold;
  const long long c_param = (budget + 1) / 2;  // ceil(B/2)
  const long long root = ceil_sqrt(Rational(2) * risk * f_bound + 1);
  const long long m_param =
      std::max(1 + c_param * root, static_cast<long long>(g.edge_count()) * f_bound);
  const long long cells = m_param * m_param;

  FlattenCostsResult result;
  result.m_param = m_param;
  result.c_param = c_param;

  ReductionCertificate cert;
  cert.kind = "flatten_costs";
  cert.source = "windy unit-value instance";
  add_param(cert, "f", f_bound);
  add_param(cert, "C", c_param);
  add_param(cert, "M", m_param);
  add_param(cert, "B'", budget);
  add_param(cert, "R'", Rational(cells) * risk);

  std::vector<VertexSpec<double>> vs;
  std::vector<EdgeSpec<double>> es;
  vs.reserve(static_cast<std::size_t>(g.vertex_count()) * cells);

  // Grid vertices; ignition 1 - (1 - pi_x)^(1/M^2) through log space.
  for (int x = 0; x < g.vertex_count(); ++x) {
    const Rational& pi = g.vertex(x).ignition;
    double cell_pi;
    if (pi == 1)
      cell_pi = 1.0;  // 0^(1/M^2) = 0 by convention
    else if (pi == 0)
      cell_pi = 0.0;
    else
      cell_pi = -std::expm1(std::log1p(-to_double(pi)) / static_cast<double>(cells));
    for (long long i = 0; i < cells; ++i) {
      vs.push_back({1.0, cell_pi});
      cert.vertex_origin.push_back("grid " + fmt(x));
    }
    // Provenance for exact recomputation of the grid products.
    cert.parameters.emplace_back("pi_base_" + fmt(x), fraction_string(pi));
  }
  cert.parameters.emplace_back("exponent_denominator", fmt(cells));

  auto grid_vertex = [&](int x, long long cell) {
    return static_cast<int>(x * cells + cell);
  };
  for (int x = 0; x < g.vertex_count(); ++x) {
    for (long long r = 0; r < m_param; ++r) {
      for (long long c = 0; c < m_param; ++c) {
        if (c + 1 < m_param) {
          es.push_back({grid_vertex(x, r * m_param + c), grid_vertex(x, r * m_param + c + 1),
                        false, 1.0, 1.0});
          cert.edge_origin.push_back("grid " + fmt(x));
        }
        if (r + 1 < m_param) {
          es.push_back({grid_vertex(x, r * m_param + c), grid_vertex(x, (r + 1) * m_param + c),
                        false, 1.0, 1.0});
          cert.edge_origin.push_back("grid " + fmt(x));
        }
      }
    }
  }

  // Joining-edge attachment slots, equally spread along each perimeter.
  const auto perimeter = perimeter_cells(m_param);
  std::vector<long long> total_slots(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    total_slots[g.edge(e).tail] += cost[e];
    total_slots[g.edge(e).head] += cost[e];
  }
  std::vector<long long> next_slot(g.vertex_count(), 0);
  auto take_slot = [&](int x) {
    long long j = next_slot[x]++;
    long long idx = j * static_cast<long long>(perimeter.size()) / total_slots[x];
    return grid_vertex(x, perimeter[static_cast<std::size_t>(idx)]);
  };

  result.joining_edges.assign(g.edge_count(), {});
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    for (long long k = 0; k < cost[e]; ++k) {
      result.joining_edges[e].push_back(static_cast<int>(es.size()));
      es.push_back({take_slot(ed.tail), take_slot(ed.head), false, 1.0, 1.0});
      cert.edge_origin.push_back("join " + fmt(e) + " #" + fmt(k));
    }
  }

  result.instance = Instance<double>{build_graph<double>(std::move(vs), std::move(es)),
                                     static_cast<double>(budget),
                                     to_double(Rational(cells) * risk)};
  result.certificate = std::move(cert);
  return result;
}

}  // namespace firebreak
