#include <doctest.h>

#include <cmath>

#include "firebreak/chain_checks.hpp"
#include "firebreak/exact_solver.hpp"
#include "firebreak/reductions.hpp"
#include "test_support.hpp"

using namespace firebreak;

TEST_CASE("partition_to_star") {
  SUBCASE("construction") {
    auto built = partition_to_star({1, 1, 2});
    const auto& g = built.instance.graph;
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(built.instance.budget == Rational(2));
    CHECK(*built.instance.risk_threshold == Rational(2));
    CHECK(g.vertex(0).value == Rational(0));
    CHECK(g.vertex(0).ignition == Rational(1));
    CHECK(g.edge(2).cost == Rational(2));
    CHECK(decide(built.instance));
  }
  SUBCASE("yes and no instances") {
    CHECK(decide(partition_to_star({2, 2}).instance));
    CHECK_FALSE(decide(partition_to_star({1, 3}).instance));
  }
  SUBCASE("odd totals rejected") {
    CHECK_THROWS_AS(partition_to_star({1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(partition_to_star({0, 2}), std::invalid_argument);
  }
  SUBCASE("chain agreement on small multisets") {
    auto result = check_partition_chain(4, 5);
    CHECK(result.cases > 0);
    CHECK(result.failures == 0);
  }
}

TEST_CASE("3sat chain on a reduced grid") {
  // The full grid over 4 variables runs in the acceptance suite.
  auto result = check_3sat_chain(3, 2);
  CHECK(result.cases > 0);
  CHECK(result.failures == 0);
}

TEST_CASE("max2sat_to_wfl") {
  SUBCASE("frozen parameters for n=2, m=1, K=1") {
    auto phi = Max2SatInstance::make(2, {{1, 2}}, 1);
    auto built = max2sat_to_wfl(phi);
    CHECK(built.q == Rational(0));
    CHECK(built.omega == Rational(8));
    CHECK(built.nu == Rational(176));
    CHECK(built.s == Rational(2));
    CHECK(built.instance.budget == Rational(5));
    CHECK(*built.instance.risk_threshold == Rational(5741, 8));  // 717 + 5/8
  }
  SUBCASE("gadget element counts") {
    auto phi = Max2SatInstance::make(3, {{1, -2}, {2, 3}}, 2);
    auto built = max2sat_to_wfl(phi);
    int n = 3, m = 2;
    CHECK(built.instance.graph.vertex_count() == 3 * n + 3 * m + 2 * m);
    CHECK(built.instance.graph.edge_count() == 2 * n + 2 * m + 4 * m);
  }
  SUBCASE("structure: bipartite, windy, max degree 5") {
    // Load one literal to the maximum of four occurrences.
    auto phi = Max2SatInstance::make(3, {{1, 2}, {1, -2}, {1, 3}, {1, -3}}, 2);
    auto built = max2sat_to_wfl(phi);
    auto report = check_structure(built.instance.graph);
    CHECK(report.windy);
    CHECK(report.bipartite);
    CHECK(report.max_degree == 5);
    CHECK(report.planarity == "not checked");
  }
  SUBCASE("literal frequency enforcement") {
    std::vector<std::array<int, 2>> clauses(5, {1, 2});
    // Five duplicate clauses are not even buildable without the literal
    // cap tripping first.
    auto phi = Max2SatInstance::make(2, clauses, 1);
    CHECK_THROWS_AS(max2sat_to_wfl(phi), std::invalid_argument);
  }
  SUBCASE("K must be at least 1") {
    auto phi = Max2SatInstance::make(2, {{1, 2}}, 0);
    CHECK_THROWS_AS(max2sat_to_wfl(phi), std::invalid_argument);
  }
  SUBCASE("decide equivalence on a reduced grid") {
    auto result = check_wfl_chain(2, 2);
    CHECK(result.cases > 0);
    CHECK(result.failures == 0);
  }
}

TEST_CASE("flatten_values") {
  SUBCASE("surplus goes onto the first incident edge") {
    std::vector<VertexSpec<Rational>> vs = {{Rational(3), Rational(1, 2)},
                                            {Rational(1), Rational(0)}};
    std::vector<EdgeSpec<Rational>> es = {{0, 1, false, Rational(1), Rational(2)}};
    Instance<Rational> inst{build_graph<Rational>(std::move(vs), std::move(es)),
                            Rational(1), {}};
    auto flat = flatten_values(inst);
    CHECK(flat.instance.graph.vertex_count() == 4);  // 2 original + 2 inserted
    CHECK(flat.instance.graph.edge_count() == 3);
    for (const auto& v : flat.instance.graph.vertices()) CHECK(v.value == Rational(1));
    int boundary = flat.boundary_edge[0];
    CHECK(flat.instance.graph.edge(boundary).cost == Rational(2));
    int interior = boundary == 0 ? 1 : 0;
    CHECK(flat.instance.graph.edge(interior).cost == Rational(2));  // B+1
  }
  SUBCASE("all-unit instances pass through unchanged") {
    SplitMix64 rng(41);
    auto g = testing::random_mixed_graph(rng, 6, 6, true);
    std::vector<VertexSpec<Rational>> vs;
    for (const auto& v : g.vertices()) vs.push_back({Rational(1), v.ignition});
    std::vector<EdgeSpec<Rational>> es;
    for (const auto& e : g.edges())
      if (e.pair < 0) es.push_back({e.tail, e.head, e.directed, e.spread, e.cost});
    Instance<Rational> inst{build_graph<Rational>(std::move(vs), std::move(es)),
                            Rational(2), {}};
    auto flat = flatten_values(inst);
    CHECK(flat.instance.graph.vertex_count() == inst.graph.vertex_count());
    CHECK(flat.instance.graph.edge_count() == inst.graph.edge_count());
    CHECK(windy_risk(flat.instance.graph).value == windy_risk(inst.graph).value);
  }
  SUBCASE("zero or fractional values rejected") {
    std::vector<VertexSpec<Rational>> vs = {{Rational(0), Rational(1)},
                                            {Rational(1), Rational(0)}};
    std::vector<EdgeSpec<Rational>> es = {{0, 1, false, Rational(1), Rational(1)}};
    Instance<Rational> inst{build_graph<Rational>(std::move(vs), std::move(es)),
                            Rational(1), {}};
    CHECK_THROWS_AS(flatten_values(inst), std::invalid_argument);
  }
  SUBCASE("risk preserved for every affordable cut system") {
    SplitMix64 rng(42);
    int done = 0;
    while (done < 12) {
      auto g = testing::random_mixed_graph(rng, 8, 7, true);
      bool ok = g.vertex_count() <= 8;
      for (const auto& e : g.edges())
        if (e.pair >= 0) ok = false;
      if (!ok) continue;
      std::vector<char> has_edge(g.vertex_count(), 0);
      for (const auto& e : g.edges()) has_edge[e.tail] = has_edge[e.head] = 1;
      std::vector<VertexSpec<Rational>> vs;
      for (int v = 0; v < g.vertex_count(); ++v)
        vs.push_back({Rational(has_edge[v] ? 1 + rng.next_below(3) : 1),
                      g.vertex(v).ignition});
      std::vector<EdgeSpec<Rational>> es;
      for (const auto& e : g.edges())
        es.push_back({e.tail, e.head, e.directed, e.spread, e.cost});
      Instance<Rational> inst{build_graph<Rational>(std::move(vs), std::move(es)),
                              Rational(3), {}};
      ++done;
      auto flat = flatten_values(inst);
      auto links = cut_links(inst.graph);
      for (std::uint32_t mask = 0; mask < (1u << links.size()); ++mask) {
        Rational cost(0);
        std::vector<int> src_ids, dst_ids;
        for (std::size_t i = 0; i < links.size(); ++i)
          if (mask & (1u << i)) {
            cost += link_cost(inst.graph, links[i]);
            for (int e : links[i].edge_ids) {
              src_ids.push_back(e);
              dst_ids.push_back(flat.boundary_edge[e]);
            }
          }
        if (cost > inst.budget) continue;
        auto src_cut = close_cut(inst.graph, std::span<const int>(src_ids));
        auto dst_cut = close_cut(flat.instance.graph, std::span<const int>(dst_ids));
        CHECK(windy_risk(remove_cut(inst.graph, src_cut)).value ==
              windy_risk(remove_cut(flat.instance.graph, dst_cut)).value);
      }
    }
  }
}

TEST_CASE("flatten_costs") {
  auto make_path = [](Rational pi0, Rational pi1, long long cost, long long budget,
                      Rational threshold) {
    std::vector<VertexSpec<Rational>> vs = {{Rational(1), pi0}, {Rational(1), pi1}};
    std::vector<EdgeSpec<Rational>> es = {{0, 1, false, Rational(1), Rational(cost)}};
    return Instance<Rational>{build_graph<Rational>(std::move(vs), std::move(es)),
                              Rational(budget), threshold};
  };

  SUBCASE("degenerate ignitions map to degenerate grids") {
    auto inst = make_path(Rational(1), Rational(0), 2, 2, Rational(2));
    auto flat = flatten_costs(inst, 2);
    const auto& g = flat.instance.graph;
    long long cells = flat.m_param * flat.m_param;
    for (long long i = 0; i < cells; ++i) CHECK(g.vertex(static_cast<int>(i)).ignition == 1.0);
    for (long long i = cells; i < 2 * cells; ++i)
      CHECK(g.vertex(static_cast<int>(i)).ignition == 0.0);
  }
  SUBCASE("grid log identity") {
    auto inst = make_path(Rational(1, 2), Rational(1, 4), 2, 2, Rational(2));
    auto flat = flatten_costs(inst, 4);
    long long cells = flat.m_param * flat.m_param;
    for (int x = 0; x < 2; ++x) {
      double base = to_double(inst.graph.vertex(x).ignition);
      double sum = 0.0;
      for (long long i = 0; i < cells; ++i)
        sum += -std::log1p(-flat.instance.graph.vertex(static_cast<int>(x * cells + i)).ignition);
      double expected = -std::log1p(-base);
      CHECK(std::abs(sum - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
  SUBCASE("forward fidelity: cost and risk scale") {
    // Path 0 - 1 - 2 with costs 2 and 1.
    std::vector<VertexSpec<Rational>> vs = {{Rational(1), Rational(1, 2)},
                                            {Rational(1), Rational(1, 2)},
                                            {Rational(1), Rational(0)}};
    std::vector<EdgeSpec<Rational>> es = {{0, 1, false, Rational(1), Rational(2)},
                                          {1, 2, false, Rational(1), Rational(1)}};
    Instance<Rational> inst{build_graph<Rational>(std::move(vs), std::move(es)),
                            Rational(2), Rational(2)};
    auto flat = flatten_costs(inst, 2);
    long long cells = flat.m_param * flat.m_param;

    auto links = cut_links(inst.graph);
    for (std::uint32_t mask = 0; mask < (1u << links.size()); ++mask) {
      Rational cost(0);
      std::vector<int> src_ids;
      std::vector<int> dst_ids;
      for (std::size_t i = 0; i < links.size(); ++i)
        if (mask & (1u << i)) {
          cost += link_cost(inst.graph, links[i]);
          for (int e : links[i].edge_ids) {
            src_ids.push_back(e);
            for (int j : flat.joining_edges[e]) dst_ids.push_back(j);
          }
        }
      if (cost > inst.budget) continue;
      auto src_cut = close_cut(inst.graph, std::span<const int>(src_ids));
      auto dst_cut = close_cut(flat.instance.graph, std::span<const int>(dst_ids));
      CHECK(cut_cost(flat.instance.graph, dst_cut) == to_double(cost));
      double lhs = windy_risk(remove_cut(flat.instance.graph, dst_cut)).value;
      double rhs = static_cast<double>(cells) *
                   to_double(windy_risk(remove_cut(inst.graph, src_cut)).value);
      CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
    }
  }
  SUBCASE("hypothesis violations rejected") {
    CHECK_THROWS_AS(flatten_costs(make_path(Rational(1, 3), Rational(0), 2, 2, Rational(2)), 2),
                    std::invalid_argument);  // f * pi not integral
    CHECK_THROWS_AS(flatten_costs(make_path(Rational(1, 2), Rational(0), 3, 2, Rational(2)), 2),
                    std::invalid_argument);  // cost above f
    auto no_threshold = make_path(Rational(1, 2), Rational(0), 2, 2, Rational(2));
    no_threshold.risk_threshold.reset();
    CHECK_THROWS_AS(flatten_costs(no_threshold, 2), std::invalid_argument);
    std::vector<VertexSpec<Rational>> vs = {{Rational(1), Rational(1, 2)},
                                            {Rational(2), Rational(0)}};
    std::vector<EdgeSpec<Rational>> es = {{0, 1, false, Rational(1), Rational(1)}};
    Instance<Rational> nonunit{build_graph<Rational>(std::move(vs), std::move(es)),
                               Rational(1), Rational(1)};
    CHECK_THROWS_AS(flatten_costs(nonunit, 2), std::invalid_argument);
  }
}

TEST_CASE("constructors are deterministic") {
  auto a = partition_to_star({1, 2, 3, 4});
  auto b = partition_to_star({1, 2, 3, 4});
  CHECK(certificate_json(a.certificate) == certificate_json(b.certificate));

  auto phi = Max2SatInstance::make(2, {{1, -2}}, 1);
  auto wa = max2sat_to_wfl(phi);
  auto wb = max2sat_to_wfl(phi);
  CHECK(certificate_json(wa.certificate) == certificate_json(wb.certificate));
}

TEST_CASE("check_structure flags") {
  SUBCASE("square grid") {
    std::vector<VertexSpec<Rational>> vs(9, {Rational(1), Rational(0)});
    std::vector<EdgeSpec<Rational>> es;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        if (c + 1 < 3) es.push_back({r * 3 + c, r * 3 + c + 1, false, Rational(1), Rational(1)});
        if (r + 1 < 3) es.push_back({r * 3 + c, (r + 1) * 3 + c, false, Rational(1), Rational(1)});
      }
    auto g = build_graph<Rational>(std::move(vs), std::move(es));
    auto report = check_structure(g);
    CHECK(report.max_degree <= 4);
    CHECK(report.bipartite);
    CHECK(report.windy);
    CHECK(report.unit_values);
    CHECK(report.unit_costs);
  }
  SUBCASE("triangle is not bipartite") {
    std::vector<VertexSpec<Rational>> vs(3, {Rational(1), Rational(0)});
    std::vector<EdgeSpec<Rational>> es = {{0, 1, false, Rational(1), Rational(1)},
                                          {1, 2, false, Rational(1), Rational(1)},
                                          {2, 0, false, Rational(1), Rational(1)}};
    auto g = build_graph<Rational>(std::move(vs), std::move(es));
    CHECK_FALSE(check_structure(g).bipartite);
  }
}
