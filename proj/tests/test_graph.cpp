#include <doctest.h>

#include "firebreak/graph.hpp"
#include "firebreak/risk.hpp"
#include "test_support.hpp"

using namespace firebreak;
using firebreak::testing::random_mixed_graph;

namespace {

MixedGraph<Rational> path3_directed() {
  // 0 -> 1 -> 2
  return build_graph<Rational>(
      {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
      {{0, 1, true, Rational(1), Rational(1)}, {1, 2, true, Rational(1), Rational(1)}});
}

}  // namespace

TEST_CASE("build_graph constructs and pairs edges") {
  SUBCASE("mixed 3-vertex graph") {
    auto g = build_graph<Rational>(
        {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
        {{0, 1, false, Rational(1), Rational(1)}, {1, 2, true, Rational(1), Rational(1)}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edge(0).pair == -1);
    CHECK(g.edge(1).pair == -1);
  }
  SUBCASE("opposite directed edges get mutual pair links") {
    auto g = build_graph<Rational>(
        {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
        {{0, 1, true, Rational(1), Rational(3)}, {1, 0, true, Rational(1), Rational(3)}});
    CHECK(g.edge(0).pair == 1);
    CHECK(g.edge(1).pair == 0);
  }
  SUBCASE("opposite directed edges with unequal costs are rejected") {
    CHECK_THROWS_AS(build_graph<Rational>(
                        {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
                        {{0, 1, true, Rational(1), Rational(3)},
                         {1, 0, true, Rational(1), Rational(5)}}),
                    std::invalid_argument);
  }
  SUBCASE("self loops rejected") {
    CHECK_THROWS_AS(build_graph<Rational>({{Rational(1), Rational(0)}},
                                          {{0, 0, false, Rational(1), Rational(1)}}),
                    std::invalid_argument);
  }
  SUBCASE("duplicate undirected edge rejected") {
    CHECK_THROWS_AS(build_graph<Rational>(
                        {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
                        {{0, 1, false, Rational(1), Rational(1)},
                         {1, 0, false, Rational(1), Rational(1)}}),
                    std::invalid_argument);
  }
  SUBCASE("probability out of range rejected") {
    CHECK_THROWS_AS(build_graph<Rational>(
                        {{Rational(1), Rational(3, 2)}, {Rational(1), Rational(0)}},
                        {{0, 1, false, Rational(1), Rational(1)}}),
                    std::invalid_argument);
  }
}

TEST_CASE("close_cut adds opposite edges and is idempotent") {
  auto g = build_graph<Rational>(
      {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
      {{0, 1, true, Rational(1), Rational(4)}, {1, 0, true, Rational(1), Rational(4)}});
  auto h = close_cut(g, {0});
  CHECK(h.members == std::vector<int>{0, 1});
  auto h2 = close_cut(g, std::span<const int>(h.members));
  CHECK(h2 == h);

  auto gu = build_graph<Rational>(
      {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
      {{0, 1, false, Rational(1), Rational(4)}});
  CHECK(close_cut(gu, {0}).members == std::vector<int>{0});
  CHECK(close_cut(gu, std::initializer_list<int>{}).empty());

  SplitMix64 rng(17);
  for (int it = 0; it < 40; ++it) {
    auto rg = random_mixed_graph(rng, 8, 10, false);
    std::vector<int> ids;
    for (int e = 0; e < rg.edge_count(); ++e)
      if (rng.next_below(2)) ids.push_back(e);
    auto once = close_cut(rg, std::span<const int>(ids));
    CHECK(is_closed(rg, once));
    CHECK(close_cut(rg, std::span<const int>(once.members)) == once);
  }
}

TEST_CASE("remove_cut") {
  auto g = build_graph<Rational>(
      {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
      {{0, 1, false, Rational(1), Rational(1)}, {1, 2, false, Rational(1), Rational(1)}});
  auto cut = close_cut(g, {1});
  auto g2 = remove_cut(g, cut);
  CHECK(g2.edge_count() == 1);
  CHECK(g2.vertex_count() == 3);
  CHECK(g2.edge(0).tail == 0);

  CHECK(remove_cut(g, CutSystem{}).edge_count() == 2);
  CHECK(remove_cut(g, close_cut(g, {0, 1})).edge_count() == 0);

  auto gp = build_graph<Rational>(
      {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
      {{0, 1, true, Rational(1), Rational(4)}, {1, 0, true, Rational(1), Rational(4)}});
  CHECK_THROWS_AS(remove_cut(gp, CutSystem{{0}}), std::invalid_argument);
}

TEST_CASE("cut_cost charges each link once") {
  auto star = build_graph<Rational>(
      {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
      {{0, 1, false, Rational(1), Rational(3)}, {0, 2, false, Rational(1), Rational(5)}});
  CHECK(cut_cost(star, close_cut(star, {0, 1})) == Rational(8));
  CHECK(cut_cost(star, CutSystem{}) == Rational(0));

  auto gp = build_graph<Rational>(
      {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
      {{0, 1, true, Rational(1), Rational(4)}, {1, 0, true, Rational(1), Rational(4)}});
  CHECK(cut_cost(gp, close_cut(gp, {0})) == Rational(4));
}

TEST_CASE("cut_cost additive over disjoint closed subsets") {
  SplitMix64 rng(11);
  for (int it = 0; it < 50; ++it) {
    auto g = random_mixed_graph(rng, 8, 10, true);
    auto links = cut_links(g);
    if (links.size() < 2) continue;
    std::vector<int> a_ids, b_ids;
    for (std::size_t i = 0; i < links.size(); ++i)
      for (int e : links[i].edge_ids) (i % 2 ? a_ids : b_ids).push_back(e);
    auto a = close_cut(g, std::span<const int>(a_ids));
    auto b = close_cut(g, std::span<const int>(b_ids));
    std::vector<int> all = a_ids;
    all.insert(all.end(), b_ids.begin(), b_ids.end());
    auto both = close_cut(g, std::span<const int>(all));
    CHECK(cut_cost(g, both) == cut_cost(g, a) + cut_cost(g, b));
  }
}

TEST_CASE("total_value") {
  auto g = build_graph<Rational>(
      {{Rational(0), Rational(0)}, {Rational(176), Rational(0)}, {Rational(176), Rational(0)}},
      {});
  CHECK(total_value(g, {1, 2}) == Rational(352));
  CHECK(total_value(g, std::initializer_list<int>{}) == Rational(0));
  auto ones = build_graph<Rational>(
      {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1), Rational(0)}}, {});
  CHECK(total_value(ones, {0, 1, 2}) == Rational(3));
}

TEST_CASE("reachable_set respects orientation") {
  auto g = path3_directed();
  CHECK(reachable_set(g, {0}) == std::vector<int>{0, 1, 2});
  CHECK(reachable_set(g, {2}) == std::vector<int>{2});

  auto two_comp = build_graph<Rational>(
      {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1), Rational(0)},
       {Rational(1), Rational(0)}},
      {{0, 1, false, Rational(1), Rational(1)}, {2, 3, false, Rational(1), Rational(1)}});
  CHECK(reachable_set(two_comp, {0}) == std::vector<int>{0, 1});
}

TEST_CASE("ancestors") {
  auto g = path3_directed();
  CHECK(ancestors(g, 2) == std::vector<int>{0, 1, 2});
  CHECK(ancestors(g, 0) == std::vector<int>{0});

  auto tri = build_graph<Rational>(
      {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
      {{0, 1, false, Rational(1), Rational(1)},
       {1, 2, false, Rational(1), Rational(1)},
       {2, 0, false, Rational(1), Rational(1)}});
  for (int v = 0; v < 3; ++v) CHECK(ancestors(tri, v).size() == 3);
}

TEST_CASE("ancestors/reachable duality on random graphs") {
  SplitMix64 rng(7);
  for (int it = 0; it < 40; ++it) {
    auto g = random_mixed_graph(rng, 30, 40, false);
    for (int x = 0; x < g.vertex_count(); x += 3) {
      auto anc = ancestors(g, x);
      CHECK(std::binary_search(anc.begin(), anc.end(), x));
      for (int t = 0; t < g.vertex_count(); ++t) {
        bool t_is_ancestor = std::binary_search(anc.begin(), anc.end(), t);
        auto reach = reachable_set(g, {t});
        bool x_reachable = std::binary_search(reach.begin(), reach.end(), x);
        CHECK(t_is_ancestor == x_reachable);
      }
    }
  }
}

TEST_CASE("reachability shrinks as cuts grow") {
  SplitMix64 rng(13);
  for (int it = 0; it < 60; ++it) {
    auto g = random_mixed_graph(rng, 10, 12, true);
    if (g.edge_count() == 0 || g.vertex_count() == 0) continue;
    auto links = cut_links(g);
    std::vector<int> small_ids, big_ids;
    for (std::size_t i = 0; i < links.size(); ++i) {
      if (i % 2 == 0)
        for (int e : links[i].edge_ids) small_ids.push_back(e);
      if (i % 2 == 0 || i % 3 == 0)
        for (int e : links[i].edge_ids) big_ids.push_back(e);
    }
    auto small_cut = close_cut(g, std::span<const int>(small_ids));
    auto big_cut = close_cut(g, std::span<const int>(big_ids));
    int src = static_cast<int>(rng.next_below(g.vertex_count()));
    auto r_small = reachable_set(remove_cut(g, small_cut), {src});
    auto r_big = reachable_set(remove_cut(g, big_cut), {src});
    CHECK(std::includes(r_small.begin(), r_small.end(), r_big.begin(), r_big.end()));
  }
}

TEST_CASE("normalize_windy") {
  SUBCASE("collapses mutual pairs") {
    auto g = build_graph<Rational>(
        {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
        {{0, 1, true, Rational(1), Rational(4)}, {1, 0, true, Rational(1), Rational(4)}});
    auto u = normalize_windy(g);
    CHECK(u.edge_count() == 1);
    CHECK_FALSE(u.edge(0).directed);
    CHECK(u.edge(0).cost == Rational(4));
  }
  SUBCASE("keeps lone directed edges and is idempotent on undirected input") {
    auto g = build_graph<Rational>(
        {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
        {{0, 1, true, Rational(1), Rational(2)}});
    auto u = normalize_windy(g);
    CHECK(u.edge_count() == 1);
    CHECK(u.edge(0).directed);
    auto uu = normalize_windy(u);
    CHECK(uu.edge_count() == 1);
  }
  SUBCASE("rejects non-windy graphs") {
    auto g = build_graph<Rational>(
        {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}},
        {{0, 1, false, Rational(1, 2), Rational(1)}});
    CHECK_THROWS_AS(normalize_windy(g), std::invalid_argument);
  }
  SUBCASE("preserves windy risk on random graphs") {
    SplitMix64 rng(101);
    for (int it = 0; it < 60; ++it) {
      auto g = random_mixed_graph(rng, 9, 10, true);
      auto u = normalize_windy(g);
      CHECK(windy_risk(g).value == windy_risk(u).value);
    }
  }
}
