#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "colorcount/chromatic.hpp"
#include "colorcount/dp_cover.hpp"
#include "colorcount/graph.hpp"
#include "colorcount/list_color.hpp"
#include "colorcount/rng.hpp"
#include "colorcount/smallgraphs.hpp"

using namespace colorcount;

namespace {

// Naive oracle: walk all fold^n label tuples and test every matched pair.
ColorCount naive_transversal_count(const Cover& c) {
  const Graph& g = c.base;
  const int n = g.vertex_count();
  std::vector<int> label(n, 0);
  ColorCount count = 0;
  while (true) {
    bool independent = true;
    for (int e = 0; e < g.edge_count() && independent; ++e) {
      const Edge edge = g.edges()[e];
      const int image = c.maps[e][label[edge.u]];
      independent = image == kUnmatched || image != label[edge.v];
    }
    if (independent) ++count;
    int v = n - 1;
    while (v >= 0 && label[v] + 1 == c.fold) label[v--] = 0;
    if (v < 0) break;
    ++label[v];
  }
  return count;
}

Cover random_cover(const Graph& g, int fold, bool full, SplitMix64& rng) {
  Cover c;
  c.base = g;
  c.fold = fold;
  for (int e = 0; e < g.edge_count(); ++e) {
    std::vector<int> perm(fold);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = fold - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    if (!full) {
      for (int i = 0; i < fold; ++i)
        if (rng.next() & 1) perm[i] = kUnmatched;
    }
    c.maps.push_back(std::move(perm));
  }
  return c;
}

}  // namespace

TEST_CASE("canonical cover counts proper colorings") {
  CHECK(count_cover_colorings(make_cycle(4), canonical_cover(make_cycle(4), 2)) == 2);
  CHECK(count_cover_colorings(make_complete(3), canonical_cover(make_complete(3), 3)) == 6);
  CHECK(count_cover_colorings(make_empty_graph(2), canonical_cover(make_empty_graph(2), 2)) == 4);
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : all_graphs_up_to_iso(n))
      for (int k = 1; k <= 3; ++k)
        CHECK(count_cover_colorings(g, canonical_cover(g, k)) == chromatic_eval(g, k));
}

TEST_CASE("doubled cover has exactly the two constant transversals when connected") {
  for (const Graph& g : {make_cycle(3), make_complete(4), make_complete(5)}) {
    const Cover c = doubled_cover(g);
    CHECK(naive_transversal_count(c) == 2);
    CHECK(count_cover_colorings(g, c) == 2);
  }
  const Cover free3 = doubled_cover(make_empty_graph(3));
  CHECK(count_cover_colorings(make_empty_graph(3), free3) == 8);
}

TEST_CASE("restrict_cover drops correspondences and relabels") {
  // C4 restricted to the path 0-1-2-3
  const Cover c4 = canonical_cover(make_cycle(4), 2);
  Subgraph path;
  path.vertices = {0, 1, 2, 3};
  path.edges = {Edge{0, 1}, Edge{1, 2}, Edge{2, 3}};
  const Cover restricted = restrict_cover(c4, path);
  CHECK(restricted.base == make_path(4));
  CHECK(count_cover_colorings(restricted.base, restricted) == 2);  // P(P4,2)

  // doubled K3 restricted to one edge: 4 pairs minus the 2 matched ones
  const Cover k3 = doubled_cover(make_complete(3));
  Subgraph one_edge;
  one_edge.vertices = {0, 1};
  one_edge.edges = {Edge{0, 1}};
  const Cover edge_cover = restrict_cover(k3, one_edge);
  CHECK(edge_cover.base == make_complete(2));
  CHECK(count_cover_colorings(edge_cover.base, edge_cover) == 2);
  CHECK(naive_transversal_count(edge_cover) == 2);

  // restriction to the full base changes nothing
  Subgraph full;
  full.vertices = {0, 1, 2};
  full.edges = make_complete(3).edges();
  const Cover same = restrict_cover(k3, full);
  CHECK(count_cover_colorings(same.base, same) == count_cover_colorings(make_complete(3), k3));

  Subgraph bogus;
  bogus.vertices = {0, 1};
  bogus.edges = {Edge{0, 2}};
  CHECK_THROWS_AS(restrict_cover(k3, bogus), InputError);
}

TEST_CASE("count_cover_colorings frozen examples") {
  CHECK(count_cover_colorings(make_cycle(4), canonical_cover(make_cycle(4), 3)) == 18);

  // swap on exactly one edge at k = 2 kills every transversal of C4
  Cover one_swap = canonical_cover(make_cycle(4), 2);
  one_swap.maps[0] = {1, 0};
  one_swap.gauge_fixed = false;
  CHECK(count_cover_colorings(make_cycle(4), one_swap) == 0);
  CHECK(naive_transversal_count(one_swap) == 0);

  CHECK(count_cover_colorings(make_complete(1), canonical_cover(make_complete(1), 5)) == 5);
}

TEST_CASE("count_cover_colorings matches the naive oracle on random covers") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = random_graph(5, rng);
    const int fold = 1 + static_cast<int>(rng.below(3));
    const Cover c = random_cover(g, fold, trial % 2 == 0, rng);
    CHECK(count_cover_colorings(g, c) == naive_transversal_count(c));
  }
}

TEST_CASE("gauge-fixed enumeration sizes") {
  int c4_covers = 0;
  std::vector<ColorCount> counts;
  enumerate_full_covers(make_cycle(4), 2, kDefaultBudget, [&](const Cover& c) {
    ++c4_covers;
    CHECK(c.gauge_fixed);
    counts.push_back(count_cover_colorings(make_cycle(4), c));
    return true;
  });
  CHECK(c4_covers == 2);
  CHECK(counts == std::vector<ColorCount>{2, 0});  // identity first, then the swap

  CHECK(gauge_fixed_cover_count(make_complete(5), 3) == 46656);  // (3!)^6
  long long k5_covers = 0;
  enumerate_full_covers(make_complete(5), 3, kDefaultBudget, [&](const Cover&) {
    ++k5_covers;
    return true;
  });
  CHECK(k5_covers == 46656);

  for (int k = 1; k <= 3; ++k) {
    int tree_covers = 0;
    enumerate_full_covers(make_path(5), k, kDefaultBudget, [&](const Cover& c) {
      ++tree_covers;
      for (const auto& map : c.maps)
        for (int i = 0; i < c.fold; ++i) CHECK(map[i] == i);
      return true;
    });
    CHECK(tree_covers == 1);  // a full cover of a tree has a canonical labeling
  }
}

TEST_CASE("dp color function frozen examples") {
  CHECK(dp_color_function(make_cycle(4), 2).value == 0);
  CHECK(dp_color_function(make_cycle(5), 2).value == 0);   // = P(C5,2)
  CHECK(dp_color_function(make_cycle(6), 3).value == 63);  // 2^6 - 1
}

TEST_CASE("dual dp color function frozen examples") {
  CHECK(dual_dp_color_function(make_cycle(5), 2).value == 2);  // (k-1)^n + 1
  CHECK(dual_dp_color_function(make_complete(4), 3).value == 12);
  CHECK(dual_dp_color_function(make_complete(4), 2).value == 2);
}

TEST_CASE("witnesses attain their value and use the lex-smallest tuple") {
  const DpResult dual = dual_dp_color_function(make_cycle(4), 2);
  CHECK(count_cover_colorings(make_cycle(4), dual.witness) == dual.value);
  CHECK(dual.witness.gauge_fixed);
  // identity cover (tuple index 0) already attains the max of 2
  for (const auto& map : dual.witness.maps)
    for (int i = 0; i < 2; ++i) CHECK(map[i] == i);

  const DpResult dp = dp_color_function(make_cycle(4), 2);
  CHECK(count_cover_colorings(make_cycle(4), dp.witness) == dp.value);
  const int cotree = make_cycle(4).edge_index(0, 3);
  CHECK(dp.witness.maps[cotree] == std::vector<int>{1, 0});

  // deterministic across worker counts
  const DpResult parallel = dp_color_function(make_cycle(4), 2, kDefaultBudget, 4);
  CHECK(parallel.value == dp.value);
  CHECK(parallel.witness.maps == dp.witness.maps);
  const DpResult dual_k5_seq = dual_dp_color_function(make_complete(5), 3, kDefaultBudget, 1);
  const DpResult dual_k5_par = dual_dp_color_function(make_complete(5), 3, kDefaultBudget, 3);
  CHECK(dual_k5_seq.value == dual_k5_par.value);
  CHECK(dual_k5_seq.witness.maps == dual_k5_par.witness.maps);
}

TEST_CASE("sandwich chain on every graph with n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs_up_to_iso(n)) {
      for (int k = 2; k <= 3; ++k) {
        const ColorCount pdp = dp_color_function(g, k).value;
        const ColorCount pl = list_color_function(g, k).value;
        const ColorCount p = chromatic_eval(g, k);
        const ColorCount pdual = dual_dp_color_function(g, k).value;
        CHECK(pdp <= pl);
        CHECK(pl <= p);
        CHECK(p <= pdual);
      }
    }
  }
}

TEST_CASE("minimum over all covers is attained on gauge-fixed full covers") {
  // cross-check mode: every partial correspondence on <= 3 edges at k = 2
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& g : all_graphs_up_to_iso(n)) {
      if (g.edge_count() < 1 || g.edge_count() > 3) continue;
      ColorCount partial_min;
      bool have = false;
      enumerate_all_covers(g, 2, kDefaultBudget, [&](const Cover& c) {
        const ColorCount count = count_cover_colorings(g, c);
        if (!have || count < partial_min) {
          partial_min = count;
          have = true;
        }
        return true;
      });
      REQUIRE(have);
      CHECK(partial_min == dp_color_function(g, 2).value);
    }
  }
}

TEST_CASE("extending a correspondence never increases the count") {
  SplitMix64 rng(404);
  int extended = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = random_graph(5, rng);
    if (g.edge_count() == 0) continue;
    const int fold = 2 + static_cast<int>(rng.below(2));
    Cover c = random_cover(g, fold, false, rng);
    const int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.edge_count())));
    std::vector<char> used(fold, 0);
    for (int i = 0; i < fold; ++i)
      if (c.maps[e][i] != kUnmatched) used[c.maps[e][i]] = 1;
    int from = -1, to = -1;
    for (int i = 0; i < fold && from < 0; ++i)
      if (c.maps[e][i] == kUnmatched) from = i;
    for (int j = 0; j < fold && to < 0; ++j)
      if (!used[j]) to = j;
    if (from < 0 || to < 0) continue;
    const ColorCount before = count_cover_colorings(g, c);
    c.maps[e][from] = to;
    const ColorCount after = count_cover_colorings(g, c);
    CHECK(after <= before);
    ++extended;
  }
  CHECK(extended > 40);
}

TEST_CASE("gauge transformations preserve the count") {
  SplitMix64 rng(505);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(5, rng);
    const int fold = 1 + static_cast<int>(rng.below(3));
    const Cover c = random_cover(g, fold, trial % 2 == 0, rng);
    std::vector<std::vector<int>> perms(g.vertex_count());
    for (auto& perm : perms) {
      perm.resize(fold);
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = fold - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    }
    const Cover transformed = gauge_transform(c, perms);
    CHECK(count_cover_colorings(g, transformed) == count_cover_colorings(g, c));
  }
}

TEST_CASE("dual dp is at least 2 and the doubled cover witnesses it") {
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& g : all_graphs_up_to_iso(n)) {
      CHECK(dual_dp_color_function(g, 2).value >= 2);
      CHECK(count_cover_colorings(g, doubled_cover(g)) >= 2);
    }
  }
}

TEST_CASE("dual dp of K_n at k = 3 stays within 3n") {
  for (int n = 1; n <= 5; ++n) {
    const ColorCount dual = dual_dp_color_function(make_complete(n), 3).value;
    CHECK(dual <= 3 * n);
  }
}

TEST_CASE("dual dp equals P on K_{2,2} at k = 2") {
  const Graph g = make_complete_bipartite(2, 2);
  CHECK(dual_dp_color_function(g, 2).value == chromatic_eval(g, 2));
}

TEST_CASE("component multiplicativity of dp and dual dp") {
  const Graph pairs[][2] = {
      {make_cycle(3), make_complete(2)},
      {make_cycle(4), make_empty_graph(2)},
      {make_path(3), make_path(2)},
  };
  for (const auto& pair : pairs) {
    std::vector<Edge> edges = pair[0].edges();
    for (const Edge& e : pair[1].edges())
      edges.push_back(Edge{e.u + pair[0].vertex_count(), e.v + pair[0].vertex_count()});
    const Graph both(pair[0].vertex_count() + pair[1].vertex_count(), std::move(edges));
    for (int k = 2; k <= 3; ++k) {
      CHECK(dp_color_function(both, k).value ==
            dp_color_function(pair[0], k).value * dp_color_function(pair[1], k).value);
      CHECK(dual_dp_color_function(both, k).value ==
            dual_dp_color_function(pair[0], k).value *
                dual_dp_color_function(pair[1], k).value);
    }
  }
}

TEST_CASE("cover validation rejects broken tables") {
  Cover c = canonical_cover(make_complete(2), 2);
  c.maps[0] = {0, 0};
  CHECK_THROWS_AS(validate_cover(c), InputError);
  c.maps[0] = {2, 0};
  CHECK_THROWS_AS(validate_cover(c), InputError);
  c.maps[0] = {0};
  CHECK_THROWS_AS(validate_cover(c), InputError);
  CHECK_THROWS_AS(count_cover_colorings(make_complete(3), canonical_cover(make_complete(2), 2)),
                  InputError);
}

TEST_CASE("budget refusals name the cover-count bound") {
  try {
    enumerate_full_covers(make_complete(5), 3, 1000, [](const Cover&) { return true; });
    FAIL("expected refusal");
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("(k!)^{|E|-n+c}") != std::string::npos);
    CHECK(std::string(e.what()).find("46656") != std::string::npos);
  }
  CHECK_THROWS_AS(dp_color_function(make_complete(6), 3, 100000), BudgetError);
  // covers fit but counting each would blow the budget
  CHECK_THROWS_AS(dp_color_function(make_cycle(40), 3, kDefaultBudget), BudgetError);
}

TEST_CASE("cover JSON and DOT") {
  const DpResult dp = dp_color_function(make_cycle(4), 2);
  const auto j = nlohmann::json::parse(cover_to_json(dp.witness));
  CHECK(j["fold"] == 2);
  CHECK(j["forest"].size() == 3);
  REQUIRE(j["cotree"].size() == 1);
  CHECK(j["cotree"][0]["edge"] == std::vector<int>{0, 3});
  CHECK(j["cotree"][0]["perm"] == std::vector<int>{1, 0});

  const std::string dot = cover_to_dot(dp.witness);
  CHECK(dot.find("graph cover {") != std::string::npos);
  CHECK(dot.find("v0_0 -- v0_1") != std::string::npos);   // clique inside L(0)
  CHECK(dot.find("v2_1 -- v3_1") != std::string::npos);   // identity cross edge
}
