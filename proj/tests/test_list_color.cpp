#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "colorcount/chromatic.hpp"
#include "colorcount/graph.hpp"
#include "colorcount/list_color.hpp"
#include "colorcount/rng.hpp"
#include "colorcount/smallgraphs.hpp"

using namespace colorcount;

namespace {

// Naive oracle: count proper list colorings by walking the full product of
// the lists, no pruning.
ColorCount naive_list_count(const Graph& g, const ListAssignment& a) {
  const int n = g.vertex_count();
  std::vector<int> pick(n, 0);
  ColorCount count = 0;
  while (true) {
    bool proper = true;
    for (const Edge& e : g.edges()) {
      if (a.lists[e.u][pick[e.u]] == a.lists[e.v][pick[e.v]]) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    int v = n - 1;
    while (v >= 0 && pick[v] + 1 == static_cast<int>(a.lists[v].size())) pick[v--] = 0;
    if (v < 0) break;
    ++pick[v];
  }
  return count;
}

// Minimum of P(G,L) over every k-assignment drawn from universe [colors],
// by sheer enumeration of all C(colors,k)^n assignments.
ColorCount naive_minimum(const Graph& g, int k, int colors) {
  std::vector<std::vector<int>> subsets;
  std::vector<int> pick;
  auto choose = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == k) {
      subsets.push_back(pick);
      return;
    }
    for (int c = next; c <= colors; ++c) {
      pick.push_back(c);
      self(self, c + 1);
      pick.pop_back();
    }
  };
  choose(choose, 1);

  const int n = g.vertex_count();
  std::vector<int> which(n, 0);
  ColorCount best;
  bool have = false;
  while (true) {
    ListAssignment a;
    a.fold = k;
    for (int v = 0; v < n; ++v) a.lists.push_back(subsets[which[v]]);
    const ColorCount count = naive_list_count(g, a);
    if (!have || count < best) {
      best = count;
      have = true;
    }
    int v = n - 1;
    while (v >= 0 && which[v] + 1 == static_cast<int>(subsets.size())) which[v--] = 0;
    if (v < 0) break;
    ++which[v];
  }
  return best;
}

int class_count(const Graph& g, int k) {
  int count = 0;
  enumerate_k_assignments(g, k, kDefaultBudget, [&](const ListAssignment&) {
    ++count;
    return true;
  });
  return count;
}

ListAssignment k24_bad_assignment() {
  // parts {u1,u2} = {0,1}, {w1..w4} = {2..5}
  ListAssignment a;
  a.fold = 2;
  a.lists = {{1, 2}, {3, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
  return a;
}

}  // namespace

TEST_CASE("count_L_colorings on the frozen examples") {
  const ListAssignment same3 = same_lists_assignment(3, 3);
  CHECK(count_L_colorings(make_cycle(3), same3) == 6);

  CHECK(count_L_colorings(make_complete_bipartite(2, 4), k24_bad_assignment()) == 0);
  CHECK(naive_list_count(make_complete_bipartite(2, 4), k24_bad_assignment()) == 0);

  ListAssignment single;
  single.fold = 1;
  single.lists = {{7}};
  CHECK(count_L_colorings(make_empty_graph(1), single) == 1);
}

TEST_CASE("count_L_colorings matches the naive oracle on random assignments") {
  SplitMix64 rng(91);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(5, rng);
    const int n = g.vertex_count();
    const int k = 1 + static_cast<int>(rng.below(3));
    ListAssignment a;
    a.fold = k;
    for (int v = 0; v < n; ++v) {
      std::set<int> list;
      while (static_cast<int>(list.size()) < k)
        list.insert(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) * k)));
      a.lists.emplace_back(list.begin(), list.end());
    }
    CHECK(count_L_colorings(g, a) == naive_list_count(g, a));
  }
}

TEST_CASE("k-assignment classes: hand-enumerated counts") {
  CHECK(class_count(make_empty_graph(1), 2) == 1);  // all 2-sets are equivalent
  CHECK(class_count(make_complete(2), 1) == 2);     // same singleton vs different
  CHECK(class_count(make_complete(2), 2) == 3);     // equal, one shared, disjoint
  // 1-assignments of three vertices are exactly the set partitions: Bell(3)
  CHECK(class_count(make_complete(3), 1) == 5);
}

TEST_CASE("class representatives are valid and pairwise distinct") {
  const Graph g = make_cycle(4);
  std::set<std::vector<std::vector<int>>> seen;
  enumerate_k_assignments(g, 2, kDefaultBudget, [&](const ListAssignment& a) {
    CHECK(a.fold == 2);
    REQUIRE(a.lists.size() == 4);
    for (const auto& list : a.lists) {
      CHECK(list.size() == 2);
      for (int color : list) {
        CHECK(color >= 1);
        CHECK(color <= 8);  // universe [n*k]
      }
      CHECK(std::is_sorted(list.begin(), list.end()));
    }
    CHECK(seen.insert(a.lists).second);
    return true;
  });
  CHECK(seen.size() > 3);
}

TEST_CASE("class minimum equals the naive minimum over [nk] and [nk+2]") {
  struct Case {
    Graph g;
    int k;
  };
  const Case cases[] = {
      {make_complete(2), 1},
      {make_complete(2), 2},
      {make_path(3), 1},
      {make_cycle(3), 1},
  };
  for (const auto& c : cases) {
    const int n = c.g.vertex_count();
    const ColorCount from_classes = list_color_function(c.g, c.k).value;
    CHECK(from_classes == naive_minimum(c.g, c.k, n * c.k));
    CHECK(from_classes == naive_minimum(c.g, c.k, n * c.k + 2));
  }
}

TEST_CASE("list color function on the frozen examples") {
  CHECK(list_color_function(make_cycle(4), 2).value == 2);
  CHECK(list_color_function(make_complete_bipartite(2, 4), 2).value == 0);
  CHECK(list_color_function(make_complete(3), 2).value == 0);
}

TEST_CASE("witness attains the reported minimum") {
  for (int k = 1; k <= 2; ++k) {
    const ListColorResult r = list_color_function(make_cycle(4), k);
    CHECK(count_L_colorings(make_cycle(4), r.witness) == r.value);
    CHECK(r.witness.fold == k);
  }
}

TEST_CASE("Pl is at most P") {
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : all_graphs_up_to_iso(n))
      for (int k = 1; k <= 2; ++k)
        CHECK(list_color_function(g, k).value <= chromatic_eval(g, k));
}

TEST_CASE("list shameful steps never decrease the ratio (small corpus)") {
  for (int n = 1; n <= 3; ++n) {
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      std::vector<ColorCount> pl(4);
      for (int k = 1; k <= 3; ++k) pl[k] = list_color_function(g, k).value;
      for (int k = 1; k <= 2; ++k) {
        const ColorCount lhs =
            pl[k + 1] * ipow(static_cast<unsigned long>(k), static_cast<unsigned long>(n));
        const ColorCount rhs =
            pl[k] * ipow(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(n));
        CHECK(lhs >= rhs);
      }
    }
  }
}

TEST_CASE("cycles and chordal graphs have Pl = P") {
  const Graph paw(4, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}, Edge{2, 3}});
  struct Case {
    Graph g;
    int k_max;
  };
  const Case cases[] = {
      {make_complete(3), 3}, {make_path(4), 3},  {make_complete(4), 3},
      {paw, 3},              {make_cycle(4), 3}, {make_cycle(5), 3},
  };
  for (const auto& c : cases)
    for (int k = 2; k <= c.k_max; ++k)
      CHECK(list_color_function(c.g, k).value == chromatic_eval(c.g, k));
}

TEST_CASE("color permutation invariance of the count") {
  SplitMix64 rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(5, rng);
    const int n = g.vertex_count();
    const int k = 1 + static_cast<int>(rng.below(3));
    ListAssignment a;
    a.fold = k;
    const int universe = n * k;
    for (int v = 0; v < n; ++v) {
      std::set<int> list;
      while (static_cast<int>(list.size()) < k)
        list.insert(1 + static_cast<int>(rng.below(universe)));
      a.lists.emplace_back(list.begin(), list.end());
    }
    std::vector<int> perm(universe);
    for (int c = 0; c < universe; ++c) perm[c] = c + 1;
    for (int c = universe - 1; c > 0; --c)
      std::swap(perm[c], perm[rng.below(static_cast<std::uint64_t>(c) + 1)]);
    ListAssignment b;
    b.fold = k;
    for (const auto& list : a.lists) {
      std::vector<int> mapped;
      for (int color : list) mapped.push_back(perm[color - 1]);
      std::sort(mapped.begin(), mapped.end());
      b.lists.push_back(std::move(mapped));
    }
    CHECK(count_L_colorings(g, a) == count_L_colorings(g, b));
  }
}

TEST_CASE("component multiplicativity of Pl") {
  const Graph pairs[][2] = {
      {make_complete(2), make_complete(3)},
      {make_path(3), make_complete(2)},
      {make_cycle(3), make_empty_graph(2)},
  };
  for (const auto& pair : pairs) {
    std::vector<Edge> edges = pair[0].edges();
    for (const Edge& e : pair[1].edges())
      edges.push_back(Edge{e.u + pair[0].vertex_count(), e.v + pair[0].vertex_count()});
    const Graph both(pair[0].vertex_count() + pair[1].vertex_count(), std::move(edges));
    for (int k = 1; k <= 2; ++k) {
      CHECK(list_color_function(both, k).value ==
            list_color_function(pair[0], k).value * list_color_function(pair[1], k).value);
    }
  }
}

TEST_CASE("budget refusal names the class space bound") {
  try {
    list_color_function(make_complete_bipartite(10, 10), 2, 1000000);
    FAIL("expected refusal");
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("C(nk,k)^n") != std::string::npos);
  }
  CHECK_THROWS_AS(list_color_function(make_complete_bipartite(11, 11), 2), BudgetError);
}

TEST_CASE("witness JSON shape") {
  ListAssignment a;
  a.fold = 2;
  a.lists = {{1, 2}, {2, 3}};
  const auto j = nlohmann::json::parse(assignment_to_json(a));
  CHECK(j["fold"] == 2);
  CHECK(j["lists"]["0"] == std::vector<int>{1, 2});
  CHECK(j["lists"]["1"] == std::vector<int>{2, 3});
}
