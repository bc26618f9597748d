#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"

#include "colorcount/graph.hpp"
#include "colorcount/rng.hpp"

using namespace colorcount;

namespace {

// Union-find acyclicity oracle for spanning forests.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

Graph random_test_graph(int n, SplitMix64& rng) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next() & 1) edges.push_back(Edge{i, j});
  return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("graph basics enforce the invariants") {
  CHECK_THROWS_AS(Graph(0, {}), InputError);
  CHECK_THROWS_AS(Graph(3, {Edge{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(3, {Edge{0, 3}}), InputError);
  // set semantics: duplicates and reversed duplicates collapse
  const Graph g(3, {Edge{1, 0}, Edge{0, 1}, Edge{1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.edge_index(1, 2) == 1);
}

TEST_CASE("graph6 decodes the single-vertex string") {
  const Graph g = parse_graph6("@");
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);
  CHECK(encode_graph6(g) == "@");
}

TEST_CASE("graph6 hand-encoded complete graphs") {
  // K4: n=4 -> 'C'; six upper-triangle bits all set -> 111111 -> 63+63 = '~'.
  const Graph k4 = parse_graph6("C~");
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(k4.has_edge(i, j));
  CHECK(encode_graph6(k4) == "C~");
  CHECK(encode_graph6(make_complete(4)) == "C~");

  // K5: n=5 -> 'D'; ten set bits pad to 111111 111100 -> '~', '{'.
  const Graph k5 = parse_graph6("D~{");
  CHECK(k5.vertex_count() == 5);
  CHECK(k5.edge_count() == 10);
  CHECK(encode_graph6(make_complete(5)) == "D~{");
}

TEST_CASE("graph6 errors name the offending byte offset") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  try {
    parse_graph6("C");  // needs one payload byte
    FAIL("expected truncation error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  try {
    parse_graph6("C~~");
    FAIL("expected trailing garbage error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_graph6(std::string("C") + static_cast<char>(0x20));
    FAIL("expected range error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  try {
    parse_graph6("D~|");  // '|' carries a nonzero padding bit
    FAIL("expected padding error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_graph6("?"), ParseError);   // n = 0
  CHECK_THROWS_AS(parse_graph6("~~"), ParseError);  // long form unsupported
}

TEST_CASE("graph6 round trip is byte exact") {
  SplitMix64 rng(20240917);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(trial % 10 == 0 ? 62 : 12));
    const Graph g = random_test_graph(n, rng);
    const std::string encoded = encode_graph6(g);
    const Graph back = parse_graph6(encoded);
    CHECK(back == g);
    CHECK(encode_graph6(back) == encoded);
  }
}

TEST_CASE("family generators use the documented labelings") {
  const Graph c4 = make_cycle(4);
  CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

  const Graph kbip = make_complete_bipartite(2, 3);
  CHECK(kbip.vertex_count() == 5);
  CHECK(kbip.edge_count() == 6);
  CHECK_FALSE(kbip.has_edge(0, 1));  // part {0,1}
  CHECK_FALSE(kbip.has_edge(2, 3));  // part {2,3,4}
  CHECK(kbip.has_edge(0, 2));
  CHECK(kbip.has_edge(1, 4));

  const Graph tripartite = make_complete_multipartite({2, 2, 2});
  CHECK(tripartite.vertex_count() == 6);
  CHECK(tripartite.edge_count() == 12);  // 3 part pairs * 2 * 2

  const Graph wheel = make_join(make_complete(1), make_cycle(4));
  CHECK(wheel.vertex_count() == 5);
  CHECK(wheel.edge_count() == 8);
  for (int v = 1; v <= 4; ++v) CHECK(wheel.has_edge(0, v));

  CHECK(make_path(1).edge_count() == 0);
  CHECK_THROWS_AS(make_cycle(2), InputError);
  CHECK_THROWS_AS(make_complete_bipartite(0, 3), InputError);
  CHECK_THROWS_AS(make_empty_graph(-1), InputError);
}

TEST_CASE("family mini-language") {
  CHECK(parse_family_spec("cycle:5") == make_cycle(5));
  CHECK(parse_family_spec("kbip:2,3") == make_complete_bipartite(2, 3));
  CHECK(parse_family_spec("complete_bipartite:2,3") == make_complete_bipartite(2, 3));
  CHECK(parse_family_spec("kpartite:100,100").vertex_count() == 200);
  CHECK(parse_family_spec("kpartite:100,100").edge_count() == 10000);
  CHECK(parse_family_spec("join:k1,cycle:4") == make_join(make_complete(1), make_cycle(4)));
  CHECK(parse_family_spec("join:(kbip:1,2),k2") ==
        make_join(make_complete_bipartite(1, 2), make_complete(2)));
  CHECK(parse_family_spec("k5") == make_complete(5));
  CHECK(parse_family_spec("o3") == make_empty_graph(3));
  CHECK(parse_family_spec("path:4") == make_path(4));
  CHECK_THROWS_AS(parse_family_spec("wheel:5"), ParseError);
  CHECK_THROWS_AS(parse_family_spec("cycle:x"), ParseError);
  CHECK_THROWS_AS(parse_family_spec("kbip:2"), ParseError);
  CHECK_THROWS_AS(parse_family_spec("join:k1"), ParseError);

  // ':' selects family syntax, otherwise graph6
  CHECK(parse_graph_argument("complete:4") == make_complete(4));
  CHECK(parse_graph_argument("C~") == make_complete(4));
  CHECK(parse_graph_argument("k5", GraphInputKind::family) == make_complete(5));
}

TEST_CASE("spanning forest is DFS-deterministic") {
  const EdgePartition k5 = spanning_forest(make_complete(5));
  CHECK(k5.forest_edges == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(k5.cotree_edges.size() == 6);  // 10 - 5 + 1

  const EdgePartition c4 = spanning_forest(make_cycle(4));
  CHECK(c4.forest_edges == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(c4.cotree_edges == std::vector<Edge>{{0, 3}});

  const EdgePartition o3 = spanning_forest(make_empty_graph(3));
  CHECK(o3.forest_edges.empty());
  CHECK(o3.cotree_edges.empty());

  // disconnected: triangle plus an edge
  const Graph two(5, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}, Edge{3, 4}});
  const EdgePartition part = spanning_forest(two);
  CHECK(part.forest_edges == std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}});
  CHECK(part.cotree_edges == std::vector<Edge>{{0, 2}});
}

TEST_CASE("spanning forest partitions the edges acyclically") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(9));
    const Graph g = random_test_graph(n, rng);
    const EdgePartition part = spanning_forest(g);
    CHECK(part.forest_edges.size() + part.cotree_edges.size() ==
          static_cast<std::size_t>(g.edge_count()));
    UnionFind uf(n);
    for (const Edge& e : part.forest_edges) CHECK(uf.unite(e.u, e.v));
    const std::size_t comps = components(g).size();
    CHECK(part.forest_edges.size() == static_cast<std::size_t>(n) - comps);
  }
}

TEST_CASE("components split and relabel") {
  const Graph two(5, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}, Edge{3, 4}});
  const auto split = components(two);
  REQUIRE(split.size() == 2);
  CHECK(split[0].graph == make_cycle(3));
  CHECK(split[0].original_vertex == std::vector<int>{0, 1, 2});
  CHECK(split[1].graph == make_complete(2));
  CHECK(split[1].original_vertex == std::vector<int>{3, 4});

  CHECK(components(make_complete(4)).size() == 1);
  const auto isolated = components(make_empty_graph(2));
  REQUIRE(isolated.size() == 2);
  CHECK(isolated[0].graph.vertex_count() == 1);

  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_test_graph(1 + static_cast<int>(rng.below(9)), rng);
    int vertices = 0;
    int edges = 0;
    for (const auto& c : components(g)) {
      vertices += c.graph.vertex_count();
      edges += c.graph.edge_count();
    }
    CHECK(vertices == g.vertex_count());
    CHECK(edges == g.edge_count());
  }
}
