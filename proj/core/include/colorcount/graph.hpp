#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "colorcount/errors.hpp"

namespace colorcount {

// Undirected edge; endpoints are always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes endpoint order; rejects loops.
Edge make_edge(int u, int v);

// Simple finite graph on vertices 0..n-1. Edges have set semantics and are
// kept sorted, so edge indices are stable and usable as keys elsewhere
// (covers align their correspondence tables with this order). Immutable after
// construction; safe to share across threads.
class Graph {
 public:
  Graph() : Graph(1, {}) {}
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  // Index into edges() of {u,v}; -1 when absent.
  int edge_index(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// ---- graph6 (short form, n <= 62) ----

Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// ---- family generators ----
// Vertex labelings are documented and fixed so witnesses are reproducible:
// parts are contiguous blocks in declaration order; join operands are
// contiguous with the first operand first.

Graph make_empty_graph(int n);
Graph make_path(int n);
Graph make_cycle(int n);  // n >= 3
Graph make_complete(int n);
Graph make_complete_bipartite(int m, int n);  // X = 0..m-1, Y = m..m+n-1
Graph make_complete_multipartite(const std::vector<int>& part_sizes);
Graph make_join(const Graph& a, const Graph& b);

// Family mini-language: "cycle:5", "kbip:2,3", "kpartite:100,100",
// "join:k1,cycle:4". Shorthands: kN = complete:N, oN = empty:N. Join operands
// containing commas must be parenthesized: "join:(kbip:1,2),k3".
Graph parse_family_spec(std::string_view spec);

enum class GraphInputKind { automatic, family, graph6 };

// Family syntax when the string contains ':' (or when forced), graph6
// otherwise.
Graph parse_graph_argument(std::string_view text,
                           GraphInputKind kind = GraphInputKind::automatic);

// ---- decompositions ----

struct EdgePartition {
  std::vector<Edge> forest_edges;  // DFS discovery order
  std::vector<Edge> cotree_edges;  // remaining edges, graph edge order
};

// Deterministic spanning forest: depth-first from vertex 0, neighbors in
// increasing order, component roots in increasing order. Gauge fixing in the
// cover enumeration relies on this being reproducible run-to-run.
EdgePartition spanning_forest(const Graph& g);

struct ComponentSplit {
  Graph graph;
  std::vector<int> original_vertex;  // component vertex i -> input vertex id
};

// Connected components ordered by smallest original vertex; vertices inside a
// component keep their relative order.
std::vector<ComponentSplit> components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace colorcount
