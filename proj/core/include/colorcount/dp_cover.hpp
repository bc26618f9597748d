#pragma once

#include <functional>
#include <string>
#include <vector>

#include "colorcount/bigint.hpp"
#include "colorcount/errors.hpp"
#include "colorcount/graph.hpp"

namespace colorcount {

inline constexpr int kUnmatched = -1;

// k-fold DP-cover of its base graph in correspondence form. For base edge
// e = {u,v} with u < v, maps[e][i] is the label of v matched with label i of
// u (kUnmatched when label i has no partner); maps is aligned with
// base.edges(). Reversed access inverts the injection. A cover is full when
// every map is total; gauge_fixed additionally means every edge of the
// deterministic spanning forest carries the identity.
struct Cover {
  Graph base;
  int fold = 0;
  std::vector<std::vector<int>> maps;
  bool gauge_fixed = false;
};

// Rejects ragged/out-of-range/non-injective correspondence tables.
void validate_cover(const Cover& c);

bool is_full_cover(const Cover& c);

// Identity correspondence on every edge; transversals biject with proper
// k-colorings.
Cover canonical_cover(const Graph& g, int k);

// k = 2 with the swap on every edge; a connected base then has exactly the
// two constant-label transversals.
Cover doubled_cover(const Graph& g);

// Subgraph selector: vertex subset (ascending) plus edges among it.
struct Subgraph {
  std::vector<int> vertices;
  std::vector<Edge> edges;
};

// Subcover restricted to h: vertices relabel to 0..|h|-1 in ascending
// original order, dropped edges lose their correspondences.
Cover restrict_cover(const Cover& c, const Subgraph& h);

// Number of transversals: label choices, one per vertex, avoiding every
// matched pair. Backtracking in descending-degree order; an undefined pair
// never conflicts.
ColorCount count_cover_colorings(const Graph& g, const Cover& c);

// (k!)^{|E|-n+c}: size of the gauge-fixed full-cover family.
ColorCount gauge_fixed_cover_count(const Graph& g, int k);

// Streams every gauge-fixed full k-fold cover: identity on the spanning
// forest, each co-tree edge running through all k! permutations, tuples in
// lexicographic order with the first co-tree edge most significant. Every
// full cover of g has a gauge-fixed representative with the same transversal
// count (relabel the forest to identity), so min/max over this stream is
// min/max over all full covers. Returning false stops the stream.
void enumerate_full_covers(const Graph& g, int k, long long budget,
                           const std::function<bool(const Cover&)>& visit);

// Cross-check streams (no gauge fixing): all (k!)^|E| full covers, and all
// covers with arbitrary partial correspondences per edge.
void enumerate_all_full_covers(const Graph& g, int k, long long budget,
                               const std::function<bool(const Cover&)>& visit);
void enumerate_all_covers(const Graph& g, int k, long long budget,
                          const std::function<bool(const Cover&)>& visit);

struct DpResult {
  ColorCount value;
  Cover witness;
};

// P_DP(G,k): minimum transversal count over gauge-fixed full covers. The
// minimum over all covers is attained on full ones, because adding a pair to
// a correspondence never increases the count. Witness tiebreak:
// lexicographically smallest co-tree permutation tuple.
DpResult dp_color_function(const Graph& g, int k, long long budget = kDefaultBudget,
                           int workers = 1);

// P*_DP(G,k): maximum over full covers, same tiebreak.
DpResult dual_dp_color_function(const Graph& g, int k, long long budget = kDefaultBudget,
                                int workers = 1);

// Relabels L(v) by perms[v] (new label = perms[v][old]) and conjugates every
// incident correspondence; transversal counts are invariant.
Cover gauge_transform(const Cover& c, const std::vector<std::vector<int>>& perms);

// {"fold": k, "forest": [[u,v],...], "cotree": [{"edge": [u,v], "perm": [...]}]}
// with perm in one-line notation; -1 marks an unmatched label.
std::string cover_to_json(const Cover& c);

// The cover graph H: one cluster of k labels per vertex, clique edges inside,
// cross-edges between matched labels.
std::string cover_to_dot(const Cover& c);

}  // namespace colorcount
