#pragma once

#include <cstdint>
#include <vector>

#include "colorcount/graph.hpp"
#include "colorcount/rng.hpp"

namespace colorcount {

// Every graph on exactly n vertices up to isomorphism (n <= 6), enumerated by
// brute force: walk all edge subsets, keep the ones whose edge bitmask is
// minimal over all n! vertex permutations. Sorted by (edge count, bitmask),
// deterministic.
std::vector<Graph> all_graphs_up_to_iso(int n);

std::vector<Graph> connected_graphs_up_to_iso(int n);

// Uniform edge-probability-1/2 graph on a vertex count drawn from [1, max_n].
Graph random_graph(int max_n, SplitMix64& rng);

}  // namespace colorcount
