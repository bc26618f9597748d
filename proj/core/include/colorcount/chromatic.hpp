#pragma once

#include <vector>

#include "colorcount/bigint.hpp"
#include "colorcount/errors.hpp"
#include "colorcount/graph.hpp"

namespace colorcount {

// S(m, i), Stirling numbers of the second kind. i > m yields 0.
ColorCount stirling2(int m, int i);

// (k)_j = k(k-1)...(k-j+1); 1 when j = 0, 0 when j > k >= 0.
ColorCount falling_factorial(long k, int j);

struct ChromaticOptions {
  // Recognize forests, cycles and complete multipartite minors and finish
  // them by closed form instead of recursing. Exact either way; tests run
  // both settings against the brute-force oracle.
  bool structural_shortcuts = true;
  bool memoize = true;
};

// Exact number of proper k-colorings via deletion-contraction with parallel
// edges merged after contraction. k = 0 with a nonempty vertex set gives 0.
ColorCount chromatic_eval(const Graph& g, long k, const ChromaticOptions& opts = {});

// Independent oracle: enumerates all k^n maps V -> [k] and counts the proper
// ones. Refuses when k^n * (|E|+1) exceeds the budget.
ColorCount brute_force_proper_colorings(const Graph& g, long k,
                                        long long budget = kDefaultBudget);

enum class ClosedFamily { empty, complete, tree, cycle, complete_multipartite };

// Closed forms: k^n, (k)_n, k(k-1)^(n-1), (k-1)^n +/- (k-1), and for complete
// multipartite graphs the partwise set-partition sum
//   sum over (j_1..j_r) of prod_i S(n_i, j_i) * (k)_{sum j_i}.
// params: a single size for the first four families, the part sizes for
// complete_multipartite.
ColorCount closed_form_eval(ClosedFamily family, const std::vector<int>& params, long k);

}  // namespace colorcount
