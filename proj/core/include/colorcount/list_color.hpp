#pragma once

#include <functional>
#include <string>
#include <vector>

#include "colorcount/bigint.hpp"
#include "colorcount/errors.hpp"
#include "colorcount/graph.hpp"

namespace colorcount {

// k-assignment: one size-k color set per vertex, colors drawn from [n*k].
struct ListAssignment {
  int fold = 0;
  std::vector<std::vector<int>> lists;  // sorted ascending, positive colors
  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

// Lexicographic order on the list system; the witness tiebreak.
bool lex_less(const ListAssignment& a, const ListAssignment& b);

// Every vertex gets {1..k}.
ListAssignment same_lists_assignment(int n, int k);

// {"fold": k, "lists": {"0": [1,2], ...}}
std::string assignment_to_json(const ListAssignment& a);

// Exact number of proper L-colorings; backtracking in descending-degree order
// (index tiebreak).
ColorCount count_L_colorings(const Graph& g, const ListAssignment& a);

// Streams one representative per equivalence class of k-assignments under
// global color permutation. A class is the multiset of color "types" (the set
// of vertices whose list contains the color) with per-vertex multiplicities
// summing to k; two assignments are color-permutation equivalent exactly when
// those multisets agree, and any class representative fits in the universe
// [n*k]. Representatives materialize colors 1,2,... by ascending type, so the
// stream and its serialization are deterministic. Returning false from the
// visitor stops the stream.
void enumerate_k_assignments(const Graph& g, int k, long long budget,
                             const std::function<bool(const ListAssignment&)>& visit);

struct ListColorResult {
  ColorCount value;
  ListAssignment witness;
};

// P_l(G,k): minimum of count_L_colorings over all k-assignment classes, with
// the lexicographically smallest minimizing representative as witness.
ListColorResult list_color_function(const Graph& g, int k, long long budget = kDefaultBudget);

}  // namespace colorcount
