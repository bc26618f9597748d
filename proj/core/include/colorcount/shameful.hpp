#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "colorcount/bigint.hpp"
#include "colorcount/dp_cover.hpp"
#include "colorcount/errors.hpp"
#include "colorcount/graph.hpp"
#include "colorcount/list_color.hpp"
#include "colorcount/rng.hpp"

namespace colorcount {

enum class Verdict { LESS, EQUAL, GREATER };

char verdict_symbol(Verdict v);  // '<', '=', '>'

// a / k_a^n vs b / k_b^n decided by the integer cross products; the products
// are kept as certificates.
struct RatioOrder {
  Verdict verdict;
  ColorCount left_product;   // a * k_b^n
  ColorCount right_product;  // b * k_a^n
};

RatioOrder ratio_compare(const ColorCount& a, long k_a, const ColorCount& b, long k_b, int n);

enum class ColorFunction { P, Pl, Pdp, Pdual };

std::string color_function_name(ColorFunction fn);
ColorFunction parse_color_function(const std::string& tag);  // P | Pl | Pdp | Pdual

struct ScanEntry {
  long k = 0;
  bool evaluated = false;
  ColorCount value;
  std::string refusal;             // set when the budget rejected this k
  std::optional<Verdict> cmp_prev; // value(k-1)/(k-1)^n vs value(k)/k^n
  std::string witness_json;        // extremal assignment/cover when applicable
};

struct ScanReport {
  std::string graph_id;
  ColorFunction fn = ColorFunction::P;
  int n = 0;
  std::vector<ScanEntry> entries;
  bool monotone = true;                // no step compares GREATER
  std::optional<long> first_violation; // k of the first step with old > new
};

// Evaluates fn at each k in [k_min, k_max] and fills the consecutive ratio
// verdicts. Budget refusals mark the entry unevaluated and skip the adjacent
// comparisons.
ScanReport shameful_scan(const Graph& g, ColorFunction fn, long k_min, long k_max,
                         long long budget, int workers, const std::string& graph_id);

// mu(G) = n(1 - P(G,n-1)/P(G,n)) as an exact reduced fraction.
ExactFraction mu_expected_colors(const Graph& g);

// A fold-(k+1) minimization source: a list assignment or a cover.
using RestrictionSource = std::variant<ListAssignment, Cover>;

int source_fold(const RestrictionSource& source);

// Deletes label deleted[v] (0-based slot) from every vertex and counts the
// restricted object. Covers drop the deleted label's vertex of H together
// with its incident cross pairs; remaining labels renumber order-preservingly.
ColorCount restricted_count(const Graph& g, const RestrictionSource& source,
                            const std::vector<int>& deleted);

// One uniform deletion per vertex, drawn from rng.
ColorCount random_restriction_trial(const Graph& g, const RestrictionSource& source,
                                    SplitMix64& rng);

// Sample statistics over integer-valued trials. Mean/variance derive from
// exact integer sums, so results are identical under any trial partition;
// these are the only floating-point values in the project.
struct TrialStats {
  long long trials = 0;
  double mean = 0.0;
  double variance = 0.0;  // sample variance
  double stderr_of_mean = 0.0;
  std::uint64_t seed = 0;
};

// Runs `trials` restriction trials; trial i uses the counter-derived seed
// trial_seed(seed, i), so the outcome is independent of ordering and worker
// count. Compare against a * k^n / (k+1)^n with a the unrestricted count.
TrialStats monte_carlo_expectation(const Graph& g, const RestrictionSource& source,
                                   long long trials, std::uint64_t seed, int workers = 1);

std::string trial_stats_to_json(const TrialStats& stats);

struct RearrangementResult {
  ColorCount lhs;  // sum_j prod_i row_i[perm_i(j)]
  ColorCount rhs;  // sum_j prod_i row_i[j]
  bool holds = false;
};

// Rows must be sorted ascending; perms are 0-based one-line permutations of
// the column index. holds <=> lhs <= rhs (always, by the rearrangement
// inequality; asserted by the suites, decided here by exact comparison).
RearrangementResult rearrangement_check(const std::vector<std::vector<ColorCount>>& rows,
                                        const std::vector<std::vector<int>>& perms);

// alpha matrix of the bipartite extension count decomposition: rows are
// X-vertices of K_{m,n}, columns the k^n label tuples of the Y side in
// lexicographic order; entry = number of labels z of x_i such that the column
// tuple extends by (x_i, z). Row products summed over columns recover the
// transversal count of the cover.
struct ExtensionMatrix {
  int m = 0;
  long long columns = 0;
  std::vector<std::vector<int>> entries;  // m rows, each of length columns
};

ExtensionMatrix bipartite_extension_matrix(int m, int n, int k, const Cover& c,
                                           long long budget = kDefaultBudget);

ColorCount extension_matrix_total(const ExtensionMatrix& mat);

std::string extension_matrix_to_json(const ExtensionMatrix& mat);

// Complete 2^q-partite graph with parts of size 100q (the Seymour family).
Graph seymour_graph(int q);

// The fold-2 assignment of K_{n,n} with no proper coloring: the bad K_{2,4}
// assignment embedded on two X-vertices and four Y-vertices, remaining
// X-lists {1,2}, remaining Y-lists {3,4}. Needs n >= 4.
ListAssignment mcdiarmid_assignment(int n);

// CSV rows: graph, function, k, value, cmp_prev, witness_file.
std::string scan_report_to_csv(const ScanReport& report,
                               const std::vector<std::string>& witness_files = {});
std::string scan_report_to_json(const ScanReport& report);

}  // namespace colorcount
