#include "colorcount/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "colorcount/chromatic.hpp"
#include "colorcount/dp_cover.hpp"
#include "colorcount/graph.hpp"
#include "colorcount/list_color.hpp"
#include "colorcount/rng.hpp"
#include "colorcount/shameful.hpp"
#include "colorcount/smallgraphs.hpp"

namespace colorcount::verify {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& message) {
    if (!condition) {
      if (!ok) detail << "; ";
      detail << message;
      ok = false;
    }
  }
  void note(const std::string& message) {
    if (ok && detail.tellp() == std::streampos(0)) detail << message;
  }
};

ColorCount cycle_dp_expected(int n, long k) {
  const ColorCount body = ipow(ColorCount(k - 1), static_cast<unsigned long>(n));
  return n % 2 == 1 ? ColorCount(body - (k - 1)) : ColorCount(body - 1);
}

ColorCount cycle_dual_expected(int n, long k) {
  const ColorCount body = ipow(ColorCount(k - 1), static_cast<unsigned long>(n));
  return n % 2 == 1 ? ColorCount(body + 1) : ColorCount(body + (k - 1));
}

std::vector<Graph> connected_upto(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (Graph& g : connected_graphs_up_to_iso(n)) out.push_back(std::move(g));
  return out;
}

// --- criteria ---

void criterion_cycle_formulas(Check& check, long long budget, int workers) {
  for (int n = 3; n <= 6; ++n) {
    const Graph cycle = make_cycle(n);
    for (long k = 2; k <= 3; ++k) {
      const DpResult dp = dp_color_function(cycle, static_cast<int>(k), budget, workers);
      const DpResult dual = dual_dp_color_function(cycle, static_cast<int>(k), budget, workers);
      check.require(dp.value == cycle_dp_expected(n, k),
                    "Pdp(C" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                        to_decimal(dp.value));
      check.require(dual.value == cycle_dual_expected(n, k),
                    "Pdual(C" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                        to_decimal(dual.value));
    }
  }
  check.note("Pdp and Pdual match the closed forms on C3..C6, k in {2,3}");
}

void criterion_k4_dual(Check& check, long long budget, int workers) {
  const Graph k4 = make_complete(4);
  const DpResult at2 = dual_dp_color_function(k4, 2, budget, workers);
  const DpResult at3 = dual_dp_color_function(k4, 3, budget, workers);
  check.require(at2.value == 2, "Pdual(K4,2) = " + to_decimal(at2.value) + ", want 2");
  check.require(at3.value == 12, "Pdual(K4,3) = " + to_decimal(at3.value) + ", want 12");
  check.note("Pdual(K4,2) = 2, Pdual(K4,3) = 12 over 8 resp. 216 covers");
}

void criterion_k5_violation(Check& check, long long budget, int workers) {
  const Graph k5 = make_complete(5);
  const DpResult at2 = dual_dp_color_function(k5, 2, budget, workers);
  const DpResult at3 = dual_dp_color_function(k5, 3, budget, workers);
  check.require(at2.value >= 2, "Pdual(K5,2) = " + to_decimal(at2.value) + ", want >= 2");
  check.require(at3.value <= 15, "Pdual(K5,3) = " + to_decimal(at3.value) + ", want <= 15");
  const RatioOrder order = ratio_compare(at3.value, 3, at2.value, 2, 5);
  check.require(order.verdict == Verdict::LESS,
                "Pdual(K5,3)/3^5 vs Pdual(K5,2)/2^5 compared " +
                    std::string(1, verdict_symbol(order.verdict)));
  check.note("Pdual(K5,2) = " + to_decimal(at2.value) + ", Pdual(K5,3) = " + to_decimal(at3.value) +
             ", dual shameful (K5,2) inequality fails");
}

void criterion_bipartite_dual(Check& check, long long budget, int workers) {
  const int cases[][3] = {{1, 2, 2}, {2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 3, 2}};
  for (const auto& c : cases) {
    const Graph g = make_complete_bipartite(c[0], c[1]);
    const DpResult dual = dual_dp_color_function(g, c[2], budget, workers);
    const ColorCount chromatic = chromatic_eval(g, c[2]);
    check.require(dual.value == chromatic,
                  "Pdual(K_{" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "}," +
                      std::to_string(c[2]) + ") = " + to_decimal(dual.value) + " != P = " +
                      to_decimal(chromatic));
  }
  check.note("Pdual = P on the five K_{m,n} desk instances");
}

void criterion_mcdiarmid(Check& check, long long, int) {
  const ColorCount p3 = closed_form_eval(ClosedFamily::complete_multipartite, {10, 10}, 3);
  const ColorCount p2 = closed_form_eval(ClosedFamily::complete_multipartite, {10, 10}, 2);
  check.require(p3 == 6138, "P(K_{10,10},3) = " + to_decimal(p3) + ", want 6138");
  check.require(p2 == 2, "P(K_{10,10},2) = " + to_decimal(p2) + ", want 2");

  const Graph g = make_complete_bipartite(10, 10);
  check.require(chromatic_eval(g, 3) == p3, "chromatic_eval disagrees with the closed form");

  const RatioOrder order = ratio_compare(p3, 3, p2, 2, 20);
  check.require(order.verdict == Verdict::LESS,
                "6138*2^20 vs 2*3^20 compared " + std::string(1, verdict_symbol(order.verdict)));
  check.require(order.left_product == ColorCount(6138) * ipow(2UL, 20),
                "left certificate mismatch");
  check.require(order.right_product == ColorCount(2) * ipow(3UL, 20),
                "right certificate mismatch");

  const ListAssignment bad = mcdiarmid_assignment(10);
  const ColorCount zero = count_L_colorings(g, bad);
  check.require(zero == 0, "constructed 2-assignment admits " + to_decimal(zero) + " colorings");
  check.note("6138*2^20 = " + to_decimal(order.left_product) + " < " +
             to_decimal(order.right_product) + " = 2*3^20; witness gives Pl(K_{10,10},2) = 0 < 2");
}

void criterion_list_dp_shameful(Check& check, long long budget, int workers,
                                std::vector<Graph>& corpus_out) {
  corpus_out = connected_upto(4);
  for (std::size_t gi = 0; gi < corpus_out.size(); ++gi) {
    const Graph& g = corpus_out[gi];
    const int n = g.vertex_count();
    std::vector<ColorCount> pl(4), pdp(4);
    for (int k = 1; k <= 3; ++k) {
      pl[k] = list_color_function(g, k, budget).value;
      pdp[k] = dp_color_function(g, k, budget, workers).value;
    }
    for (int k = 1; k <= 2; ++k) {
      const RatioOrder list_order = ratio_compare(pl[k], k, pl[k + 1], k + 1, n);
      check.require(list_order.verdict != Verdict::GREATER,
                    "list shameful step fails on corpus graph " + std::to_string(gi) + " at k=" +
                        std::to_string(k));
      const RatioOrder dp_order = ratio_compare(pdp[k], k, pdp[k + 1], k + 1, n);
      check.require(dp_order.verdict != Verdict::GREATER,
                    "DP shameful step fails on corpus graph " + std::to_string(gi) + " at k=" +
                        std::to_string(k));
    }
  }
  check.note("list and DP shameful inequalities hold on all " +
             std::to_string(corpus_out.size()) +
             " connected graphs with n <= 4 (brute-force enumeration), k in {1,2}");
}

void criterion_sandwich(Check& check, long long budget, int workers,
                        const std::vector<Graph>& corpus) {
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Graph& g = corpus[gi];
    const ColorCount pdp = dp_color_function(g, 2, budget, workers).value;
    const ColorCount pl = list_color_function(g, 2, budget).value;
    const ColorCount p = chromatic_eval(g, 2);
    const ColorCount pdual = dual_dp_color_function(g, 2, budget, workers).value;
    check.require(pdp <= pl && pl <= p && p <= pdual,
                  "sandwich chain fails on corpus graph " + std::to_string(gi) + ": " +
                      to_decimal(pdp) + " / " + to_decimal(pl) + " / " + to_decimal(p) + " / " +
                      to_decimal(pdual));
  }
  check.note("Pdp <= Pl <= P <= Pdual at k = 2 on the criterion-6 corpus");
}

void criterion_dong_sanity(Check& check, long long budget, int workers) {
  int scanned = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : all_graphs_up_to_iso(n)) {
      const long k_min = std::max(1, n - 1);
      const ScanReport report =
          shameful_scan(g, ColorFunction::P, k_min, n + 2, budget, workers, "corpus");
      check.require(report.monotone,
                    "P scan not monotone on an n=" + std::to_string(n) + " graph");
      ++scanned;
    }
  }
  check.note("P ratios are monotone for k >= n-1 on all " + std::to_string(scanned) +
             " graphs with n <= 4");
}

void criterion_oracle_equivalence(Check& check, long long budget, int) {
  SplitMix64 rng(trial_seed(0, 0x9e3779));
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(6, rng);
    for (long k = 0; k <= 4; ++k) {
      const ColorCount brute = brute_force_proper_colorings(g, k, budget);
      const ColorCount fast = chromatic_eval(g, k);
      check.require(fast == brute, "chromatic_eval != brute force on random graph " +
                                       std::to_string(i) + " at k=" + std::to_string(k));
      if (k >= 1) {
        const ColorCount covered =
            count_cover_colorings(g, canonical_cover(g, static_cast<int>(k)));
        check.require(covered == brute, "canonical-cover count != brute force on random graph " +
                                            std::to_string(i) + " at k=" + std::to_string(k));
      }
      if (!check.ok) return;
    }
  }
  check.note("chromatic_eval and canonical-cover counting match brute force on 200 random "
             "graphs, k <= 4");
}

void criterion_monte_carlo(Check& check, long long, int workers) {
  const Graph cycle = make_cycle(4);
  const RestrictionSource source = same_lists_assignment(4, 3);
  const TrialStats stats = monte_carlo_expectation(cycle, source, 10000, 0, workers);
  const double target = 32.0 / 9.0;
  check.require(std::abs(stats.mean - target) <= 3.0 * stats.stderr_of_mean,
                "sample mean " + std::to_string(stats.mean) + " deviates from 32/9 by more than 3 "
                "standard errors");
  const TrialStats again = monte_carlo_expectation(cycle, source, 10000, 0, workers);
  check.require(stats.mean == again.mean && stats.variance == again.variance,
                "rerun with the same seed changed the statistics");
  std::ostringstream note;
  note << "mean " << stats.mean << " vs target 32/9 = " << target << " (stderr "
       << stats.stderr_of_mean << "), rerun identical";
  check.note(note.str());
}

void criterion_rearrangement_and_alpha(Check& check, long long budget, int) {
  SplitMix64 rng(trial_seed(0, 0xa11ce));
  for (int i = 0; i < 10000 && check.ok; ++i) {
    const int rows = 1 + static_cast<int>(rng.below(4));
    const int cols = 1 + static_cast<int>(rng.below(6));
    std::vector<std::vector<ColorCount>> matrix(rows, std::vector<ColorCount>(cols));
    for (auto& row : matrix) {
      std::vector<long> values(cols);
      for (auto& v : values) v = static_cast<long>(rng.below(10));
      std::sort(values.begin(), values.end());
      for (int j = 0; j < cols; ++j) row[j] = values[j];
    }
    std::vector<std::vector<int>> perms(rows, std::vector<int>(cols));
    for (auto& perm : perms) {
      for (int j = 0; j < cols; ++j) perm[j] = j;
      for (int j = cols - 1; j > 0; --j)
        std::swap(perm[j], perm[rng.below(static_cast<std::uint64_t>(j) + 1)]);
    }
    const RearrangementResult result = rearrangement_check(matrix, perms);
    check.require(result.holds, "rearrangement inequality failed on random instance " +
                                    std::to_string(i));
  }

  const Graph k22 = make_complete_bipartite(2, 2);
  int covers = 0;
  enumerate_all_full_covers(k22, 2, budget, [&](const Cover& c) {
    ++covers;
    const ExtensionMatrix mat = bipartite_extension_matrix(2, 2, 2, c, budget);
    check.require(extension_matrix_total(mat) == count_cover_colorings(k22, c),
                  "alpha-matrix total disagrees with the transversal count");
    return check.ok;
  });
  check.require(covers == 16, "expected 16 full covers of K_{2,2}, saw " + std::to_string(covers));
  check.note("10^4 random rearrangement instances hold; alpha-matrix sums match on all 16 covers");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(long long budget, int workers) {
  std::vector<CriterionResult> results;
  std::vector<Graph> corpus;  // filled by criterion 6, reused by criterion 7

  struct Spec {
    int id;
    const char* name;
    double limit;
    std::function<void(Check&)> body;
  };
  const Spec specs[] = {
      {1, "cycle dp/dual closed forms", 10.0,
       [&](Check& c) { criterion_cycle_formulas(c, budget, workers); }},
      {2, "K4 dual values", 5.0, [&](Check& c) { criterion_k4_dual(c, budget, workers); }},
      {3, "K5 dual shameful violation", 60.0,
       [&](Check& c) { criterion_k5_violation(c, budget, workers); }},
      {4, "Pdual = P on complete bipartite", 30.0,
       [&](Check& c) { criterion_bipartite_dual(c, budget, workers); }},
      {5, "McDiarmid counterexample certificate", 1.0,
       [&](Check& c) { criterion_mcdiarmid(c, budget, workers); }},
      {6, "list/DP shameful property suite", 600.0,
       [&](Check& c) { criterion_list_dp_shameful(c, budget, workers, corpus); }},
      {7, "sandwich chain at k = 2", 600.0,
       [&](Check& c) { criterion_sandwich(c, budget, workers, corpus); }},
      {8, "P ratio monotonicity for k >= n-1", 10.0,
       [&](Check& c) { criterion_dong_sanity(c, budget, workers); }},
      {9, "oracle equivalence on random graphs", 60.0,
       [&](Check& c) { criterion_oracle_equivalence(c, budget, workers); }},
      {10, "Monte Carlo restriction expectation", 10.0,
       [&](Check& c) { criterion_monte_carlo(c, budget, workers); }},
      {11, "rearrangement + alpha matrix", 10.0,
       [&](Check& c) { criterion_rearrangement_and_alpha(c, budget, workers); }},
  };

  for (const Spec& spec : specs) {
    CriterionResult result;
    result.id = spec.id;
    result.name = spec.name;
    result.limit_seconds = spec.limit;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      spec.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.ok && result.seconds > spec.limit) {
      check.require(false, "exceeded the " + std::to_string(spec.limit) + " s budget");
    }
    result.passed = check.ok;
    result.detail = check.detail.str();
    results.push_back(std::move(result));
  }
  return results;
}

bool run_acceptance(std::ostream& out, long long budget, int workers) {
  bool all = true;
  for (const CriterionResult& r : run_acceptance(budget, workers)) {
    out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " ("
        << r.seconds << " s";
    if (!r.passed) out << ", limit " << r.limit_seconds << " s";
    out << ")";
    if (!r.detail.empty()) out << " - " << r.detail;
    out << "\n";
    all = all && r.passed;
  }
  out << (all ? "all criteria passed" : "SUITE FAILED") << "\n";
  return all;
}

}  // namespace colorcount::verify
