#include "colorcount/shameful.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "colorcount/chromatic.hpp"
#include "colorcount/parallel.hpp"

namespace colorcount {

char verdict_symbol(Verdict v) {
  switch (v) {
    case Verdict::LESS: return '<';
    case Verdict::EQUAL: return '=';
    case Verdict::GREATER: return '>';
  }
  return '?';
}

RatioOrder ratio_compare(const ColorCount& a, long k_a, const ColorCount& b, long k_b, int n) {
  if (k_a < 1 || k_b < 1) throw InputError("ratio_compare needs k_a, k_b >= 1");
  if (a < 0 || b < 0) throw InputError("ratio_compare needs nonnegative counts");
  RatioOrder order;
  order.left_product = a * ipow(static_cast<unsigned long>(k_b), static_cast<unsigned long>(n));
  order.right_product = b * ipow(static_cast<unsigned long>(k_a), static_cast<unsigned long>(n));
  const int cmp = mpz_cmp(order.left_product.get_mpz_t(), order.right_product.get_mpz_t());
  order.verdict = cmp < 0 ? Verdict::LESS : cmp > 0 ? Verdict::GREATER : Verdict::EQUAL;
  return order;
}

std::string color_function_name(ColorFunction fn) {
  switch (fn) {
    case ColorFunction::P: return "P";
    case ColorFunction::Pl: return "Pl";
    case ColorFunction::Pdp: return "Pdp";
    case ColorFunction::Pdual: return "Pdual";
  }
  return "?";
}

ColorFunction parse_color_function(const std::string& tag) {
  if (tag == "P") return ColorFunction::P;
  if (tag == "Pl") return ColorFunction::Pl;
  if (tag == "Pdp") return ColorFunction::Pdp;
  if (tag == "Pdual") return ColorFunction::Pdual;
  throw InputError("unknown color function '" + tag + "' (expected P|Pl|Pdp|Pdual)");
}

ScanReport shameful_scan(const Graph& g, ColorFunction fn, long k_min, long k_max,
                         long long budget, int workers, const std::string& graph_id) {
  if (k_min < 1) throw InputError("scan needs k_min >= 1");
  if (k_max < k_min) throw InputError("scan needs k_max >= k_min");
  ScanReport report;
  report.graph_id = graph_id;
  report.fn = fn;
  report.n = g.vertex_count();

  for (long k = k_min; k <= k_max; ++k) {
    ScanEntry entry;
    entry.k = k;
    try {
      switch (fn) {
        case ColorFunction::P:
          entry.value = chromatic_eval(g, k);
          break;
        case ColorFunction::Pl: {
          ListColorResult r = list_color_function(g, static_cast<int>(k), budget);
          entry.value = std::move(r.value);
          entry.witness_json = assignment_to_json(r.witness);
          break;
        }
        case ColorFunction::Pdp: {
          DpResult r = dp_color_function(g, static_cast<int>(k), budget, workers);
          entry.value = std::move(r.value);
          entry.witness_json = cover_to_json(r.witness);
          break;
        }
        case ColorFunction::Pdual: {
          DpResult r = dual_dp_color_function(g, static_cast<int>(k), budget, workers);
          entry.value = std::move(r.value);
          entry.witness_json = cover_to_json(r.witness);
          break;
        }
      }
      entry.evaluated = true;
    } catch (const BudgetError& e) {
      entry.refusal = e.what();
    }
    report.entries.push_back(std::move(entry));
  }

  for (std::size_t i = 1; i < report.entries.size(); ++i) {
    ScanEntry& prev = report.entries[i - 1];
    ScanEntry& cur = report.entries[i];
    if (!prev.evaluated || !cur.evaluated) continue;
    cur.cmp_prev = ratio_compare(prev.value, prev.k, cur.value, cur.k, report.n).verdict;
    if (*cur.cmp_prev == Verdict::GREATER) {
      report.monotone = false;
      if (!report.first_violation) report.first_violation = prev.k;
    }
  }
  return report;
}

ExactFraction mu_expected_colors(const Graph& g) {
  const int n = g.vertex_count();
  const ColorCount at_n = chromatic_eval(g, n);
  if (at_n == 0) throw InputError("mu undefined: P(G,n) = 0");
  const ColorCount at_prev = n >= 2 ? chromatic_eval(g, n - 1) : ColorCount(0);
  return make_fraction(n * (at_n - at_prev), at_n);
}

int source_fold(const RestrictionSource& source) {
  if (const auto* a = std::get_if<ListAssignment>(&source)) return a->fold;
  return std::get<Cover>(source).fold;
}

namespace {

ListAssignment restrict_assignment(const ListAssignment& a, const std::vector<int>& deleted) {
  ListAssignment out;
  out.fold = a.fold - 1;
  out.lists.reserve(a.lists.size());
  for (std::size_t v = 0; v < a.lists.size(); ++v) {
    std::vector<int> list = a.lists[v];
    list.erase(list.begin() + deleted[v]);
    out.lists.push_back(std::move(list));
  }
  return out;
}

Cover restrict_cover_labels(const Cover& c, const std::vector<int>& deleted) {
  Cover out;
  out.base = c.base;
  out.fold = c.fold - 1;
  out.maps.assign(c.maps.size(), {});
  for (int e = 0; e < c.base.edge_count(); ++e) {
    const Edge edge = c.base.edges()[e];
    const int del_u = deleted[edge.u];
    const int del_v = deleted[edge.v];
    std::vector<int> table(out.fold, kUnmatched);
    for (int i = 0; i < out.fold; ++i) {
      const int old_label = i < del_u ? i : i + 1;
      const int image = c.maps[e][old_label];
      if (image == kUnmatched || image == del_v) continue;
      table[i] = image < del_v ? image : image - 1;
    }
    out.maps[e] = std::move(table);
  }
  out.gauge_fixed = false;
  return out;
}

}  // namespace

ColorCount restricted_count(const Graph& g, const RestrictionSource& source,
                            const std::vector<int>& deleted) {
  const int n = g.vertex_count();
  const int fold = source_fold(source);
  if (fold < 2) throw InputError("restriction needs fold >= 2");
  if (static_cast<int>(deleted.size()) != n)
    throw InputError("deletion pattern needs one slot per vertex");
  for (int d : deleted)
    if (d < 0 || d >= fold) throw InputError("deletion slot out of range");

  if (const auto* a = std::get_if<ListAssignment>(&source))
    return count_L_colorings(g, restrict_assignment(*a, deleted));
  const Cover& c = std::get<Cover>(source);
  if (!(c.base == g)) throw InputError("cover base differs from the supplied graph");
  const Cover restricted = restrict_cover_labels(c, deleted);
  return count_cover_colorings(g, restricted);
}

ColorCount random_restriction_trial(const Graph& g, const RestrictionSource& source,
                                    SplitMix64& rng) {
  const int fold = source_fold(source);
  if (fold < 2) throw InputError("restriction needs fold >= 2");
  std::vector<int> deleted(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    deleted[v] = static_cast<int>(rng.below(static_cast<std::uint64_t>(fold)));
  return restricted_count(g, source, deleted);
}

TrialStats monte_carlo_expectation(const Graph& g, const RestrictionSource& source,
                                   long long trials, std::uint64_t seed, int workers) {
  if (trials < 100) throw InputError("monte carlo runs need trials >= 100");
  const int fold = source_fold(source);
  if (fold < 2) throw InputError("restriction needs fold >= 2");

  const int chunk_slots = std::max(1, workers);
  std::vector<ColorCount> sums(chunk_slots, 0);
  std::vector<ColorCount> square_sums(chunk_slots, 0);
  parallel_chunks(trials, workers, [&](int chunk, long long begin, long long end) {
    ColorCount sum = 0;
    ColorCount squares = 0;
    for (long long i = begin; i < end; ++i) {
      SplitMix64 rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
      const ColorCount value = random_restriction_trial(g, source, rng);
      sum += value;
      squares += value * value;
    }
    sums[chunk] = std::move(sum);
    square_sums[chunk] = std::move(squares);
  });

  ColorCount sum = 0;
  ColorCount squares = 0;
  for (int c = 0; c < chunk_slots; ++c) {
    sum += sums[c];
    squares += square_sums[c];
  }

  TrialStats stats;
  stats.trials = trials;
  stats.seed = seed;
  const ColorCount n_trials(static_cast<long>(trials));
  mpq_class mean_q(sum, n_trials);
  mean_q.canonicalize();
  stats.mean = mean_q.get_d();
  if (trials > 1) {
    // s^2 = (N * sum(x^2) - sum(x)^2) / (N (N-1)), exact until the final cast.
    mpq_class variance(n_trials * squares - sum * sum, n_trials * (n_trials - 1));
    variance.canonicalize();
    stats.variance = variance.get_d();
  }
  stats.stderr_of_mean = std::sqrt(stats.variance / static_cast<double>(trials));
  return stats;
}

std::string trial_stats_to_json(const TrialStats& stats) {
  nlohmann::json j;
  j["trials"] = stats.trials;
  j["mean"] = stats.mean;
  j["variance"] = stats.variance;
  j["stderr"] = stats.stderr_of_mean;
  j["seed"] = stats.seed;
  return j.dump();
}

RearrangementResult rearrangement_check(const std::vector<std::vector<ColorCount>>& rows,
                                        const std::vector<std::vector<int>>& perms) {
  if (rows.empty()) throw InputError("rearrangement check needs at least one row");
  const std::size_t t = rows[0].size();
  if (t == 0) throw InputError("rearrangement check needs at least one column");
  if (perms.size() != rows.size())
    throw InputError("rearrangement check needs one permutation per row");
  for (const auto& row : rows) {
    if (row.size() != t) throw InputError("rearrangement matrix must be rectangular");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 0) throw InputError("rearrangement entries must be nonnegative");
      if (j > 0 && row[j] < row[j - 1]) throw InputError("rearrangement rows must be sorted ascending");
    }
  }
  for (const auto& perm : perms) {
    if (perm.size() != t) throw InputError("permutation length differs from row length");
    std::vector<char> hit(t, 0);
    for (int image : perm) {
      if (image < 0 || image >= static_cast<int>(t) || hit[image])
        throw InputError("invalid permutation in rearrangement check");
      hit[image] = 1;
    }
  }

  RearrangementResult result;
  result.lhs = 0;
  result.rhs = 0;
  for (std::size_t j = 0; j < t; ++j) {
    ColorCount lhs_term = 1;
    ColorCount rhs_term = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      lhs_term *= rows[i][perms[i][j]];
      rhs_term *= rows[i][j];
    }
    result.lhs += lhs_term;
    result.rhs += rhs_term;
  }
  result.holds = result.lhs <= result.rhs;
  return result;
}

ExtensionMatrix bipartite_extension_matrix(int m, int n, int k, const Cover& c,
                                           long long budget) {
  if (m < 1 || n < 1 || k < 1) throw InputError("extension matrix needs m, n, k >= 1");
  const Graph expected = make_complete_bipartite(m, n);
  if (!(c.base == expected)) throw InputError("cover base is not K_{m,n} in canonical labeling");
  if (c.fold != k) throw InputError("cover fold differs from k");
  if (!is_full_cover(c)) throw InputError("extension matrix needs a full cover");

  const ColorCount column_space = ipow(static_cast<unsigned long>(k), static_cast<unsigned long>(n));
  if (exceeds(column_space * m, budget))
    throw BudgetError("extension matrix refused: k^n = " + to_decimal(column_space) +
                      " columns exceeds budget " + std::to_string(budget));
  const long long columns = column_space.get_si();

  // inverse correspondence per (X vertex, Y vertex)
  std::vector<std::vector<std::vector<int>>> inverse(m, std::vector<std::vector<int>>(n));
  for (int i = 0; i < m; ++i) {
    for (int t = 0; t < n; ++t) {
      const int e = expected.edge_index(i, m + t);
      std::vector<int> inv(k, kUnmatched);
      for (int z = 0; z < k; ++z) inv[c.maps[e][z]] = z;
      inverse[i][t] = std::move(inv);
    }
  }

  ExtensionMatrix mat;
  mat.m = m;
  mat.columns = columns;
  mat.entries.assign(m, std::vector<int>(columns, 0));

  std::vector<int> tuple(n, 0);  // label per Y vertex, first Y vertex most significant
  std::vector<char> forbidden(k, 0);
  for (long long j = 0; j < columns; ++j) {
    for (int i = 0; i < m; ++i) {
      std::fill(forbidden.begin(), forbidden.end(), 0);
      int count = 0;
      for (int t = 0; t < n; ++t) {
        const int z = inverse[i][t][tuple[t]];
        if (z != kUnmatched && !forbidden[z]) {
          forbidden[z] = 1;
          ++count;
        }
      }
      mat.entries[i][j] = k - count;
    }
    int pos = n - 1;
    while (pos >= 0 && tuple[pos] == k - 1) tuple[pos--] = 0;
    if (pos >= 0) ++tuple[pos];
  }
  return mat;
}

ColorCount extension_matrix_total(const ExtensionMatrix& mat) {
  ColorCount total = 0;
  for (long long j = 0; j < mat.columns; ++j) {
    ColorCount term = 1;
    for (int i = 0; i < mat.m; ++i) term *= mat.entries[i][j];
    total += term;
  }
  return total;
}

std::string extension_matrix_to_json(const ExtensionMatrix& mat) {
  nlohmann::json j;
  j["rows"] = mat.m;
  j["columns"] = mat.columns;
  j["entries"] = mat.entries;
  return j.dump();
}

Graph seymour_graph(int q) {
  if (q < 1) throw InputError("seymour graph needs q >= 1");
  if (q > 4) throw InputError("seymour graph generator capped at q <= 4 (memory)");
  const int parts = 1 << q;
  return make_complete_multipartite(std::vector<int>(parts, 100 * q));
}

ListAssignment mcdiarmid_assignment(int n) {
  if (n < 4) throw InputError("the K_{n,n} counterexample assignment needs n >= 4");
  ListAssignment a;
  a.fold = 2;
  a.lists.assign(2 * n, {});
  a.lists[0] = {1, 2};
  a.lists[1] = {3, 4};
  for (int i = 2; i < n; ++i) a.lists[i] = {1, 2};
  a.lists[n + 0] = {1, 3};
  a.lists[n + 1] = {1, 4};
  a.lists[n + 2] = {2, 3};
  a.lists[n + 3] = {2, 4};
  for (int i = 4; i < n; ++i) a.lists[n + i] = {3, 4};
  return a;
}

std::string scan_report_to_csv(const ScanReport& report,
                               const std::vector<std::string>& witness_files) {
  std::ostringstream out;
  out << "graph,function,k,value,cmp_prev,witness_file\n";
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const ScanEntry& e = report.entries[i];
    out << report.graph_id << ',' << color_function_name(report.fn) << ',' << e.k << ',';
    if (e.evaluated) out << to_decimal(e.value);
    out << ',';
    if (e.cmp_prev) out << verdict_symbol(*e.cmp_prev);
    out << ',';
    if (i < witness_files.size()) out << witness_files[i];
    out << '\n';
  }
  return out.str();
}

std::string scan_report_to_json(const ScanReport& report) {
  nlohmann::json j;
  j["graph"] = report.graph_id;
  j["function"] = color_function_name(report.fn);
  j["n"] = report.n;
  j["monotone"] = report.monotone;
  if (report.first_violation)
    j["first_violation"] = *report.first_violation;
  else
    j["first_violation"] = nullptr;
  nlohmann::json entries = nlohmann::json::array();
  for (const ScanEntry& e : report.entries) {
    nlohmann::json entry;
    entry["k"] = e.k;
    entry["evaluated"] = e.evaluated;
    if (e.evaluated) entry["value"] = to_decimal(e.value);
    if (!e.refusal.empty()) entry["refusal"] = e.refusal;
    if (e.cmp_prev) entry["cmp_prev"] = std::string(1, verdict_symbol(*e.cmp_prev));
    if (!e.witness_json.empty()) entry["witness"] = nlohmann::json::parse(e.witness_json);
    entries.push_back(entry);
  }
  j["entries"] = entries;
  return j.dump(2);
}

}  // namespace colorcount
