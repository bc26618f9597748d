// colorcount: exact coloring-count functions (P, Pl, Pdp, Pdual) and shameful
// inequality scans. Exit codes: 0 ok, 1 verify-suite failure, 2 usage error,
// 3 budget refusal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "colorcount/chromatic.hpp"
#include "colorcount/dp_cover.hpp"
#include "colorcount/errors.hpp"
#include "colorcount/graph.hpp"
#include "colorcount/list_color.hpp"
#include "colorcount/parallel.hpp"
#include "colorcount/shameful.hpp"
#include "colorcount/smallgraphs.hpp"
#include "colorcount/verify.hpp"

namespace cc = colorcount;

namespace {

struct RunConfig {
  long long budget = cc::kDefaultBudget;
  std::uint64_t seed = 0;
  std::string format = "text";
  int workers = 0;  // 0 = autodetect
  std::string out_path;

  int effective_workers() const { return workers > 0 ? workers : cc::default_worker_count(); }
};

void write_output(const RunConfig& config, const std::string& content) {
  if (config.out_path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(config.out_path);
  if (!out) throw cc::InputError("cannot open output file '" + config.out_path + "'");
  out << content;
}

cc::GraphInputKind parse_kind(const std::string& s) {
  if (s == "auto") return cc::GraphInputKind::automatic;
  if (s == "family") return cc::GraphInputKind::family;
  if (s == "graph6") return cc::GraphInputKind::graph6;
  throw cc::InputError("unknown graph format '" + s + "' (expected auto|family|graph6)");
}

// One graph per line; '#' starts a comment, blank lines skipped.
std::vector<std::pair<std::string, cc::Graph>> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cc::InputError("cannot open graph file '" + path + "'");
  std::vector<std::pair<std::string, cc::Graph>> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
    line.erase(0, start);
    if (line.empty()) continue;
    out.emplace_back(line, cc::parse_graph6(line));
  }
  return out;
}

struct ComputeOutcome {
  cc::ColorCount value;
  std::string witness_json;
};

ComputeOutcome compute_value(const cc::Graph& g, cc::ColorFunction fn, long k,
                             const RunConfig& config) {
  ComputeOutcome outcome;
  switch (fn) {
    case cc::ColorFunction::P:
      outcome.value = cc::chromatic_eval(g, k);
      break;
    case cc::ColorFunction::Pl: {
      if (k < 1) throw cc::InputError("Pl needs k >= 1");
      cc::ListColorResult r = cc::list_color_function(g, static_cast<int>(k), config.budget);
      outcome.value = std::move(r.value);
      outcome.witness_json = cc::assignment_to_json(r.witness);
      break;
    }
    case cc::ColorFunction::Pdp: {
      if (k < 1) throw cc::InputError("Pdp needs k >= 1");
      cc::DpResult r =
          cc::dp_color_function(g, static_cast<int>(k), config.budget, config.effective_workers());
      outcome.value = std::move(r.value);
      outcome.witness_json = cc::cover_to_json(r.witness);
      break;
    }
    case cc::ColorFunction::Pdual: {
      if (k < 1) throw cc::InputError("Pdual needs k >= 1");
      cc::DpResult r = cc::dual_dp_color_function(g, static_cast<int>(k), config.budget,
                                                  config.effective_workers());
      outcome.value = std::move(r.value);
      outcome.witness_json = cc::cover_to_json(r.witness);
      break;
    }
  }
  return outcome;
}

std::string scan_to_text(const cc::ScanReport& report) {
  std::ostringstream out;
  out << "graph " << report.graph_id << ", function " << cc::color_function_name(report.fn)
      << ", n = " << report.n << "\n";
  for (const cc::ScanEntry& e : report.entries) {
    out << "  k = " << e.k << ": ";
    if (e.evaluated) {
      out << cc::to_decimal(e.value);
      if (e.cmp_prev) out << "   (prev " << cc::verdict_symbol(*e.cmp_prev) << " this ratio)";
    } else {
      out << "unevaluated: " << e.refusal;
    }
    out << "\n";
  }
  out << (report.monotone ? "monotone: yes" : "monotone: NO") << "\n";
  if (report.first_violation) out << "first violation at k = " << *report.first_violation << "\n";
  return out.str();
}

int run_main(int argc, char** argv) {
  CLI::App app{"exact chromatic / list / DP / dual-DP color function toolkit"};
  app.require_subcommand(1);

  RunConfig config;
  app.add_option("--budget", config.budget, "elementary-step limit for enumerations")
      ->envname("COLORCOUNT_BUDGET")
      ->check(CLI::Range(1000LL, std::numeric_limits<long long>::max()));
  app.add_option("--seed", config.seed, "base seed for all randomized commands");
  app.add_option("--format", config.format, "output format: text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--workers", config.workers, "worker threads (0 = autodetect)")
      ->check(CLI::Range(0, 1024));
  app.add_option("--out", config.out_path, "write the report to this path instead of stdout");

  // compute
  auto* compute = app.add_subcommand("compute", "evaluate one color function at one k");
  std::string graph_spec, graph_file, fn_tag, graph_format = "auto", witness_path;
  long k_value = 0;
  compute->add_option("--graph", graph_spec, "family spec or graph6 string");
  compute->add_option("--graph-file", graph_file, "graph6 file, one graph per line");
  compute->add_option("--fn", fn_tag, "P|Pl|Pdp|Pdual")->required();
  compute->add_option("--k", k_value, "fold count")->required();
  compute->add_option("--graph-format", graph_format, "auto|family|graph6");
  compute->add_option("--witness", witness_path, "write the extremal witness JSON here");

  // scan
  auto* scan = app.add_subcommand("scan", "evaluate across a k range and compare ratios");
  std::string scan_graph, scan_file, scan_fn, scan_format = "auto", witness_dir;
  long k_min = 1, k_max = 1;
  scan->add_option("--graph", scan_graph, "family spec or graph6 string");
  scan->add_option("--graph-file", scan_file, "graph6 file, one graph per line");
  scan->add_option("--fn", scan_fn, "P|Pl|Pdp|Pdual")->required();
  scan->add_option("--k-min", k_min)->required();
  scan->add_option("--k-max", k_max)->required();
  scan->add_option("--graph-format", scan_format, "auto|family|graph6");
  scan->add_option("--witness-dir", witness_dir, "write per-k witness JSON files here");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the full regression suite");

  // witness
  auto* witness = app.add_subcommand("witness", "emit the extremal assignment/cover");
  std::string wit_graph, wit_fn, wit_format = "auto", dot_path;
  long wit_k = 0;
  witness->add_option("--graph", wit_graph)->required();
  witness->add_option("--fn", wit_fn, "Pl|Pdp|Pdual")->required();
  witness->add_option("--k", wit_k)->required();
  witness->add_option("--graph-format", wit_format, "auto|family|graph6");
  witness->add_option("--dot", dot_path, "also write the cover graph H as DOT");

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo restriction-expectation replication");
  std::string mc_graph, mc_source = "lists", mc_format = "auto";
  long mc_fold = 0;
  long long mc_trials = 10000;
  mc->add_option("--graph", mc_graph)->required();
  mc->add_option("--source", mc_source, "lists|canonical|doubled (fold-(k+1) source)")
      ->check(CLI::IsMember({"lists", "canonical", "doubled"}));
  mc->add_option("--fold", mc_fold, "source fold k+1 (doubled source forces 2)");
  mc->add_option("--trials", mc_trials)->check(CLI::Range(100LL, 1000000000LL));
  mc->add_option("--graph-format", mc_format, "auto|family|graph6");

  // rearrange
  auto* rearrange = app.add_subcommand("rearrange", "check a rearrangement-inequality instance");
  std::string matrix_path;
  rearrange->add_option("--matrix", matrix_path, "JSON file {\"rows\": [[..]], \"perms\": [[..]]}")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (compute->parsed()) {
    if (graph_spec.empty() == graph_file.empty())
      throw cc::InputError("compute needs exactly one of --graph / --graph-file");
    const cc::ColorFunction fn = cc::parse_color_function(fn_tag);
    std::vector<std::pair<std::string, cc::Graph>> inputs;
    if (!graph_spec.empty())
      inputs.emplace_back(graph_spec, cc::parse_graph_argument(graph_spec, parse_kind(graph_format)));
    else
      inputs = read_graph6_file(graph_file);

    std::ostringstream report;
    if (config.format == "csv") report << "graph,function,k,value\n";
    nlohmann::json rows = nlohmann::json::array();
    for (auto& [id, g] : inputs) {
      const ComputeOutcome outcome = compute_value(g, fn, k_value, config);
      if (config.format == "text") {
        report << cc::to_decimal(outcome.value) << "\n";
      } else if (config.format == "csv") {
        report << id << ',' << fn_tag << ',' << k_value << ',' << cc::to_decimal(outcome.value)
               << "\n";
      } else {
        nlohmann::json row;
        row["graph"] = id;
        row["function"] = fn_tag;
        row["k"] = k_value;
        row["value"] = cc::to_decimal(outcome.value);
        if (!outcome.witness_json.empty())
          row["witness"] = nlohmann::json::parse(outcome.witness_json);
        rows.push_back(row);
      }
      if (!witness_path.empty()) {
        if (outcome.witness_json.empty())
          throw cc::InputError("--witness: " + fn_tag + " has no extremal witness");
        std::ofstream wout(witness_path);
        if (!wout) throw cc::InputError("cannot open witness file '" + witness_path + "'");
        wout << outcome.witness_json << "\n";
      }
    }
    if (config.format == "json") report << rows.dump(2) << "\n";
    write_output(config, report.str());
    return 0;
  }

  if (scan->parsed()) {
    if (scan_graph.empty() == scan_file.empty())
      throw cc::InputError("scan needs exactly one of --graph / --graph-file");
    const cc::ColorFunction fn = cc::parse_color_function(scan_fn);
    std::vector<std::pair<std::string, cc::Graph>> inputs;
    if (!scan_graph.empty())
      inputs.emplace_back(scan_graph, cc::parse_graph_argument(scan_graph, parse_kind(scan_format)));
    else
      inputs = read_graph6_file(scan_file);

    std::ostringstream report;
    nlohmann::json json_reports = nlohmann::json::array();
    for (auto& [id, g] : inputs) {
      const cc::ScanReport r =
          cc::shameful_scan(g, fn, k_min, k_max, config.budget, config.effective_workers(), id);
      std::vector<std::string> witness_files(r.entries.size());
      if (!witness_dir.empty()) {
        for (std::size_t i = 0; i < r.entries.size(); ++i) {
          if (r.entries[i].witness_json.empty()) continue;
          std::string path = witness_dir + "/" + cc::color_function_name(fn) + ".k" +
                             std::to_string(r.entries[i].k) + ".witness.json";
          std::ofstream wout(path);
          if (!wout) throw cc::InputError("cannot open witness file '" + path + "'");
          wout << r.entries[i].witness_json << "\n";
          witness_files[i] = path;
        }
      }
      if (config.format == "csv")
        report << cc::scan_report_to_csv(r, witness_files);
      else if (config.format == "json")
        json_reports.push_back(nlohmann::json::parse(cc::scan_report_to_json(r)));
      else
        report << scan_to_text(r);
    }
    if (config.format == "json") report << json_reports.dump(2) << "\n";
    write_output(config, report.str());
    return 0;
  }

  if (verify_cmd->parsed()) {
    std::ostringstream report;
    const bool ok =
        cc::verify::run_acceptance(report, config.budget, config.effective_workers());
    write_output(config, report.str());
    return ok ? 0 : 1;
  }

  if (witness->parsed()) {
    const cc::Graph g = cc::parse_graph_argument(wit_graph, parse_kind(wit_format));
    const cc::ColorFunction fn = cc::parse_color_function(wit_fn);
    if (fn == cc::ColorFunction::P)
      throw cc::InputError("P has no extremal witness; use Pl, Pdp or Pdual");
    const ComputeOutcome outcome = compute_value(g, fn, wit_k, config);
    if (!dot_path.empty()) {
      if (fn == cc::ColorFunction::Pl)
        throw cc::InputError("--dot applies to cover witnesses (Pdp/Pdual)");
      cc::DpResult r =
          fn == cc::ColorFunction::Pdp
              ? cc::dp_color_function(g, static_cast<int>(wit_k), config.budget,
                                      config.effective_workers())
              : cc::dual_dp_color_function(g, static_cast<int>(wit_k), config.budget,
                                           config.effective_workers());
      std::ofstream dot(dot_path);
      if (!dot) throw cc::InputError("cannot open DOT file '" + dot_path + "'");
      dot << cc::cover_to_dot(r.witness);
    }
    nlohmann::json j = nlohmann::json::parse(outcome.witness_json);
    j["value"] = cc::to_decimal(outcome.value);
    write_output(config, j.dump(2) + "\n");
    return 0;
  }

  if (mc->parsed()) {
    const cc::Graph g = cc::parse_graph_argument(mc_graph, parse_kind(mc_format));
    const int n = g.vertex_count();
    cc::RestrictionSource source = cc::same_lists_assignment(1, 2);
    if (mc_source == "doubled") {
      if (mc_fold != 0 && mc_fold != 2)
        throw cc::InputError("doubled source has fold 2");
      source = cc::doubled_cover(g);
    } else {
      if (mc_fold < 2) throw cc::InputError("--fold must be >= 2 (the k+1 source fold)");
      if (mc_source == "lists")
        source = cc::same_lists_assignment(n, static_cast<int>(mc_fold));
      else
        source = cc::canonical_cover(g, static_cast<int>(mc_fold));
    }

    const int fold = cc::source_fold(source);
    cc::ColorCount unrestricted;
    if (const auto* a = std::get_if<cc::ListAssignment>(&source))
      unrestricted = cc::count_L_colorings(g, *a);
    else
      unrestricted = cc::count_cover_colorings(g, std::get<cc::Cover>(source));

    const cc::TrialStats stats = cc::monte_carlo_expectation(g, source, mc_trials, config.seed,
                                                             config.effective_workers());
    // E[X] = a k^n / (k+1)^n with a the unrestricted count
    const cc::ExactFraction target = cc::make_fraction(
        unrestricted * cc::ipow(static_cast<unsigned long>(fold - 1), static_cast<unsigned long>(n)),
        cc::ipow(static_cast<unsigned long>(fold), static_cast<unsigned long>(n)));
    const double target_d = mpq_class(target.num, target.den).get_d();
    const double sigmas = stats.stderr_of_mean > 0
                              ? (stats.mean - target_d) / stats.stderr_of_mean
                              : (stats.mean == target_d ? 0.0 : HUGE_VAL);

    if (config.format == "json") {
      nlohmann::json j = nlohmann::json::parse(cc::trial_stats_to_json(stats));
      j["unrestricted"] = cc::to_decimal(unrestricted);
      j["target"] = {{"num", cc::to_decimal(target.num)},
                     {"den", cc::to_decimal(target.den)},
                     {"value", target_d}};
      j["sigmas"] = sigmas;
      write_output(config, j.dump(2) + "\n");
    } else {
      std::ostringstream out;
      out << "trials " << stats.trials << ", seed " << stats.seed << "\n"
          << "unrestricted count a = " << cc::to_decimal(unrestricted) << "\n"
          << "target a*k^n/(k+1)^n = " << cc::to_decimal(target.num) << "/"
          << cc::to_decimal(target.den) << " = " << target_d << "\n"
          << "sample mean " << stats.mean << ", stderr " << stats.stderr_of_mean << " ("
          << sigmas << " sigma)\n";
      write_output(config, out.str());
    }
    return 0;
  }

  if (rearrange->parsed()) {
    std::ifstream in(matrix_path);
    if (!in) throw cc::InputError("cannot open matrix file '" + matrix_path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw cc::InputError(std::string("matrix file parse: ") + e.what());
    }
    std::vector<std::vector<cc::ColorCount>> rows;
    for (const auto& row : j.at("rows")) {
      std::vector<cc::ColorCount> r;
      for (const auto& v : row) r.emplace_back(static_cast<long>(v.get<long long>()));
      rows.push_back(std::move(r));
    }
    std::vector<std::vector<int>> perms;
    for (const auto& perm : j.at("perms")) perms.push_back(perm.get<std::vector<int>>());
    const cc::RearrangementResult result = cc::rearrangement_check(rows, perms);
    if (config.format == "json") {
      nlohmann::json out;
      out["lhs"] = cc::to_decimal(result.lhs);
      out["rhs"] = cc::to_decimal(result.rhs);
      out["holds"] = result.holds;
      write_output(config, out.dump(2) + "\n");
    } else {
      std::ostringstream out;
      out << "lhs " << cc::to_decimal(result.lhs) << " rhs " << cc::to_decimal(result.rhs)
          << " holds " << (result.holds ? "yes" : "no") << "\n";
      write_output(config, out.str());
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const cc::BudgetError& e) {
    std::cerr << "error: kind=budget reason=\"" << e.what() << "\"\n";
    return 3;
  } catch (const cc::ParseError& e) {
    std::cerr << "error: kind=usage reason=\"" << e.what() << "\"\n";
    return 2;
  } catch (const cc::InputError& e) {
    std::cerr << "error: kind=usage reason=\"" << e.what() << "\"\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: kind=usage reason=\"" << e.what() << "\"\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: kind=internal reason=\"" << e.what() << "\"\n";
    return 2;
  }
}
