#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "xdhh/analysis/borda.hpp"
#include "xdhh/core/io_util.hpp"
#include "xdhh/core/result_io.hpp"

namespace xdhh {

// Loads every run-result JSON in a directory, in sorted filename order.
// Bookkeeping files written next to the results are skipped by name.
inline std::vector<RunResult> load_results_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    raise(Errc::IoError, "results directory '" + dir + "' does not exist");
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& p = entry.path();
    if (p.extension() != ".json") continue;
    std::string name = p.filename().string();
    if (name == "manifest.json" || name == "summary.json") continue;
    paths.push_back(p.string());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<RunResult> results;
  for (const std::string& p : paths) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(p));
    } catch (const nlohmann::json::exception& e) {
      raise(Errc::InvalidArgument, "'" + p + "': " + e.what());
    }
    try {
      results.push_back(run_result_from_json(j));
    } catch (const Error& e) {
      raise(e.code(), "'" + p + "': " + e.what());
    }
  }
  return results;
}

struct CellSummary {
  std::string domain;
  std::string instance;
  std::vector<std::vector<double>> best_values;  // per algorithm, per run
  std::vector<double> medians;                   // aligned with algorithms
  std::vector<int> ranks;
};

struct BordaReport {
  std::vector<std::string> algorithms;  // sorted ids
  std::vector<CellSummary> cells;       // sorted by (domain, instance)
  BordaTotals totals;
};

// Groups results by (domain, instance, algorithm), takes the median best
// value per cell, ranks algorithms within each instance and sums the ranks.
// Every algorithm must have at least one run on every instance.
inline BordaReport borda_report(const std::vector<RunResult>& results) {
  if (results.empty()) raise(Errc::EmptyCell, "no run results to summarise");
  std::vector<std::string> algorithms;
  for (const RunResult& r : results) algorithms.push_back(r.algorithm_id);
  std::sort(algorithms.begin(), algorithms.end());
  algorithms.erase(std::unique(algorithms.begin(), algorithms.end()),
                   algorithms.end());

  std::map<std::pair<std::string, std::string>,
           std::map<std::string, std::vector<double>>>
      groups;
  for (const RunResult& r : results)
    groups[{r.domain_id, r.instance_id}][r.algorithm_id].push_back(r.best_value);

  BordaReport report;
  report.algorithms = algorithms;
  std::vector<ValueRow> value_rows;
  for (const auto& [key, by_algorithm] : groups) {
    CellSummary cell;
    cell.domain = key.first;
    cell.instance = key.second;
    for (const std::string& id : algorithms) {
      auto it = by_algorithm.find(id);
      if (it == by_algorithm.end())
        raise(Errc::MissingCell, "no runs of '" + id + "' on " + key.first +
                                     "/" + key.second);
      cell.best_values.push_back(it->second);
      cell.medians.push_back(median_of_best(it->second));
    }
    cell.ranks = competition_ranks(cell.medians);
    value_rows.push_back({cell.domain, cell.instance, cell.medians});
    report.cells.push_back(std::move(cell));
  }
  report.totals = borda(rank_table_from_values(algorithms, value_rows));
  return report;
}

// CSV rows: one line per (algorithm, domain) subtotal plus 'overall' lines.
inline std::string borda_csv(const BordaTotals& totals) {
  std::string out = "algorithm,domain,subtotal\n";
  for (const auto& [domain, subtotals] : totals.per_domain)
    for (std::size_t k = 0; k < totals.algorithms.size(); ++k)
      out += totals.algorithms[k] + "," + domain + "," +
             std::to_string(subtotals[k]) + "\n";
  for (std::size_t k = 0; k < totals.algorithms.size(); ++k)
    out += totals.algorithms[k] + ",overall," +
           std::to_string(totals.overall[k]) + "\n";
  return out;
}

inline nlohmann::json summary_json(const BordaReport& report) {
  nlohmann::json domains = nlohmann::json::array();
  for (const auto& [domain, subtotals] : report.totals.per_domain) {
    nlohmann::json t;
    for (std::size_t k = 0; k < report.algorithms.size(); ++k)
      t[report.algorithms[k]] = subtotals[k];
    domains.push_back({{"domain", domain}, {"subtotals", t}});
  }
  nlohmann::json overall;
  for (std::size_t k = 0; k < report.algorithms.size(); ++k)
    overall[report.algorithms[k]] = report.totals.overall[k];
  nlohmann::json cells = nlohmann::json::array();
  for (const CellSummary& cell : report.cells) {
    nlohmann::json medians, ranks, best_values;
    for (std::size_t k = 0; k < report.algorithms.size(); ++k) {
      medians[report.algorithms[k]] = cell.medians[k];
      ranks[report.algorithms[k]] = cell.ranks[k];
      best_values[report.algorithms[k]] = cell.best_values[k];
    }
    cells.push_back({{"domain", cell.domain},
                     {"instance", cell.instance},
                     {"median", medians},
                     {"rank", ranks},
                     {"best_values", best_values}});
  }
  return nlohmann::json{{"algorithms", report.algorithms},
                        {"domains", domains},
                        {"overall", overall},
                        {"cells", cells}};
}

// Reads a results directory and writes borda.csv plus summary.json into
// out_dir. Returns the report for callers that want to print totals.
inline BordaReport write_borda_report(const std::string& results_dir,
                                      const std::string& out_dir) {
  BordaReport report = borda_report(load_results_dir(results_dir));
  std::filesystem::create_directories(out_dir);
  write_file_atomic(out_dir + "/borda.csv", borda_csv(report.totals));
  write_file_atomic(out_dir + "/summary.json", summary_json(report).dump(2) + "\n");
  return report;
}

}  // namespace xdhh
