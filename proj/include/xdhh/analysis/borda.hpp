#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "xdhh/core/errors.hpp"

namespace xdhh {

// Median of the best objective values collected for one (instance, algorithm)
// cell. Even counts average the two central values.
inline double median_of_best(std::vector<double> values) {
  if (values.empty()) raise(Errc::EmptyCell, "median of an empty result cell");
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

// Competition ranking, lower value = better rank: tied values share the best
// rank of the group and the following rank skips, e.g. {10,10,20} -> {1,1,3}.
inline std::vector<int> competition_ranks(const std::vector<double>& values) {
  std::vector<int> ranks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    int smaller = 0;
    for (double v : values)
      if (v < values[i]) ++smaller;
    ranks[i] = 1 + smaller;
  }
  return ranks;
}

struct RankRow {
  std::string domain;
  std::string instance;
  std::vector<int> ranks;  // aligned with RankTable::algorithms
};

struct RankTable {
  std::vector<std::string> algorithms;
  std::vector<RankRow> rows;
};

struct ValueRow {
  std::string domain;
  std::string instance;
  std::vector<double> values;  // aligned with the algorithm list
};

inline RankTable rank_table_from_values(std::vector<std::string> algorithms,
                                        const std::vector<ValueRow>& rows) {
  RankTable table;
  table.algorithms = std::move(algorithms);
  for (const ValueRow& row : rows) {
    if (row.values.size() != table.algorithms.size())
      raise(Errc::MissingCell, "instance '" + row.instance + "' has " +
                                   std::to_string(row.values.size()) +
                                   " values for " +
                                   std::to_string(table.algorithms.size()) +
                                   " algorithms");
    table.rows.push_back({row.domain, row.instance, competition_ranks(row.values)});
  }
  return table;
}

struct BordaTotals {
  std::vector<std::string> algorithms;
  // Domain subtotals in first-appearance order, each aligned with algorithms.
  std::vector<std::pair<std::string, std::vector<long long>>> per_domain;
  std::vector<long long> overall;
};

// Sum of ranks per algorithm; smaller totals mean better overall standing.
inline BordaTotals borda(const RankTable& table) {
  BordaTotals totals;
  totals.algorithms = table.algorithms;
  totals.overall.assign(table.algorithms.size(), 0);
  for (const RankRow& row : table.rows) {
    if (row.ranks.size() != table.algorithms.size())
      raise(Errc::MissingCell, "instance '" + row.instance + "' has " +
                                   std::to_string(row.ranks.size()) +
                                   " ranks for " +
                                   std::to_string(table.algorithms.size()) +
                                   " algorithms");
    auto it = std::find_if(totals.per_domain.begin(), totals.per_domain.end(),
                           [&](const auto& d) { return d.first == row.domain; });
    if (it == totals.per_domain.end()) {
      totals.per_domain.push_back(
          {row.domain, std::vector<long long>(table.algorithms.size(), 0)});
      it = std::prev(totals.per_domain.end());
    }
    for (std::size_t k = 0; k < row.ranks.size(); ++k) {
      if (row.ranks[k] < 1 ||
          row.ranks[k] > static_cast<int>(table.algorithms.size()))
        raise(Errc::InvalidArgument,
              "rank " + std::to_string(row.ranks[k]) + " outside 1.." +
                  std::to_string(table.algorithms.size()));
      it->second[k] += row.ranks[k];
      totals.overall[k] += row.ranks[k];
    }
  }
  return totals;
}

}  // namespace xdhh
