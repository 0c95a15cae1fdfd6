#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <vector>

#include "xdhh/analysis/report.hpp"
#include "xdhh/core/rng.hpp"

using namespace xdhh;

TEST_CASE("median of best handles odd, tied, even and empty cells", "[analysis]") {
  CHECK(median_of_best({3, 1, 2}) == 2.0);
  CHECK(median_of_best({4, 4, 4, 4, 4}) == 4.0);
  CHECK(median_of_best({1, 2, 3, 4}) == 2.5);
  CHECK(median_of_best({7}) == 7.0);
  try {
    median_of_best({});
    FAIL("expected EmptyCell");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyCell);
  }
}

TEST_CASE("competition ranks share the better rank on ties", "[analysis]") {
  CHECK(competition_ranks({10, 10, 20}) == std::vector<int>{1, 1, 3});
  CHECK(competition_ranks({5, 7, 6}) == std::vector<int>{1, 3, 2});
  CHECK(competition_ranks({2, 2, 2}) == std::vector<int>{1, 1, 1});
  CHECK(competition_ranks({4, 1, 1, 3}) == std::vector<int>{4, 1, 1, 3});
}

TEST_CASE("borda totals for the forty-instance reference fixture", "[analysis]") {
  RankTable table;
  table.algorithms = {"tsaa", "ils", "ma"};
  auto rows = [&](const std::string& domain,
                  std::vector<std::vector<int>> ranks) {
    int i = 0;
    for (auto& r : ranks)
      table.rows.push_back({domain, "Instance" + std::to_string(++i), r});
  };
  rows("maxsat", {{2, 3, 1}, {2, 3, 1}, {1, 3, 2}, {1, 2, 3}, {1, 2, 3},
                  {1, 2, 3}, {1, 3, 2}, {1, 3, 2}, {1, 3, 2}, {1, 3, 2}});
  rows("binpacking", {{3, 1, 2}, {3, 1, 2}, {3, 2, 1}, {2, 3, 1}, {2, 1, 3},
                      {3, 1, 2}, {3, 1, 2}, {3, 1, 2}, {1, 3, 2}, {1, 3, 2}});
  rows("flowshop", {{3, 2, 1}, {3, 1, 2}, {3, 2, 1}, {3, 2, 1}, {3, 2, 1},
                    {3, 2, 1}, {3, 2, 1}, {3, 1, 2}, {3, 1, 2}, {3, 2, 1}});
  rows("personnel", {{1, 2, 3}, {2, 1, 3}, {1, 1, 3}, {2, 1, 3}, {1, 2, 3},
                     {2, 1, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}});

  BordaTotals totals = borda(table);
  REQUIRE(totals.per_domain.size() == 4);
  CHECK(totals.per_domain[0].first == "maxsat");
  CHECK(totals.per_domain[0].second == std::vector<long long>{12, 27, 21});
  CHECK(totals.per_domain[1].second == std::vector<long long>{24, 17, 19});
  CHECK(totals.per_domain[2].second == std::vector<long long>{30, 17, 13});
  CHECK(totals.per_domain[3].second == std::vector<long long>{13, 16, 30});
  CHECK(totals.overall == std::vector<long long>{79, 77, 83});
  for (std::size_t k = 0; k < 3; ++k) {
    long long sum = 0;
    for (const auto& d : totals.per_domain) sum += d.second[k];
    CHECK(sum == totals.overall[k]);
  }
}

TEST_CASE("a lone algorithm scores the instance count", "[analysis]") {
  RankTable table;
  table.algorithms = {"solo"};
  for (int i = 0; i < 7; ++i) table.rows.push_back({"d", "i", {1}});
  CHECK(borda(table).overall == std::vector<long long>{7});
}

TEST_CASE("short rows and out-of-range ranks are rejected", "[analysis]") {
  RankTable table;
  table.algorithms = {"a", "b", "c"};
  table.rows.push_back({"d", "i1", {1, 2}});
  try {
    borda(table);
    FAIL("expected MissingCell");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MissingCell);
  }
  table.rows[0].ranks = {1, 2, 4};
  CHECK_THROWS_AS(borda(table), Error);
}

TEST_CASE("rank totals ignore monotone rescaling of the objective", "[analysis]") {
  Rng rng(71);
  std::vector<std::string> algos = {"a", "b", "c", "d"};
  std::vector<ValueRow> plain, scaled;
  for (int i = 0; i < 30; ++i) {
    ValueRow row{"dom" + std::to_string(i % 3), "inst" + std::to_string(i), {}};
    for (std::size_t k = 0; k < algos.size(); ++k)
      row.values.push_back(rng.next_int(0, 9));  // small range forces ties
    plain.push_back(row);
    for (double& v : row.values) v = 2.0 * v + 1.0;
    scaled.push_back(row);
  }
  BordaTotals a = borda(rank_table_from_values(algos, plain));
  BordaTotals b = borda(rank_table_from_values(algos, scaled));
  CHECK(a.overall == b.overall);
  REQUIRE(a.per_domain.size() == b.per_domain.size());
  for (std::size_t d = 0; d < a.per_domain.size(); ++d) {
    CHECK(a.per_domain[d].first == b.per_domain[d].first);
    CHECK(a.per_domain[d].second == b.per_domain[d].second);
  }
}

TEST_CASE("untied tables distribute the triangular number", "[analysis]") {
  Rng rng(73);
  std::vector<std::string> algos = {"a", "b", "c", "d", "e"};
  std::vector<ValueRow> rows;
  int m = 12;
  for (int i = 0; i < m; ++i) {
    std::vector<double> vals;
    for (std::size_t k = 0; k < algos.size(); ++k)
      vals.push_back(static_cast<double>(k));
    rng.shuffle(vals.begin(), vals.end());  // distinct values: no ties
    rows.push_back({"d", "inst" + std::to_string(i), vals});
  }
  BordaTotals totals = borda(rank_table_from_values(algos, rows));
  long long sum = 0;
  for (long long t : totals.overall) sum += t;
  long long n = static_cast<long long>(algos.size());
  CHECK(sum == m * n * (n + 1) / 2);
}

namespace {

std::string fresh_dir(const std::string& stem) {
  std::string dir = "/tmp/xdhh_test_" + stem;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void put_result(const std::string& dir, const std::string& domain,
                const std::string& instance, const std::string& algorithm,
                std::uint64_t seed, double best) {
  RunResult r;
  r.domain_id = domain;
  r.instance_id = instance;
  r.algorithm_id = algorithm;
  r.seed = seed;
  r.budget = RunBudget::evaluations(100);
  r.best_value = best;
  r.evaluations_used = 100;
  r.trace.record(1, best + 1);
  r.trace.record(100, best);
  write_file_atomic(dir + "/" + domain + "_" + instance + "_" + algorithm +
                        "_" + std::to_string(seed) + ".json",
                    serialize_run_result(r));
}

}  // namespace

TEST_CASE("report pipeline reproduces totals from result files", "[analysis]") {
  std::string results = fresh_dir("results");
  auto cell = [&](const std::string& d, const std::string& i,
                  const std::string& a, std::vector<double> bests) {
    std::uint64_t seed = 0;
    for (double b : bests) put_result(results, d, i, a, ++seed, b);
  };
  cell("alpha", "i1", "a", {5, 1, 9});
  cell("alpha", "i1", "b", {2, 2});
  cell("alpha", "i1", "c", {7, 7, 7});
  cell("alpha", "i2", "a", {1});
  cell("alpha", "i2", "b", {4, 6});
  cell("alpha", "i2", "c", {2, 3, 4, 5});
  cell("beta", "i1", "a", {10, 10});
  cell("beta", "i1", "b", {10});
  cell("beta", "i1", "c", {20, 1, 30});
  cell("beta", "i2", "a", {3});
  cell("beta", "i2", "b", {1});
  cell("beta", "i2", "c", {2});
  // Bookkeeping files in the same directory must not confuse the loader.
  write_file_atomic(results + "/manifest.json", "{}\n");
  write_file_atomic(results + "/notes.txt", "not a result\n");

  std::string out = fresh_dir("report");
  BordaReport report = write_borda_report(results, out);
  REQUIRE(report.algorithms == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(report.cells.size() == 4);
  CHECK(report.cells[0].medians == std::vector<double>{5, 2, 7});
  CHECK(report.cells[1].medians == std::vector<double>{1, 5, 3.5});
  CHECK(report.cells[2].medians == std::vector<double>{10, 10, 20});
  CHECK(report.cells[2].ranks == std::vector<int>{1, 1, 3});
  CHECK(report.totals.overall == std::vector<long long>{7, 6, 10});

  std::string csv = read_file(out + "/borda.csv");
  CHECK(csv ==
        "algorithm,domain,subtotal\n"
        "a,alpha,3\nb,alpha,4\nc,alpha,5\n"
        "a,beta,4\nb,beta,2\nc,beta,5\n"
        "a,overall,7\nb,overall,6\nc,overall,10\n");

  nlohmann::json summary = nlohmann::json::parse(read_file(out + "/summary.json"));
  CHECK(summary.at("overall").at("b") == 6);
  CHECK(summary.at("cells").size() == 4);
  CHECK(summary.at("cells")[2].at("rank").at("c") == 3);
  CHECK(summary.at("cells")[0].at("best_values").at("a") ==
        nlohmann::json::array({5.0, 1.0, 9.0}));

  // Re-running the report must produce byte-identical artifacts.
  write_borda_report(results, out);
  CHECK(read_file(out + "/borda.csv") == csv);
}

TEST_CASE("report detects an absent algorithm-instance cell", "[analysis]") {
  std::string results = fresh_dir("results_missing");
  put_result(results, "alpha", "i1", "a", 1, 5);
  put_result(results, "alpha", "i1", "b", 1, 6);
  put_result(results, "alpha", "i2", "a", 1, 7);  // no runs of b here
  try {
    borda_report(load_results_dir(results));
    FAIL("expected MissingCell");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MissingCell);
    CHECK(std::string(e.what()).find("i2") != std::string::npos);
  }
  CHECK_THROWS_AS(load_results_dir("/tmp/xdhh_no_such_dir"), Error);
}
