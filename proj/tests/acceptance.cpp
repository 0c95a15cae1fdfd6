// Acceptance gates for the whole workbench. Each criterion prints exactly one
// PASS/FAIL line; the process exits with the number of failed criteria.
// Tolerances and time caps are pinned here, next to the checks they guard.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "xdhh/algorithms/factory.hpp"
#include "xdhh/analysis/borda.hpp"
#include "xdhh/core/io_util.hpp"
#include "xdhh/core/result_io.hpp"
#include "xdhh/core/runner.hpp"
#include "xdhh/domains/factory.hpp"

using namespace xdhh;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& msg) {
    if (ok) detail = msg;  // keep the first failure
    ok = false;
  }
  void expect(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
};

// ---------------------------------------------------------------- criterion 1
// The forty-instance rank fixture must aggregate to the reference totals,
// per domain and overall, exactly.
Check rank_aggregation_fixture() {
  Check c;
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
  const std::vector<std::vector<long long>> expected = {
      {12, 27, 21}, {24, 17, 19}, {30, 17, 13}, {13, 16, 30}};
  c.expect(totals.per_domain.size() == 4, "expected four domain subtotals");
  for (std::size_t d = 0; d < 4 && c.ok; ++d)
    c.expect(totals.per_domain[d].second == expected[d],
             "subtotal mismatch in domain " + totals.per_domain[d].first);
  c.expect(totals.overall == std::vector<long long>({79, 77, 83}),
           "overall totals mismatch");
  return c;
}

// ---------------------------------------------------------------- criterion 2
// On 200 random small instances every permutation's makespan must equal an
// independently coded schedule simulator, and the steepest-descent reinserter
// must always stop at a certified insertion local optimum.
Check flowshop_oracle_equivalence() {
  Check c;
  Rng rng(2024);
  int steepest_id = -1;
  {
    FlowShopDomain probe;
    probe.set_instance(generate_flowshop_instance(3, 2, 9, 1));
    for (const auto& h : probe.heuristics())
      if (h.name == "steepest-reinsert") steepest_id = h.id;
  }
  c.expect(steepest_id >= 0, "steepest-reinsert heuristic not found");
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    int n = static_cast<int>(rng.next_int(2, 7));
    int m = static_cast<int>(rng.next_int(1, 4));
    FlowShopInstance inst =
        generate_flowshop_instance(n, m, 99, 7000 + static_cast<std::uint64_t>(trial));
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    long long best = -1;
    do {
      long long fast = flowshop_makespan(inst, perm);
      long long sim = oracle::flowshop_schedule_sim(inst, perm);
      if (fast != sim) {
        c.fail("makespan " + std::to_string(fast) + " != simulator " +
               std::to_string(sim) + " on trial " + std::to_string(trial));
        break;
      }
      if (best < 0 || sim < best) best = sim;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!c.ok) break;

    FlowShopDomain d;
    d.set_instance(inst);
    d.begin_run(RunBudget::evaluations(1u << 30), 50 + static_cast<std::uint64_t>(trial));
    d.initialise_solution(0);
    for (int start = 0; start < 3 && c.ok; ++start) {
      d.apply_heuristic(2, 0, 0);  // shuffle for a fresh starting point
      double value = d.apply_heuristic(steepest_id, 0, 1);
      const std::vector<int>& result = d.solution_at(1);
      c.expect(oracle::check_permutation(result, n).empty(),
               "descent output is not a permutation");
      c.expect(oracle::flowshop_insertion_optimal(inst, result),
               "descent stopped short of an insertion local optimum");
      c.expect(static_cast<long long>(value) >= best,
               "descent claims a makespan below the enumerated optimum");
    }
  }
  return c;
}

// ---------------------------------------------------------------- criterion 3
// 1,000 random flips spread over 50 random 3-SAT instances: the incremental
// broken-clause count and every per-variable gain must match brute force.
Check maxsat_incremental_equivalence() {
  Check c;
  Rng rng(33);
  for (int i = 0; i < 50 && c.ok; ++i) {
    int vars = static_cast<int>(rng.next_int(20, 200));
    CnfFormula f = generate_random_3sat(vars, 4.3, 900 + static_cast<std::uint64_t>(i));
    auto ctx = std::make_shared<SatContext>(f);
    std::vector<std::uint8_t> values(static_cast<std::size_t>(vars));
    for (auto& v : values) v = rng.next_bool() ? 1 : 0;
    SatAssignment state(ctx, values);
    for (int flip = 0; flip < 20 && c.ok; ++flip) {
      state.flip(static_cast<int>(rng.next_index(static_cast<std::size_t>(vars))));
      c.expect(state.broken_count() == oracle::broken_count(f, state.values()),
               "broken-clause count diverged on instance " + std::to_string(i));
      oracle::SatGains gains = oracle::sat_gains(f, state.values());
      for (int v = 0; v < vars && c.ok; ++v) {
        bool same = state.positive_gain(v) == gains.pos[static_cast<std::size_t>(v)] &&
                    state.negative_gain(v) == gains.neg[static_cast<std::size_t>(v)] &&
                    state.net_gain(v) == gains.net[static_cast<std::size_t>(v)];
        c.expect(same, "gain tables diverged for variable " + std::to_string(v) +
                           " on instance " + std::to_string(i));
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------- criterion 4
// 10,000 fuzzed operator applications must keep every packing feasible with
// exact piece conservation and fitness within 1e-12 relative; the worked
// fitness value 0.375 for fullness {150, 75} at capacity 150 is reproduced.
Check binpacking_invariants() {
  Check c;
  auto inst = std::make_shared<const PackingInstance>(
      PackingInstance{150, {150, 75}});
  Packing worked(inst);
  worked.first_fit_insert(0);
  worked.first_fit_insert(1);
  c.expect(worked.bins().size() == 2, "worked example should use two bins");
  c.expect(worked.fitness() == 0.375,
           "worked fitness is " + std::to_string(worked.fitness()));

  BinPackingDomain d;
  d.set_instance(generate_packing_instance(60, 150, "uniform", 77));
  d.begin_run(RunBudget::evaluations(1u << 30), 78);
  d.set_memory_size(3);
  Rng rng(79);
  for (std::size_t s = 0; s < 3; ++s) d.initialise_solution(s);
  const auto& catalog = d.heuristics();
  for (int op = 0; op < 10000 && c.ok; ++op) {
    const auto& h = catalog[rng.next_index(catalog.size())];
    std::size_t dst = rng.next_index(3);
    if (op % 97 == 0) {
      d.parameters().set_intensity_of_mutation(rng.next_double());
      d.parameters().set_depth_of_search(rng.next_double());
    }
    double value =
        h.kind == HeuristicKind::Crossover
            ? d.apply_heuristic2(h.id, rng.next_index(3), rng.next_index(3), dst)
            : d.apply_heuristic(h.id, rng.next_index(3), dst);
    std::string verdict = oracle::check_packing(d.solution_at(dst), 1e-12);
    if (!verdict.empty()) {
      c.fail("op " + std::to_string(op) + " (heuristic " + std::to_string(h.id) +
             "): " + verdict);
      break;
    }
    double drift = std::abs(value - d.solution_at(dst).fitness());
    c.expect(drift <= 1e-12, "returned value drifted from stored fitness");
  }
  return c;
}

// ---------------------------------------------------------------- criterion 5
// Every local-search heuristic in all four domains, fuzzed 1,000 times each,
// must never return a value above its input's (tolerance 1e-12).
Check local_search_non_deterioration() {
  Check c;
  std::map<std::string, std::string> instances = {
      {"maxsat", generate_instance_text("maxsat", {{"variables", 60}, {"seed", 5}})},
      {"binpacking", generate_instance_text(
                         "binpacking",
                         {{"pieces", 50}, {"capacity", 150}, {"seed", 6}})},
      {"flowshop", generate_instance_text(
                       "flowshop", {{"jobs", 10}, {"machines", 5}, {"seed", 7}})},
      {"personnel", generate_instance_text("personnel", {{"employees", 5},
                                                         {"days", 7},
                                                         {"shifts", 2},
                                                         {"seed", 8}})}};
  for (const auto& [id, text] : instances) {
    std::string path = "/tmp/xdhh_acceptance_" + id;
    write_file_atomic(path, text);
    auto d = make_domain(id);
    d->load_instance(path);
    d->begin_run(RunBudget::evaluations(1u << 30), 11);
    d->set_memory_size(2);
    d->initialise_solution(0);
    std::vector<int> ls, shakers;
    for (const auto& h : d->heuristics()) {
      if (h.kind == HeuristicKind::LocalSearch) ls.push_back(h.id);
      if (h.kind == HeuristicKind::Mutation || h.kind == HeuristicKind::RuinRecreate)
        shakers.push_back(h.id);
    }
    c.expect(!ls.empty(), id + " exposes no local-search heuristics");
    Rng rng(12);
    for (int h : ls) {
      for (int rep = 0; rep < 1000 && c.ok; ++rep) {
        if (rep % 5 == 0)
          d->apply_heuristic(shakers[rng.next_index(shakers.size())], 0, 0);
        if (rep % 31 == 0) {
          d->parameters().set_intensity_of_mutation(rng.next_double());
          d->parameters().set_depth_of_search(rng.next_double());
        }
        double before = d->get_function_value(0);
        double after = d->apply_heuristic(h, 0, 1);
        if (after > before + 1e-12) {
          c.fail(id + " heuristic " + std::to_string(h) + " worsened " +
                 std::to_string(before) + " to " + std::to_string(after));
          break;
        }
        if (rep % 3 == 0) d->copy_solution(1, 0);
      }
      if (!c.ok) break;
    }
    if (!c.ok) break;
  }
  return c;
}

// ---------------------------------------------------------------- criterion 6
// Desk-scale search sanity: on one generated instance per domain, every
// packaged algorithm under a 50,000-evaluation budget improves on the initial
// solution in at least 19 of 20 seeded runs, and ils reaches the enumerated
// optimum of the 6x3 flow shop instance in at least 16 of 20.
Check algorithm_improvement() {
  Check c;
  std::map<std::string, nlohmann::json> params = {
      {"flowshop", {{"jobs", 6}, {"machines", 3}, {"seed", 102}}},
      {"maxsat", {{"variables", 50}, {"seed", 62}}},
      {"binpacking", {{"pieces", 40}, {"capacity", 150}, {"seed", 63}}},
      {"personnel", {{"employees", 5}, {"days", 14}, {"shifts", 2}, {"seed", 64}}}};
  std::map<std::string, std::string> paths;
  for (const auto& [id, p] : params) {
    std::string path = "/tmp/xdhh_acceptance_run_" + id;
    write_file_atomic(path, generate_instance_text(id, p));
    paths[id] = path;
  }
  long long optimum = oracle::flowshop_enumerate_best(
      parse_flowshop_instance(read_file(paths["flowshop"])));

  for (const auto& [id, path] : paths) {
    for (const std::string& algo : algorithm_ids()) {
      int improved = 0, optimal = 0;
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto d = make_domain(id);
        d->load_instance(path);
        auto hh = make_hyper_heuristic(algo);
        RunResult r = run(*hh, *d, RunBudget::evaluations(50000), seed);
        if (r.best_value < r.trace.points().front().value) ++improved;
        if (id == "flowshop" &&
            static_cast<long long>(r.best_value) == optimum)
          ++optimal;
      }
      c.expect(improved >= 19, id + "/" + algo + " improved only " +
                                   std::to_string(improved) + "/20 runs");
      if (id == "flowshop" && algo == "ils")
        c.expect(optimal >= 16, "ils found the 6x3 optimum in only " +
                                    std::to_string(optimal) + "/20 runs");
      if (!c.ok) return c;
    }
  }
  return c;
}

// ---------------------------------------------------------------- criterion 7
// A run repeated with the same seed and evaluation budget must serialize to
// byte-identical result documents.
Check run_determinism() {
  Check c;
  std::map<std::string, nlohmann::json> params = {
      {"flowshop", {{"jobs", 8}, {"machines", 4}, {"seed", 71}}},
      {"personnel", {{"employees", 4}, {"days", 7}, {"shifts", 2}, {"seed", 72}}}};
  for (const auto& [id, p] : params) {
    std::string path = "/tmp/xdhh_acceptance_det_" + id;
    write_file_atomic(path, generate_instance_text(id, p));
    for (const std::string& algo : algorithm_ids()) {
      std::string first;
      for (int rep = 0; rep < 2; ++rep) {
        auto d = make_domain(id);
        d->load_instance(path);
        auto hh = make_hyper_heuristic(algo);
        std::string bytes =
            serialize_run_result(run(*hh, *d, RunBudget::evaluations(5000), 123));
        if (rep == 0)
          first = bytes;
        else
          c.expect(bytes == first, id + "/" + algo + " replay differed");
      }
      if (!c.ok) return c;
    }
  }
  return c;
}

// ---------------------------------------------------------------- criterion 8
// Heuristic-score bookkeeping: tenure is one less than the managed pool,
// a worsening step empties the tabu list before the culprit joins, and the
// acceptance percentage moves in clamped steps of five.
Check tabu_acceptance_mechanics() {
  Check c;
  c.expect(TabuHeuristicScores({0, 1, 2}).tenure() == 2, "tenure of 3 pool");
  c.expect(TabuHeuristicScores({0, 1, 2, 3, 4, 5, 6, 7}).tenure() == 7,
           "tenure of 8 pool");

  TabuHeuristicScores s({0, 1, 2});
  Rng rng(88);
  int a = s.select(rng, 1);
  s.on_improving();
  int again = s.select(rng, 2);
  c.expect(again == a, "improved heuristic should win the next selection");
  s.on_worsening(2);
  c.expect(s.is_tabu(a) && s.tabu_ids().size() == 1, "culprit should be tabu");
  int b = s.select(rng, 3);
  s.on_worsening(3);
  c.expect(!s.is_tabu(a), "worsening must clear the previous tabu list");
  c.expect(s.is_tabu(b) && s.tabu_ids().size() == 1,
           "only the new culprit stays tabu");

  AdaptiveAcceptance acc(10);
  c.expect(acc.beta() == 0, "acceptance starts at zero");
  for (std::uint64_t u = 1; u <= 100; ++u) acc.note(false, true, u);
  c.expect(acc.beta() == 50, "ten stagnant windows should reach 50");
  for (std::uint64_t u = 101; u <= 400; ++u) acc.note(false, true, u);
  c.expect(acc.beta() == 100, "acceptance must clamp at 100");
  for (std::uint64_t u = 401; u <= 700; ++u) acc.note(true, false, u);
  c.expect(acc.beta() == 0, "recovery must clamp at 0");
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double cap_seconds;
    std::function<Check()> fn;
  };
  const std::vector<Criterion> criteria = {
      {"rank-aggregation-fixture", 1.0, rank_aggregation_fixture},
      {"flowshop-oracle-equivalence", 60.0, flowshop_oracle_equivalence},
      {"maxsat-incremental-equivalence", 30.0, maxsat_incremental_equivalence},
      {"binpacking-invariants", 30.0, binpacking_invariants},
      {"local-search-non-deterioration", 60.0, local_search_non_deterioration},
      {"algorithm-improvement", 300.0, algorithm_improvement},
      {"run-determinism", 30.0, run_determinism},
      {"tabu-acceptance-mechanics", 5.0, tabu_acceptance_mechanics},
  };

  int failures = 0;
  for (const Criterion& crit : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Check check;
    try {
      check = crit.fn();
    } catch (const std::exception& e) {
      check.fail(std::string("unhandled exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (check.ok && elapsed > crit.cap_seconds)
      check.fail("exceeded time cap of " + std::to_string(crit.cap_seconds) + "s");
    std::printf("%s  %-32s (%.2fs)%s%s\n", check.ok ? "PASS" : "FAIL",
                crit.name, elapsed, check.ok ? "" : "  ",
                check.ok ? "" : check.detail.c_str());
    failures += check.ok ? 0 : 1;
  }
  std::printf("%d/%zu acceptance criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
