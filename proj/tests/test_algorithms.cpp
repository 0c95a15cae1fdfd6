#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "support/stub_domain.hpp"
#include "xdhh/algorithms/factory.hpp"
#include "xdhh/core/runner.hpp"

using namespace xdhh;
using testsupport::StubDomain;
using testsupport::StubHeuristic;

TEST_CASE("tabu tenure is the managed pool size minus one", "[algorithms]") {
  TabuHeuristicScores s({4, 7, 9});
  CHECK(s.tenure() == 2);
  CHECK(s.value_of(4) == 0);
  CHECK(s.value_of(7) == 0);
  CHECK(s.value_of(9) == 0);
  CHECK(s.tabu_ids().empty());
  CHECK_THROWS_AS(s.value_of(5), Error);
}

TEST_CASE("improving applications raise the score and stay free", "[algorithms]") {
  TabuHeuristicScores s({0, 1, 2});
  Rng rng(3);
  int first = s.select(rng, 1);
  s.on_improving();
  CHECK(s.value_of(first) == 1);
  // The improved heuristic is now the unique argmax and never goes tabu.
  CHECK(s.select(rng, 2) == first);
  s.on_improving();
  CHECK(s.value_of(first) == 2);
  CHECK(s.select(rng, 3) == first);
  s.on_worsening(3);
  CHECK(s.value_of(first) == 1);
  CHECK(s.tabu_ids() == std::vector<int>{first});
}

TEST_CASE("a worsening application empties the tabu list first", "[algorithms]") {
  TabuHeuristicScores s({0, 1, 2});
  Rng rng(5);
  int a = s.select(rng, 1);
  s.on_improving();        // a has value 1 and wins future selections
  REQUIRE(s.select(rng, 2) == a);
  s.on_worsening(2);       // a: value back to 0, tabu {a}
  REQUIRE(s.tabu_ids() == std::vector<int>{a});
  int b = s.select(rng, 3);
  REQUIRE(b != a);
  s.on_worsening(3);
  // The clear-all happens before b joins, so a is free again immediately.
  CHECK(s.tabu_ids() == std::vector<int>{b});
  CHECK_FALSE(s.is_tabu(a));
}

TEST_CASE("equal applications go tabu and age out after the tenure", "[algorithms]") {
  TabuHeuristicScores s({0, 1, 2});
  Rng rng(7);
  int a = s.select(rng, 1);
  s.on_equal(1);
  REQUIRE(s.is_tabu(a));
  int b = s.select(rng, 2);
  REQUIRE(b != a);
  s.on_equal(2);
  REQUIRE(s.is_tabu(b));
  // Iteration 3 is two past a's entry, meeting the tenure of 2: a releases.
  int c = s.select(rng, 3);
  CHECK_FALSE(s.is_tabu(a));
  CHECK(s.is_tabu(b));
  CHECK(c != b);
}

TEST_CASE("acceptance percentage follows the stagnation windows", "[algorithms]") {
  AdaptiveAcceptance acc(10);
  CHECK(acc.beta() == 0);
  // Pure worsening: +5 per window without an improving move, no -5 because
  // every call renews the worsening mark.
  for (std::uint64_t c = 1; c <= 100; ++c) acc.note(false, true, c);
  CHECK(acc.beta() == 50);
  for (std::uint64_t c = 101; c <= 300; ++c) acc.note(false, true, c);
  CHECK(acc.beta() == 100);  // clamped
  // Pure improvement drains it back to the floor.
  for (std::uint64_t c = 301; c <= 600; ++c) acc.note(true, false, c);
  CHECK(acc.beta() == 0);
  // Total stagnation moves both marks: +5 and -5 cancel.
  AdaptiveAcceptance flat(10);
  for (std::uint64_t c = 1; c <= 200; ++c) flat.note(false, false, c);
  CHECK(flat.beta() == 0);
}

TEST_CASE("beta zero rejects and beta hundred accepts everything", "[algorithms]") {
  AdaptiveAcceptance acc(1);
  Rng rng(11);
  for (int i = 0; i < 200; ++i) CHECK_FALSE(acc.accept_non_improving(rng));
  for (std::uint64_t c = 1; c <= 20; ++c) acc.note(false, true, c);
  REQUIRE(acc.beta() == 100);
  for (int i = 0; i < 200; ++i) CHECK(acc.accept_non_improving(rng));
}

TEST_CASE("tsaa window is a hundredth of the evaluation budget", "[algorithms]") {
  CHECK(TabuSearchAA::window_units(RunBudget::evaluations(50000)) == 500);
  CHECK(TabuSearchAA::window_units(RunBudget::evaluations(50)) == 1);
  CHECK(TabuSearchAA::window_units(RunBudget::wall_clock_ms(9999)) == 100);
}

TEST_CASE("tsaa never touches crossover heuristics", "[algorithms]") {
  StubDomain d({testsupport::add(HeuristicKind::LocalSearch, -1),
                testsupport::add(HeuristicKind::Mutation, +1),
                testsupport::identity(HeuristicKind::Mutation),
                testsupport::crossover_min()});
  TabuSearchAA tsaa;
  RunResult r = run(tsaa, d, RunBudget::evaluations(100), 17);
  CHECK(r.evaluations_used == 100);
  CHECK(d.apply_counts().find(3) == d.apply_counts().end());
  CHECK(r.best_value < 1000.0);  // the improving heuristic dominates quickly
}

TEST_CASE("tsaa requires a non-crossover heuristic", "[algorithms]") {
  StubDomain d({testsupport::crossover_min()});
  TabuSearchAA tsaa;
  try {
    run(tsaa, d, RunBudget::evaluations(10), 1);
    FAIL("expected UnsupportedDomain");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedDomain);
  }
}

TEST_CASE("ma holds ten slots, mutates a tenth and flips a fair coin",
          "[algorithms]") {
  StubDomain d({testsupport::crossover_min(),
                testsupport::add(HeuristicKind::Mutation, +5),
                testsupport::add(HeuristicKind::LocalSearch, -1),
                testsupport::identity(HeuristicKind::RuinRecreate)});
  MemeticAlgorithm ma;
  RunResult r = run(ma, d, RunBudget::evaluations(30000), 23);
  CHECK(d.memory_size() == MemeticAlgorithm::kPopulation + 1);
  CHECK(r.best_value < 1000.0);

  auto count = [&](int id) {
    auto it = d.apply_counts().find(id);
    return it == d.apply_counts().end() ? 0LL : it->second;
  };
  long long iters = count(0);
  REQUIRE(iters > 5000);
  double mutation_rate = static_cast<double>(count(1)) / static_cast<double>(iters);
  CHECK(std::abs(mutation_rate - MemeticAlgorithm::kMutationRate) < 0.015);
  CHECK(count(2) + count(3) == iters);  // exactly one of ls/rr per iteration
  CHECK(std::abs(static_cast<double>(count(2) - count(3))) <
        6.0 * std::sqrt(static_cast<double>(iters)));
}

TEST_CASE("ma rejects domains without crossover", "[algorithms]") {
  StubDomain d({testsupport::add(HeuristicKind::Mutation, 1)});
  MemeticAlgorithm ma;
  try {
    run(ma, d, RunBudget::evaluations(10), 1);
    FAIL("expected UnsupportedDomain");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedDomain);
  }
}

TEST_CASE("ils keeps the best local-search product and strict acceptance",
          "[algorithms]") {
  // Perturbation only worsens (+10); the two descents recover at most 4, so
  // the incumbent settles at the first descent's result and stays.
  StubDomain d({testsupport::add(HeuristicKind::LocalSearch, -1),
                testsupport::add(HeuristicKind::LocalSearch, -3),
                testsupport::add(HeuristicKind::Mutation, +10)});
  IteratedLocalSearch ils;
  RunResult r = run(ils, d, RunBudget::evaluations(30), 29);
  CHECK(r.evaluations_used == 30);
  CHECK(r.best_value == 997.0);
}

TEST_CASE("ils accepts strictly improving rounds", "[algorithms]") {
  // Perturbation itself improves (-10), descent adds -4 more: ten full rounds
  // of -13 on top of the initial descent's 997.
  StubDomain d({testsupport::add(HeuristicKind::LocalSearch, -1),
                testsupport::add(HeuristicKind::LocalSearch, -3),
                testsupport::add(HeuristicKind::RuinRecreate, -10)});
  IteratedLocalSearch ils;
  RunResult r = run(ils, d, RunBudget::evaluations(33), 31);
  CHECK(r.best_value == 867.0);
  // The incumbent only ever improves, so the trace values are decreasing.
  const auto& pts = r.trace.points();
  for (std::size_t i = 1; i < pts.size(); ++i)
    CHECK(pts[i].value <= pts[i - 1].value);
}

TEST_CASE("ils draws perturbation heuristics uniformly", "[algorithms]") {
  StubDomain d({testsupport::identity(HeuristicKind::Mutation),
                testsupport::identity(HeuristicKind::Mutation),
                testsupport::identity(HeuristicKind::RuinRecreate),
                testsupport::identity(HeuristicKind::RuinRecreate),
                testsupport::identity(HeuristicKind::LocalSearch)});
  IteratedLocalSearch ils;
  run(ils, d, RunBudget::evaluations(8002), 37);
  long long total = 0;
  double chi2 = 0.0;
  for (int id = 0; id < 4; ++id) total += d.apply_counts().at(id);
  REQUIRE(total == 4000);
  for (int id = 0; id < 4; ++id) {
    double o = static_cast<double>(d.apply_counts().at(id));
    double e = static_cast<double>(total) / 4.0;
    chi2 += (o - e) * (o - e) / e;
  }
  CHECK(chi2 < 11.345);  // chi-square critical value, three degrees of freedom
}

TEST_CASE("ils without local search falls back to greedy acceptance",
          "[algorithms]") {
  StubDomain d({testsupport::add(HeuristicKind::Mutation, -1)});
  IteratedLocalSearch ils;
  RunResult r = run(ils, d, RunBudget::evaluations(50), 41);
  CHECK(r.best_value == 951.0);  // one initialise, then -1 per evaluation
}

TEST_CASE("every packaged algorithm runs against the plain barrier",
          "[algorithms]") {
  for (const std::string& id : algorithm_ids()) {
    StubDomain d({testsupport::add(HeuristicKind::Mutation, 1),
                  testsupport::add(HeuristicKind::LocalSearch, -1),
                  testsupport::identity(HeuristicKind::RuinRecreate),
                  testsupport::crossover_min()});
    auto algo = make_hyper_heuristic(id);
    RunResult r = run(*algo, d, RunBudget::evaluations(500), 43);
    CHECK(r.algorithm_id == id);
    CHECK(r.evaluations_used >= 500);
    CHECK(r.best_value <= 1000.0);
    REQUIRE(!r.trace.empty());
    CHECK(r.trace.points().back().value == r.best_value);
  }
  CHECK_THROWS_AS(make_hyper_heuristic("annealing"), Error);
}
