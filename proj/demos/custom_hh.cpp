// Shows the extension point: a user-written controller that sees only the
// domain barrier (heuristic ids, kinds, objective values, memory slots), run
// side by side with a packaged algorithm on the same generated instance.
#include <iostream>
#include <vector>

#include "xdhh/algorithms/factory.hpp"
#include "xdhh/core/io_util.hpp"
#include "xdhh/core/runner.hpp"
#include "xdhh/domains/factory.hpp"

namespace {

// Epsilon-greedy credit assignment: keep a running mean of the objective
// improvement each unary heuristic delivers, usually play the best one,
// sometimes explore, and accept any non-worsening result.
class EpsilonGreedy : public xdhh::HyperHeuristic {
 public:
  std::string_view name() const override { return "epsilon-greedy"; }

  void solve(xdhh::ProblemDomain& d, xdhh::Rng& rng) override {
    std::vector<int> pool;
    for (const auto& h : d.heuristics())
      if (h.kind != xdhh::HeuristicKind::Crossover) pool.push_back(h.id);
    std::vector<double> mean(pool.size(), 0.0);
    std::vector<int> plays(pool.size(), 0);

    d.set_memory_size(2);
    double current = d.initialise_solution(0);
    while (!d.budget_expired()) {
      std::size_t pick;
      if (rng.next_double() < 0.15) {
        pick = rng.next_index(pool.size());
      } else {
        pick = 0;
        for (std::size_t i = 1; i < pool.size(); ++i)
          if (mean[i] > mean[pick]) pick = i;
      }
      double value = d.apply_heuristic(pool[pick], 0, 1);
      double reward = current - value;
      ++plays[pick];
      mean[pick] += (reward - mean[pick]) / plays[pick];
      if (value <= current) {
        d.copy_solution(1, 0);
        current = value;
      }
    }
  }
};

}  // namespace

int main() {
  const std::string path = "/tmp/xdhh_demo_flowshop.txt";
  xdhh::write_file_atomic(
      path, xdhh::generate_instance_text(
                "flowshop", {{"jobs", 12}, {"machines", 5}, {"seed", 7}}));

  auto budget = xdhh::RunBudget::evaluations(20000);
  EpsilonGreedy custom;
  auto packaged = xdhh::make_hyper_heuristic("ils");

  for (xdhh::HyperHeuristic* algo :
       std::vector<xdhh::HyperHeuristic*>{&custom, packaged.get()}) {
    auto domain = xdhh::make_domain("flowshop");
    domain->load_instance(path);
    xdhh::RunResult r = xdhh::run(*algo, *domain, budget, 42);
    std::cout << r.algorithm_id << ": best makespan " << r.best_value << " in "
              << r.evaluations_used << " evaluations\n";
    std::cout << "  improvements:";
    for (const auto& p : r.trace.points()) std::cout << " " << p.value;
    std::cout << "\n";
  }
  return 0;
}
