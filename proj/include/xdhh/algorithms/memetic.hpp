#pragma once

#include <cstddef>
#include <vector>

#include "xdhh/core/errors.hpp"
#include "xdhh/core/hyper_heuristic.hpp"

namespace xdhh {

// Steady-state memetic strategy: population of 10 in slots 0-9, offspring
// workspace in slot 10. Parents come from two binary tournaments, crossover
// breeds the offspring, mutation hits it with probability 0.1, then either a
// local-search or a ruin-recreate heuristic (coin flip) is applied. The
// offspring replaces the worse parent when no worse than it.
class MemeticAlgorithm : public HyperHeuristic {
 public:
  static constexpr std::size_t kPopulation = 10;
  static constexpr std::size_t kOffspring = kPopulation;
  static constexpr double kMutationRate = 0.1;

  std::string_view name() const override { return "ma"; }

  void solve(ProblemDomain& d, Rng& rng) override {
    std::vector<int> crossover = d.heuristics_of_type(HeuristicKind::Crossover);
    if (crossover.empty())
      raise(Errc::UnsupportedDomain, "ma needs at least one crossover heuristic");
    std::vector<int> mutation = d.heuristics_of_type(HeuristicKind::Mutation);
    std::vector<int> local_search = d.heuristics_of_type(HeuristicKind::LocalSearch);
    std::vector<int> ruin_recreate = d.heuristics_of_type(HeuristicKind::RuinRecreate);

    d.set_memory_size(kPopulation + 1);
    for (std::size_t i = 0; i < kPopulation && !d.budget_expired(); ++i)
      d.initialise_solution(i);

    while (!d.budget_expired()) {
      std::size_t parent1 = tournament(d, rng);
      std::size_t parent2 = tournament(d, rng);

      int cx = crossover[rng.next_index(crossover.size())];
      d.apply_heuristic2(cx, parent1, parent2, kOffspring);

      if (rng.next_double() < kMutationRate && !mutation.empty())
        d.apply_heuristic(mutation[rng.next_index(mutation.size())], kOffspring, kOffspring);

      if (rng.next_bool()) {
        if (!local_search.empty())
          d.apply_heuristic(local_search[rng.next_index(local_search.size())], kOffspring,
                            kOffspring);
      } else {
        if (!ruin_recreate.empty())
          d.apply_heuristic(ruin_recreate[rng.next_index(ruin_recreate.size())], kOffspring,
                            kOffspring);
      }

      // Ties go to the second parent, which is the one replaced.
      std::size_t worse =
          d.get_function_value(parent1) > d.get_function_value(parent2) ? parent1 : parent2;
      if (d.get_function_value(kOffspring) <= d.get_function_value(worse))
        d.copy_solution(kOffspring, worse);
    }
  }

 private:
  // Two distinct slots, better value wins; ties favour the first drawn.
  static std::size_t tournament(ProblemDomain& d, Rng& rng) {
    std::size_t a = rng.next_index(kPopulation);
    std::size_t b = (a + 1 + rng.next_index(kPopulation - 1)) % kPopulation;
    return d.get_function_value(a) <= d.get_function_value(b) ? a : b;
  }
};

}  // namespace xdhh
