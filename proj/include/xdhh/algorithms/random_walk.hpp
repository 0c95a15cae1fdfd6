#pragma once

#include <limits>

#include "xdhh/core/hyper_heuristic.hpp"

namespace xdhh {

// Baseline strategy: apply a uniformly random heuristic to slot 0, writing
// slot 1; accept improvements, otherwise accept with probability one half.
// Crossover ids are lifted to a self-crossover of slot 0.
class RandomWalk : public HyperHeuristic {
 public:
  std::string_view name() const override { return "random"; }

  void solve(ProblemDomain& d, Rng& rng) override {
    const int k = d.heuristic_count();
    if (d.memory_size() < 2) d.set_memory_size(2);
    double current = std::numeric_limits<double>::infinity();
    d.initialise_solution(0);
    while (!d.budget_expired()) {
      int h = static_cast<int>(rng.next_index(static_cast<std::size_t>(k)));
      double value = d.heuristics()[static_cast<std::size_t>(h)].arity() == 2
                         ? d.apply_heuristic2(h, 0, 0, 1)
                         : d.apply_heuristic(h, 0, 1);
      double delta = current - value;
      if (delta > 0) {
        d.copy_solution(1, 0);
        current = value;
      } else if (rng.next_bool()) {
        d.copy_solution(1, 0);
        current = value;
      }
    }
  }
};

}  // namespace xdhh
