#pragma once

#include <limits>
#include <vector>

#include "xdhh/core/hyper_heuristic.hpp"
#include "xdhh/core/log.hpp"

namespace xdhh {

// Perturb the incumbent with a random mutation or ruin-recreate heuristic,
// descend with every local-search heuristic keeping the best product, accept
// only strict improvements. Slots: 0 incumbent, 1 perturbed, 2 trial, 3 best
// trial (a fourth slot because local searches are stochastic and cannot be
// re-applied to reproduce a result).
class IteratedLocalSearch : public HyperHeuristic {
 public:
  std::string_view name() const override { return "ils"; }

  void solve(ProblemDomain& d, Rng& rng) override {
    std::vector<int> ls = d.heuristics_of_type(HeuristicKind::LocalSearch);
    std::vector<int> perturb = d.heuristics_of_type(HeuristicKind::Mutation);
    for (int h : d.heuristics_of_type(HeuristicKind::RuinRecreate)) perturb.push_back(h);

    d.set_memory_size(4);
    d.initialise_solution(0);
    if (ls.empty())
      log_warning("ils: domain exposes no local-search heuristics; "
                  "falling back to perturbation-only greedy acceptance");
    else
      descend(d, ls, 0);

    while (!d.budget_expired()) {
      if (perturb.empty()) {
        d.copy_solution(0, 1);
      } else {
        int h = perturb[rng.next_index(perturb.size())];
        d.apply_heuristic(h, 0, 1);
      }
      double candidate;
      if (ls.empty())
        candidate = d.get_function_value(1);
      else
        candidate = descend(d, ls, 1);
      if (candidate < d.get_function_value(0))
        d.copy_solution(ls.empty() ? 1 : 3, 0);
    }
  }

 private:
  // Applies every local-search heuristic to `from`, keeps the best product in
  // slot 3, and copies it back into `from` when it improves on it. Returns the
  // best value seen (the value of `from` if nothing improved).
  static double descend(ProblemDomain& d, const std::vector<int>& ls, std::size_t from) {
    double best = std::numeric_limits<double>::infinity();
    bool have = false;
    for (int h : ls) {
      if (d.budget_expired()) break;
      double v = d.apply_heuristic(h, from, 2);
      if (!have || v < best) {
        best = v;
        d.copy_solution(2, 3);
        have = true;
      }
    }
    double from_value = d.get_function_value(from);
    if (have && best < from_value) {
      if (from != 3) d.copy_solution(3, from);
      return best;
    }
    // Nothing improved on `from` (or the budget cut the sweep short before any
    // application); make slot 3 hold the solution the returned value describes.
    d.copy_solution(from, 3);
    return from_value;
  }
};

}  // namespace xdhh
