#pragma once

#include <cstdint>
#include <string>

#include "xdhh/core/budget.hpp"
#include "xdhh/core/errors.hpp"
#include "xdhh/core/hyper_heuristic.hpp"
#include "xdhh/core/problem_domain.hpp"
#include "xdhh/core/rng.hpp"
#include "xdhh/core/trace.hpp"

namespace xdhh {

// Executes one seeded run of an algorithm against a loaded domain instance.
// With an Evaluations budget the result is bit-reproducible for a given seed.
inline RunResult run(HyperHeuristic& algorithm, ProblemDomain& domain,
                     const RunBudget& budget, std::uint64_t seed) {
  if (budget.limit == 0) raise(Errc::BudgetEmpty, "budget limit must be positive");
  if (!domain.instance_loaded())
    raise(Errc::NoInstanceLoaded, std::string(domain.name()) + " domain");

  domain.begin_run(budget, substream_seed(seed, 0));
  Rng algo_rng(substream_seed(seed, 1));

  try {
    algorithm.solve(domain, algo_rng);
  } catch (const Error& e) {
    throw Error(e.code(), "run(domain=" + std::string(domain.name()) +
                              ", algorithm=" + std::string(algorithm.name()) +
                              ", seed=" + std::to_string(seed) + ") failed: " + e.what());
  }

  RunResult result;
  result.domain_id = std::string(domain.name());
  result.instance_id = std::string(domain.instance_id());
  result.algorithm_id = std::string(algorithm.name());
  result.seed = seed;
  result.budget = budget;
  result.best_value = domain.get_best_solution_value();
  result.evaluations_used = domain.evaluation_count();
  result.trace = domain.trace();
  result.trace.record(domain.clock().consumed(), result.best_value);
  return result;
}

}  // namespace xdhh
