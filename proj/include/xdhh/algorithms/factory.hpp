#pragma once

#include <memory>
#include <string>
#include <vector>

#include "xdhh/algorithms/iterated_local_search.hpp"
#include "xdhh/algorithms/memetic.hpp"
#include "xdhh/algorithms/random_walk.hpp"
#include "xdhh/algorithms/tabu_search.hpp"
#include "xdhh/core/errors.hpp"

namespace xdhh {

inline const std::vector<std::string>& algorithm_ids() {
  static const std::vector<std::string> ids{"random", "ils", "tsaa", "ma"};
  return ids;
}

inline std::unique_ptr<HyperHeuristic> make_hyper_heuristic(const std::string& id) {
  if (id == "random") return std::make_unique<RandomWalk>();
  if (id == "ils") return std::make_unique<IteratedLocalSearch>();
  if (id == "tsaa") return std::make_unique<TabuSearchAA>();
  if (id == "ma") return std::make_unique<MemeticAlgorithm>();
  raise(Errc::InvalidArgument, "unknown algorithm '" + id + "'");
}

}  // namespace xdhh
