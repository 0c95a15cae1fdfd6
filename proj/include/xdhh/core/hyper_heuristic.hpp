#pragma once

#include <string_view>

#include "xdhh/core/problem_domain.hpp"
#include "xdhh/core/rng.hpp"

namespace xdhh {

// A search strategy over the domain barrier. solve() must loop until
// domain.budget_expired() and take all randomness from the supplied stream.
class HyperHeuristic {
 public:
  virtual ~HyperHeuristic() = default;

  virtual std::string_view name() const = 0;
  virtual void solve(ProblemDomain& domain, Rng& rng) = 0;
};

}  // namespace xdhh
