#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xdhh/core/budget.hpp"

namespace xdhh {

struct TracePoint {
  std::uint64_t consumed;  // budget units at the time of the improvement
  double value;
};

// Objective-vs-consumed-budget curve. Points are appended on strict
// improvement only, plus one terminal point, so values never increase.
class FitnessTrace {
 public:
  void record(std::uint64_t consumed, double value) { points_.push_back({consumed, value}); }
  void clear() { points_.clear(); }
  bool empty() const { return points_.empty(); }
  const std::vector<TracePoint>& points() const { return points_; }

 private:
  std::vector<TracePoint> points_;
};

struct RunResult {
  std::string domain_id;
  std::string instance_id;
  std::string algorithm_id;
  std::uint64_t seed = 0;
  RunBudget budget;
  double best_value = 0.0;
  std::uint64_t evaluations_used = 0;
  FitnessTrace trace;
};

}  // namespace xdhh
