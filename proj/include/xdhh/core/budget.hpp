#pragma once

#include <chrono>
#include <cstdint>
#include <limits>

namespace xdhh {

struct RunBudget {
  enum class Mode { WallClock, Evaluations };

  Mode mode = Mode::Evaluations;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();

  static RunBudget evaluations(std::uint64_t count) {
    return RunBudget{Mode::Evaluations, count};
  }
  static RunBudget wall_clock_ms(std::uint64_t ms) {
    return RunBudget{Mode::WallClock, ms};
  }
};

inline const char* budget_mode_name(RunBudget::Mode m) {
  return m == RunBudget::Mode::Evaluations ? "evaluations" : "wallclock_ms";
}

// Counts consumed budget units (objective evaluations or elapsed milliseconds).
// Expiry is sticky: once it reports expired it stays expired.
class BudgetClock {
 public:
  BudgetClock() { restart(RunBudget{}); }

  void restart(const RunBudget& budget) {
    budget_ = budget;
    evaluations_ = 0;
    expired_ = false;
    start_ = std::chrono::steady_clock::now();
  }

  void note_evaluation() { ++evaluations_; }

  std::uint64_t evaluations() const { return evaluations_; }

  std::uint64_t consumed() const {
    if (budget_.mode == RunBudget::Mode::Evaluations) return evaluations_;
    auto elapsed = std::chrono::steady_clock::now() - start_;
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  }

  bool has_expired() const {
    if (!expired_ && consumed() >= budget_.limit) expired_ = true;
    return expired_;
  }

  const RunBudget& budget() const { return budget_; }

 private:
  RunBudget budget_;
  std::uint64_t evaluations_ = 0;
  mutable bool expired_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace xdhh
