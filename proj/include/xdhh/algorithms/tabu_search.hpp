#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "xdhh/core/errors.hpp"
#include "xdhh/core/hyper_heuristic.hpp"

namespace xdhh {

// Heuristic-scoring state for the tabu-search strategy: one integer value per
// managed (non-crossover) heuristic, plus a tabu list with tenure
// pool size - 1. At most one entry joins the list per iteration and entries
// aged >= tenure are released before selection, so a non-tabu heuristic
// always exists.
class TabuHeuristicScores {
 public:
  explicit TabuHeuristicScores(std::vector<int> heuristic_ids)
      : ids_(std::move(heuristic_ids)),
        values_(ids_.size(), 0),
        tabu_since_(ids_.size(), kFree) {}

  int tenure() const { return static_cast<int>(ids_.size()) - 1; }

  // Highest-value non-tabu heuristic, ties broken uniformly at random.
  int select(Rng& rng, std::uint64_t iteration) {
    release_stale(iteration);
    long long best = 0;
    std::vector<std::size_t> args;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (tabu_since_[i] != kFree) continue;
      if (args.empty() || values_[i] > best) {
        best = values_[i];
        args.assign(1, i);
      } else if (values_[i] == best) {
        args.push_back(i);
      }
    }
    last_selected_ = args[rng.next_index(args.size())];
    return ids_[last_selected_];
  }

  void on_improving() { ++values_[last_selected_]; }

  void on_worsening(std::uint64_t iteration) {
    std::fill(tabu_since_.begin(), tabu_since_.end(), kFree);
    --values_[last_selected_];
    tabu_since_[last_selected_] = iteration;
  }

  void on_equal(std::uint64_t iteration) {
    tabu_since_[last_selected_] = iteration;
    release_stale(iteration);
  }

  long long value_of(int heuristic_id) const { return values_[index_of(heuristic_id)]; }
  bool is_tabu(int heuristic_id) const { return tabu_since_[index_of(heuristic_id)] != kFree; }

  std::vector<int> tabu_ids() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (tabu_since_[i] != kFree) out.push_back(ids_[i]);
    return out;
  }

 private:
  static constexpr std::uint64_t kFree = ~std::uint64_t{0};

  void release_stale(std::uint64_t iteration) {
    for (auto& since : tabu_since_)
      if (since != kFree && iteration - since >= static_cast<std::uint64_t>(tenure()))
        since = kFree;
  }

  std::size_t index_of(int heuristic_id) const {
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (ids_[i] == heuristic_id) return i;
    raise(Errc::IndexOutOfRange, "heuristic id " + std::to_string(heuristic_id) +
                                     " is not managed by this score table");
  }

  std::vector<int> ids_;
  std::vector<long long> values_;
  std::vector<std::uint64_t> tabu_since_;  // iteration an entry joined, or kFree
  std::size_t last_selected_ = 0;
};

// Drives the acceptance percentage beta: each full window of consumed budget
// without an improving move raises it by 5, each window without a worsening
// move lowers it by 5, clamped to [0,100].
class AdaptiveAcceptance {
 public:
  explicit AdaptiveAcceptance(std::uint64_t window_units) : window_(window_units) {}

  void note(bool improved, bool worsened, std::uint64_t consumed) {
    if (improved) improve_mark_ = consumed;
    if (worsened) worsen_mark_ = consumed;
    while (consumed - improve_mark_ >= window_) {
      beta_ = std::min(100, beta_ + 5);
      improve_mark_ += window_;
    }
    while (consumed - worsen_mark_ >= window_) {
      beta_ = std::max(0, beta_ - 5);
      worsen_mark_ += window_;
    }
  }

  bool accept_non_improving(Rng& rng) const {
    return static_cast<int>(rng.next_index(100)) < beta_;
  }

  int beta() const { return beta_; }

 private:
  std::uint64_t window_;
  int beta_ = 0;
  std::uint64_t improve_mark_ = 0;
  std::uint64_t worsen_mark_ = 0;
};

// Tabu search over the heuristic space with adaptive acceptance. Crossover
// heuristics are excluded entirely. Scores move by +/-1; a worsening
// application empties the tabu list before the applied heuristic joins it.
class TabuSearchAA : public HyperHeuristic {
 public:
  std::string_view name() const override { return "tsaa"; }

  // Window = a tenth of a budget "second": 1% of the total limit in
  // evaluation mode, 100 ms in wall-clock mode.
  static std::uint64_t window_units(const RunBudget& budget) {
    if (budget.mode == RunBudget::Mode::WallClock) return 100;
    return std::max<std::uint64_t>(1, budget.limit / 100);
  }

  void solve(ProblemDomain& d, Rng& rng) override {
    std::vector<int> pool;
    for (const auto& h : d.heuristics())
      if (h.kind != HeuristicKind::Crossover) pool.push_back(h.id);
    if (pool.empty())
      raise(Errc::UnsupportedDomain, "tsaa needs at least one non-crossover heuristic");

    if (d.memory_size() < 2) d.set_memory_size(2);
    d.initialise_solution(0);

    TabuHeuristicScores scores(std::move(pool));
    AdaptiveAcceptance acceptance(window_units(d.clock().budget()));
    std::uint64_t iteration = 0;

    while (!d.budget_expired()) {
      ++iteration;
      int h = scores.select(rng, iteration);
      double current = d.get_function_value(0);
      double value = d.apply_heuristic(h, 0, 1);
      bool improved = value < current;
      bool worsened = value > current;
      if (improved)
        scores.on_improving();
      else if (worsened)
        scores.on_worsening(iteration);
      else
        scores.on_equal(iteration);
      if (improved || acceptance.accept_non_improving(rng)) d.copy_solution(1, 0);
      acceptance.note(improved, worsened, d.clock().consumed());
    }
  }
};

}  // namespace xdhh
