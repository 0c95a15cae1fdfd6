#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "xdhh/core/budget.hpp"
#include "xdhh/core/errors.hpp"
#include "xdhh/core/heuristic.hpp"
#include "xdhh/core/memory.hpp"
#include "xdhh/core/rng.hpp"
#include "xdhh/core/search_parameters.hpp"
#include "xdhh/core/trace.hpp"

namespace xdhh {

inline constexpr std::size_t kDefaultMemorySize = 2;

// Everything a hyper-heuristic may see of a problem domain: heuristic ids and
// kinds, objective values, and solution-memory slot indexes. Solutions never
// cross this interface.
class ProblemDomain {
 public:
  virtual ~ProblemDomain() = default;

  virtual std::string_view name() const = 0;
  virtual std::string_view instance_id() const = 0;
  virtual bool instance_loaded() const = 0;
  virtual void load_instance(const std::string& path) = 0;

  virtual void set_memory_size(std::size_t n) = 0;
  virtual std::size_t memory_size() const = 0;

  virtual double initialise_solution(std::size_t slot) = 0;
  virtual double apply_heuristic(int h, std::size_t src, std::size_t dst) = 0;
  virtual double apply_heuristic2(int h, std::size_t src1, std::size_t src2,
                                  std::size_t dst) = 0;
  virtual void copy_solution(std::size_t src, std::size_t dst) = 0;
  virtual double get_function_value(std::size_t slot) const = 0;

  virtual const std::vector<HeuristicDescriptor>& heuristics() const = 0;

  int heuristic_count() const { return static_cast<int>(heuristics().size()); }

  std::vector<int> heuristics_of_type(HeuristicKind kind) const {
    std::vector<int> ids;
    for (const auto& d : heuristics())
      if (d.kind == kind) ids.push_back(d.id);
    return ids;
  }

  SearchParameters& parameters() { return params_; }
  const SearchParameters& parameters() const { return params_; }

  // Resets the per-run bookkeeping (clock, best-so-far, trace) and reseeds the
  // domain-side RNG. Loaded instance and memory contents are untouched.
  void begin_run(const RunBudget& budget, std::uint64_t domain_seed) {
    clock_.restart(budget);
    seed_rng(domain_seed);
    best_ = std::numeric_limits<double>::infinity();
    trace_.clear();
  }

  const BudgetClock& clock() const { return clock_; }
  bool budget_expired() const { return clock_.has_expired(); }

  double get_best_solution_value() const { return best_; }
  std::uint64_t evaluation_count() const { return clock_.evaluations(); }
  const FitnessTrace& trace() const { return trace_; }

  Rng& rng() { return rng_; }
  void seed_rng(std::uint64_t seed) { rng_ = Rng(seed); }

 protected:
  // Every objective computed across the barrier passes through here.
  double record_evaluation(double value) {
    clock_.note_evaluation();
    if (value < best_) {
      best_ = value;
      trace_.record(clock_.consumed(), value);
    }
    return value;
  }

  void reset_run_stats() {
    best_ = std::numeric_limits<double>::infinity();
    trace_.clear();
  }

 private:
  SearchParameters params_;
  BudgetClock clock_;
  Rng rng_{0};
  double best_ = std::numeric_limits<double>::infinity();
  FitnessTrace trace_;
};

// Shared slot machinery. A concrete domain supplies its solution type, an
// initial-solution constructor, an objective reader, and the two dispatchers.
template <class Solution>
class DomainBase : public ProblemDomain {
 public:
  bool instance_loaded() const final { return loaded_; }
  std::string_view instance_id() const final { return instance_id_; }

  void set_memory_size(std::size_t n) override {
    require_instance();
    memory_.resize(n);
  }

  std::size_t memory_size() const override { return memory_.size(); }

  double initialise_solution(std::size_t slot) override {
    require_instance();
    Solution s = initial_solution();
    double v = solution_value(s);
    memory_.put(slot, std::move(s));
    return record_evaluation(v);
  }

  double apply_heuristic(int h, std::size_t src, std::size_t dst) override {
    require_instance();
    const HeuristicDescriptor& d = descriptor(h);
    if (d.arity() != 1)
      raise(Errc::WrongArity, "heuristic " + std::to_string(h) +
                                  " is a crossover; use apply_heuristic2");
    Solution out = apply_unary(h, memory_.at(src));
    double v = solution_value(out);
    memory_.put(dst, std::move(out));
    return record_evaluation(v);
  }

  double apply_heuristic2(int h, std::size_t src1, std::size_t src2,
                          std::size_t dst) override {
    require_instance();
    const HeuristicDescriptor& d = descriptor(h);
    if (d.arity() != 2)
      raise(Errc::WrongArity, "heuristic " + std::to_string(h) +
                                  " takes one parent; use apply_heuristic");
    Solution out = apply_binary(h, memory_.at(src1), memory_.at(src2));
    double v = solution_value(out);
    memory_.put(dst, std::move(out));
    return record_evaluation(v);
  }

  void copy_solution(std::size_t src, std::size_t dst) override {
    require_instance();
    if (src == dst) {
      memory_.at(src);  // still validates the slot
      return;
    }
    memory_.copy(src, dst);
  }

  double get_function_value(std::size_t slot) const override {
    require_instance();
    return solution_value(memory_.at(slot));
  }

  // Test and harness access outside the barrier.
  const Solution& solution_at(std::size_t slot) const { return memory_.at(slot); }
  void put_solution(std::size_t slot, Solution s) { memory_.put(slot, std::move(s)); }

 protected:
  DomainBase() { memory_.resize(kDefaultMemorySize); }

  virtual Solution initial_solution() = 0;
  virtual double solution_value(const Solution& s) const = 0;
  virtual Solution apply_unary(int h, const Solution& src) = 0;
  virtual Solution apply_binary(int h, const Solution& p1, const Solution& p2) = 0;

  const HeuristicDescriptor& descriptor(int h) const {
    const auto& catalog = heuristics();
    if (h < 0 || static_cast<std::size_t>(h) >= catalog.size())
      raise(Errc::IndexOutOfRange, "heuristic id " + std::to_string(h));
    return catalog[static_cast<std::size_t>(h)];
  }

  void require_instance() const {
    if (!loaded_) raise(Errc::NoInstanceLoaded, std::string(name()) + " domain");
  }

  // Called by concrete loaders; wipes solutions tied to the previous instance.
  void on_instance_loaded(std::string id) {
    loaded_ = true;
    instance_id_ = std::move(id);
    memory_.clear_contents();
    reset_run_stats();
  }

 private:
  SolutionMemory<Solution> memory_;
  bool loaded_ = false;
  std::string instance_id_;
};

}  // namespace xdhh
