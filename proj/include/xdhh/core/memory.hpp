#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xdhh/core/errors.hpp"

namespace xdhh {

// Indexed population of solutions. Slots start uninitialized; resizing keeps
// the first min(old, new) slots intact.
template <class Solution>
class SolutionMemory {
 public:
  std::size_t size() const { return slots_.size(); }

  void resize(std::size_t n) { slots_.resize(n); }

  void clear_contents() {
    for (auto& s : slots_) s.reset();
  }

  bool initialized(std::size_t i) const {
    check_index(i);
    return slots_[i].has_value();
  }

  const Solution& at(std::size_t i) const {
    check_index(i);
    if (!slots_[i])
      raise(Errc::UninitializedSlot, "slot " + std::to_string(i) + " holds no solution");
    return *slots_[i];
  }

  Solution& at(std::size_t i) {
    return const_cast<Solution&>(static_cast<const SolutionMemory*>(this)->at(i));
  }

  void put(std::size_t i, Solution s) {
    check_index(i);
    slots_[i] = std::move(s);
  }

  void copy(std::size_t src, std::size_t dst) {
    Solution s = at(src);
    put(dst, std::move(s));
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= slots_.size())
      raise(Errc::IndexOutOfRange, "slot " + std::to_string(i) + " >= memory size " +
                                       std::to_string(slots_.size()));
  }

  std::vector<std::optional<Solution>> slots_;
};

}  // namespace xdhh
