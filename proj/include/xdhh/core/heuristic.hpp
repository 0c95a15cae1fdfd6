#pragma once

#include <string>

namespace xdhh {

enum class HeuristicKind { Mutation, RuinRecreate, LocalSearch, Crossover };

inline const char* kind_name(HeuristicKind k) {
  switch (k) {
    case HeuristicKind::Mutation: return "mutation";
    case HeuristicKind::RuinRecreate: return "ruin_recreate";
    case HeuristicKind::LocalSearch: return "local_search";
    case HeuristicKind::Crossover: return "crossover";
  }
  return "unknown";
}

constexpr int arity_of(HeuristicKind k) { return k == HeuristicKind::Crossover ? 2 : 1; }

struct HeuristicDescriptor {
  int id;
  HeuristicKind kind;
  std::string name;

  int arity() const { return arity_of(kind); }
};

}  // namespace xdhh
