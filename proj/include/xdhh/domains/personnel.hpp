#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "xdhh/core/io_util.hpp"
#include "xdhh/core/problem_domain.hpp"

namespace xdhh {

struct ShiftRequest {
  int employee = 0;
  int day = 0;
  int shift = -1;  // -1 means any shift of that day
  long long weight = 0;
  bool on = true;  // on-request: wants to work; off-request: wants the day free
};

struct RosterInstance {
  int employees = 0;
  int days = 0;
  int shift_types = 0;
  std::vector<std::vector<long long>> cover;  // cover[day][shift]
  long long cover_weight = 0;
  std::vector<ShiftRequest> requests;
  int max_shifts = 0;
  int min_shifts = 0;
  long long workload_weight = 0;
  int max_consecutive = 1;
  long long consecutive_weight = 0;
  std::vector<std::pair<int, int>> forbidden_successions;
  long long succession_weight = 0;

  void validate() const {
    if (employees <= 0 || days <= 0 || shift_types <= 0)
      raise(Errc::InvalidArgument, "employees, days and shift_types must be positive");
    if (static_cast<int>(cover.size()) != days)
      raise(Errc::InvalidArgument, "cover must have one row per day");
    for (const auto& row : cover) {
      if (static_cast<int>(row.size()) != shift_types)
        raise(Errc::InvalidArgument, "cover rows must have one entry per shift type");
      for (long long c : row)
        if (c < 0) raise(Errc::InvalidArgument, "cover requirements must be non-negative");
    }
    for (const auto& r : requests) {
      if (r.employee < 0 || r.employee >= employees)
        raise(Errc::InvalidArgument, "request employee out of range");
      if (r.day < 0 || r.day >= days) raise(Errc::InvalidArgument, "request day out of range");
      if (r.shift < -1 || r.shift >= shift_types)
        raise(Errc::InvalidArgument, "request shift out of range");
      if (r.weight < 0) raise(Errc::InvalidArgument, "request weights must be non-negative");
    }
    if (min_shifts < 0 || max_shifts < min_shifts || max_shifts > days)
      raise(Errc::InvalidArgument, "need 0 <= min_shifts <= max_shifts <= days");
    if (max_consecutive < 1) raise(Errc::InvalidArgument, "max_consecutive must be positive");
    if (cover_weight < 0 || workload_weight < 0 || consecutive_weight < 0 ||
        succession_weight < 0)
      raise(Errc::InvalidArgument, "weights must be non-negative");
    for (auto [a, b] : forbidden_successions)
      if (a < 0 || a >= shift_types || b < 0 || b >= shift_types)
        raise(Errc::InvalidArgument, "forbidden succession shift out of range");
  }
};

inline RosterInstance parse_roster_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::MalformedHeader, std::string("roster json: ") + e.what());
  }
  RosterInstance inst;
  try {
    inst.employees = j.at("employees").get<int>();
    inst.days = j.at("days").get<int>();
    inst.shift_types = j.at("shift_types").get<int>();
    inst.cover = j.at("cover").get<std::vector<std::vector<long long>>>();
    inst.cover_weight = j.at("cover_weight").get<long long>();
    for (const auto& r : j.value("requests", nlohmann::json::array())) {
      ShiftRequest req;
      req.employee = r.at("employee").get<int>();
      req.day = r.at("day").get<int>();
      req.shift = r.value("shift", -1);
      req.weight = r.at("weight").get<long long>();
      req.on = r.at("on").get<bool>();
      inst.requests.push_back(req);
    }
    inst.max_shifts = j.at("max_shifts").get<int>();
    inst.min_shifts = j.at("min_shifts").get<int>();
    inst.workload_weight = j.at("workload_weight").get<long long>();
    inst.max_consecutive = j.at("max_consecutive").get<int>();
    inst.consecutive_weight = j.at("consecutive_weight").get<long long>();
    for (const auto& s : j.value("forbidden_successions", nlohmann::json::array()))
      inst.forbidden_successions.emplace_back(s.at(0).get<int>(), s.at(1).get<int>());
    inst.succession_weight = j.at("succession_weight").get<long long>();
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::MalformedHeader, std::string("roster json: ") + e.what());
  }
  inst.validate();
  return inst;
}

inline std::string to_roster_json(const RosterInstance& inst) {
  nlohmann::json j;
  j["employees"] = inst.employees;
  j["days"] = inst.days;
  j["shift_types"] = inst.shift_types;
  j["cover"] = inst.cover;
  j["cover_weight"] = inst.cover_weight;
  j["requests"] = nlohmann::json::array();
  for (const auto& r : inst.requests)
    j["requests"].push_back({{"employee", r.employee},
                             {"day", r.day},
                             {"shift", r.shift},
                             {"weight", r.weight},
                             {"on", r.on}});
  j["max_shifts"] = inst.max_shifts;
  j["min_shifts"] = inst.min_shifts;
  j["workload_weight"] = inst.workload_weight;
  j["max_consecutive"] = inst.max_consecutive;
  j["consecutive_weight"] = inst.consecutive_weight;
  j["forbidden_successions"] = nlohmann::json::array();
  for (auto [a, b] : inst.forbidden_successions)
    j["forbidden_successions"].push_back({a, b});
  j["succession_weight"] = inst.succession_weight;
  return j.dump(2) + "\n";
}

inline RosterInstance generate_roster_instance(int employees, int days, int shift_types,
                                               std::uint64_t seed) {
  if (employees <= 0 || days <= 0 || shift_types <= 0)
    raise(Errc::InvalidArgument, "dimensions must be positive");
  Rng rng(seed);
  RosterInstance inst;
  inst.employees = employees;
  inst.days = days;
  inst.shift_types = shift_types;
  long long base = employees / (shift_types + 2);
  inst.cover.assign(static_cast<std::size_t>(days),
                    std::vector<long long>(static_cast<std::size_t>(shift_types), 0));
  for (auto& row : inst.cover)
    for (auto& c : row) c = std::max<long long>(0, base + rng.next_int(-1, 1));
  inst.cover_weight = 10;
  int wanted = employees * days / 10;
  for (int i = 0; i < wanted; ++i) {
    ShiftRequest r;
    r.employee = static_cast<int>(rng.next_index(static_cast<std::size_t>(employees)));
    r.day = static_cast<int>(rng.next_index(static_cast<std::size_t>(days)));
    r.shift = static_cast<int>(rng.next_int(-1, shift_types - 1));
    r.weight = rng.next_int(1, 5);
    r.on = rng.next_bool();
    inst.requests.push_back(r);
  }
  inst.max_shifts = static_cast<int>(std::ceil(0.7 * days));
  inst.min_shifts = static_cast<int>(std::floor(0.3 * days));
  inst.workload_weight = 5;
  inst.max_consecutive = 5;
  inst.consecutive_weight = 3;
  inst.forbidden_successions = {{shift_types - 1, 0}};
  inst.succession_weight = 8;
  inst.validate();
  return inst;
}

// Instance plus the per-employee request index shared by all rosters.
struct RosterContext {
  RosterInstance inst;
  std::vector<std::vector<int>> requests_of;  // request ids per employee

  explicit RosterContext(RosterInstance i) : inst(std::move(i)) {
    requests_of.resize(static_cast<std::size_t>(inst.employees));
    for (std::size_t r = 0; r < inst.requests.size(); ++r)
      requests_of[static_cast<std::size_t>(inst.requests[r].employee)].push_back(
          static_cast<int>(r));
  }
};

// A (possibly partial) roster: cell(e, d) holds a shift type or -1. The
// penalty is maintained incrementally; a cell write costs O(days) for the
// employee's row terms plus O(1) for cover.
class Roster {
 public:
  explicit Roster(std::shared_ptr<const RosterContext> ctx) : ctx_(std::move(ctx)) {
    const auto& inst = ctx_->inst;
    cells_.assign(static_cast<std::size_t>(inst.employees * inst.days), -1);
    cover_count_.assign(static_cast<std::size_t>(inst.days),
                        std::vector<long long>(static_cast<std::size_t>(inst.shift_types), 0));
    cover_penalty_ = 0;
    for (const auto& row : inst.cover)
      for (long long req : row) cover_penalty_ += inst.cover_weight * req;
    row_penalty_.assign(static_cast<std::size_t>(inst.employees), 0);
    for (int e = 0; e < inst.employees; ++e)
      row_penalty_[static_cast<std::size_t>(e)] = compute_row(e);
    rows_sum_ = std::accumulate(row_penalty_.begin(), row_penalty_.end(), 0LL);
  }

  const RosterInstance& instance() const { return ctx_->inst; }

  int cell(int e, int d) const { return cells_[index(e, d)]; }

  long long penalty() const { return cover_penalty_ + rows_sum_; }

  void set_cell(int e, int d, int s) {
    int old = cells_[index(e, d)];
    if (old == s) return;
    auto du = static_cast<std::size_t>(d);
    if (old >= 0) {
      auto su = static_cast<std::size_t>(old);
      cover_penalty_ -= cover_term(d, old);
      --cover_count_[du][su];
      cover_penalty_ += cover_term(d, old);
    }
    if (s >= 0) {
      auto su = static_cast<std::size_t>(s);
      cover_penalty_ -= cover_term(d, s);
      ++cover_count_[du][su];
      cover_penalty_ += cover_term(d, s);
    }
    cells_[index(e, d)] = s;
    long long fresh = compute_row(e);
    rows_sum_ += fresh - row_penalty_[static_cast<std::size_t>(e)];
    row_penalty_[static_cast<std::size_t>(e)] = fresh;
  }

  int assigned_count() const {
    int c = 0;
    for (int v : cells_) c += v >= 0;
    return c;
  }

  bool operator==(const Roster& other) const { return cells_ == other.cells_; }

 private:
  std::size_t index(int e, int d) const {
    return static_cast<std::size_t>(e) * static_cast<std::size_t>(ctx_->inst.days) +
           static_cast<std::size_t>(d);
  }

  long long cover_term(int d, int s) const {
    const auto& inst = ctx_->inst;
    long long have = cover_count_[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)];
    long long need = inst.cover[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)];
    return inst.cover_weight * std::llabs(have - need);
  }

  // Requests, workload, consecutive-run and succession terms of one row.
  long long compute_row(int e) const {
    const auto& inst = ctx_->inst;
    long long pen = 0;
    for (int rid : ctx_->requests_of[static_cast<std::size_t>(e)]) {
      const ShiftRequest& r = inst.requests[static_cast<std::size_t>(rid)];
      int have = cells_[index(e, r.day)];
      bool matches = r.shift < 0 ? have >= 0 : have == r.shift;
      if (r.on != matches) pen += r.weight;
    }
    int work = 0, run = 0;
    for (int d = 0; d < inst.days; ++d) {
      int have = cells_[index(e, d)];
      if (have >= 0) {
        ++work;
        ++run;
      } else {
        if (run > inst.max_consecutive)
          pen += inst.consecutive_weight * (run - inst.max_consecutive);
        run = 0;
      }
      if (d > 0) {
        int prev = cells_[index(e, d - 1)];
        if (prev >= 0 && have >= 0)
          for (auto [a, b] : inst.forbidden_successions)
            if (prev == a && have == b) pen += inst.succession_weight;
      }
    }
    if (run > inst.max_consecutive)
      pen += inst.consecutive_weight * (run - inst.max_consecutive);
    if (work > inst.max_shifts) pen += inst.workload_weight * (work - inst.max_shifts);
    if (work < inst.min_shifts) pen += inst.workload_weight * (inst.min_shifts - work);
    return pen;
  }

  std::shared_ptr<const RosterContext> ctx_;
  std::vector<int> cells_;
  std::vector<std::vector<long long>> cover_count_;
  std::vector<long long> row_penalty_;
  long long cover_penalty_ = 0;
  long long rows_sum_ = 0;
};

// Personnel rostering domain minimising a weighted soft-constraint penalty.
// Heuristics
//   0 unassign (M)
//   1 rebuild-some (RR)  2 rebuild-many (RR)  3 rebuild-one (RR)
//   4 greedy-add (LS)  5 swap-between (LS)  6 swap-within (LS)
//   7 eject-chain (LS)  8 eject-chain-rebuild (LS)
//   9 best-assignments (X)  10 cover-alternate (X)  11 intersect (X)
class PersonnelDomain : public DomainBase<Roster> {
 public:
  PersonnelDomain()
      : catalog_{{0, HeuristicKind::Mutation, "unassign"},
                 {1, HeuristicKind::RuinRecreate, "rebuild-some"},
                 {2, HeuristicKind::RuinRecreate, "rebuild-many"},
                 {3, HeuristicKind::RuinRecreate, "rebuild-one"},
                 {4, HeuristicKind::LocalSearch, "greedy-add"},
                 {5, HeuristicKind::LocalSearch, "swap-between"},
                 {6, HeuristicKind::LocalSearch, "swap-within"},
                 {7, HeuristicKind::LocalSearch, "eject-chain"},
                 {8, HeuristicKind::LocalSearch, "eject-chain-rebuild"},
                 {9, HeuristicKind::Crossover, "best-assignments"},
                 {10, HeuristicKind::Crossover, "cover-alternate"},
                 {11, HeuristicKind::Crossover, "intersect"}} {}

  std::string_view name() const override { return "personnel"; }
  const std::vector<HeuristicDescriptor>& heuristics() const override { return catalog_; }

  void load_instance(const std::string& path) override {
    set_instance(parse_roster_instance(read_file(path)), path);
  }

  void set_instance(RosterInstance inst, std::string id = "inline") {
    inst.validate();
    ctx_ = std::make_shared<const RosterContext>(std::move(inst));
    on_instance_loaded(std::move(id));
  }

  const RosterInstance& instance() const {
    require_instance();
    return ctx_->inst;
  }

 protected:
  Roster initial_solution() override {
    Roster r(ctx_);
    greedy_add(r);
    return r;
  }

  double solution_value(const Roster& s) const override {
    return static_cast<double>(s.penalty());
  }

  Roster apply_unary(int h, const Roster& src) override {
    Roster out = src;
    const auto& inst = ctx_->inst;
    switch (h) {
      case 0: unassign_random(out); break;
      case 1:
        rebuild_random(out, static_cast<int>(std::lround(
                                parameters().intensity_of_mutation() * 4.0)) + 2);
        break;
      case 2:
        rebuild_random(out, static_cast<int>(std::lround(
                                parameters().intensity_of_mutation() *
                                static_cast<double>(inst.employees))));
        break;
      case 3: rebuild_random(out, 1); break;
      case 4: greedy_add(out); break;
      case 5: block_swap(out, /*between=*/true); break;
      case 6: block_swap(out, /*between=*/false); break;
      case 7: eject_chain(out, /*rebuild_rows=*/false); break;
      case 8: eject_chain(out, /*rebuild_rows=*/true); break;
      default: break;
    }
    return out;
  }

  Roster apply_binary(int h, const Roster& p1, const Roster& p2) override {
    switch (h) {
      case 9: return best_assignments_crossover(p1, p2);
      case 10: return cover_alternate_crossover(p1, p2);
      default: return intersect_crossover(p1, p2);
    }
  }

 private:
  // Clear ceil(alpha * assigned) randomly chosen assignments.
  void unassign_random(Roster& r) {
    const auto& inst = ctx_->inst;
    std::vector<std::pair<int, int>> assigned;
    for (int e = 0; e < inst.employees; ++e)
      for (int d = 0; d < inst.days; ++d)
        if (r.cell(e, d) >= 0) assigned.emplace_back(e, d);
    if (assigned.empty()) return;
    auto k = static_cast<std::size_t>(
        std::ceil(parameters().intensity_of_mutation() *
                  static_cast<double>(assigned.size())));
    for (auto pos : sample_distinct(rng(), assigned.size(), k))
      r.set_cell(assigned[pos].first, assigned[pos].second, -1);
  }

  // Clear x random employees' rows and rebuild each: specific on-requests
  // first, then the remaining days in random order, taking the first shift
  // that strictly improves the penalty.
  void rebuild_random(Roster& r, int x) {
    const auto& inst = ctx_->inst;
    x = std::min(x, inst.employees);
    if (x <= 0) return;
    for (auto eu : sample_distinct(rng(), static_cast<std::size_t>(inst.employees),
                                   static_cast<std::size_t>(x)))
      rebuild_row(r, static_cast<int>(eu));
  }

  void rebuild_row(Roster& r, int e) {
    const auto& inst = ctx_->inst;
    for (int d = 0; d < inst.days; ++d) r.set_cell(e, d, -1);
    for (int rid : ctx_->requests_of[static_cast<std::size_t>(e)]) {
      const ShiftRequest& req = inst.requests[static_cast<std::size_t>(rid)];
      if (req.on && req.shift >= 0 && r.cell(e, req.day) < 0)
        r.set_cell(e, req.day, req.shift);
    }
    std::vector<int> days(static_cast<std::size_t>(inst.days));
    std::iota(days.begin(), days.end(), 0);
    rng().shuffle(days.begin(), days.end());
    for (int d : days) {
      if (r.cell(e, d) >= 0) continue;
      long long before = r.penalty();
      for (int s = 0; s < inst.shift_types; ++s) {
        r.set_cell(e, d, s);
        if (r.penalty() < before) break;
        r.set_cell(e, d, -1);
      }
    }
  }

  // Add-only pass over all empty cells in random order, repeated until a
  // full pass assigns nothing.
  void greedy_add(Roster& r) {
    const auto& inst = ctx_->inst;
    std::vector<std::pair<int, int>> cells;
    for (int e = 0; e < inst.employees; ++e)
      for (int d = 0; d < inst.days; ++d) cells.emplace_back(e, d);
    bool changed = true;
    while (changed) {
      changed = false;
      rng().shuffle(cells.begin(), cells.end());
      for (auto [e, d] : cells) {
        if (r.cell(e, d) >= 0) continue;
        long long before = r.penalty();
        for (int s = 0; s < inst.shift_types; ++s) {
          r.set_cell(e, d, s);
          if (r.penalty() < before) {
            changed = true;
            break;
          }
          r.set_cell(e, d, -1);
        }
      }
    }
  }

  // Swap short day blocks, between two employees or within one. Accepts
  // improving or equal outcomes; budget ceil((1+9*beta)*E*D) attempts,
  // early stop after E*D attempts without strict improvement.
  void block_swap(Roster& r, bool between) {
    const auto& inst = ctx_->inst;
    if (between && inst.employees < 2) return;
    auto cells = static_cast<std::uint64_t>(inst.employees) *
                 static_cast<std::uint64_t>(inst.days);
    auto budget = static_cast<std::uint64_t>(
        std::ceil((1.0 + 9.0 * parameters().depth_of_search()) * static_cast<double>(cells)));
    std::uint64_t fails = 0;
    for (std::uint64_t attempt = 0; attempt < budget && fails < cells; ++attempt) {
      int len = static_cast<int>(rng().next_int(1, 3));
      len = std::min(len, inst.days);
      long long before = r.penalty();
      bool did = between ? swap_between(r, len) : swap_within(r, len);
      if (!did) {
        ++fails;
        continue;
      }
      long long after = r.penalty();
      if (after > before) {
        // The swap helpers are their own inverses with the same arguments.
        if (between)
          swap_between(r, len, /*redo=*/true);
        else
          swap_within(r, len, /*redo=*/true);
        ++fails;
      } else {
        fails = after < before ? 0 : fails + 1;
      }
    }
  }

  bool swap_between(Roster& r, int len, bool redo = false) {
    const auto& inst = ctx_->inst;
    if (!redo) {
      swap_e1_ = static_cast<int>(rng().next_index(static_cast<std::size_t>(inst.employees)));
      swap_e2_ = swap_e1_;
      while (swap_e2_ == swap_e1_)
        swap_e2_ = static_cast<int>(rng().next_index(static_cast<std::size_t>(inst.employees)));
      swap_d1_ = static_cast<int>(rng().next_index(
          static_cast<std::size_t>(inst.days - len + 1)));
    }
    for (int i = 0; i < len; ++i) {
      int a = r.cell(swap_e1_, swap_d1_ + i);
      int b = r.cell(swap_e2_, swap_d1_ + i);
      r.set_cell(swap_e1_, swap_d1_ + i, b);
      r.set_cell(swap_e2_, swap_d1_ + i, a);
    }
    return true;
  }

  bool swap_within(Roster& r, int len, bool redo = false) {
    const auto& inst = ctx_->inst;
    if (!redo) {
      if (inst.days < 2 * len) return false;
      swap_e1_ = static_cast<int>(rng().next_index(static_cast<std::size_t>(inst.employees)));
      swap_d1_ = static_cast<int>(rng().next_index(
          static_cast<std::size_t>(inst.days - 2 * len + 1)));
      swap_d2_ = swap_d1_ + len +
                 static_cast<int>(rng().next_index(
                     static_cast<std::size_t>(inst.days - swap_d1_ - 2 * len + 1)));
    }
    for (int i = 0; i < len; ++i) {
      int a = r.cell(swap_e1_, swap_d1_ + i);
      int b = r.cell(swap_e1_, swap_d2_ + i);
      r.set_cell(swap_e1_, swap_d1_ + i, b);
      r.set_cell(swap_e1_, swap_d2_ + i, a);
    }
    return true;
  }

  // Move an assignment to the best receiver on its day; a displaced shift
  // cascades for up to 1 + floor(beta*9) steps. The chain keeps its best
  // prefix if that beats the starting penalty and reverts otherwise.
  void eject_chain(Roster& r, bool rebuild_rows) {
    const auto& inst = ctx_->inst;
    auto cells = static_cast<double>(inst.employees) * static_cast<double>(inst.days);
    auto starts = static_cast<int>(std::ceil(parameters().depth_of_search() * cells));
    int max_len = 1 + static_cast<int>(parameters().depth_of_search() * 9.0);
    for (int s = 0; s < starts; ++s) {
      std::vector<std::pair<int, int>> assigned;
      for (int e = 0; e < inst.employees; ++e)
        for (int d = 0; d < inst.days; ++d)
          if (r.cell(e, d) >= 0) assigned.emplace_back(e, d);
      if (assigned.empty()) return;
      auto [e0, day] = assigned[rng().next_index(assigned.size())];
      long long base = r.penalty();
      Roster backup = r;
      Roster best = r;
      long long best_pen = base;
      int shift = r.cell(e0, day);
      r.set_cell(e0, day, -1);
      int holder = e0;
      for (int step = 0; step < max_len; ++step) {
        int receiver = -1;
        long long receiver_pen = 0;
        for (int e = 0; e < inst.employees; ++e) {
          if (e == holder) continue;
          int displaced = r.cell(e, day);
          if (displaced == shift) continue;
          r.set_cell(e, day, shift);
          long long pen = r.penalty();
          r.set_cell(e, day, displaced);
          if (receiver < 0 || pen < receiver_pen) {
            receiver = e;
            receiver_pen = pen;
          }
        }
        if (receiver < 0) break;
        int displaced = r.cell(receiver, day);
        r.set_cell(receiver, day, shift);
        if (rebuild_rows) fill_row_gaps(r, receiver);
        if (r.penalty() < best_pen) {
          best_pen = r.penalty();
          best = r;
        }
        if (displaced < 0) break;
        shift = displaced;
        holder = receiver;
      }
      r = best_pen < base ? best : backup;
    }
  }

  // Single add-only pass over one employee's empty days in random order.
  void fill_row_gaps(Roster& r, int e) {
    const auto& inst = ctx_->inst;
    std::vector<int> days(static_cast<std::size_t>(inst.days));
    std::iota(days.begin(), days.end(), 0);
    rng().shuffle(days.begin(), days.end());
    for (int d : days) {
      if (r.cell(e, d) >= 0) continue;
      long long before = r.penalty();
      for (int s = 0; s < inst.shift_types; ++s) {
        r.set_cell(e, d, s);
        if (r.penalty() < before) break;
        r.set_cell(e, d, -1);
      }
    }
  }

  // Rank each parent's assignments by how much removing them would hurt that
  // parent; the child adopts the top x = 4 + round((1-alpha)*16) from each,
  // parent 1 first, skipping already-filled cells.
  Roster best_assignments_crossover(const Roster& p1, const Roster& p2) {
    auto x = static_cast<std::size_t>(
        4 + std::lround((1.0 - parameters().intensity_of_mutation()) * 16.0));
    Roster child(ctx_);
    for (const Roster* parent : {&p1, &p2}) {
      struct Scored {
        long long loss;
        int e, d, s;
      };
      std::vector<Scored> scored;
      Roster probe = *parent;
      const auto& inst = ctx_->inst;
      for (int e = 0; e < inst.employees; ++e)
        for (int d = 0; d < inst.days; ++d) {
          int s = probe.cell(e, d);
          if (s < 0) continue;
          long long with = probe.penalty();
          probe.set_cell(e, d, -1);
          long long without = probe.penalty();
          probe.set_cell(e, d, s);
          scored.push_back({without - with, e, d, s});
        }
      std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        if (a.loss != b.loss) return a.loss > b.loss;
        if (a.e != b.e) return a.e < b.e;
        return a.d < b.d;
      });
      if (scored.size() > x) scored.resize(x);
      for (const auto& sc : scored)
        if (child.cell(sc.e, sc.d) < 0) child.set_cell(sc.e, sc.d, sc.s);
    }
    return child;
  }

  // Shared assignments first, then alternate the parents' remaining ones in
  // row-major order, skipping any whose day/shift cover is already met.
  Roster cover_alternate_crossover(const Roster& p1, const Roster& p2) {
    const auto& inst = ctx_->inst;
    Roster child = intersect_crossover(p1, p2);
    std::vector<std::vector<long long>> have(
        static_cast<std::size_t>(inst.days),
        std::vector<long long>(static_cast<std::size_t>(inst.shift_types), 0));
    for (int e = 0; e < inst.employees; ++e)
      for (int d = 0; d < inst.days; ++d)
        if (child.cell(e, d) >= 0)
          ++have[static_cast<std::size_t>(d)][static_cast<std::size_t>(child.cell(e, d))];
    std::vector<std::pair<int, int>> rest1, rest2;
    for (int e = 0; e < inst.employees; ++e)
      for (int d = 0; d < inst.days; ++d) {
        if (p1.cell(e, d) >= 0 && child.cell(e, d) < 0) rest1.emplace_back(e, d);
        if (p2.cell(e, d) >= 0 && child.cell(e, d) < 0) rest2.emplace_back(e, d);
      }
    std::size_t i1 = 0, i2 = 0;
    bool from1 = true;
    while (i1 < rest1.size() || i2 < rest2.size()) {
      const Roster* parent = from1 ? &p1 : &p2;
      std::vector<std::pair<int, int>>* rest = from1 ? &rest1 : &rest2;
      std::size_t* i = from1 ? &i1 : &i2;
      from1 = !from1;
      if (*i >= rest->size()) continue;
      auto [e, d] = (*rest)[(*i)++];
      int s = parent->cell(e, d);
      if (child.cell(e, d) >= 0) continue;
      auto du = static_cast<std::size_t>(d);
      auto su = static_cast<std::size_t>(s);
      if (have[du][su] >= inst.cover[du][su]) continue;
      child.set_cell(e, d, s);
      ++have[du][su];
    }
    return child;
  }

  Roster intersect_crossover(const Roster& p1, const Roster& p2) {
    const auto& inst = ctx_->inst;
    Roster child(ctx_);
    for (int e = 0; e < inst.employees; ++e)
      for (int d = 0; d < inst.days; ++d)
        if (p1.cell(e, d) >= 0 && p1.cell(e, d) == p2.cell(e, d))
          child.set_cell(e, d, p1.cell(e, d));
    return child;
  }

  std::vector<HeuristicDescriptor> catalog_;
  std::shared_ptr<const RosterContext> ctx_;
  int swap_e1_ = 0, swap_e2_ = 0, swap_d1_ = 0, swap_d2_ = 0;
};

}  // namespace xdhh
