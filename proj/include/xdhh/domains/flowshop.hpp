#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "xdhh/core/io_util.hpp"
#include "xdhh/core/problem_domain.hpp"

namespace xdhh {

struct FlowShopInstance {
  int jobs = 0;
  int machines = 0;
  std::vector<std::vector<long long>> times;  // times[job][machine]

  void validate() const {
    if (jobs <= 0 || machines <= 0)
      raise(Errc::InvalidArgument, "jobs and machines must be positive");
    if (static_cast<int>(times.size()) != jobs)
      raise(Errc::InvalidArgument, "expected one row per job");
    for (const auto& row : times) {
      if (static_cast<int>(row.size()) != machines)
        raise(Errc::InvalidArgument, "expected one time per machine");
      for (long long t : row)
        if (t < 0) raise(Errc::InvalidArgument, "processing times must be non-negative");
    }
  }
};

// Native format: "n m" then n rows of m processing times (job-major). Text
// containing letters is treated as the Taillard benchmark layout instead:
// a header of five numbers (jobs, machines, seed, upper bound, lower bound)
// followed by machine-major times that get transposed on load.
inline FlowShopInstance parse_flowshop_instance(const std::string& text) {
  bool taillard = std::any_of(text.begin(), text.end(),
                              [](unsigned char c) { return std::isalpha(c) != 0; });
  std::vector<long long> nums;
  std::istringstream in(text);
  if (taillard) {
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used == tok.size()) nums.push_back(v);
      } catch (const std::exception&) {
      }
    }
  } else {
    long long v = 0;
    while (in >> v) nums.push_back(v);
    if (!in.eof()) raise(Errc::MalformedHeader, "non-numeric token in instance");
  }

  std::size_t at = 0;
  auto next = [&](const char* what) {
    if (at >= nums.size())
      raise(Errc::MalformedHeader, std::string("missing ") + what);
    return nums[at++];
  };
  FlowShopInstance inst;
  inst.jobs = static_cast<int>(next("job count"));
  inst.machines = static_cast<int>(next("machine count"));
  if (inst.jobs <= 0 || inst.machines <= 0)
    raise(Errc::MalformedHeader, "non-positive dimensions");
  if (taillard)
    for (int skip = 0; skip < 3; ++skip) next("header field");
  inst.times.assign(static_cast<std::size_t>(inst.jobs),
                    std::vector<long long>(static_cast<std::size_t>(inst.machines), 0));
  if (taillard) {
    for (int m = 0; m < inst.machines; ++m)
      for (int j = 0; j < inst.jobs; ++j)
        inst.times[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] =
            next("processing time");
  } else {
    for (int j = 0; j < inst.jobs; ++j)
      for (int m = 0; m < inst.machines; ++m)
        inst.times[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] =
            next("processing time");
  }
  inst.validate();
  return inst;
}

inline std::string to_flowshop_text(const FlowShopInstance& inst) {
  std::string out = std::to_string(inst.jobs) + " " + std::to_string(inst.machines) + "\n";
  for (const auto& row : inst.times) {
    for (std::size_t m = 0; m < row.size(); ++m)
      out += (m ? " " : "") + std::to_string(row[m]);
    out += "\n";
  }
  return out;
}

inline FlowShopInstance generate_flowshop_instance(int jobs, int machines, long long pmax,
                                                   std::uint64_t seed) {
  if (jobs <= 0 || machines <= 0) raise(Errc::InvalidArgument, "dimensions must be positive");
  if (pmax <= 0) raise(Errc::InvalidArgument, "pmax must be positive");
  Rng rng(seed);
  FlowShopInstance inst;
  inst.jobs = jobs;
  inst.machines = machines;
  inst.times.assign(static_cast<std::size_t>(jobs),
                    std::vector<long long>(static_cast<std::size_t>(machines), 0));
  for (auto& row : inst.times)
    for (auto& t : row) t = rng.next_int(1, pmax);
  return inst;
}

// Makespan of a (possibly partial) job sequence: each job flows through the
// machines in order, a machine handles one job at a time.
inline long long flowshop_makespan(const FlowShopInstance& inst, const std::vector<int>& seq) {
  std::vector<long long> done(static_cast<std::size_t>(inst.machines), 0);
  for (int job : seq) {
    const auto& row = inst.times[static_cast<std::size_t>(job)];
    done[0] += row[0];
    for (std::size_t m = 1; m < done.size(); ++m)
      done[m] = std::max(done[m], done[m - 1]) + row[m];
  }
  return done.empty() ? 0 : done.back();
}

// Makespans that result from inserting `job` at every position of `seq`,
// computed with the forward/backward completion arrays so the whole scan is
// one pass instead of one evaluation per position.
inline std::vector<long long> insertion_makespans(const FlowShopInstance& inst,
                                                  const std::vector<int>& seq, int job) {
  auto L = seq.size();
  auto M = static_cast<std::size_t>(inst.machines);
  // head[i][m]: completion of seq[i] on machine m.
  std::vector<std::vector<long long>> head(L, std::vector<long long>(M, 0));
  for (std::size_t i = 0; i < L; ++i) {
    const auto& row = inst.times[static_cast<std::size_t>(seq[i])];
    for (std::size_t m = 0; m < M; ++m) {
      long long left = m ? head[i][m - 1] : 0;
      long long above = i ? head[i - 1][m] : 0;
      head[i][m] = std::max(left, above) + row[m];
    }
  }
  // tail[i][m]: time needed from the start of seq[i] on machine m to finish
  // the remaining schedule (the reversed-problem mirror of head).
  std::vector<std::vector<long long>> tail(L, std::vector<long long>(M, 0));
  for (std::size_t ri = 0; ri < L; ++ri) {
    std::size_t i = L - 1 - ri;
    const auto& row = inst.times[static_cast<std::size_t>(seq[i])];
    for (std::size_t rm = 0; rm < M; ++rm) {
      std::size_t m = M - 1 - rm;
      long long right = m + 1 < M ? tail[i][m + 1] : 0;
      long long below = i + 1 < L ? tail[i + 1][m] : 0;
      tail[i][m] = std::max(right, below) + row[m];
    }
  }
  const auto& jr = inst.times[static_cast<std::size_t>(job)];
  std::vector<long long> out(L + 1, 0);
  std::vector<long long> f(M, 0);
  for (std::size_t pos = 0; pos <= L; ++pos) {
    long long value = 0;
    for (std::size_t m = 0; m < M; ++m) {
      long long left = m ? f[m - 1] : 0;
      long long above = pos ? head[pos - 1][m] : 0;
      f[m] = std::max(left, above) + jr[m];
      value = std::max(value, f[m] + (pos < L ? tail[pos][m] : 0));
    }
    out[pos] = value;
  }
  return out;
}

// Insert at the position with minimal resulting makespan, earliest position
// on ties. Returns that makespan.
inline long long neh_insert(const FlowShopInstance& inst, std::vector<int>& seq, int job) {
  std::vector<long long> spans = insertion_makespans(inst, seq, job);
  std::size_t best = 0;
  for (std::size_t pos = 1; pos < spans.size(); ++pos)
    if (spans[pos] < spans[best]) best = pos;
  seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(best), job);
  return spans[best];
}

// Permutation flow shop domain minimising makespan. Heuristics
//   0 reinsert (M)  1 swap (M)  2 shuffle (M)  3 neh-rebuild (M)
//   4 partial-shuffle (M)  5 ruin-recreate (RR)  6 ruin-recreate-beam (RR)
//   7 steepest-reinsert (LS)  8 first-reinsert (LS)
//   9 sample-best-insert (LS)  10 sample-first-insert (LS)
//   11 ox (X)  12 pmx (X)  13 ppx (X)  14 one-point (X)
class FlowShopDomain : public DomainBase<std::vector<int>> {
 public:
  FlowShopDomain()
      : catalog_{{0, HeuristicKind::Mutation, "reinsert"},
                 {1, HeuristicKind::Mutation, "swap"},
                 {2, HeuristicKind::Mutation, "shuffle"},
                 {3, HeuristicKind::Mutation, "neh-rebuild"},
                 {4, HeuristicKind::Mutation, "partial-shuffle"},
                 {5, HeuristicKind::RuinRecreate, "ruin-recreate"},
                 {6, HeuristicKind::RuinRecreate, "ruin-recreate-beam"},
                 {7, HeuristicKind::LocalSearch, "steepest-reinsert"},
                 {8, HeuristicKind::LocalSearch, "first-reinsert"},
                 {9, HeuristicKind::LocalSearch, "sample-best-insert"},
                 {10, HeuristicKind::LocalSearch, "sample-first-insert"},
                 {11, HeuristicKind::Crossover, "ox"},
                 {12, HeuristicKind::Crossover, "pmx"},
                 {13, HeuristicKind::Crossover, "ppx"},
                 {14, HeuristicKind::Crossover, "one-point"}} {}

  std::string_view name() const override { return "flowshop"; }
  const std::vector<HeuristicDescriptor>& heuristics() const override { return catalog_; }

  void load_instance(const std::string& path) override {
    set_instance(parse_flowshop_instance(read_file(path)), path);
  }

  void set_instance(FlowShopInstance inst, std::string id = "inline") {
    inst.validate();
    inst_ = std::make_shared<const FlowShopInstance>(std::move(inst));
    on_instance_loaded(std::move(id));
  }

  const FlowShopInstance& instance() const {
    require_instance();
    return *inst_;
  }

 protected:
  // NEH construction seeded by a random insertion order.
  std::vector<int> initial_solution() override {
    std::vector<int> order(static_cast<std::size_t>(inst_->jobs));
    std::iota(order.begin(), order.end(), 0);
    rng().shuffle(order.begin(), order.end());
    std::vector<int> seq;
    seq.reserve(order.size());
    for (int job : order) neh_insert(*inst_, seq, job);
    return seq;
  }

  double solution_value(const std::vector<int>& s) const override {
    return static_cast<double>(flowshop_makespan(*inst_, s));
  }

  std::vector<int> apply_unary(int h, const std::vector<int>& src) override {
    std::vector<int> out = src;
    switch (h) {
      case 0: reinsert_random(out); break;
      case 1: swap_random(out); break;
      case 2: rng().shuffle(out.begin(), out.end()); break;
      case 3: neh_rebuild(out); break;
      case 4: partial_shuffle(out); break;
      case 5: ruin_recreate(out); break;
      case 6: ruin_recreate_beam(out); break;
      case 7: reinsert_descent(out, /*steepest=*/true); break;
      case 8: reinsert_descent(out, /*steepest=*/false); break;
      case 9: sampled_insert(out, /*first_improving=*/false); break;
      case 10: sampled_insert(out, /*first_improving=*/true); break;
      default: break;
    }
    return out;
  }

  std::vector<int> apply_binary(int h, const std::vector<int>& p1,
                                const std::vector<int>& p2) override {
    auto n = p1.size();
    if (n < 2) return p1;
    switch (h) {
      case 11: return order_crossover(p1, p2);
      case 12: return pmx_crossover(p1, p2);
      case 13: return ppx_crossover(p1, p2);
      default: return one_point_crossover(p1, p2);
    }
  }

 private:
  std::size_t n() const { return static_cast<std::size_t>(inst_->jobs); }

  void reinsert_random(std::vector<int>& perm) {
    if (perm.size() < 2) return;
    auto from = rng().next_index(perm.size());
    auto to = rng().next_index(perm.size());
    int job = perm[from];
    perm.erase(perm.begin() + static_cast<std::ptrdiff_t>(from));
    perm.insert(perm.begin() + static_cast<std::ptrdiff_t>(to), job);
  }

  void swap_random(std::vector<int>& perm) {
    if (perm.size() < 2) return;
    auto a = rng().next_index(perm.size());
    auto b = a;
    while (b == a) b = rng().next_index(perm.size());
    std::swap(perm[a], perm[b]);
  }

  void neh_rebuild(std::vector<int>& perm) {
    std::vector<int> order = perm;
    perm.clear();
    for (int job : order) neh_insert(*inst_, perm, job);
  }

  // Shuffle the jobs sitting at k = 2 + floor(alpha*(n-2)) random positions.
  void partial_shuffle(std::vector<int>& perm) {
    if (perm.size() < 2) return;
    auto k = static_cast<std::size_t>(
        2 + static_cast<long long>(parameters().intensity_of_mutation() *
                                   static_cast<double>(perm.size() - 2)));
    k = std::min(k, perm.size());
    std::vector<std::size_t> where = sample_distinct(rng(), perm.size(), k);
    std::sort(where.begin(), where.end());
    std::vector<int> jobs;
    jobs.reserve(k);
    for (auto pos : where) jobs.push_back(perm[pos]);
    rng().shuffle(jobs.begin(), jobs.end());
    for (std::size_t i = 0; i < k; ++i) perm[where[i]] = jobs[i];
  }

  std::vector<int> remove_for_ruin(std::vector<int>& perm) {
    auto l = static_cast<std::size_t>(parameters().intensity_of_mutation() *
                                      static_cast<double>(perm.size() - 1));
    std::vector<std::size_t> where = sample_distinct(rng(), perm.size(), l);
    std::sort(where.begin(), where.end());
    std::vector<int> removed;
    removed.reserve(l);
    for (auto pos : where) removed.push_back(perm[pos]);
    for (auto it = where.rbegin(); it != where.rend(); ++it)
      perm.erase(perm.begin() + static_cast<std::ptrdiff_t>(*it));
    return removed;
  }

  // Remove floor(alpha*(n-1)) jobs and greedily reinsert each at its best
  // position, in ascending order of removed position.
  void ruin_recreate(std::vector<int>& perm) {
    if (perm.size() < 2) return;
    std::vector<int> removed = remove_for_ruin(perm);
    for (int job : removed) neh_insert(*inst_, perm, job);
  }

  // Same removal, but the rebuild keeps a beam of the q best partial
  // sequences, q = floor(beta*(l-1)) + 1, and returns the best complete one.
  void ruin_recreate_beam(std::vector<int>& perm) {
    if (perm.size() < 2) return;
    std::vector<int> removed = remove_for_ruin(perm);
    if (removed.empty()) return;
    auto q = static_cast<std::size_t>(
        parameters().depth_of_search() * static_cast<double>(removed.size() - 1)) + 1;
    struct Candidate {
      long long span;
      std::vector<int> seq;
    };
    std::vector<Candidate> beam{{flowshop_makespan(*inst_, perm), perm}};
    for (int job : removed) {
      std::vector<Candidate> next;
      for (const auto& cand : beam) {
        std::vector<long long> spans = insertion_makespans(*inst_, cand.seq, job);
        for (std::size_t pos = 0; pos < spans.size(); ++pos) {
          std::vector<int> seq = cand.seq;
          seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(pos), job);
          next.push_back({spans[pos], std::move(seq)});
        }
      }
      std::stable_sort(next.begin(), next.end(),
                       [](const Candidate& a, const Candidate& b) { return a.span < b.span; });
      if (next.size() > q) next.resize(q);
      beam = std::move(next);
    }
    perm = beam.front().seq;
  }

  // Repeated reinsertion passes until a full pass yields no improvement.
  // Jobs are visited in the order they held at the start of each pass;
  // steepest takes the best position (ties leftmost), otherwise the first
  // strictly improving one.
  void reinsert_descent(std::vector<int>& perm, bool steepest) {
    if (perm.size() < 2) return;
    long long current = flowshop_makespan(*inst_, perm);
    bool improved = true;
    while (improved) {
      improved = false;
      std::vector<int> scan = perm;
      for (int job : scan) {
        auto at = static_cast<std::size_t>(
            std::find(perm.begin(), perm.end(), job) - perm.begin());
        std::vector<int> rest = perm;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(at));
        std::vector<long long> spans = insertion_makespans(*inst_, rest, job);
        std::size_t pick = spans.size();
        if (steepest) {
          std::size_t best = 0;
          for (std::size_t pos = 1; pos < spans.size(); ++pos)
            if (spans[pos] < spans[best]) best = pos;
          if (spans[best] < current) pick = best;
        } else {
          for (std::size_t pos = 0; pos < spans.size(); ++pos)
            if (spans[pos] < current) {
              pick = pos;
              break;
            }
        }
        if (pick < spans.size()) {
          rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(pick), job);
          perm = std::move(rest);
          current = spans[pick];
          improved = true;
        }
      }
    }
  }

  // One pass over r = floor(beta*(n-1)) + 1 sampled jobs; each moves to its
  // best position (original included, so never worse) or, in the
  // first-improving flavour, to the leftmost strictly improving position.
  void sampled_insert(std::vector<int>& perm, bool first_improving) {
    if (perm.size() < 2) return;
    auto r = static_cast<std::size_t>(parameters().depth_of_search() *
                                      static_cast<double>(perm.size() - 1)) + 1;
    long long current = flowshop_makespan(*inst_, perm);
    std::vector<std::size_t> picks = sample_distinct(rng(), perm.size(), r);
    std::vector<int> jobs;
    jobs.reserve(r);
    for (auto pos : picks) jobs.push_back(perm[pos]);
    for (int job : jobs) {
      auto at = static_cast<std::size_t>(
          std::find(perm.begin(), perm.end(), job) - perm.begin());
      std::vector<int> rest = perm;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(at));
      std::vector<long long> spans = insertion_makespans(*inst_, rest, job);
      std::size_t pick = spans.size();
      if (first_improving) {
        for (std::size_t pos = 0; pos < spans.size(); ++pos)
          if (spans[pos] < current) {
            pick = pos;
            break;
          }
        if (pick == spans.size()) continue;
      } else {
        std::size_t best = 0;
        for (std::size_t pos = 1; pos < spans.size(); ++pos)
          if (spans[pos] < spans[best]) best = pos;
        pick = best;
      }
      rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(pick), job);
      perm = std::move(rest);
      current = spans[pick];
    }
  }

  std::pair<std::size_t, std::size_t> ordered_cuts(std::size_t size) {
    auto a = static_cast<std::size_t>(rng().next_int(1, static_cast<long long>(size - 1)));
    auto b = a;
    while (b == a)
      b = static_cast<std::size_t>(rng().next_int(1, static_cast<long long>(size - 1)));
    if (a > b) std::swap(a, b);
    return {a, b};
  }

  // Child keeps p1's segment [a, b); the rest is filled with p2's jobs in
  // the order they appear starting after the second cut, wrapping around.
  std::vector<int> order_crossover(const std::vector<int>& p1, const std::vector<int>& p2) {
    auto size = p1.size();
    if (size < 3) return one_point_crossover(p1, p2);
    auto [a, b] = ordered_cuts(size);
    std::vector<int> child(size, -1);
    std::vector<char> used(size, 0);
    for (std::size_t i = a; i < b; ++i) {
      child[i] = p1[i];
      used[static_cast<std::size_t>(p1[i])] = 1;
    }
    std::size_t write = b % size;
    for (std::size_t k = 0; k < size; ++k) {
      int job = p2[(b + k) % size];
      if (used[static_cast<std::size_t>(job)]) continue;
      child[write] = job;
      used[static_cast<std::size_t>(job)] = 1;
      write = (write + 1) % size;
    }
    return child;
  }

  // Child keeps p1's segment; outside it takes p2's job, chasing the
  // segment mapping p1[i] -> p2[i] whenever that job is already placed.
  std::vector<int> pmx_crossover(const std::vector<int>& p1, const std::vector<int>& p2) {
    auto size = p1.size();
    if (size < 3) return one_point_crossover(p1, p2);
    auto [a, b] = ordered_cuts(size);
    std::vector<int> child(size, -1);
    std::vector<int> slot_of_p1(size, -1);
    for (std::size_t i = a; i < b; ++i) {
      child[i] = p1[i];
      slot_of_p1[static_cast<std::size_t>(p1[i])] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < size; ++i) {
      if (i >= a && i < b) continue;
      int job = p2[i];
      while (slot_of_p1[static_cast<std::size_t>(job)] >= 0)
        job = p2[static_cast<std::size_t>(slot_of_p1[static_cast<std::size_t>(job)])];
      child[i] = job;
    }
    return child;
  }

  // Precedence-preservative: each position takes the next not-yet-used job
  // of a randomly chosen parent.
  std::vector<int> ppx_crossover(const std::vector<int>& p1, const std::vector<int>& p2) {
    auto size = p1.size();
    std::vector<int> child;
    child.reserve(size);
    std::vector<char> used(size, 0);
    std::size_t i1 = 0, i2 = 0;
    for (std::size_t k = 0; k < size; ++k) {
      const std::vector<int>& parent = rng().next_bool() ? p1 : p2;
      std::size_t& idx = (&parent == &p1) ? i1 : i2;
      while (used[static_cast<std::size_t>(parent[idx])]) ++idx;
      child.push_back(parent[idx]);
      used[static_cast<std::size_t>(parent[idx])] = 1;
    }
    return child;
  }

  // p1's prefix up to a random cut, the remaining jobs in p2 order.
  std::vector<int> one_point_crossover(const std::vector<int>& p1, const std::vector<int>& p2) {
    auto size = p1.size();
    auto cut = static_cast<std::size_t>(rng().next_int(1, static_cast<long long>(size - 1)));
    std::vector<int> child(p1.begin(), p1.begin() + static_cast<std::ptrdiff_t>(cut));
    std::vector<char> used(size, 0);
    for (int job : child) used[static_cast<std::size_t>(job)] = 1;
    for (int job : p2)
      if (!used[static_cast<std::size_t>(job)]) child.push_back(job);
    return child;
  }

  std::vector<HeuristicDescriptor> catalog_;
  std::shared_ptr<const FlowShopInstance> inst_;
};

}  // namespace xdhh
