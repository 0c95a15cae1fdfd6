#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "xdhh/core/io_util.hpp"
#include "xdhh/core/problem_domain.hpp"

namespace xdhh {

struct PackingInstance {
  long long capacity = 0;
  std::vector<long long> weights;

  int num_pieces() const { return static_cast<int>(weights.size()); }

  void validate() const {
    if (capacity <= 0) raise(Errc::InvalidArgument, "capacity must be positive");
    if (weights.empty()) raise(Errc::InvalidArgument, "instance has no pieces");
    for (long long w : weights)
      if (w <= 0 || w > capacity)
        raise(Errc::InvalidArgument,
              "piece weight " + std::to_string(w) + " outside (0, capacity]");
  }
};

// Format: first line "n C", then n lines of one weight each.
inline PackingInstance parse_packing_instance(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, capacity = 0;
  if (!(in >> n >> capacity) || n <= 0)
    raise(Errc::MalformedHeader, "expected 'n C' on the first line");
  PackingInstance inst;
  inst.capacity = capacity;
  inst.weights.resize(static_cast<std::size_t>(n));
  for (auto& w : inst.weights)
    if (!(in >> w)) raise(Errc::MalformedHeader, "fewer weights than declared");
  inst.validate();
  return inst;
}

inline std::string to_packing_text(const PackingInstance& inst) {
  std::string out = std::to_string(inst.num_pieces()) + " " + std::to_string(inst.capacity) + "\n";
  for (long long w : inst.weights) out += std::to_string(w) + "\n";
  return out;
}

// Falkenauer-style generators. "uniform" draws weights from
// [2C/15, 2C/3] (the classic 20..100 at C = 150); "triplet" builds groups of
// three that sum exactly to C, every piece in (C/4, C/2).
inline PackingInstance generate_packing_instance(int pieces, long long capacity,
                                                 const std::string& dist, std::uint64_t seed) {
  if (pieces <= 0) raise(Errc::InvalidArgument, "piece count must be positive");
  Rng rng(seed);
  PackingInstance inst;
  inst.capacity = capacity;
  if (dist == "uniform") {
    long long lo = std::max<long long>(1, capacity * 2 / 15);
    long long hi = std::max(lo, capacity * 2 / 3);
    for (int i = 0; i < pieces; ++i) inst.weights.push_back(rng.next_int(lo, hi));
  } else if (dist == "triplet") {
    if (pieces % 3 != 0) raise(Errc::InvalidArgument, "triplet instances need a multiple of 3 pieces");
    if (capacity < 12) raise(Errc::InvalidArgument, "triplet instances need capacity >= 12");
    for (int t = 0; t < pieces / 3; ++t) {
      long long a = rng.next_int(capacity / 4 + 1, capacity / 2 - 2);
      long long b = rng.next_int(capacity / 4 + 1, (capacity - a) / 2);
      inst.weights.push_back(a);
      inst.weights.push_back(b);
      inst.weights.push_back(capacity - a - b);
    }
    rng.shuffle(inst.weights.begin(), inst.weights.end());
  } else {
    raise(Errc::InvalidArgument, "unknown distribution '" + dist + "'");
  }
  inst.validate();
  return inst;
}

// A complete packing: every piece in exactly one bin, no bin over capacity,
// no empty bins kept. Fitness 1 - sum((fullness/C)^2)/bins, minimised.
class Packing {
 public:
  explicit Packing(std::shared_ptr<const PackingInstance> inst) : inst_(std::move(inst)) {}

  static Packing first_fit(std::shared_ptr<const PackingInstance> inst,
                           const std::vector<int>& order) {
    Packing p(std::move(inst));
    for (int piece : order) p.first_fit_insert(piece);
    return p;
  }

  const PackingInstance& instance() const { return *inst_; }
  int num_bins() const { return static_cast<int>(bins_.size()); }
  const std::vector<std::vector<int>>& bins() const { return bins_; }
  long long fullness(int bin) const { return fullness_[static_cast<std::size_t>(bin)]; }
  long long weight_of(int piece) const {
    return inst_->weights[static_cast<std::size_t>(piece)];
  }

  double fitness() const {
    if (bins_.empty()) return 1.0;
    double c = static_cast<double>(inst_->capacity);
    double sum = 0.0;
    for (long long f : fullness_) {
      double r = static_cast<double>(f) / c;
      sum += r * r;
    }
    return 1.0 - sum / static_cast<double>(bins_.size());
  }

  // Sum of squared fullness; exact integer form of the fitness ordering when
  // the bin count is fixed (larger is better).
  long long sum_squared_fullness() const {
    long long s = 0;
    for (long long f : fullness_) s += f * f;
    return s;
  }

  void first_fit_insert(int piece) {
    long long w = weight_of(piece);
    for (std::size_t b = 0; b < bins_.size(); ++b) {
      if (fullness_[b] + w <= inst_->capacity) {
        bins_[b].push_back(piece);
        fullness_[b] += w;
        return;
      }
    }
    open_bin(piece);
  }

  // Feasible bin leaving minimal residual space (ties: lowest index); a new
  // bin when the piece fits nowhere.
  void best_fit_insert(int piece) {
    long long w = weight_of(piece);
    int best = -1;
    for (std::size_t b = 0; b < bins_.size(); ++b) {
      if (fullness_[b] + w > inst_->capacity) continue;
      if (best < 0 || fullness_[b] > fullness_[static_cast<std::size_t>(best)])
        best = static_cast<int>(b);
    }
    if (best < 0) {
      open_bin(piece);
    } else {
      bins_[static_cast<std::size_t>(best)].push_back(piece);
      fullness_[static_cast<std::size_t>(best)] += w;
    }
  }

  void open_bin(int piece) {
    bins_.push_back({piece});
    fullness_.push_back(weight_of(piece));
  }

  void remove_piece(int bin, int piece) {
    auto b = static_cast<std::size_t>(bin);
    auto& pieces = bins_[b];
    pieces.erase(std::find(pieces.begin(), pieces.end(), piece));
    fullness_[b] -= weight_of(piece);
  }

  void add_piece(int bin, int piece) {
    auto b = static_cast<std::size_t>(bin);
    bins_[b].push_back(piece);
    fullness_[b] += weight_of(piece);
  }

  void erase_bin(int bin) {
    bins_.erase(bins_.begin() + bin);
    fullness_.erase(fullness_.begin() + bin);
  }

  void drop_empty_bins() {
    for (int b = num_bins() - 1; b >= 0; --b)
      if (bins_[static_cast<std::size_t>(b)].empty()) erase_bin(b);
  }

  // piece -> bin lookup, rebuilt on demand.
  std::vector<int> piece_bins() const {
    std::vector<int> where(inst_->weights.size(), -1);
    for (std::size_t b = 0; b < bins_.size(); ++b)
      for (int piece : bins_[b]) where[static_cast<std::size_t>(piece)] = static_cast<int>(b);
    return where;
  }

  int lowest_bin() const {
    int best = 0;
    for (int b = 1; b < num_bins(); ++b)
      if (fullness(b) < fullness(best)) best = b;
    return best;
  }

 private:
  std::shared_ptr<const PackingInstance> inst_;
  std::vector<std::vector<int>> bins_;
  std::vector<long long> fullness_;
};

// One-dimensional bin packing domain. Heuristics
//   0 swap (M)  1 split (M)  2 repack-lowest (M)
//   3 ruin-highest (RR)  4 ruin-lowest (RR)
//   5 swap-ls (LS)  6 exchange-ls (LS)  7 exon-x (X)
class BinPackingDomain : public DomainBase<Packing> {
 public:
  BinPackingDomain()
      : catalog_{{0, HeuristicKind::Mutation, "swap"},
                 {1, HeuristicKind::Mutation, "split"},
                 {2, HeuristicKind::Mutation, "repack-lowest"},
                 {3, HeuristicKind::RuinRecreate, "ruin-highest"},
                 {4, HeuristicKind::RuinRecreate, "ruin-lowest"},
                 {5, HeuristicKind::LocalSearch, "swap-ls"},
                 {6, HeuristicKind::LocalSearch, "exchange-ls"},
                 {7, HeuristicKind::Crossover, "exon-x"}} {}

  std::string_view name() const override { return "binpacking"; }
  const std::vector<HeuristicDescriptor>& heuristics() const override { return catalog_; }

  void load_instance(const std::string& path) override {
    set_instance(parse_packing_instance(read_file(path)), path);
  }

  void set_instance(PackingInstance inst, std::string id = "inline") {
    inst.validate();
    inst_ = std::make_shared<const PackingInstance>(std::move(inst));
    on_instance_loaded(std::move(id));
  }

  const PackingInstance& instance() const {
    require_instance();
    return *inst_;
  }

 protected:
  Packing initial_solution() override {
    std::vector<int> order(static_cast<std::size_t>(inst_->num_pieces()));
    std::iota(order.begin(), order.end(), 0);
    rng().shuffle(order.begin(), order.end());
    return Packing::first_fit(inst_, order);
  }

  double solution_value(const Packing& s) const override { return s.fitness(); }

  Packing apply_unary(int h, const Packing& src) override {
    Packing out = src;
    switch (h) {
      case 0: swap_random(out); break;
      case 1: split_bin(out); break;
      case 2: repack_lowest(out); break;
      case 3: ruin(out, /*highest=*/true); break;
      case 4: ruin(out, /*highest=*/false); break;
      case 5: swap_ls(out); break;
      case 6: exchange_ls(out); break;
      default: break;
    }
    return out;
  }

  Packing apply_binary(int h, const Packing& p1, const Packing& p2) override {
    (void)h;
    return exon_crossover(p1, p2);
  }

 private:
  // Two random pieces trade bins; a piece that no longer fits moves to a
  // fresh bin instead (lower piece index checked first).
  void swap_random(Packing& p) {
    int n = p.instance().num_pieces();
    if (n < 2) return;
    int a = static_cast<int>(rng().next_index(static_cast<std::size_t>(n)));
    int b = a;
    while (b == a) b = static_cast<int>(rng().next_index(static_cast<std::size_t>(n)));
    if (a > b) std::swap(a, b);
    auto where = p.piece_bins();
    int bin_a = where[static_cast<std::size_t>(a)];
    int bin_b = where[static_cast<std::size_t>(b)];
    if (bin_a == bin_b) return;
    p.remove_piece(bin_a, a);
    p.remove_piece(bin_b, b);
    if (p.fullness(bin_b) + p.weight_of(a) <= p.instance().capacity)
      p.add_piece(bin_b, a);
    else
      p.open_bin(a);
    if (p.fullness(bin_a) + p.weight_of(b) <= p.instance().capacity)
      p.add_piece(bin_a, b);
    else
      p.open_bin(b);
    p.drop_empty_bins();
  }

  // Split a random bin holding more pieces than average into two, pieces
  // assigned alternately.
  void split_bin(Packing& p) {
    double avg = static_cast<double>(p.instance().num_pieces()) / p.num_bins();
    std::vector<int> crowded;
    for (int b = 0; b < p.num_bins(); ++b)
      if (static_cast<double>(p.bins()[static_cast<std::size_t>(b)].size()) > avg)
        crowded.push_back(b);
    if (crowded.empty()) return;
    int bin = crowded[rng().next_index(crowded.size())];
    std::vector<int> pieces = p.bins()[static_cast<std::size_t>(bin)];
    p.erase_bin(bin);
    int left = -1, right = -1;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      int& target = (i % 2 == 0) ? left : right;
      if (target < 0) {
        p.open_bin(pieces[i]);
        target = p.num_bins() - 1;
      } else {
        p.add_piece(target, pieces[i]);
      }
    }
  }

  // Empty the lowest-filled bin and repack its pieces best-fit, heaviest
  // first.
  void repack_lowest(Packing& p) {
    if (p.num_bins() < 2) return;
    int bin = p.lowest_bin();
    std::vector<int> pieces = p.bins()[static_cast<std::size_t>(bin)];
    p.erase_bin(bin);
    repack_descending(p, pieces);
  }

  // Remove 1 + floor(alpha*5) highest (or lowest) filled bins, capped at the
  // bin count, and repack the displaced pieces best-fit, heaviest first.
  void ruin(Packing& p, bool highest) {
    int x = 1 + static_cast<int>(parameters().intensity_of_mutation() * 5.0);
    x = std::min(x, p.num_bins());
    std::vector<int> order(static_cast<std::size_t>(p.num_bins()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return highest ? p.fullness(a) > p.fullness(b) : p.fullness(a) < p.fullness(b);
    });
    order.resize(static_cast<std::size_t>(x));
    std::sort(order.begin(), order.end(), std::greater<int>());
    std::vector<int> pieces;
    for (int b : order) {
      const auto& bin = p.bins()[static_cast<std::size_t>(b)];
      pieces.insert(pieces.end(), bin.begin(), bin.end());
      p.erase_bin(b);
    }
    repack_descending(p, pieces);
  }

  void repack_descending(Packing& p, std::vector<int>& pieces) {
    std::stable_sort(pieces.begin(), pieces.end(),
                     [&](int a, int b) { return p.weight_of(a) > p.weight_of(b); });
    for (int piece : pieces) p.best_fit_insert(piece);
  }

  // Random piece swaps accepted when the fitness improves or ties; budget
  // ceil((1+9*beta)*n) attempts, early stop after n consecutive attempts
  // without strict improvement.
  void swap_ls(Packing& p) {
    int n = p.instance().num_pieces();
    if (n < 2) return;
    auto budget = static_cast<std::uint64_t>(
        std::ceil((1.0 + 9.0 * parameters().depth_of_search()) * n));
    std::uint64_t fails = 0;
    auto where = p.piece_bins();
    for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
      if (fails >= static_cast<std::uint64_t>(n)) break;
      int a = static_cast<int>(rng().next_index(static_cast<std::size_t>(n)));
      int b = a;
      while (b == a) b = static_cast<int>(rng().next_index(static_cast<std::size_t>(n)));
      int bin_a = where[static_cast<std::size_t>(a)];
      int bin_b = where[static_cast<std::size_t>(b)];
      long long wa = p.weight_of(a), wb = p.weight_of(b);
      if (bin_a == bin_b || wa == wb) {
        ++fails;
        continue;
      }
      long long fa = p.fullness(bin_a), fb = p.fullness(bin_b);
      long long na = fa - wa + wb, nb = fb - wb + wa;
      if (na > p.instance().capacity || nb > p.instance().capacity) {
        ++fails;
        continue;
      }
      // Bin count is unchanged, so compare the integer sum of squares.
      long long delta = (na * na + nb * nb) - (fa * fa + fb * fb);
      if (delta < 0) {
        ++fails;
        continue;
      }
      p.remove_piece(bin_a, a);
      p.remove_piece(bin_b, b);
      p.add_piece(bin_a, b);
      p.add_piece(bin_b, a);
      where[static_cast<std::size_t>(a)] = bin_b;
      where[static_cast<std::size_t>(b)] = bin_a;
      fails = delta > 0 ? 0 : fails + 1;
    }
  }

  // Move weight out of the lowest bin: exchange its largest piece with one
  // smaller piece of a random other bin, or with two pieces of smaller total,
  // else do nothing.
  void exchange_ls(Packing& p) {
    if (p.num_bins() < 2) return;
    int low = p.lowest_bin();
    const auto& low_pieces = p.bins()[static_cast<std::size_t>(low)];
    int big = low_pieces[0];
    for (int piece : low_pieces)
      if (p.weight_of(piece) > p.weight_of(big)) big = piece;
    int other = low;
    while (other == low)
      other = static_cast<int>(rng().next_index(static_cast<std::size_t>(p.num_bins())));
    long long wb = p.weight_of(big);
    long long cap = p.instance().capacity;
    const auto& other_pieces = p.bins()[static_cast<std::size_t>(other)];
    for (int small : other_pieces) {
      long long ws = p.weight_of(small);
      if (ws >= wb) continue;
      if (p.fullness(other) - ws + wb > cap) continue;
      p.remove_piece(low, big);
      p.remove_piece(other, small);
      p.add_piece(low, small);
      p.add_piece(other, big);
      return;
    }
    for (std::size_t i = 0; i < other_pieces.size(); ++i) {
      for (std::size_t j = i + 1; j < other_pieces.size(); ++j) {
        int s1 = other_pieces[i], s2 = other_pieces[j];
        long long ws = p.weight_of(s1) + p.weight_of(s2);
        if (ws >= wb) continue;
        if (p.fullness(other) - ws + wb > cap) continue;
        p.remove_piece(low, big);
        p.remove_piece(other, s1);
        p.remove_piece(other, s2);
        p.add_piece(low, s1);
        p.add_piece(low, s2);
        p.add_piece(other, big);
        return;
      }
    }
  }

  // Bins of both parents ordered by wasted space (least first, parent 1
  // before parent 2 on ties); bins clashing with nothing already taken are
  // inherited whole, the rest are added stripped of already-present pieces.
  Packing exon_crossover(const Packing& p1, const Packing& p2) {
    struct Entry {
      long long waste;
      const std::vector<int>* pieces;
    };
    std::vector<Entry> entries;
    for (const Packing* parent : {&p1, &p2})
      for (int b = 0; b < parent->num_bins(); ++b)
        entries.push_back({parent->instance().capacity - parent->fullness(b),
                           &parent->bins()[static_cast<std::size_t>(b)]});
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.waste < b.waste; });

    Packing child(inst_);
    std::vector<char> used(static_cast<std::size_t>(inst_->num_pieces()), 0);
    std::vector<char> taken(entries.size(), 0);
    for (std::size_t e = 0; e < entries.size(); ++e) {
      bool clash = false;
      for (int piece : *entries[e].pieces)
        clash = clash || used[static_cast<std::size_t>(piece)];
      if (clash) continue;
      taken[e] = 1;
      std::size_t bin = 0;
      bool first = true;
      for (int piece : *entries[e].pieces) {
        used[static_cast<std::size_t>(piece)] = 1;
        if (first) {
          child.open_bin(piece);
          bin = static_cast<std::size_t>(child.num_bins() - 1);
          first = false;
        } else {
          child.add_piece(static_cast<int>(bin), piece);
        }
      }
    }
    for (std::size_t e = 0; e < entries.size(); ++e) {
      if (taken[e]) continue;
      bool first = true;
      std::size_t bin = 0;
      for (int piece : *entries[e].pieces) {
        if (used[static_cast<std::size_t>(piece)]) continue;
        used[static_cast<std::size_t>(piece)] = 1;
        if (first) {
          child.open_bin(piece);
          bin = static_cast<std::size_t>(child.num_bins() - 1);
          first = false;
        } else {
          child.add_piece(static_cast<int>(bin), piece);
        }
      }
    }
    return child;
  }

  std::vector<HeuristicDescriptor> catalog_;
  std::shared_ptr<const PackingInstance> inst_;
};

}  // namespace xdhh
