#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "xdhh/core/io_util.hpp"
#include "xdhh/core/problem_domain.hpp"
#include "xdhh/domains/maxsat_cnf.hpp"

namespace xdhh {

// Formula plus per-variable occurrence lists (clause indexes, deduplicated).
struct SatContext {
  CnfFormula formula;
  std::vector<std::vector<int>> occurrences;

  explicit SatContext(CnfFormula f) : formula(std::move(f)) {
    occurrences.resize(static_cast<std::size_t>(formula.num_vars));
    for (int c = 0; c < formula.num_clauses(); ++c) {
      const auto& clause = formula.clauses[static_cast<std::size_t>(c)];
      for (std::size_t i = 0; i < clause.size(); ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i && !seen; ++j)
          seen = clause[j].var == clause[i].var;
        if (!seen) occurrences[static_cast<std::size_t>(clause[i].var)].push_back(c);
      }
    }
  }
};

// Truth assignment with maintained bookkeeping: per-clause true-literal
// counts, the broken-clause total, per-variable positive/negative gains and
// ages. A flip rescans only the touched clauses (no watched literals).
class SatAssignment {
 public:
  SatAssignment(std::shared_ptr<const SatContext> ctx, std::vector<std::uint8_t> values)
      : ctx_(std::move(ctx)), values_(std::move(values)) {
    rebuild();
  }

  static SatAssignment random(std::shared_ptr<const SatContext> ctx, Rng& rng) {
    std::vector<std::uint8_t> values(
        static_cast<std::size_t>(ctx->formula.num_vars));
    for (auto& v : values) v = rng.next_bool() ? 1 : 0;
    return SatAssignment(std::move(ctx), std::move(values));
  }

  int num_vars() const { return ctx_->formula.num_vars; }
  bool value(int v) const { return values_[static_cast<std::size_t>(v)] != 0; }
  const std::vector<std::uint8_t>& values() const { return values_; }

  int broken_count() const { return broken_; }
  int positive_gain(int v) const { return pos_[static_cast<std::size_t>(v)]; }
  int negative_gain(int v) const { return neg_[static_cast<std::size_t>(v)]; }
  int net_gain(int v) const { return positive_gain(v) - negative_gain(v); }

  // Flips since the variable last changed; 0 right after its flip.
  std::uint64_t age(int v) const {
    return flip_counter_ - last_flip_[static_cast<std::size_t>(v)];
  }

  void flip(int v) {
    const auto& occ = ctx_->occurrences[static_cast<std::size_t>(v)];
    for (int c : occ) apply_clause_gains(c, -1);
    values_[static_cast<std::size_t>(v)] ^= 1;
    for (int c : occ) {
      int t = count_true(c);
      broken_ += (t == 0) - (true_count_[static_cast<std::size_t>(c)] == 0);
      true_count_[static_cast<std::size_t>(c)] = t;
    }
    for (int c : occ) apply_clause_gains(c, +1);
    ++flip_counter_;
    last_flip_[static_cast<std::size_t>(v)] = flip_counter_;
  }

  void assign(int v, bool val) {
    if (value(v) != val) flip(v);
  }

  // Index of a uniformly random broken clause; requires broken_count() > 0.
  int random_broken_clause(Rng& rng) const {
    std::size_t k = rng.next_index(static_cast<std::size_t>(broken_));
    for (int c = 0; c < ctx_->formula.num_clauses(); ++c) {
      if (true_count_[static_cast<std::size_t>(c)] != 0) continue;
      if (k == 0) return c;
      --k;
    }
    raise(Errc::InvalidArgument, "no broken clause");
  }

  const SatContext& context() const { return *ctx_; }
  std::shared_ptr<const SatContext> context_ptr() const { return ctx_; }

 private:
  void rebuild() {
    auto clauses = static_cast<std::size_t>(ctx_->formula.num_clauses());
    auto vars = static_cast<std::size_t>(ctx_->formula.num_vars);
    true_count_.assign(clauses, 0);
    pos_.assign(vars, 0);
    neg_.assign(vars, 0);
    last_flip_.assign(vars, 0);
    flip_counter_ = 0;
    broken_ = 0;
    for (std::size_t c = 0; c < clauses; ++c) {
      true_count_[c] = count_true(static_cast<int>(c));
      if (true_count_[c] == 0) ++broken_;
    }
    for (std::size_t c = 0; c < clauses; ++c) apply_clause_gains(static_cast<int>(c), +1);
  }

  int count_true(int c) const {
    int t = 0;
    for (const auto& lit : ctx_->formula.clauses[static_cast<std::size_t>(c)])
      t += value(lit.var) == lit.positive;
    return t;
  }

  int count_true_with_flip(int c, int flipped) const {
    int t = 0;
    for (const auto& lit : ctx_->formula.clauses[static_cast<std::size_t>(c)]) {
      bool val = lit.var == flipped ? !value(lit.var) : value(lit.var);
      t += val == lit.positive;
    }
    return t;
  }

  // Adds (+1) or removes (-1) clause c's contribution to the gain tables.
  void apply_clause_gains(int c, int sign) {
    const auto& clause = ctx_->formula.clauses[static_cast<std::size_t>(c)];
    int t = true_count_[static_cast<std::size_t>(c)];
    for (std::size_t i = 0; i < clause.size(); ++i) {
      int u = clause[i].var;
      bool seen = false;
      for (std::size_t j = 0; j < i && !seen; ++j) seen = clause[j].var == u;
      if (seen) continue;
      if (t == 0)
        pos_[static_cast<std::size_t>(u)] += sign;
      else if (count_true_with_flip(c, u) == 0)
        neg_[static_cast<std::size_t>(u)] += sign;
    }
  }

  std::shared_ptr<const SatContext> ctx_;
  std::vector<std::uint8_t> values_;
  std::vector<int> true_count_;
  std::vector<int> pos_, neg_;
  std::vector<std::uint64_t> last_flip_;
  std::uint64_t flip_counter_ = 0;
  int broken_ = 0;
};

// MAX-SAT domain: minimise the number of broken clauses. Heuristics
//   0 gsat (M)   1 hsat (M)      2 walksat (M)       3 novelty (M)
//   4 reassign (RR)  5 flip-ls (LS)  6 broken-flip-ls (LS)
//   7 one-point-x (X)  8 two-point-x (X)
class MaxSatDomain : public DomainBase<SatAssignment> {
 public:
  MaxSatDomain()
      : catalog_{{0, HeuristicKind::Mutation, "gsat"},
                 {1, HeuristicKind::Mutation, "hsat"},
                 {2, HeuristicKind::Mutation, "walksat"},
                 {3, HeuristicKind::Mutation, "novelty"},
                 {4, HeuristicKind::RuinRecreate, "reassign"},
                 {5, HeuristicKind::LocalSearch, "flip-ls"},
                 {6, HeuristicKind::LocalSearch, "broken-flip-ls"},
                 {7, HeuristicKind::Crossover, "one-point-x"},
                 {8, HeuristicKind::Crossover, "two-point-x"}} {}

  std::string_view name() const override { return "maxsat"; }
  const std::vector<HeuristicDescriptor>& heuristics() const override { return catalog_; }

  void load_instance(const std::string& path) override {
    set_formula(parse_dimacs(read_file(path)), path);
  }

  void set_formula(CnfFormula f, std::string id = "inline") {
    ctx_ = std::make_shared<const SatContext>(std::move(f));
    on_instance_loaded(std::move(id));
  }

  const CnfFormula& formula() const {
    require_instance();
    return ctx_->formula;
  }

 protected:
  SatAssignment initial_solution() override { return SatAssignment::random(ctx_, rng()); }

  double solution_value(const SatAssignment& s) const override {
    return static_cast<double>(s.broken_count());
  }

  SatAssignment apply_unary(int h, const SatAssignment& src) override {
    SatAssignment out = src;
    switch (h) {
      case 0: gsat(out, false); break;
      case 1: gsat(out, true); break;
      case 2: walksat(out); break;
      case 3: novelty(out); break;
      case 4: reassign(out); break;
      case 5: flip_ls(out, false); break;
      case 6: flip_ls(out, true); break;
      default: break;
    }
    return out;
  }

  SatAssignment apply_binary(int h, const SatAssignment& p1, const SatAssignment& p2) override {
    int n = p1.num_vars();
    std::vector<std::uint8_t> child = p1.values();
    if (h == 7 && n >= 2) {
      auto cut = 1 + rng().next_index(static_cast<std::size_t>(n - 1));
      for (std::size_t i = cut; i < child.size(); ++i) child[i] = p2.values()[i];
    } else if (h == 8 && n >= 3) {
      auto a = 1 + rng().next_index(static_cast<std::size_t>(n - 1));
      auto b = a;
      while (b == a) b = 1 + rng().next_index(static_cast<std::size_t>(n - 1));
      if (a > b) std::swap(a, b);
      for (std::size_t i = a; i < b; ++i) child[i] = p2.values()[i];
    }
    return SatAssignment(ctx_, std::move(child));
  }

 private:
  // Flip the best-net-gain variable; ties at random, or by maximal age first
  // when hsat is set (residual ties still random).
  void gsat(SatAssignment& s, bool hsat) {
    int n = s.num_vars();
    if (n == 0) return;
    int best = s.net_gain(0);
    std::vector<int> args{0};
    for (int v = 1; v < n; ++v) {
      int g = s.net_gain(v);
      if (g > best) {
        best = g;
        args.assign(1, v);
      } else if (g == best) {
        args.push_back(v);
      }
    }
    if (hsat && args.size() > 1) {
      std::uint64_t oldest = 0;
      for (int v : args) oldest = std::max(oldest, s.age(v));
      std::vector<int> aged;
      for (int v : args)
        if (s.age(v) == oldest) aged.push_back(v);
      args.swap(aged);
    }
    s.flip(args[rng().next_index(args.size())]);
  }

  static std::vector<int> distinct_vars(const SatAssignment& s, int clause) {
    std::vector<int> vars;
    for (const auto& lit : s.context().formula.clauses[static_cast<std::size_t>(clause)]) {
      bool seen = false;
      for (int u : vars) seen = seen || u == lit.var;
      if (!seen) vars.push_back(lit.var);
    }
    return vars;
  }

  void walksat(SatAssignment& s) {
    if (s.broken_count() == 0) return;
    std::vector<int> vars = distinct_vars(s, s.random_broken_clause(rng()));
    std::vector<int> zero_neg;
    for (int v : vars)
      if (s.negative_gain(v) == 0) zero_neg.push_back(v);
    if (!zero_neg.empty()) {
      s.flip(zero_neg[rng().next_index(zero_neg.size())]);
      return;
    }
    if (rng().next_bool()) {
      s.flip(vars[rng().next_index(vars.size())]);
      return;
    }
    int best = s.negative_gain(vars[0]);
    std::vector<int> args{vars[0]};
    for (std::size_t i = 1; i < vars.size(); ++i) {
      int g = s.negative_gain(vars[i]);
      if (g < best) {
        best = g;
        args.assign(1, vars[i]);
      } else if (g == best) {
        args.push_back(vars[i]);
      }
    }
    s.flip(args[rng().next_index(args.size())]);
  }

  void novelty(SatAssignment& s) {
    if (s.broken_count() == 0) return;
    std::vector<int> vars = distinct_vars(s, s.random_broken_clause(rng()));
    std::sort(vars.begin(), vars.end());  // ties resolve to the lowest variable index
    int best = vars[0];
    for (int v : vars)
      if (s.net_gain(v) > s.net_gain(best)) best = v;  // ties keep lowest index
    if (vars.size() == 1) {
      s.flip(best);
      return;
    }
    std::uint64_t min_age = s.age(vars[0]);
    for (int v : vars) min_age = std::min(min_age, s.age(v));
    if (s.age(best) > min_age || rng().next_double() < 0.3) {
      s.flip(best);
      return;
    }
    int second = -1;
    for (int v : vars)
      if (v != best && (second < 0 || s.net_gain(v) > s.net_gain(second))) second = v;
    s.flip(second);
  }

  // Re-randomise ceil(alpha * num_vars) variables; with alpha = 1 the draw
  // sequence matches initialise_solution exactly.
  void reassign(SatAssignment& s) {
    int n = s.num_vars();
    auto k = static_cast<std::size_t>(
        std::ceil(parameters().intensity_of_mutation() * n));
    if (k == 0) return;
    if (k >= static_cast<std::size_t>(n)) {
      for (int v = 0; v < n; ++v) s.assign(v, rng().next_bool());
      return;
    }
    for (std::size_t v : sample_distinct(rng(), static_cast<std::size_t>(n), k))
      s.assign(static_cast<int>(v), rng().next_bool());
  }

  // First-improvement pass: a random variable per attempt (from a random
  // broken clause when broken_only is set), flipped iff its net gain is
  // positive. Stops after the attempt budget or num_vars consecutive
  // non-improving attempts.
  void flip_ls(SatAssignment& s, bool broken_only) {
    int n = s.num_vars();
    if (n == 0) return;
    auto budget = static_cast<std::uint64_t>(
        std::ceil((1.0 + 9.0 * parameters().depth_of_search()) * n));
    std::uint64_t fails = 0;
    for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
      if (fails >= static_cast<std::uint64_t>(n)) break;
      int v;
      if (broken_only) {
        if (s.broken_count() == 0) break;
        std::vector<int> vars = distinct_vars(s, s.random_broken_clause(rng()));
        v = vars[rng().next_index(vars.size())];
      } else {
        v = static_cast<int>(rng().next_index(static_cast<std::size_t>(n)));
      }
      if (s.net_gain(v) > 0) {
        s.flip(v);
        fails = 0;
      } else {
        ++fails;
      }
    }
  }

  std::vector<HeuristicDescriptor> catalog_;
  std::shared_ptr<const SatContext> ctx_;
};

}  // namespace xdhh
