#include "sbfe/strategy.hpp"

#include <algorithm>
#include <stdexcept>

#include "sbfe/errors.hpp"
#include "sbfe/goal.hpp"

namespace sbfe {
namespace {

std::vector<int> order_by_ratio(const Instance& inst, bool over_p) {
  std::vector<int> order(inst.n());
  for (int i = 0; i < inst.n(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double ra = over_p ? inst.cost(a) / inst.prob(a)
                             : inst.cost(a) / (1.0 - inst.prob(a));
    const double rb = over_p ? inst.cost(b) / inst.prob(b)
                             : inst.cost(b) / (1.0 - inst.prob(b));
    return ra < rb;
  });
  return order;
}

// Pigeonhole pick: the variable earliest in `cp_order` among the first
// `window_a` active entries of cp_order that also sits in the first
// `window_b` active entries of cq_order. "Active" = not yet consumed by the
// caller. Windows satisfying window_a + window_b > active count make the
// intersection provably nonempty.
template <typename ActiveFn>
int pigeonhole_pick(const std::vector<int>& cp_order,
                    const std::vector<int>& cq_order, int window_a,
                    int window_b, ActiveFn&& active) {
  std::vector<char> in_b(cp_order.size(), 0);
  int taken = 0;
  for (const int v : cq_order) {
    if (!active(v)) continue;
    in_b[v] = 1;
    if (++taken == window_b) break;
  }
  taken = 0;
  for (const int v : cp_order) {
    if (!active(v)) continue;
    if (in_b[v]) return v;
    if (++taken == window_a) break;
  }
  throw std::logic_error("pigeonhole intersection is empty");
}

// One k-of-n subroutine replayed against recorded outcomes: picks run in
// the deterministic pigeonhole order, consuming recorded variables without
// charge, until the question resolves or an untested variable is picked.
struct SubroutineResult {
  bool resolved;
  int value;      // meaningful when resolved
  int next_test;  // meaningful when not resolved
};

SubroutineResult replay_k_of_n(int k, const PartialAssignment& b,
                               const std::vector<int>& cp_order,
                               const std::vector<int>& cq_order) {
  const int n = b.size();
  std::vector<char> consumed(n, 0);
  int m = n;
  while (true) {
    if (k <= 0) return {true, 1, -1};
    if (k > m) return {true, 0, -1};
    const int v = pigeonhole_pick(cp_order, cq_order, k, m - k + 1,
                                  [&](int i) { return !consumed[i]; });
    if (!b.is_set(v)) return {false, -1, v};
    consumed[v] = 1;
    --m;
    if (b.slot(v) == Slot::one) --k;
  }
}

class RatioOrderStrategy final : public Strategy {
 public:
  RatioOrderStrategy(const Instance& inst, const ValueVector& values,
                     bool or_order)
      : values_(&values),
        order_(order_by_ratio(inst, or_order)),
        name_(or_order ? "or" : "and") {}

  StrategyStep step(const PartialAssignment& b) const override {
    if (const auto value = certificate_value(b, *values_)) {
      return StrategyStep::done(*value);
    }
    for (const int i : order_) {
      if (!b.is_set(i)) return StrategyStep::test(i);
    }
    throw std::logic_error("no certificate with every variable tested");
  }

  const std::string& name() const override { return name_; }

 private:
  const ValueVector* values_;
  std::vector<int> order_;
  std::string name_;
};

class SbbdStrategy final : public Strategy {
 public:
  SbbdStrategy(const Instance& inst, const ValueVector& values)
      : inst_(&inst), values_(&values) {
    if (values.block_count() > 2) {
      throw ShapeError(
          "strategy \"sbbd\" needs a k-of-n value vector (at most two "
          "blocks), got " +
          std::to_string(values.block_count()) + " blocks");
    }
    threshold_ = values.block_count() == 2 ? values.blocks()[1].start : 0;
  }

  StrategyStep step(const PartialAssignment& b) const override {
    if (const auto value = certificate_value(b, *values_)) {
      return StrategyStep::done(*value);
    }
    // Not yet certified, so 0 < k <= untested and the step below tests.
    const StrategyStep raw =
        sbbd_step(threshold_ - b.num_one(), b, *inst_);
    if (raw.is_test()) return raw;
    // Map the k-of-n answer through the value vector, which may be the
    // negation (first block 1s).
    return StrategyStep::done(values_->entry(raw.value ? threshold_ : 0));
  }

  const std::string& name() const override { return name_; }

 private:
  const Instance* inst_;
  const ValueVector* values_;
  int threshold_;  // alpha_2: ones needed to leave the first block
  std::string name_ = "sbbd";
};

class ExactlyKStrategy final : public Strategy {
 public:
  ExactlyKStrategy(const Instance& inst, const ValueVector& values)
      : inst_(&inst), values_(&values) {
    int ones = 0;
    for (int i = 0; i <= values.n(); ++i) {
      if (values.entry(i) == 1) {
        ++ones;
        target_ = i;
      }
    }
    if (ones != 1) {
      throw ShapeError(
          "strategy \"exactk\" needs a value vector with exactly one "
          "1-entry, got " +
          std::to_string(ones));
    }
  }

  StrategyStep step(const PartialAssignment& b) const override {
    if (const auto value = certificate_value(b, *values_)) {
      return StrategyStep::done(*value);
    }
    return exactly_k_step(target_ - b.num_one(), b, *inst_);
  }

  const std::string& name() const override { return name_; }

 private:
  const Instance* inst_;
  const ValueVector* values_;
  int target_ = -1;  // the ones-count where the function is 1
  std::string name_ = "exactk";
};

// Base for the two block algorithms: both answer threshold questions
// f_j = "are there >= alpha_j ones?" with the k-of-n subroutine, recording
// outcomes once and replaying them for later questions. They differ only in
// the order the questions are asked. Either way, a step starts from the
// recorded outcomes alone: if the certificate already fired we are done
// (that is exactly the situation where every remaining question resolves
// from the record), otherwise re-running the question schedule hits a
// subroutine pick that is still untested — the next real test.
class BlockStrategyBase : public Strategy {
 public:
  BlockStrategyBase(const Instance& inst, const ValueVector& values)
      : inst_(&inst),
        values_(&values),
        cp_order_(order_by_ratio(inst, true)),
        cq_order_(order_by_ratio(inst, false)) {}

 protected:
  // The subroutine starts fresh each question and re-reads every recorded
  // outcome itself, so the threshold alpha_j is passed undiminished.
  SubroutineResult ask(int block_index_1based,
                       const PartialAssignment& b) const {
    const int alpha = values_->blocks()[block_index_1based - 1].start;
    return replay_k_of_n(alpha, b, cp_order_, cq_order_);
  }

  const Instance* inst_;
  const ValueVector* values_;
  std::vector<int> cp_order_;
  std::vector<int> cq_order_;
};

class BlockSweepStrategy final : public BlockStrategyBase {
 public:
  using BlockStrategyBase::BlockStrategyBase;

  StrategyStep step(const PartialAssignment& b) const override {
    if (const auto value = certificate_value(b, *values_)) {
      return StrategyStep::done(*value);
    }
    for (int j = 2; j <= values_->block_count(); ++j) {
      const SubroutineResult res = ask(j, b);
      if (!res.resolved) return StrategyStep::test(res.next_test);
    }
    // Resolving every threshold from the record is equivalent to the
    // certificate condition, which was ruled out above.
    throw std::logic_error("block sweep finished without a certificate");
  }

  const std::string& name() const override { return name_; }

 private:
  std::string name_ = "b1";
};

class BlockBinarySearchStrategy final : public BlockStrategyBase {
 public:
  using BlockStrategyBase::BlockStrategyBase;

  StrategyStep step(const PartialAssignment& b) const override {
    if (const auto value = certificate_value(b, *values_)) {
      return StrategyStep::done(*value);
    }
    // Find the last block j with f_j = 1 by bisection; f_1 = 1 always.
    int lo = 1;
    int hi = values_->block_count();
    while (lo < hi) {
      const int mid = (lo + hi + 1) / 2;
      const SubroutineResult res = ask(mid, b);
      if (!res.resolved) return StrategyStep::test(res.next_test);
      if (res.value == 1) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    throw std::logic_error("block search finished without a certificate");
  }

  const std::string& name() const override { return name_; }

 private:
  std::string name_ = "b1-binsearch";
};

}  // namespace

std::vector<int> ratio_order_or(const Instance& inst) {
  return order_by_ratio(inst, true);
}

std::vector<int> ratio_order_and(const Instance& inst) {
  return order_by_ratio(inst, false);
}

StrategyStep sbbd_step(int k, const PartialAssignment& b,
                       const Instance& inst) {
  const int m = b.num_unknown();
  if (k <= 0) return StrategyStep::done(1);
  if (k > m) return StrategyStep::done(0);
  const std::vector<int> cp = order_by_ratio(inst, true);
  const std::vector<int> cq = order_by_ratio(inst, false);
  return StrategyStep::test(pigeonhole_pick(
      cp, cq, k, m - k + 1, [&](int i) { return !b.is_set(i); }));
}

StrategyStep exactly_k_step(int k, const PartialAssignment& b,
                            const Instance& inst) {
  const int m = b.num_unknown();
  if (k < 0) return StrategyStep::done(0);   // overshot: too many ones
  if (k > m) return StrategyStep::done(0);   // unreachable ones-count
  if (k == 0 && m == 0) return StrategyStep::done(1);
  const std::vector<int> cp = order_by_ratio(inst, true);
  const std::vector<int> cq = order_by_ratio(inst, false);
  return StrategyStep::test(
      pigeonhole_pick(cp, cq, std::min(k + 1, m), m - k + 1,
                      [&](int i) { return !b.is_set(i); }));
}

BlockTrace trace_block_strategy(const Instance& inst,
                                const ValueVector& values, std::uint32_t x,
                                bool binary_search) {
  const std::vector<int> cp = order_by_ratio(inst, true);
  const std::vector<int> cq = order_by_ratio(inst, false);
  PartialAssignment b(inst.n());
  BlockTrace trace{0, 0, -1};

  // Runs one threshold question live: replays against the record, testing
  // x's value whenever the pick is new. Returns the answer, or nullopt when
  // the global certificate fires mid-question (the early-exit rule).
  const auto run_question = [&](int alpha) -> std::optional<int> {
    ++trace.probes;
    while (true) {
      const SubroutineResult res = replay_k_of_n(alpha, b, cp, cq);
      if (res.resolved) return res.value;
      b.set(res.next_test, (x >> res.next_test & 1u) != 0);
      ++trace.tests;
      if (is_certificate(b, values)) return std::nullopt;
    }
  };

  if (!is_certificate(b, values)) {
    if (binary_search) {
      int lo = 1;
      int hi = values.block_count();
      while (lo < hi) {
        const int mid = (lo + hi + 1) / 2;
        const std::optional<int> answer =
            run_question(values.blocks()[mid - 1].start);
        if (!answer) break;
        if (*answer == 1) {
          lo = mid;
        } else {
          hi = mid - 1;
        }
      }
    } else {
      for (int j = 2; j <= values.block_count(); ++j) {
        if (!run_question(values.blocks()[j - 1].start)) break;
      }
    }
  }
  // Finishing the schedule resolves every threshold from the record, which
  // is the certificate condition — so the value is always certified here.
  trace.value = *certificate_value(b, values);
  return trace;
}

const std::vector<std::string>& strategy_names() {
  static const std::vector<std::string> names = {
      "or", "and", "sbbd", "exactk", "b1", "b1-binsearch", "greedy", "opt"};
  return names;
}

std::unique_ptr<Strategy> make_strategy(const std::string& name,
                                        const Instance& inst,
                                        const ValueVector& values) {
  if (name == "or") {
    return std::make_unique<RatioOrderStrategy>(inst, values, true);
  }
  if (name == "and") {
    return std::make_unique<RatioOrderStrategy>(inst, values, false);
  }
  if (name == "sbbd") return std::make_unique<SbbdStrategy>(inst, values);
  if (name == "exactk") {
    return std::make_unique<ExactlyKStrategy>(inst, values);
  }
  if (name == "b1") return std::make_unique<BlockSweepStrategy>(inst, values);
  if (name == "b1-binsearch") {
    return std::make_unique<BlockBinarySearchStrategy>(inst, values);
  }
  if (name == "greedy") return std::make_unique<GreedyStrategy>(inst, values);
  if (name == "opt") {
    throw ParseError(
        "strategy \"opt\" is the optimal tree; it is computed by the exact "
        "solver, not by a stepping rule");
  }
  throw ParseError("unknown strategy \"" + name + "\"");
}

}  // namespace sbfe
