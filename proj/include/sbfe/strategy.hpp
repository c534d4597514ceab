#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sbfe/instance.hpp"
#include "sbfe/partial_assignment.hpp"
#include "sbfe/value_vector.hpp"

namespace sbfe {

// One move of an evaluation strategy: either test a variable or stop with
// the function value.
struct StrategyStep {
  enum class Kind { test, done };

  Kind kind;
  int variable = -1;  // valid when kind == test
  int value = -1;     // valid when kind == done

  static StrategyStep test(int variable) {
    return StrategyStep{Kind::test, variable, -1};
  }
  static StrategyStep done(int value) {
    return StrategyStep{Kind::done, -1, value};
  }
  bool is_test() const { return kind == Kind::test; }
  bool is_done() const { return kind == Kind::done; }
};

// An adaptive evaluation strategy, exposed as a pure function of the
// observed outcomes: step(b) returns the next test given that b records
// exactly the outcomes of the tests the strategy itself requested so far.
// Strategies that conceptually carry state across tests (the block-sweep
// algorithms) recompute it by replaying their decision sequence against b,
// which keeps every implementation deterministic and trivially resumable.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual StrategyStep step(const PartialAssignment& b) const = 0;
  virtual const std::string& name() const = 0;
};

// Variable indices sorted by cost/prob ratio, stable with ties broken by
// ascending index. The "or" ordering uses c_i / p_i (cheap likely-ones
// first); the "and" ordering uses c_i / (1 - p_i).
std::vector<int> ratio_order_or(const Instance& inst);
std::vector<int> ratio_order_and(const Instance& inst);

// One step of the exact k-of-n algorithm: decide "are there >= k ones among
// the untested variables, given we still need k of them?". The caller keeps
// k up to date (decrement per observed 1). Emits Done(1) when k <= 0,
// Done(0) when k exceeds the number of untested variables, and otherwise
// tests the pigeonhole variable common to the first k of the c/p ordering
// and the first m-k+1 of the c/(1-p) ordering (m = untested count); such a
// variable always exists since k + (m-k+1) > m. Ties inside the
// intersection resolve to the variable earliest in the c/p ordering.
StrategyStep sbbd_step(int k, const PartialAssignment& b,
                       const Instance& inst);

// One step of the exactly-k variant ("are there exactly k ones among the
// untested variables?"). Base cases: Done(0) when k = -1 (overshot) or
// k > m, Done(1) when k = 0 and nothing is untested. The candidate windows
// widen to the first min(k+1, m) of the c/p ordering — k+1 keeps the window
// nonempty at k = 0, where the all-remaining-zero question still needs
// tests — and the first m-k+1 of the c/(1-p) ordering.
StrategyStep exactly_k_step(int k, const PartialAssignment& b,
                            const Instance& inst);

// Diagnostic for the block strategies: evaluates the full assignment in the
// low bits of x live and reports how many threshold questions (k-of-n
// subroutine launches) were opened before the certificate fired, alongside
// the tests charged and the certified value. `binary_search` selects the
// bisection schedule instead of the sweep over blocks 2..B.
struct BlockTrace {
  int probes;
  int tests;
  int value;
};

BlockTrace trace_block_strategy(const Instance& inst,
                                const ValueVector& values, std::uint32_t x,
                                bool binary_search);

// Every strategy identifier the tool accepts, in canonical order: "or",
// "and", "sbbd", "exactk", "b1", "b1-binsearch", "greedy", "opt". All but
// "opt" are built by make_strategy; "opt" stands for the optimal tree,
// which the exact solver computes and so is resolved at the CLI level.
const std::vector<std::string>& strategy_names();

// Builds the named strategy for the given problem. Throws ParseError for an
// unknown name and ShapeError when the value vector does not fit the
// algorithm (sbbd needs at most two blocks, exactk a single 1-entry).
std::unique_ptr<Strategy> make_strategy(const std::string& name,
                                        const Instance& inst,
                                        const ValueVector& values);

}  // namespace sbfe
