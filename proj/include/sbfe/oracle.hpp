#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sbfe/decision_tree.hpp"
#include "sbfe/instance.hpp"
#include "sbfe/strategy.hpp"
#include "sbfe/value_vector.hpp"

namespace sbfe {

// Exact computations below enumerate 3^n states or 2^n assignments; this
// cap keeps them within desk-scale memory/time. Larger n must go through
// monte_carlo_cost.
inline constexpr int kDefaultEnumerationLimit = 14;

struct OptResult {
  double cost;
  DecisionTree tree;
};

// Minimum expected evaluation cost, by memoized recursion over partial
// assignments: OPT(b) = 0 at certificates, else
// min_i c_i + p_i OPT(b{i<-1}) + (1-p_i) OPT(b{i<-0}) over untested i.
// Ties take the lowest variable index, so the returned tree is canonical.
OptResult opt_expected_cost(const Instance& inst, const ValueVector& values,
                            int limit = kDefaultEnumerationLimit);

// Minimum possible ell-cost sum_{x: f(x)=ell} C(A,x) p(x) over evaluation
// strategies A (strategies that stop exactly at certificates). Same
// recursion with the test charge weighted by the absolute probability mass
// of extensions of b whose function value is ell; the mass comes from the
// ones-count distribution of the untested variables, one O(m^2) pass per
// state. The two values L_0 + L_1 bound the best verification cost, which
// can undercut every single evaluation tree.
OptResult l_optimal_cost(int ell, const Instance& inst,
                         const ValueVector& values,
                         int limit = kDefaultEnumerationLimit);

// Exact per-strategy accounting, by enumeration of all 2^n assignments in
// mask order with fixed-order summation (so reruns are bit-identical).
struct CostReport {
  std::string strategy;
  double expected_cost = 0.0;
  double zero_cost = 0.0;  // sum over f(x)=0 assignments of cost * p(x)
  double one_cost = 0.0;   // sum over f(x)=1 assignments
  int tests_max = 0;       // worst-case number of tests
  int n = 0;
  int B = 0;
};

// Per-assignment detail, optionally collected by strategy_expected_cost.
struct EvaluationRecord {
  std::uint32_t assignment;
  double probability;
  double cost;
  int tests;
  int value;  // f(x) as declared by the strategy's Done step
};

// Runs `strategy` against every assignment. Throws std::logic_error (with
// the offending assignment in the message) if the strategy repeats a test,
// overruns n steps, or announces a value that contradicts the value vector.
CostReport strategy_expected_cost(const Strategy& strategy,
                                  const Instance& inst,
                                  const ValueVector& values,
                                  int limit = kDefaultEnumerationLimit,
                                  std::vector<EvaluationRecord>* trace = nullptr);

// Unrolls a stepping strategy into an explicit tree by walking every
// reachable outcome branch. Node count is bounded by 2^{n+1} - 1.
DecisionTree materialize_tree(const Strategy& strategy, const Instance& inst,
                              const ValueVector& values,
                              int limit = kDefaultEnumerationLimit);

struct MonteCarloResult {
  double mean;
  double std_error;  // sample standard deviation / sqrt(trials)
  double zero_mean;  // mean of cost * [f(x) = 0] over the samples
  double one_mean;
  int tests_max;
};

// Samples assignments from the product distribution (mt19937_64 seeded as
// given, explicit bit mappings only) and averages the strategy's realized
// cost. Deterministic for a fixed seed on every platform.
MonteCarloResult monte_carlo_cost(const Strategy& strategy,
                                  const Instance& inst,
                                  const ValueVector& values,
                                  std::int64_t trials, std::uint64_t seed);

// Expected cost of the tree that tests `root` first, tests `zero_child`
// whenever the root came up 0, and continues optimally everywhere else.
// This is the restriction of the optimal-cost recursion to a pinned first
// level; with the best (root, zero_child) pair it reproduces the optimum.
double pinned_pair_cost(int root, int zero_child, const Instance& inst,
                        const ValueVector& values,
                        int limit = kDefaultEnumerationLimit);

}  // namespace sbfe
