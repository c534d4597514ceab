#include "sbfe/oracle.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "sbfe/errors.hpp"
#include "sbfe/partial_assignment.hpp"
#include "sbfe/random.hpp"

namespace sbfe {
namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_limit(int n, int limit, const char* what) {
  if (n > limit) {
    throw LimitError(std::string(what) + " enumerates exactly and is capped "
                     "at n <= " + std::to_string(limit) + ", got n = " +
                     std::to_string(n) +
                     "; use monte-carlo mode for larger instances");
  }
}

std::vector<std::int64_t> pow3_table(int n) {
  std::vector<std::int64_t> pow3(n + 1);
  pow3[0] = 1;
  for (int i = 1; i <= n; ++i) pow3[i] = pow3[i - 1] * 3;
  return pow3;
}

// Memoized recursion over partial assignments for both exact solvers. The
// state index is the canonical base-3 code. Two objectives share the
// skeleton and differ in how a test at b is charged and how child values
// combine: expected cost charges c_i and mixes children by outcome
// probability, while the ell-cost objective charges c_i times the absolute
// mass of f=ell extensions and adds the children unweighted (their masses
// already carry the outcome probabilities).
class ExactSolver {
 public:
  ExactSolver(const Instance& inst, const ValueVector& values,
              std::function<double(const PartialAssignment&)> charge,
              bool weight_children)
      : inst_(inst),
        values_(values),
        charge_(std::move(charge)),
        weight_children_(weight_children),
        pow3_(pow3_table(inst.n())),
        memo_(pow3_[inst.n()], kUnset),
        best_(pow3_[inst.n()], -2) {}

  double solve(const PartialAssignment& from) {
    PartialAssignment b = from;
    return descend(b, b.code());
  }

  // Valid for states reached by a previous solve().
  DecisionTree extract_tree(const PartialAssignment& from) {
    DecisionTree tree;
    PartialAssignment b = from;
    tree.set_root(build(b, b.code(), tree));
    return tree;
  }

 private:
  double descend(PartialAssignment& b, std::int64_t code) {
    double& slot = memo_[code];
    if (!std::isnan(slot)) return slot;
    if (is_certificate(b, values_)) {
      best_[code] = -1;
      return slot = 0.0;
    }
    const double test_charge = charge_(b);
    double best_value = kInf;
    int best_variable = -1;
    for (int i = 0; i < b.size(); ++i) {
      if (b.is_set(i)) continue;
      b.set(i, true);
      const double if_one = descend(b, code + 2 * pow3_[i]);
      b.clear(i);
      b.set(i, false);
      const double if_zero = descend(b, code + pow3_[i]);
      b.clear(i);
      const double value =
          inst_.cost(i) * test_charge +
          (weight_children_
               ? inst_.prob(i) * if_one + (1.0 - inst_.prob(i)) * if_zero
               : if_one + if_zero);
      if (value < best_value) {  // strict, so ties keep the lowest index
        best_value = value;
        best_variable = i;
      }
    }
    best_[code] = static_cast<std::int8_t>(best_variable);
    return slot = best_value;
  }

  int build(PartialAssignment& b, std::int64_t code, DecisionTree& tree) {
    const int choice = best_[code];
    if (choice == -2) throw std::logic_error("tree requested before solve");
    if (choice < 0) return tree.add_leaf(values_.entry(b.num_one()));
    b.set(choice, false);
    const int zero_child = build(b, code + pow3_[choice], tree);
    b.clear(choice);
    b.set(choice, true);
    const int one_child = build(b, code + 2 * pow3_[choice], tree);
    b.clear(choice);
    return tree.add_test(choice, zero_child, one_child);
  }

  const Instance& inst_;
  const ValueVector& values_;
  std::function<double(const PartialAssignment&)> charge_;
  bool weight_children_;
  std::vector<std::int64_t> pow3_;
  std::vector<double> memo_;
  std::vector<std::int8_t> best_;
};

// Absolute probability mass of the extensions of b whose function value is
// ell: the fixed variables contribute their product, the untested ones a
// ones-count distribution accumulated in one O(m^2) pass.
double extension_mass(const PartialAssignment& b, int ell,
                      const Instance& inst, const ValueVector& values) {
  double fixed = 1.0;
  std::vector<double> untested;
  untested.reserve(b.num_unknown());
  for (int i = 0; i < b.size(); ++i) {
    switch (b.slot(i)) {
      case Slot::one: fixed *= inst.prob(i); break;
      case Slot::zero: fixed *= 1.0 - inst.prob(i); break;
      case Slot::unknown: untested.push_back(inst.prob(i)); break;
    }
  }
  std::vector<double> pmf(untested.size() + 1, 0.0);
  pmf[0] = 1.0;
  for (std::size_t added = 0; added < untested.size(); ++added) {
    const double p = untested[added];
    for (std::size_t t = added + 1; t > 0; --t) {
      pmf[t] = pmf[t] * (1.0 - p) + pmf[t - 1] * p;
    }
    pmf[0] *= 1.0 - p;
  }
  double mass = 0.0;
  for (std::size_t t = 0; t < pmf.size(); ++t) {
    if (values.entry(b.num_one() + static_cast<int>(t)) == ell) {
      mass += pmf[t];
    }
  }
  return fixed * mass;
}

// Drives one full evaluation; shared by the exact and sampled accountings.
struct RunOutcome {
  double cost;
  int tests;
  int declared;
};

RunOutcome run_strategy(const Strategy& strategy, const Instance& inst,
                        std::uint32_t x) {
  PartialAssignment b(inst.n());
  RunOutcome out{0.0, 0, -1};
  while (true) {
    const StrategyStep step = strategy.step(b);
    if (step.is_done()) {
      out.declared = step.value;
      return out;
    }
    if (out.tests >= inst.n()) {
      throw std::logic_error("strategy exceeded n tests");
    }
    b.set(step.variable, (x >> step.variable & 1u) != 0);  // throws on repeat
    out.cost += inst.cost(step.variable);
    ++out.tests;
  }
}

RunOutcome run_checked(const Strategy& strategy, const Instance& inst,
                       const ValueVector& values, std::uint32_t x) {
  try {
    const RunOutcome out = run_strategy(strategy, inst, x);
    if (out.declared != evaluate_assignment(x, values)) {
      throw std::logic_error("strategy declared value " +
                             std::to_string(out.declared) +
                             " but the function disagrees");
    }
    return out;
  } catch (const std::logic_error& err) {
    throw std::logic_error("strategy \"" + strategy.name() + "\" failed on " +
                           "assignment mask " + std::to_string(x) + ": " +
                           err.what());
  }
}

}  // namespace

OptResult opt_expected_cost(const Instance& inst, const ValueVector& values,
                            int limit) {
  check_limit(inst.n(), limit, "opt_expected_cost");
  ExactSolver solver(inst, values,
                     [](const PartialAssignment&) { return 1.0; },
                     /*weight_children=*/true);
  const PartialAssignment empty(inst.n());
  const double cost = solver.solve(empty);
  return OptResult{cost, solver.extract_tree(empty)};
}

OptResult l_optimal_cost(int ell, const Instance& inst,
                         const ValueVector& values, int limit) {
  if (ell != 0 && ell != 1) {
    throw std::invalid_argument("ell must be 0 or 1");
  }
  check_limit(inst.n(), limit, "l_optimal_cost");
  ExactSolver solver(inst, values,
                     [&](const PartialAssignment& b) {
                       return extension_mass(b, ell, inst, values);
                     },
                     /*weight_children=*/false);
  const PartialAssignment empty(inst.n());
  const double cost = solver.solve(empty);
  return OptResult{cost, solver.extract_tree(empty)};
}

CostReport strategy_expected_cost(const Strategy& strategy,
                                  const Instance& inst,
                                  const ValueVector& values, int limit,
                                  std::vector<EvaluationRecord>* trace) {
  check_limit(inst.n(), limit, "strategy_expected_cost");
  CostReport report;
  report.strategy = strategy.name();
  report.n = inst.n();
  report.B = values.block_count();
  const std::uint32_t count = std::uint32_t{1} << inst.n();
  for (std::uint32_t x = 0; x < count; ++x) {
    const RunOutcome out = run_checked(strategy, inst, values, x);
    const double p = assignment_probability(x, inst);
    (out.declared ? report.one_cost : report.zero_cost) += out.cost * p;
    report.tests_max = std::max(report.tests_max, out.tests);
    if (trace) {
      trace->push_back(EvaluationRecord{x, p, out.cost, out.tests,
                                        out.declared});
    }
  }
  // A single final addition keeps the split exactly additive.
  report.expected_cost = report.zero_cost + report.one_cost;
  return report;
}

DecisionTree materialize_tree(const Strategy& strategy, const Instance& inst,
                              const ValueVector& values, int limit) {
  check_limit(inst.n(), limit, "materialize_tree");
  DecisionTree tree;
  PartialAssignment b(inst.n());
  const std::function<int()> build = [&]() -> int {
    const StrategyStep step = strategy.step(b);
    if (step.is_done()) {
      // A sound strategy stops exactly when the outcomes certify the value.
      const std::optional<int> certified = certificate_value(b, values);
      if (!certified || *certified != step.value) {
        throw std::logic_error("strategy \"" + strategy.name() +
                               "\" stopped without a certificate");
      }
      return tree.add_leaf(step.value);
    }
    const int variable = step.variable;
    b.set(variable, false);
    const int zero_child = build();
    b.clear(variable);
    b.set(variable, true);
    const int one_child = build();
    b.clear(variable);
    return tree.add_test(variable, zero_child, one_child);
  };
  tree.set_root(build());
  return tree;
}

MonteCarloResult monte_carlo_cost(const Strategy& strategy,
                                  const Instance& inst,
                                  const ValueVector& values,
                                  std::int64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::mt19937_64 rng(seed);
  double sum = 0.0;
  double sum_sq = 0.0;
  double zero_sum = 0.0;
  double one_sum = 0.0;
  int tests_max = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    std::uint32_t x = 0;
    for (int i = 0; i < inst.n(); ++i) {
      if (uniform01(rng) < inst.prob(i)) x |= std::uint32_t{1} << i;
    }
    const RunOutcome out = run_checked(strategy, inst, values, x);
    sum += out.cost;
    sum_sq += out.cost * out.cost;
    (out.declared ? one_sum : zero_sum) += out.cost;
    tests_max = std::max(tests_max, out.tests);
  }
  const double t_count = static_cast<double>(trials);
  const double mean = sum / t_count;
  double std_error = 0.0;
  if (trials > 1) {
    const double variance =
        std::max(0.0, (sum_sq - sum * sum / t_count) / (t_count - 1));
    std_error = std::sqrt(variance / t_count);
  }
  return MonteCarloResult{mean, std_error, zero_sum / t_count,
                          one_sum / t_count, tests_max};
}

double pinned_pair_cost(int root, int zero_child, const Instance& inst,
                        const ValueVector& values, int limit) {
  check_limit(inst.n(), limit, "pinned_pair_cost");
  if (root < 0 || root >= inst.n() || zero_child < 0 ||
      zero_child >= inst.n() || root == zero_child) {
    throw std::invalid_argument("pinned pair needs two distinct variables");
  }
  ExactSolver solver(inst, values,
                     [](const PartialAssignment&) { return 1.0; },
                     /*weight_children=*/true);
  PartialAssignment b(inst.n());
  b.set(root, true);
  const double after_one = solver.solve(b);
  b.clear(root);
  b.set(root, false);
  b.set(zero_child, true);
  const double after_zero_one = solver.solve(b);
  b.clear(zero_child);
  b.set(zero_child, false);
  const double after_zero_zero = solver.solve(b);

  const double p_root = inst.prob(root);
  const double p_child = inst.prob(zero_child);
  return inst.cost(root) + p_root * after_one +
         (1.0 - p_root) *
             (inst.cost(zero_child) + p_child * after_zero_one +
              (1.0 - p_child) * after_zero_zero);
}

}  // namespace sbfe
