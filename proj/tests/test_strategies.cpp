// Strategy-layer tests: ratio orderings, the pigeonhole threshold and
// exactly-k steppers, the block strategies (sweep and binary search), and
// the cost guarantees of each against the exact optimum.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbfe/errors.hpp"
#include "sbfe/generator.hpp"
#include "sbfe/oracle.hpp"
#include "sbfe/strategy.hpp"

using namespace sbfe;

namespace {

const Instance& gap_instance() {
  static const Instance inst({5000, 6000, 3000, 5000}, {0.1, 0.3, 0.9, 0.8});
  return inst;
}

const ValueVector& gap_values() {
  static const ValueVector v({0, 1, 1, 0, 0});
  return v;
}

// Full step sequence of a strategy on assignment x: the variables tested in
// order, then the declared value.
struct RunLog {
  std::vector<int> tests;
  int value = -1;
};

RunLog run_log(const Strategy& strategy, const Instance& inst,
               std::uint32_t x) {
  RunLog log;
  PartialAssignment b(inst.n());
  for (int guard = 0; guard <= inst.n(); ++guard) {
    const StrategyStep step = strategy.step(b);
    if (step.is_done()) {
      log.value = step.value;
      return log;
    }
    log.tests.push_back(step.variable);
    b.set(step.variable, (x >> step.variable & 1u) != 0);
  }
  throw std::logic_error("strategy did not terminate");
}

Problem random_k_of_n(int n, int k, std::mt19937_64& rng) {
  GeneratorConfig config;
  config.n = n;
  config.blocks = 2;  // value vector replaced below
  Problem problem = random_problem(config, rng);
  return Problem{problem.instance, ValueVector::k_of_n(k, n)};
}

}  // namespace

TEST_CASE("ratio orderings") {
  const std::vector<int> or_order = ratio_order_or(gap_instance());
  CHECK(or_order == std::vector<int>{2, 3, 1, 0});
  const std::vector<int> and_order = ratio_order_and(gap_instance());
  CHECK(and_order == std::vector<int>{0, 1, 3, 2});

  // Ties break by ascending index.
  const Instance tied({2.0, 1.0, 2.0}, {0.5, 0.25, 0.5});
  CHECK(ratio_order_or(tied) == std::vector<int>{0, 1, 2});
}

TEST_CASE("threshold stepper base cases and pigeonhole pick") {
  const Instance& inst = gap_instance();
  PartialAssignment b(4);
  CHECK(sbbd_step(0, b, inst).is_done());
  CHECK(sbbd_step(0, b, inst).value == 1);
  CHECK(sbbd_step(-2, b, inst).value == 1);
  CHECK(sbbd_step(5, b, inst).value == 0);

  // k=2, all four untested: first 2 of the c/p order {2,3} meet the first
  // 3 of the c/(1-p) order {0,1,3} only at variable 3.
  const StrategyStep pick = sbbd_step(2, b, inst);
  REQUIRE(pick.is_test());
  CHECK(pick.variable == 3);

  // With variable 3 consumed, k=2 against m=3: {2,1} meets {0,1} at 1.
  b.set(3, true);
  const StrategyStep second = sbbd_step(2, b, inst);
  REQUIRE(second.is_test());
  CHECK(second.variable == 1);
}

TEST_CASE("exactly-k stepper base cases") {
  const Instance& inst = gap_instance();
  PartialAssignment b(4);
  CHECK(exactly_k_step(-1, b, inst).value == 0);
  CHECK(exactly_k_step(5, b, inst).value == 0);

  const PartialAssignment all_set = PartialAssignment::from_bits(0b0101, 4);
  CHECK(exactly_k_step(0, all_set, inst).value == 1);

  // k=0 with untested variables left must keep testing (a later 1 would
  // break "exactly zero ones remain"); the c/p-cheapest variable is 2.
  const StrategyStep step = exactly_k_step(0, b, inst);
  REQUIRE(step.is_test());
  CHECK(step.variable == 2);
}

TEST_CASE("block strategies on the gap instance") {
  const std::unique_ptr<Strategy> sweep =
      make_strategy("b1", gap_instance(), gap_values());
  const std::unique_ptr<Strategy> search =
      make_strategy("b1-binsearch", gap_instance(), gap_values());

  // x1=1, rest 0 (ones-count 1, f=1): both schedules walk x3 x4 x2 x1.
  RunLog log = run_log(*sweep, gap_instance(), 0b0001);
  CHECK(log.tests == std::vector<int>{2, 3, 1, 0});
  CHECK(log.value == 1);
  log = run_log(*search, gap_instance(), 0b0001);
  CHECK(log.tests == std::vector<int>{2, 3, 1, 0});
  CHECK(log.value == 1);

  // All ones (f=0): x3 x2 x4 certify without ever testing x1.
  log = run_log(*sweep, gap_instance(), 0b1111);
  CHECK(log.tests == std::vector<int>{2, 1, 3});
  CHECK(log.value == 0);
  log = run_log(*search, gap_instance(), 0b1111);
  CHECK(log.tests == std::vector<int>{2, 1, 3});
  CHECK(log.value == 0);
}

TEST_CASE("every strategy answers correctly on every assignment") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      GeneratorConfig config;
      config.n = n;
      config.blocks = 1 + static_cast<int>(rng() % (n + 1));
      const Problem problem = random_problem(config, rng);
      for (const char* name : {"or", "and", "b1", "b1-binsearch", "greedy"}) {
        const std::unique_ptr<Strategy> strategy =
            make_strategy(name, problem.instance, problem.values);
        // strategy_expected_cost validates the declared value against the
        // value vector on all 2^n assignments and rejects repeated tests.
        const CostReport report = strategy_expected_cost(
            *strategy, problem.instance, problem.values);
        CHECK(report.expected_cost == report.zero_cost + report.one_cost);
        CHECK(report.tests_max <= n);
      }
    }
  }
}

TEST_CASE("threshold strategy matches the optimum on k-of-n") {
  std::mt19937_64 rng(17);
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int rep = 0; rep < 5; ++rep) {
        const Problem problem = random_k_of_n(n, k, rng);
        const std::unique_ptr<Strategy> strategy =
            make_strategy("sbbd", problem.instance, problem.values);
        const double cost =
            strategy_expected_cost(*strategy, problem.instance, problem.values)
                .expected_cost;
        const double best =
            opt_expected_cost(problem.instance, problem.values).cost;
        worst = std::max(worst, std::abs(cost - best) / best);
      }
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("exactly-k strategy matches the optimum") {
  std::mt19937_64 rng(23);
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<int> entries(n + 1, 0);
      entries[k] = 1;
      const ValueVector values(entries);
      for (int rep = 0; rep < 5; ++rep) {
        GeneratorConfig config;
        config.n = n;
        const Problem base = random_problem(config, rng);
        const std::unique_ptr<Strategy> strategy =
            make_strategy("exactk", base.instance, values);
        const double cost =
            strategy_expected_cost(*strategy, base.instance, values)
                .expected_cost;
        const double best = opt_expected_cost(base.instance, values).cost;
        worst = std::max(worst, std::abs(cost - best) / best);
      }
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("block sweep stays within (B-1) times the optimum") {
  std::mt19937_64 rng(31);
  for (int n = 3; n <= 6; ++n) {
    for (int blocks = 2; blocks <= std::min(5, n + 1); ++blocks) {
      for (int rep = 0; rep < 6; ++rep) {
        GeneratorConfig config;
        config.n = n;
        config.blocks = blocks;
        const Problem problem = random_problem(config, rng);
        const double best =
            opt_expected_cost(problem.instance, problem.values).cost;
        for (const char* name : {"b1", "b1-binsearch"}) {
          const std::unique_ptr<Strategy> strategy =
              make_strategy(name, problem.instance, problem.values);
          const double cost = strategy_expected_cost(
                                  *strategy, problem.instance, problem.values)
                                  .expected_cost;
          CHECK(cost <= (blocks - 1) * best + 1e-9 * best);
        }
      }
    }
  }
}

TEST_CASE("binary search opens at most ceil(log2 B) threshold questions") {
  // Five blocks on four variables: value vector alternates every count.
  const ValueVector values({0, 1, 0, 1, 0});
  const Instance inst({3, 5, 7, 11}, {0.4, 0.6, 0.3, 0.7});
  int sweep_max = 0;
  int search_max = 0;
  for (std::uint32_t x = 0; x < 16; ++x) {
    const BlockTrace sweep = trace_block_strategy(inst, values, x, false);
    const BlockTrace search = trace_block_strategy(inst, values, x, true);
    CHECK(sweep.value == evaluate_assignment(x, values));
    CHECK(search.value == evaluate_assignment(x, values));
    CHECK(sweep.tests <= 4);
    CHECK(search.tests <= 4);
    sweep_max = std::max(sweep_max, sweep.probes);
    search_max = std::max(search_max, search.probes);
  }
  // ceil(log2 5) = 3; the sweep needs all B-1 = 4 in the worst case.
  CHECK(search_max == 3);
  CHECK(sweep_max == 4);

  std::mt19937_64 rng(41);
  for (int n = 2; n <= 7; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      GeneratorConfig config;
      config.n = n;
      config.blocks = 2 + static_cast<int>(rng() % n);
      const Problem problem = random_problem(config, rng);
      const int bound = static_cast<int>(
          std::ceil(std::log2(problem.values.block_count())));
      for (std::uint32_t x = 0; x < (1u << n); ++x) {
        const BlockTrace trace =
            trace_block_strategy(problem.instance, problem.values, x, true);
        CHECK(trace.probes <= bound);
      }
    }
  }
}

TEST_CASE("strategy factory") {
  CHECK(strategy_names() ==
        std::vector<std::string>{"or", "and", "sbbd", "exactk", "b1",
                                 "b1-binsearch", "greedy", "opt"});
  for (const std::string& name : strategy_names()) {
    if (name == "sbbd" || name == "exactk" || name == "opt") continue;
    const std::unique_ptr<Strategy> strategy =
        make_strategy(name, gap_instance(), gap_values());
    CHECK(strategy->name() == name);
  }
  CHECK_THROWS_AS(make_strategy("nope", gap_instance(), gap_values()),
                  ParseError);
  CHECK_THROWS_AS(make_strategy("opt", gap_instance(), gap_values()),
                  ParseError);
  // Three blocks: not a threshold function.
  CHECK_THROWS_AS(make_strategy("sbbd", gap_instance(), gap_values()),
                  ShapeError);
  // Two separate 1-entries: not an exactly-k function.
  CHECK_THROWS_AS(
      make_strategy("exactk", gap_instance(), ValueVector({1, 0, 1, 0, 0})),
      ShapeError);

  const std::unique_ptr<Strategy> sbbd =
      make_strategy("sbbd", gap_instance(), ValueVector::k_of_n(2, 4));
  CHECK(sbbd->name() == "sbbd");
  const std::unique_ptr<Strategy> exactk =
      make_strategy("exactk", gap_instance(), ValueVector({0, 0, 1, 0, 0}));
  CHECK(exactk->name() == "exactk");
}

TEST_CASE("ratio strategies stop exactly at certificates") {
  // On a 1-of-n function the c/p order stops at the first 1 it sees.
  const Instance inst({4.0, 1.0, 2.0}, {0.5, 0.5, 0.5});
  const ValueVector one_of_three = ValueVector::k_of_n(1, 3);
  const std::unique_ptr<Strategy> strategy =
      make_strategy("or", inst, one_of_three);
  const RunLog log = run_log(*strategy, inst, 0b010);
  CHECK(log.tests == std::vector<int>{1});
  CHECK(log.value == 1);
  const RunLog zeros = run_log(*strategy, inst, 0b000);
  CHECK(zeros.tests == std::vector<int>{1, 2, 0});
  CHECK(zeros.value == 0);
}
