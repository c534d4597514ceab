// Goal-function tests: the coverage utility built from the block partition,
// its monotone/submodular/certificate properties, the greedy strategy it
// drives, and the parity special case.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "sbfe/generator.hpp"
#include "sbfe/goal.hpp"
#include "sbfe/oracle.hpp"

using namespace sbfe;

namespace {

PartialAssignment from_code(std::int64_t code, int n) {
  PartialAssignment b(n);
  for (int i = 0; i < n; ++i) {
    const int digit = static_cast<int>(code % 3);
    code /= 3;
    if (digit == 1) b.set(i, false);
    if (digit == 2) b.set(i, true);
  }
  return b;
}

std::int64_t pow3(int n) {
  std::int64_t v = 1;
  while (n-- > 0) v *= 3;
  return v;
}

// Reference implementation of the utility: materialize every cross-block
// vertex pair and count the pairs with an endpoint outside the window.
std::int64_t naive_covered(const ValueVector& values, int n1, int n0) {
  const int n = values.n();
  const int lo = n1;
  const int hi = n - n0;
  std::int64_t covered = 0;
  for (int u = 0; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (values.block_containing(u) == values.block_containing(v)) continue;
      const bool u_in = lo <= u && u <= hi;
      const bool v_in = lo <= v && v <= hi;
      if (!(u_in && v_in)) ++covered;
    }
  }
  return covered;
}

// All value vectors on n variables, as bitmask over the n+1 entries.
ValueVector vector_from_mask(std::uint32_t mask, int n) {
  std::vector<int> entries(n + 1);
  for (int i = 0; i <= n; ++i) entries[i] = mask >> i & 1u;
  return ValueVector(entries);
}

}  // namespace

TEST_CASE("goal values of the standard families") {
  // Blocks 1|2|2: Q = (25 - (1+4+4))/2 = 8.
  CHECK(build_goal_graph(ValueVector({0, 1, 1, 0, 0})).goal() == 8);

  for (int n : {2, 4, 6, 8}) {
    const int k = n / 2;
    const GoalGraph graph = build_goal_graph(ValueVector::k_of_n(k, n));
    CHECK(graph.goal() == static_cast<std::int64_t>(k) * (n + 1 - k));
  }

  for (int n = 1; n <= 8; ++n) {
    const GoalGraph parity = build_goal_graph(ValueVector::parity(n));
    CHECK(parity.goal() == static_cast<std::int64_t>(n) * (n + 1) / 2);
  }

  CHECK(build_goal_graph(ValueVector::constant(1, 5)).goal() == 0);

  // n(n+1)/2 (all singleton blocks) is the largest possible goal value.
  for (int n = 1; n <= 8; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << (n + 1)); ++mask) {
      const GoalGraph graph = build_goal_graph(vector_from_mask(mask, n));
      CHECK(graph.goal() <= static_cast<std::int64_t>(n) * (n + 1) / 2);
    }
  }
}

TEST_CASE("block partition lookup") {
  const GoalGraph graph = build_goal_graph(ValueVector({0, 1, 1, 0, 0}));
  CHECK(graph.vertex_count() == 5);
  CHECK(graph.block_count() == 3);
  CHECK(graph.block_of_vertex(0) == 0);
  CHECK(graph.block_of_vertex(1) == 1);
  CHECK(graph.block_of_vertex(2) == 1);
  CHECK(graph.block_of_vertex(3) == 2);
  CHECK(graph.block_of_vertex(4) == 2);
  CHECK_THROWS_AS(graph.block_of_vertex(5), std::out_of_range);
}

TEST_CASE("utility examples") {
  const ValueVector values({0, 1, 1, 0, 0});
  const GoalGraph graph = build_goal_graph(values);

  PartialAssignment b(4);
  CHECK(g_value(b, graph) == 0);

  b.set(0, true);  // window [1,4]
  CHECK(g_value(b, graph) == 4);

  PartialAssignment c(4);
  c.set(0, false);  // window [0,3]
  CHECK(g_value(c, graph) == 3);

  // A certificate hits the goal: window [1,2] inside the middle block.
  b.set(1, false);
  b.set(3, false);
  CHECK(g_value(b, graph) == 8);
  CHECK(g_value(b, graph) == graph.goal());
}

TEST_CASE("fast coverage equals the pair-enumeration reference") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 10; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      const int blocks = 1 + static_cast<int>(rng() % (n + 1));
      const ValueVector values = random_value_vector(n, blocks, rng);
      const GoalGraph graph = build_goal_graph(values);
      for (int n1 = 0; n1 <= n; ++n1) {
        for (int n0 = 0; n0 + n1 <= n; ++n0) {
          REQUIRE(graph.covered(n1, n0) == naive_covered(values, n1, n0));
        }
      }
    }
  }
}

TEST_CASE("utility is monotone, submodular, and certifies exactly at Q") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << (n + 1)); ++mask) {
      const ValueVector values = vector_from_mask(mask, n);
      const GoalGraph graph = build_goal_graph(values);
      for (std::int64_t code = 0; code < pow3(n); ++code) {
        const PartialAssignment b = from_code(code, n);
        const std::int64_t g_b = g_value(b, graph);
        CHECK((g_b == graph.goal()) == is_certificate(b, values));
        for (int i = 0; i < n; ++i) {
          if (b.is_set(i)) continue;
          for (bool outcome : {false, true}) {
            const PartialAssignment b1 = b.with(i, outcome);
            // Monotone: more outcomes never lose coverage.
            CHECK(g_value(b1, graph) >= g_b);
            // Submodular: the same (variable, outcome) gains at least as
            // much from b as from any extension of b.
            const std::int64_t gain_b = g_value(b1, graph) - g_b;
            for (int j = 0; j < n; ++j) {
              if (b.is_set(j) || j == i) continue;
              for (bool other : {false, true}) {
                const PartialAssignment c = b.with(j, other);
                const std::int64_t gain_c =
                    g_value(c.with(i, outcome), graph) - g_value(c, graph);
                CHECK(gain_b >= gain_c);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("greedy picks the best gain-per-cost test first") {
  const Instance inst({5000, 6000, 3000, 5000}, {0.1, 0.3, 0.9, 0.8});
  const ValueVector values({0, 1, 1, 0, 0});
  const GoalGraph graph = build_goal_graph(values);

  // From the empty state the window moves [0,4] -> [1,4] on a 1 (gain 4)
  // and -> [0,3] on a 0 (gain 3), so the score is (3 + p_i)/c_i and
  // variable 2 wins with (3 + 0.9)/3000.
  PartialAssignment b(4);
  const StrategyStep first = greedy_step(b, graph, values, inst);
  REQUIRE(first.is_test());
  CHECK(first.variable == 2);

  // At a certificate the step reports the function value.
  PartialAssignment done(4);
  done.set(0, true);
  done.set(1, false);
  done.set(3, false);
  const StrategyStep stop = greedy_step(done, graph, values, inst);
  REQUIRE(stop.is_done());
  CHECK(stop.value == 1);

  // Constant functions are certificates at the empty assignment.
  const ValueVector ones = ValueVector::constant(1, 4);
  const GoalGraph trivial = build_goal_graph(ones);
  PartialAssignment empty(4);
  CHECK(greedy_step(empty, trivial, ones, inst).value == 1);
}

TEST_CASE("greedy strategy is correct and near-optimal") {
  std::mt19937_64 rng(13);
  const double tol = 1e-9;
  for (int n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      GeneratorConfig config;
      config.n = n;
      config.blocks = 1 + static_cast<int>(rng() % (n + 1));
      const Problem problem = random_problem(config, rng);
      const GreedyStrategy greedy(problem.instance, problem.values);
      const CostReport report =
          strategy_expected_cost(greedy, problem.instance, problem.values);
      const double q = static_cast<double>(
          build_goal_graph(problem.values).goal());
      if (q <= 1.0) continue;  // bound degenerates to equality
      const double best =
          opt_expected_cost(problem.instance, problem.values).cost;
      CHECK(report.expected_cost <= (std::log(q) + 1.0) * best + tol * best);
    }
  }
}

TEST_CASE("parity shortcut") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(parity_goal_value(ValueVector::parity(n)) == n);
    CHECK(parity_goal_value(ValueVector::parity(n, 1)) == n);
  }
  CHECK_THROWS_AS(parity_goal_value(ValueVector({0, 1, 1, 0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(parity_goal_value(ValueVector::constant(0, 3)),
                  std::invalid_argument);

  PartialAssignment b(5);
  CHECK(parity_utility(b) == 0);
  b.set(2, true);
  b.set(4, false);
  CHECK(parity_utility(b) == 2);
}
