#include "sbfe/goal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sbfe {

GoalGraph::GoalGraph(const ValueVector& values)
    : n_(values.n()), blocks_(values.blocks()) {
  const std::int64_t total = n_ + 1;
  std::int64_t same_block_pairs2 = 0;  // sum of squared block sizes
  for (const Block& block : blocks_) {
    same_block_pairs2 += std::int64_t{block.length} * block.length;
  }
  goal_ = (total * total - same_block_pairs2) / 2;
}

int GoalGraph::block_of_vertex(int v) const {
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (v < blocks_[j].start + blocks_[j].length) return static_cast<int>(j);
  }
  throw std::out_of_range("vertex " + std::to_string(v) +
                          " outside 0..n");
}

std::int64_t GoalGraph::covered(int n1, int n0) const {
  // Counts still possible form the window [n1, n - n0]; an edge stays
  // uncovered exactly when both endpoints are inside it.
  const int lo = n1;
  const int hi = n_ - n0;
  const std::int64_t window = hi - lo + 1;
  std::int64_t inside2 = 0;
  for (const Block& block : blocks_) {
    const int a = std::max(lo, block.start);
    const int b = std::min(hi, block.start + block.length - 1);
    if (a <= b) {
      const std::int64_t len = b - a + 1;
      inside2 += len * len;
    }
  }
  return goal_ - (window * window - inside2) / 2;
}

GoalGraph build_goal_graph(const ValueVector& values) {
  return GoalGraph(values);
}

std::int64_t g_value(const PartialAssignment& b, const GoalGraph& graph) {
  return graph.covered(b.num_one(), b.num_zero());
}

StrategyStep greedy_step(const PartialAssignment& b, const GoalGraph& graph,
                         const ValueVector& values, const Instance& inst) {
  const std::int64_t before = graph.covered(b.num_one(), b.num_zero());
  if (before == graph.goal()) {
    return StrategyStep::done(values.entry(b.num_one()));
  }
  // The window shifts the same way whichever variable is tested, so the two
  // marginals are shared by all candidates; only (p_i, c_i) differ.
  const double gain_one =
      static_cast<double>(graph.covered(b.num_one() + 1, b.num_zero()) - before);
  const double gain_zero =
      static_cast<double>(graph.covered(b.num_one(), b.num_zero() + 1) - before);

  int best = -1;
  double best_score = 0.0;
  for (int i = 0; i < b.size(); ++i) {
    if (b.is_set(i)) continue;
    const double score =
        (inst.prob(i) * gain_one + (1.0 - inst.prob(i)) * gain_zero) /
        inst.cost(i);
    if (best < 0 || score > best_score) {
      best = i;
      best_score = score;
    }
  }
  if (best < 0 || !(best_score > 0.0)) {
    // Below the goal the window spans two blocks, so both marginals are
    // positive; reaching this line means the graph is inconsistent.
    throw std::logic_error("greedy step found no test with positive gain");
  }
  return StrategyStep::test(best);
}

GreedyStrategy::GreedyStrategy(const Instance& inst, const ValueVector& values)
    : inst_(&inst), values_(&values), graph_(values) {}

StrategyStep GreedyStrategy::step(const PartialAssignment& b) const {
  return greedy_step(b, graph_, *values_, *inst_);
}

const std::string& GreedyStrategy::name() const {
  static const std::string name = "greedy";
  return name;
}

int parity_goal_value(const ValueVector& values) {
  for (int i = 1; i <= values.n(); ++i) {
    if (values.entry(i) == values.entry(i - 1)) {
      throw std::invalid_argument(
          "parity goal needs strictly alternating entries, but "
          "value_vector[" +
          std::to_string(i - 1) + "] == value_vector[" + std::to_string(i) +
          "]");
    }
  }
  return values.n();
}

std::int64_t parity_utility(const PartialAssignment& b) {
  return b.num_zero() + b.num_one();
}

}  // namespace sbfe
