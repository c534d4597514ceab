#pragma once

#include <cstdint>
#include <memory>

#include "sbfe/instance.hpp"
#include "sbfe/partial_assignment.hpp"
#include "sbfe/strategy.hpp"
#include "sbfe/value_vector.hpp"

namespace sbfe {

// Utility function that reduces evaluation to submodular cover. Vertices
// v_0..v_n stand for the possible ones-counts, partitioned by the blocks of
// the value vector; every cross-block pair is an edge. A partial assignment
// covers the edges incident to the counts its window [N1, n-N0] has ruled
// out, so the goal value Q (all cross-block pairs) is reached exactly when
// the window fits inside one block — i.e. exactly at certificates. Edges are
// counted from block sizes, never materialized.
class GoalGraph {
 public:
  explicit GoalGraph(const ValueVector& values);

  int vertex_count() const { return n_ + 1; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  // 0-based partition index of vertex v (v = a ones-count).
  int block_of_vertex(int v) const;

  // Q: total number of cross-block pairs.
  std::int64_t goal() const { return goal_; }

  // g for a window of still-possible ones-counts [N1, n - N0]; monotone and
  // submodular in the tested set, g = Q iff the window is within one block.
  std::int64_t covered(int n1, int n0) const;

 private:
  int n_;
  std::vector<Block> blocks_;
  std::int64_t goal_;
};

GoalGraph build_goal_graph(const ValueVector& values);

std::int64_t g_value(const PartialAssignment& b, const GoalGraph& graph);

// One step of adaptive greedy on g: test the untested variable maximizing
// (p_i * (g after a 1) + (1-p_i) * (g after a 0) - g(b)) / c_i, ties to the
// lowest index; Done(R[N1]) once g(b) = Q. Both marginals depend on i only
// through (p_i, c_i) — the window moves the same way whichever variable is
// tested — so the window arithmetic is done once per call, not per
// candidate. Throws std::logic_error if no candidate has positive gain
// while g < Q (impossible for a correctly built graph).
StrategyStep greedy_step(const PartialAssignment& b, const GoalGraph& graph,
                         const ValueVector& values, const Instance& inst);

class GreedyStrategy final : public Strategy {
 public:
  GreedyStrategy(const Instance& inst, const ValueVector& values);
  StrategyStep step(const PartialAssignment& b) const override;
  const std::string& name() const override;

 private:
  const Instance* inst_;
  const ValueVector* values_;
  GoalGraph graph_;
};

// For parity-family vectors (entries strictly alternating) the generic
// graph goal is n(n+1)/2, but the far smaller utility N0 + N1 with goal n
// also works: parity is evaluated only by testing everything. Returns n;
// rejects vectors that are not parity or its complement.
int parity_goal_value(const ValueVector& values);

// The alternative parity utility g(b) = N0(b) + N1(b).
std::int64_t parity_utility(const PartialAssignment& b);

}  // namespace sbfe
