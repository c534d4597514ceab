#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sbfe/instance.hpp"
#include "sbfe/strategy.hpp"

namespace sbfe {

// Explicit evaluation tree: internal nodes test a variable and branch on the
// outcome, leaves carry the function value. Nodes live in a flat pool;
// children are pool indices. No variable repeats along any root-leaf path.
class DecisionTree {
 public:
  struct Node {
    int variable = -1;    // -1 marks a leaf
    int zero_child = -1;  // taken when the tested variable is 0
    int one_child = -1;
    int leaf_value = -1;  // valid at leaves

    bool is_leaf() const { return variable < 0; }
  };

  int add_leaf(int value);
  int add_test(int variable, int zero_child, int one_child);
  void set_root(int id) { root_ = id; }

  int root() const { return root_; }
  const Node& node(int id) const { return nodes_[id]; }
  int node_count() const { return static_cast<int>(nodes_.size()); }

  // Function value / accumulated test cost on the root-leaf path selected by
  // the full assignment in the low bits of `x`. Costs are added in path
  // order, matching what step-by-step execution would accumulate.
  int evaluate(std::uint32_t x) const;
  double path_cost(std::uint32_t x, const Instance& inst) const;
  int path_length(std::uint32_t x) const;

  int depth() const;

  // Verifies the structural invariants (acyclic pool, no variable repeated
  // on a path, children present on internal nodes, leaf values 0/1).
  bool well_formed(int n) const;

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
};

// Adapter running a materialized tree as a stepping strategy.
class TreeStrategy final : public Strategy {
 public:
  explicit TreeStrategy(DecisionTree tree, std::string name = "tree");
  StrategyStep step(const PartialAssignment& b) const override;
  const std::string& name() const override;
  const DecisionTree& tree() const { return tree_; }

 private:
  DecisionTree tree_;
  std::string name_;
};

}  // namespace sbfe
