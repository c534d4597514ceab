#include "sbfe/decision_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbfe {

int DecisionTree::add_leaf(int value) {
  Node node;
  node.leaf_value = value;
  nodes_.push_back(node);
  return static_cast<int>(nodes_.size()) - 1;
}

int DecisionTree::add_test(int variable, int zero_child, int one_child) {
  Node node;
  node.variable = variable;
  node.zero_child = zero_child;
  node.one_child = one_child;
  nodes_.push_back(node);
  return static_cast<int>(nodes_.size()) - 1;
}

int DecisionTree::evaluate(std::uint32_t x) const {
  int id = root_;
  while (!nodes_[id].is_leaf()) {
    id = (x >> nodes_[id].variable & 1u) ? nodes_[id].one_child
                                         : nodes_[id].zero_child;
  }
  return nodes_[id].leaf_value;
}

double DecisionTree::path_cost(std::uint32_t x, const Instance& inst) const {
  double cost = 0.0;
  int id = root_;
  while (!nodes_[id].is_leaf()) {
    cost += inst.cost(nodes_[id].variable);
    id = (x >> nodes_[id].variable & 1u) ? nodes_[id].one_child
                                         : nodes_[id].zero_child;
  }
  return cost;
}

int DecisionTree::path_length(std::uint32_t x) const {
  int length = 0;
  int id = root_;
  while (!nodes_[id].is_leaf()) {
    ++length;
    id = (x >> nodes_[id].variable & 1u) ? nodes_[id].one_child
                                         : nodes_[id].zero_child;
  }
  return length;
}

namespace {

int depth_below(const DecisionTree& tree, int id) {
  const DecisionTree::Node& node = tree.node(id);
  if (node.is_leaf()) return 0;
  return 1 + std::max(depth_below(tree, node.zero_child),
                      depth_below(tree, node.one_child));
}

bool check_node(const DecisionTree& tree, int id, int n,
                std::vector<char>& on_path) {
  if (id < 0 || id >= tree.node_count()) return false;
  const DecisionTree::Node& node = tree.node(id);
  if (node.is_leaf()) {
    return node.leaf_value == 0 || node.leaf_value == 1;
  }
  if (node.variable < 0 || node.variable >= n) return false;
  if (on_path[node.variable]) return false;  // repeated test on this path
  on_path[node.variable] = 1;
  const bool ok = check_node(tree, node.zero_child, n, on_path) &&
                  check_node(tree, node.one_child, n, on_path);
  on_path[node.variable] = 0;
  return ok;
}

}  // namespace

int DecisionTree::depth() const { return depth_below(*this, root_); }

bool DecisionTree::well_formed(int n) const {
  if (root_ < 0 || root_ >= node_count()) return false;
  std::vector<char> on_path(n, 0);
  return check_node(*this, root_, n, on_path);
}

TreeStrategy::TreeStrategy(DecisionTree tree, std::string name)
    : tree_(std::move(tree)), name_(std::move(name)) {}

StrategyStep TreeStrategy::step(const PartialAssignment& b) const {
  int id = tree_.root();
  while (!tree_.node(id).is_leaf()) {
    const DecisionTree::Node& node = tree_.node(id);
    const Slot slot = b.slot(node.variable);
    if (slot == Slot::unknown) return StrategyStep::test(node.variable);
    id = slot == Slot::one ? node.one_child : node.zero_child;
  }
  return StrategyStep::done(tree_.node(id).leaf_value);
}

const std::string& TreeStrategy::name() const { return name_; }

}  // namespace sbfe
