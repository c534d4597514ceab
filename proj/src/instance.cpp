#include "sbfe/instance.hpp"

#include <stdexcept>
#include <string>

namespace sbfe {

Instance::Instance(std::vector<double> costs, std::vector<double> probs)
    : costs_(std::move(costs)), probs_(std::move(probs)) {
  if (costs_.empty()) {
    throw std::invalid_argument("instance needs at least one variable");
  }
  if (costs_.size() != probs_.size()) {
    throw std::invalid_argument(
        "costs has " + std::to_string(costs_.size()) + " entries but probs has " +
        std::to_string(probs_.size()));
  }
  for (std::size_t i = 0; i < costs_.size(); ++i) {
    if (!(costs_[i] > 0.0)) {
      throw std::invalid_argument("costs[" + std::to_string(i) +
                                  "] must be > 0");
    }
    if (!(probs_[i] > 0.0 && probs_[i] < 1.0)) {
      throw std::invalid_argument("probs[" + std::to_string(i) +
                                  "] must lie strictly inside (0, 1)");
    }
  }
}

double assignment_probability(std::uint32_t x, const Instance& inst) {
  double p = 1.0;
  for (int i = 0; i < inst.n(); ++i) {
    p *= (x >> i & 1u) ? inst.prob(i) : 1.0 - inst.prob(i);
  }
  return p;
}

}  // namespace sbfe
