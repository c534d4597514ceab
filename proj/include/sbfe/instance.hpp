#pragma once

#include <cstdint>
#include <vector>

namespace sbfe {

// Per-variable test costs and success probabilities. Variables are indexed
// 0..n-1; outcomes are independent, x_i = 1 with probability p_i. Costs must
// be strictly positive and probabilities strictly inside (0,1) so that every
// test carries real cost and neither outcome is ever certain.
class Instance {
 public:
  Instance(std::vector<double> costs, std::vector<double> probs);

  int n() const { return static_cast<int>(costs_.size()); }
  double cost(int i) const { return costs_[i]; }
  double prob(int i) const { return probs_[i]; }
  const std::vector<double>& costs() const { return costs_; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> costs_;
  std::vector<double> probs_;
};

// Probability of the full assignment packed into the low n bits of `x`
// (bit i is x_i): prod p_i^{x_i} (1-p_i)^{1-x_i}. Factors are multiplied in
// index order so the result is bit-reproducible.
double assignment_probability(std::uint32_t x, const Instance& inst);

}  // namespace sbfe
