#pragma once

#include <random>

#include "sbfe/io.hpp"
#include "sbfe/value_vector.hpp"

namespace sbfe {

struct GeneratorConfig {
  int n = 4;
  int blocks = 2;  // exact block count of the generated value vector
  double cost_min = 100.0;
  double cost_max = 10000.0;
  double prob_min = 0.05;  // clipped to [0.01, 0.99] before sampling
  double prob_max = 0.95;
};

// Value vector with exactly `blocks` maximal runs: the run boundaries are a
// uniform (blocks-1)-subset of {1..n}, the first run's value a fair bit.
// Requires 1 <= blocks <= n+1.
ValueVector random_value_vector(int n, int blocks, std::mt19937_64& rng);

// Fully random problem per the config. Costs are uniform in the cost range,
// probabilities uniform in the prob range clipped to [0.01, 0.99]. All
// randomness flows through `rng`, so a fixed seed fixes the problem.
Problem random_problem(const GeneratorConfig& config, std::mt19937_64& rng);

}  // namespace sbfe
