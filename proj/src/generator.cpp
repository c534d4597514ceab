#include "sbfe/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sbfe/random.hpp"

namespace sbfe {

ValueVector random_value_vector(int n, int blocks, std::mt19937_64& rng) {
  if (n < 1 || blocks < 1 || blocks > n + 1) {
    throw std::invalid_argument("need 1 <= blocks <= n+1, got blocks=" +
                                std::to_string(blocks) + " for n=" +
                                std::to_string(n));
  }
  // Run boundaries: a uniform (blocks-1)-subset of {1..n} via a partial
  // Fisher-Yates pass, then sorted.
  std::vector<int> positions(n);
  for (int i = 0; i < n; ++i) positions[i] = i + 1;
  std::vector<int> boundaries;
  for (int picked = 0; picked < blocks - 1; ++picked) {
    const int j =
        picked + static_cast<int>(uniform_below(rng, positions.size() - picked));
    std::swap(positions[picked], positions[j]);
    boundaries.push_back(positions[picked]);
  }
  std::sort(boundaries.begin(), boundaries.end());

  std::vector<int> entries(n + 1);
  int value = static_cast<int>(uniform_below(rng, 2));
  std::size_t next_boundary = 0;
  for (int i = 0; i <= n; ++i) {
    if (next_boundary < boundaries.size() && boundaries[next_boundary] == i) {
      value = 1 - value;
      ++next_boundary;
    }
    entries[i] = value;
  }
  return ValueVector(std::move(entries));
}

Problem random_problem(const GeneratorConfig& config, std::mt19937_64& rng) {
  if (!(config.cost_min > 0.0) || config.cost_max < config.cost_min) {
    throw std::invalid_argument("cost range must satisfy 0 < min <= max");
  }
  const double prob_lo = std::max(config.prob_min, 0.01);
  const double prob_hi = std::min(config.prob_max, 0.99);
  if (prob_hi < prob_lo) {
    throw std::invalid_argument(
        "prob range is empty after clipping to [0.01, 0.99]");
  }
  ValueVector values = random_value_vector(config.n, config.blocks, rng);
  std::vector<double> costs(config.n);
  std::vector<double> probs(config.n);
  for (int i = 0; i < config.n; ++i) {
    costs[i] = uniform_in(rng, config.cost_min, config.cost_max);
  }
  for (int i = 0; i < config.n; ++i) {
    probs[i] = uniform_in(rng, prob_lo, prob_hi);
  }
  return Problem{Instance(std::move(costs), std::move(probs)),
                 std::move(values)};
}

}  // namespace sbfe
