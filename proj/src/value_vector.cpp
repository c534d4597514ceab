#include "sbfe/value_vector.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace sbfe {

ValueVector::ValueVector(std::vector<int> entries)
    : entries_(std::move(entries)) {
  if (entries_.size() < 2) {
    throw std::invalid_argument(
        "value vector needs n+1 >= 2 entries, got " +
        std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != 0 && entries_[i] != 1) {
      throw std::invalid_argument("value_vector[" + std::to_string(i) +
                                  "] must be 0 or 1");
    }
  }
  block_of_count_.resize(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (blocks_.empty() || blocks_.back().value != entries_[i]) {
      blocks_.push_back(Block{static_cast<int>(i), 1, entries_[i]});
    } else {
      ++blocks_.back().length;
    }
    block_of_count_[i] = static_cast<int>(blocks_.size()) - 1;
  }
}

ValueVector ValueVector::k_of_n(int k, int n) {
  if (n < 1 || k < 0 || k > n) {
    throw std::invalid_argument("k_of_n requires 0 <= k <= n, n >= 1");
  }
  std::vector<int> entries(n + 1, 1);
  for (int i = 0; i < k; ++i) entries[i] = 0;
  return ValueVector(std::move(entries));
}

ValueVector ValueVector::parity(int n, int value_at_zero) {
  std::vector<int> entries(n + 1);
  for (int i = 0; i <= n; ++i) entries[i] = (i & 1) ? 1 - value_at_zero : value_at_zero;
  return ValueVector(std::move(entries));
}

ValueVector ValueVector::constant(int value, int n) {
  return ValueVector(std::vector<int>(n + 1, value));
}

int evaluate_assignment(std::uint32_t x, const ValueVector& values) {
  const std::uint32_t mask =
      values.n() >= 32 ? ~0u : (std::uint32_t{1} << values.n()) - 1;
  return values.entry(std::popcount(x & mask));
}

}  // namespace sbfe
