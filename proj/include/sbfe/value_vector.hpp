#pragma once

#include <cstdint>
#include <vector>

namespace sbfe {

// Maximal run of equal entries in a value vector. `start` is the lowest
// ones-count in the run (the alpha of the block), so consecutive blocks
// satisfy blocks[j].start = blocks[j-1].start + blocks[j-1].length.
struct Block {
  int start;
  int length;
  int value;
};

// A symmetric boolean function on n variables, stored as its value vector
// R[0..n]: f(x) = R[#ones(x)]. The block decomposition is precomputed once;
// everything downstream (certificates, goal graph, k-of-n reductions) is
// phrased in terms of it.
class ValueVector {
 public:
  // `entries` must hold n+1 entries of 0/1 with n >= 1.
  explicit ValueVector(std::vector<int> entries);

  int n() const { return static_cast<int>(entries_.size()) - 1; }
  int entry(int count) const { return entries_[count]; }
  const std::vector<int>& entries() const { return entries_; }

  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }

  // 1-based index j of the block containing ones-count `count`, i.e. the
  // unique j with alpha_j <= count < alpha_{j+1} (alpha_{B+1} = n+1).
  int block_containing(int count) const { return block_of_count_[count] + 1; }

  bool is_constant() const { return blocks_.size() == 1; }

  static ValueVector k_of_n(int k, int n);
  static ValueVector parity(int n, int value_at_zero = 0);
  static ValueVector constant(int value, int n);

 private:
  std::vector<int> entries_;
  std::vector<Block> blocks_;
  std::vector<int> block_of_count_;  // 0-based block index per ones-count
};

// f(x) for the full assignment in the low n bits of `x`.
int evaluate_assignment(std::uint32_t x, const ValueVector& values);

}  // namespace sbfe
