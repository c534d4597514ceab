#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sbfe/value_vector.hpp"

namespace sbfe {

enum class Slot : std::uint8_t { zero = 0, one = 1, unknown = 2 };

// State of an evaluation in progress: each variable is 0, 1, or untested.
// The zero/one counters are maintained incrementally because nearly every
// question about a partial assignment reduces to (N0, N1): the ones-count of
// any completion lies in the window [N1, n - N0].
class PartialAssignment {
 public:
  explicit PartialAssignment(int n);

  // Full assignment from the low n bits of `x` (bit i is x_i).
  static PartialAssignment from_bits(std::uint32_t x, int n);

  int size() const { return static_cast<int>(slots_.size()); }
  Slot slot(int i) const { return slots_[i]; }
  bool is_set(int i) const { return slots_[i] != Slot::unknown; }
  int num_zero() const { return n0_; }
  int num_one() const { return n1_; }
  int num_unknown() const { return size() - n0_ - n1_; }

  // Record the outcome of testing variable i. The slot must be unknown:
  // repeating a test is a strategy bug, not a recoverable condition.
  void set(int i, bool value);
  // Forget variable i's outcome (used by enumeration code that backtracks).
  void clear(int i);

  PartialAssignment with(int i, bool value) const;

  // True when every variable set in `weaker` is set to the same value here,
  // i.e. this assignment extends `weaker`.
  bool extends(const PartialAssignment& weaker) const;

  // Canonical base-3 encoding: slot i contributes digit_i * 3^i with digits
  // unknown=0, zero=1, one=2. Dense and deterministic, used as DP memo index.
  std::int64_t code() const;

  bool operator==(const PartialAssignment& other) const {
    return slots_ == other.slots_;
  }

 private:
  std::vector<Slot> slots_;
  int n0_ = 0;
  int n1_ = 0;
};

// Ones-count window induced by b: any completion x of b has
// #ones(x) in [lo, hi]. `constant` is true when R is constant on the window,
// i.e. b already certifies the function value.
struct InducedFunction {
  int lo;
  int hi;
  bool constant;
};

InducedFunction induced_function(const PartialAssignment& b,
                                 const ValueVector& values);

bool is_certificate(const PartialAssignment& b, const ValueVector& values);

// The certified value R[N1(b)] when b is a certificate, nullopt otherwise.
std::optional<int> certificate_value(const PartialAssignment& b,
                                     const ValueVector& values);

}  // namespace sbfe
