#include "sbfe/partial_assignment.hpp"

#include <stdexcept>
#include <string>

namespace sbfe {

PartialAssignment::PartialAssignment(int n) : slots_(n, Slot::unknown) {
  if (n < 1) {
    throw std::invalid_argument("partial assignment needs n >= 1 variables");
  }
}

PartialAssignment PartialAssignment::from_bits(std::uint32_t x, int n) {
  PartialAssignment b(n);
  for (int i = 0; i < n; ++i) b.set(i, (x >> i & 1u) != 0);
  return b;
}

void PartialAssignment::set(int i, bool value) {
  if (slots_[i] != Slot::unknown) {
    throw std::logic_error("variable " + std::to_string(i) +
                           " was already tested");
  }
  slots_[i] = value ? Slot::one : Slot::zero;
  ++(value ? n1_ : n0_);
}

void PartialAssignment::clear(int i) {
  if (slots_[i] == Slot::unknown) {
    throw std::logic_error("variable " + std::to_string(i) + " is not set");
  }
  --(slots_[i] == Slot::one ? n1_ : n0_);
  slots_[i] = Slot::unknown;
}

PartialAssignment PartialAssignment::with(int i, bool value) const {
  PartialAssignment copy(*this);
  copy.set(i, value);
  return copy;
}

bool PartialAssignment::extends(const PartialAssignment& weaker) const {
  if (weaker.size() != size()) return false;
  for (int i = 0; i < size(); ++i) {
    if (weaker.slots_[i] != Slot::unknown && slots_[i] != weaker.slots_[i]) {
      return false;
    }
  }
  return true;
}

std::int64_t PartialAssignment::code() const {
  // Digits: unknown=0, zero=1, one=2; the empty assignment encodes 0.
  std::int64_t code = 0;
  std::int64_t weight = 1;
  for (const Slot s : slots_) {
    switch (s) {
      case Slot::unknown: break;
      case Slot::zero: code += weight; break;
      case Slot::one: code += 2 * weight; break;
    }
    weight *= 3;
  }
  return code;
}

InducedFunction induced_function(const PartialAssignment& b,
                                 const ValueVector& values) {
  const int lo = b.num_one();
  const int hi = values.n() - b.num_zero();
  return InducedFunction{
      lo, hi, values.block_containing(lo) == values.block_containing(hi)};
}

bool is_certificate(const PartialAssignment& b, const ValueVector& values) {
  return induced_function(b, values).constant;
}

std::optional<int> certificate_value(const PartialAssignment& b,
                                     const ValueVector& values) {
  const InducedFunction window = induced_function(b, values);
  if (!window.constant) return std::nullopt;
  return values.entry(window.lo);
}

}  // namespace sbfe
