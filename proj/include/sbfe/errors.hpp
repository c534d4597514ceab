#pragma once

#include <stdexcept>
#include <string>

namespace sbfe {

// Malformed instance input (bad JSON, missing field, out-of-range entry).
// The message names the offending field and index so callers can surface it.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Exact computation was requested for an n above the enumeration limit.
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// A command or strategy was applied to a value vector of the wrong shape
// (e.g. the k-of-n algorithm on a vector with more than two blocks).
class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sbfe
