#pragma once

#include <string>

#include "sbfe/instance.hpp"
#include "sbfe/value_vector.hpp"

namespace sbfe {

// One problem = the function to evaluate plus the test costs/probabilities.
struct Problem {
  Instance instance;
  ValueVector values;
};

// Parses the JSON instance format:
//   { "n": 4, "value_vector": [0,1,1,0,0], "costs": [...], "probs": [...] }
// Every violation throws ParseError with a message naming the offending
// field and index (costs[2], probs[0], ...) so CLI users can fix the file.
Problem parse_problem_json(const std::string& text);

// As above, reading from a file; the path is prefixed to any error message.
Problem load_problem(const std::string& path);

// Serializes in the canonical field order (n, value_vector, costs, probs)
// with round-trip-exact number formatting, so equal problems always produce
// byte-identical files.
std::string problem_to_json(const Problem& problem);

void save_problem(const Problem& problem, const std::string& path);

}  // namespace sbfe
