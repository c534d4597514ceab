#include "sbfe/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sbfe/errors.hpp"

namespace sbfe {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& require_field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) {
    throw ParseError(std::string("missing field \"") + name + "\"");
  }
  return *it;
}

int parse_n(const json& doc) {
  const json& field = require_field(doc, "n");
  if (!field.is_number_integer()) {
    throw ParseError("field \"n\" must be an integer");
  }
  const auto n = field.get<std::int64_t>();
  if (n < 1 || n > 31) {
    throw ParseError("field \"n\" must lie in [1, 31], got " +
                     field.dump());
  }
  return static_cast<int>(n);
}

std::vector<int> parse_bits(const json& doc, int n) {
  const json& field = require_field(doc, "value_vector");
  if (!field.is_array()) {
    throw ParseError("field \"value_vector\" must be an array");
  }
  if (static_cast<int>(field.size()) != n + 1) {
    throw ParseError("value_vector must have n+1 = " + std::to_string(n + 1) +
                     " entries, got " + std::to_string(field.size()));
  }
  std::vector<int> bits(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    const json& entry = field[i];
    if (!entry.is_number_integer() ||
        (entry.get<std::int64_t>() != 0 && entry.get<std::int64_t>() != 1)) {
      throw ParseError("value_vector[" + std::to_string(i) +
                       "] must be 0 or 1, got " + entry.dump());
    }
    bits[i] = static_cast<int>(entry.get<std::int64_t>());
  }
  return bits;
}

std::vector<double> parse_reals(const json& doc, const char* name, int n) {
  const json& field = require_field(doc, name);
  if (!field.is_array()) {
    throw ParseError(std::string("field \"") + name + "\" must be an array");
  }
  if (static_cast<int>(field.size()) != n) {
    throw ParseError(std::string(name) + " must have n = " +
                     std::to_string(n) + " entries, got " +
                     std::to_string(field.size()));
  }
  std::vector<double> values(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    const json& entry = field[i];
    if (!entry.is_number()) {
      throw ParseError(std::string(name) + "[" + std::to_string(i) +
                       "] must be a number, got " + entry.dump());
    }
    values[i] = entry.get<double>();
  }
  return values;
}

}  // namespace

Problem parse_problem_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object()) {
    throw ParseError("instance file must hold a JSON object");
  }

  const int n = parse_n(doc);
  std::vector<int> bits = parse_bits(doc, n);
  std::vector<double> costs = parse_reals(doc, "costs", n);
  std::vector<double> probs = parse_reals(doc, "probs", n);

  for (int i = 0; i < n; ++i) {
    if (!(costs[i] > 0.0)) {
      throw ParseError("costs[" + std::to_string(i) + "] must be > 0, got " +
                       doc["costs"][i].dump());
    }
    if (!(probs[i] > 0.0 && probs[i] < 1.0)) {
      throw ParseError("probs[" + std::to_string(i) +
                       "] must lie strictly inside (0, 1), got " +
                       doc["probs"][i].dump());
    }
  }

  return Problem{Instance(std::move(costs), std::move(probs)),
                 ValueVector(std::move(bits))};
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path + ": cannot open file");
  }
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_problem_json(text.str());
  } catch (const ParseError& err) {
    throw ParseError(path + ": " + err.what());
  }
}

std::string problem_to_json(const Problem& problem) {
  ordered_json doc;
  doc["n"] = problem.instance.n();
  doc["value_vector"] = problem.values.entries();
  doc["costs"] = problem.instance.costs();
  doc["probs"] = problem.instance.probs();
  return doc.dump(2) + "\n";
}

void save_problem(const Problem& problem, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError(path + ": cannot open file for writing");
  }
  out << problem_to_json(problem);
  if (!out) {
    throw ParseError(path + ": write failed");
  }
}

}  // namespace sbfe
