#pragma once

#include "refl/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace refl::cli {

using Tree = nlohmann::ordered_json;

/// Output of one command. Every rational inside `results` is stored as a
/// "num/den" string, so both renderers are exact.
struct Report {
  std::string command;
  Tree inputs = Tree::object();
  Tree results = Tree::object();
  std::vector<std::string> citations;

  Tree to_tree() const;
};

inline Tree exact(const Rational& x) { return to_fraction_string(x); }

std::string render_json(const Report& report);
std::string render_text(const Report& report);

/// Bad flags, malformed form specs or lattice names; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace refl::cli
