#pragma once

#include "report.hpp"

#include <optional>
#include <string>

namespace refl::cli {

struct LatticeArgs {
  std::string family;
  int m = 1;
  std::optional<int> p;
};
Report cmd_lattice(const LatticeArgs& args);

struct IdentityArgs {
  std::string form;
  int trunc = 2;
  std::string kind = "two-reflective";
  std::optional<int> p;
  std::optional<std::string> dump;
};
Report cmd_identity(const IdentityArgs& args);

struct ClassifyArgs {
  std::string kind = "two-reflective";
  std::optional<int> p;
};
Report cmd_classify(const ClassifyArgs& args);

Report cmd_tn(int n);

/// family: "all", "nA1", "A", "D" or "AD".
Report cmd_dd(const std::string& family);

}  // namespace refl::cli
