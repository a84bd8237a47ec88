#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace refl::cli {

Tree Report::to_tree() const {
  Tree t = Tree::object();
  t["command"] = command;
  t["inputs"] = inputs;
  t["results"] = results;
  t["citations"] = citations;
  return t;
}

std::string render_json(const Report& report) { return report.to_tree().dump(2) + "\n"; }

namespace {

std::string scalar(const Tree& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_scalar(const Tree& v) { return !v.is_object() && !v.is_array(); }

bool is_leaf(const Tree& v) {
  return is_scalar(v) || (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), is_scalar));
}

std::string inline_value(const Tree& v) {
  if (is_scalar(v)) return scalar(v);
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar(v[i]);
  return out + "]";
}

void emit(std::ostringstream& out, const Tree& node, int depth) {
  const std::string pad(2 * depth, ' ');
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (is_leaf(value)) {
        out << pad << key << ": " << inline_value(value) << "\n";
      } else if (value.empty()) {
        out << pad << key << ": " << (value.is_array() ? "[]" : "{}") << "\n";
      } else {
        out << pad << key << ":\n";
        emit(out, value, depth + 1);
      }
    }
    return;
  }
  for (const Tree& item : node) {
    if (is_leaf(item)) {
      out << pad << "- " << inline_value(item) << "\n";
    } else {
      out << pad << "-\n";
      emit(out, item, depth + 1);
    }
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  emit(out, report.to_tree(), 0);
  return out.str();
}

}  // namespace refl::cli
