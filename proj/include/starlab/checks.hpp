#pragma once

#include <string>
#include <vector>

namespace starlab {

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// One named identity that was re-verified.
struct Check {
  std::string name;
  bool ok;
};

using Checks = std::vector<Check>;

inline bool all_ok(const Checks& cs) {
  for (const auto& c : cs)
    if (!c.ok) return false;
  return true;
}

/// Names of the failed checks, comma separated ("" when all pass).
inline std::string failures(const Checks& cs) {
  std::string out;
  for (const auto& c : cs) {
    if (c.ok) continue;
    if (!out.empty()) out += ", ";
    out += c.name;
  }
  return out;
}

}  // namespace starlab
