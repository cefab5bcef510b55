#pragma once

#include <string>
#include <vector>

namespace gfrob {

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;
};

/// Named pass/fail checks in the order they were run.
struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string witness = "") {
    checks.push_back({std::move(name), passed, std::move(witness)});
  }
  /// Appends every check of `other`, prefixing names with `prefix`.
  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.witness});
  }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c && c->passed;
  }
};

}  // namespace gfrob
