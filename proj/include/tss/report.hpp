#pragma once

// Named exact checks with the matrices that witness a failure.

#include <string>
#include <utility>
#include <vector>

#include "tss/linalg.hpp"

namespace tss {

struct Check {
  std::string name;
  std::string statement;  // what is asserted, in words
  bool passed = false;
  /// Recorded but not counted: a displayed formula known not to hold as
  /// printed, kept next to the corrected form.
  bool informational = false;
  std::string detail;
  std::vector<std::pair<std::string, Matrix>> evidence;
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  /// True iff every counted check passed.
  bool passed() const;
  Index failures() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  /// Appends all checks of another report.
  void merge(const Report& other);
  void sort_by_name();
};

/// A check that lhs == rhs exactly; on failure the evidence holds lhs, rhs
/// and lhs - rhs.
Check equality_check(std::string name, std::string statement, const Matrix& lhs,
                     const Matrix& rhs);
Check boolean_check(std::string name, std::string statement, bool ok, std::string detail = {});

}  // namespace tss
