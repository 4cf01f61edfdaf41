#include "tss/report.hpp"

#include <algorithm>

namespace tss {

bool Report::passed() const { return failures() == 0; }

Index Report::failures() const {
  return static_cast<Index>(std::count_if(checks.begin(), checks.end(), [](const Check& c) {
    return !c.passed && !c.informational;
  }));
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

void Report::sort_by_name() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
}

Check equality_check(std::string name, std::string statement, const Matrix& lhs,
                     const Matrix& rhs) {
  Check c;
  c.name = std::move(name);
  c.statement = std::move(statement);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    c.detail = "shape mismatch";
    c.evidence = {{"lhs", lhs}, {"rhs", rhs}};
    return c;
  }
  const Matrix diff = lhs - rhs;
  c.passed = is_zero(diff);
  if (!c.passed) c.evidence = {{"lhs", lhs}, {"rhs", rhs}, {"lhs - rhs", diff}};
  return c;
}

Check boolean_check(std::string name, std::string statement, bool ok, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.statement = std::move(statement);
  c.passed = ok;
  c.detail = std::move(detail);
  return c;
}

}  // namespace tss
