#pragma once

// Every exact identity and table the catalog is expected to reproduce, as
// one report of named checks sorted by name.

#include <array>

#include "tss/report.hpp"

namespace tss {

struct SuiteOptions {
  /// Fault injection: add 1 to the (0, 0) entry of T_4 before checking the
  /// presentation.
  bool tamper_t4 = false;
};

/// The presentation of the 4-dimensional double cover representation:
/// t_i^2 = z, (t_i t_{i+1})^3 = z, t_i t_j = z t_j t_i for |i - j| >= 2,
/// with z = -I.
Report presentation_suite(const std::array<Matrix, 4>& t);

Report paper_suite(const SuiteOptions& options = {});

}  // namespace tss
