#pragma once

#include <string>
#include <vector>

#include "lebedev/quad.hpp"

namespace lebedev {

struct CheckRow {
  std::string label;
  double value = 0.0;  // measured deviation, residual or ratio
  double tol = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::string grid;
  std::vector<CheckRow> rows;
  double seconds = 0.0;
  bool pass() const;
};

/// ode, pde, routes, parseval, bounds, roundtrip-f, roundtrip-g, identity-3-2
std::vector<std::string> suite_names();

/// grid: "small" or "full". Throws PreconditionError for unknown names.
SuiteReport run_suite(const std::string& suite, const std::string& grid = "small",
                      const QuadratureSpec& quad = {});

}  // namespace lebedev
