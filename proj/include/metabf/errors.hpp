#pragma once

#include <stdexcept>
#include <string>

namespace metabf {

// Malformed or inconsistent input data (bad file contents, invalid
// summary statistics, degenerate fits). CLI maps this to exit code 2.
struct data_error : std::runtime_error {
  explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical routine failed to reach its accuracy target
// (optimizer non-convergence, quadrature budget exhausted).
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace metabf
