#pragma once

#include <stdexcept>
#include <string>

namespace frameflow {

/// Raised when an iterative numerical procedure fails to converge within its
/// cap (holonomy truncation, domain reduction, log harvesting).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace frameflow
