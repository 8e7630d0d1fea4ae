#pragma once

#include <stdexcept>
#include <string>

namespace specdens {

/// Invalid user-supplied parameters (bad model parameters, empty grids, ...).
class parameter_error : public std::invalid_argument {
 public:
  explicit parameter_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Malformed or insufficient input data (unreadable CSV, too few points, ...).
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure (factorization breakdown, quadrature non-convergence).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace specdens
