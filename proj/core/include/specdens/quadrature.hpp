#pragma once

#include <functional>

namespace specdens {

/// Composite Simpson with `panels` panels (rounded up to even).
double composite_simpson(const std::function<double(double)>& f, double a, double b,
                         int panels);

/// Recursive adaptive Simpson to absolute tolerance `tol`.
/// Throws numeric_error if the recursion depth limit is hit before convergence.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 60);

}  // namespace specdens
