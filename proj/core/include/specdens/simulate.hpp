#pragma once

#include <cstdint>
#include <vector>

#include "specdens/models.hpp"
#include "specdens/sample.hpp"

namespace specdens {

/// n i.i.d. uniform positions on [0, domain_length], returned sorted.
/// Deterministic for a given seed (per build of the standard library).
std::vector<double> draw_locations(int n, double domain_length, std::uint64_t seed);

/// One zero-mean Gaussian draw with Sigma_ij = C(|s_i - s_j|), via Cholesky.
/// If the factorization fails, a single diagonal jitter of 1e-10 * sigma2 is
/// tried; a second failure is a numeric_error.
SampleSet simulate_gp(const CovarianceModel& model, const std::vector<double>& locations,
                      double domain_length, std::uint64_t seed);

}  // namespace specdens
