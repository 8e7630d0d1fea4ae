#pragma once

#include <vector>

#include "specdens/sample.hpp"

namespace specdens {

/// Grid of spacing delta = pi / omega_c covering [0, domain_length].
struct GridSpec {
  double omega_c = 0.0;
  double delta = 0.0;  // always pi / omega_c
  int num_cells = 0;

  static GridSpec from_cutoff(double omega_c, double domain_length);
};

/// Cutoff choice omega_c = rho * pi with rho the average sampling rate N/L.
double default_cutoff(const SampleSet& sample);

/// Lag-class pair sums over the gridized sample.
/// Convention: unordered pairs including the diagonal (i = j counts once),
/// so sum_k n_k = N(N+1)/2.
struct LagSums {
  std::vector<double> s;  // S_k, k = 0..K
  std::vector<long> n;    // n_k
  int max_lag() const { return static_cast<int>(s.size()) - 1; }
};

/// Assigns each point to its nearest cell (round half up on s/delta) and
/// accumulates S_k = sum X_i X_j, n_k = #pairs over cell-index differences k.
/// K = num_cells - 1, optionally capped by k_max (negative = no cap).
LagSums accumulate_lag_sums(const SampleSet& sample, const GridSpec& grid, int k_max = -1);

}  // namespace specdens
