#pragma once

#include <vector>

#include "specdens/gridize.hpp"

namespace specdens {

/// Smoothing-spline estimator of the aliased spectral density on [0, omega_c]:
/// a finite cosine series with lag-class coefficients S_k / (n_k + 2 (k pi)^2 lambda).
struct SplineSpectral {
  LagSums lag_sums;
  double omega_c = 0.0;
  double lambda = 0.0;

  /// Shrinkage weight w_k = n_k / (n_k + 2 (k pi)^2 lambda), k >= 1.
  double weight(int k) const;
};

/// Evaluate the cosine series at omega in [0, omega_c].  Empty lag classes
/// contribute nothing; the raw estimator may be negative.  Normalized to the
/// convention C(h) = 2 int_0^inf f(w) cos(wh) dw shared with the parametric
/// spectral densities, so int_0^{omega_c} f_delta = C(0)/2.
double eval_f_delta(const SplineSpectral& est, double omega);

/// 40 lambda candidates log-spaced over [1/N, N].
std::vector<double> default_lambda_grid(std::size_t n_obs);

struct GcvResult {
  double lambda = 0.0;
  double score = 0.0;
  bool degenerate = false;  // all candidates hit a zero denominator; median fallback
};

/// GCV over the linear shrinkage y_k -> w_k y_k of the raw moments
/// y_k = S_k / n_k (k >= 1, nonzero classes), with trace term sum w_k.
/// Ties resolve to the smaller lambda.
GcvResult select_lambda_gcv(const LagSums& lag_sums, double omega_c,
                            const std::vector<double>& candidates);

/// Closed-form covariance of the spline estimate:
/// C(h) = 2 int_0^{omega_c} f_delta(w) cos(w h) dw, expanded in sinc terms;
/// C(0) = S_0/n_0, the empirical variance.
double hhc_covariance(const SplineSpectral& est, double h);

}  // namespace specdens
