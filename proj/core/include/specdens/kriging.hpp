#pragma once

#include <functional>
#include <vector>

#include "specdens/sample.hpp"

namespace specdens {

/// Any isotropic covariance evaluator: lag h >= 0 -> covariance value.
using CovarianceFn = std::function<double(double)>;

struct KrigingResult {
  std::vector<double> targets;
  std::vector<double> predictions;
  double jitter_used = 0.0;  // relative diagonal jitter that made Sigma factorizable
};

/// Simple kriging (known zero mean): Zhat(s) = c(s)' Sigma^{-1} X with one
/// factorization reused across targets.  Estimated covariances need not be
/// positive definite; a jitter ladder {0, 1e-8, 1e-6, 1e-4} * C(0) is tried,
/// then a symmetric-indefinite solve, before giving up with a numeric_error.
KrigingResult krige(const SampleSet& sample, const CovarianceFn& cov,
                    const std::vector<double>& targets);

/// n_pred equally spaced interior locations: L * i / (n_pred + 1), i = 1..n_pred.
std::vector<double> prediction_targets(double domain_length, int n_pred);

/// Per-target squared prediction differences [Zhat(s_i) - Zhat0(s_i)]^2.
std::vector<double> ipe(const KrigingResult& pred_est, const KrigingResult& pred_true);

}  // namespace specdens
