#pragma once

#include <vector>

#include "specdens/sample.hpp"

namespace specdens {

/// Small-lag schedule for the empirical variogram: lags h_m with tolerance
/// half-widths delta_m.  Bins [h_m - d_m, h_m + d_m] are pairwise disjoint.
struct LagSchedule {
  std::vector<double> lags;
  std::vector<double> tolerances;
  std::size_t size() const { return lags.size(); }

  /// Throws parameter_error unless lags are strictly increasing, M >= 2,
  /// 0 < delta_m < h_m, and bins are disjoint.
  void validate() const;
};

/// M = 10 lags log-spaced on [h_max/4, h_max] with h_max = domain_length/1000
/// (overridable), half-widths at the geometric midpoints so bins are disjoint.
/// Lags whose bin lies entirely below the minimum pairwise distance are
/// dropped (truncation is reported through the returned size).
LagSchedule default_schedule(const SampleSet& sample, double h_max_override = 0.0);

/// (h_m, u_m, N_m) triples; entries with N_m = 0 are invalid and skipped
/// by the regression.
struct VariogramTriples {
  std::vector<double> lag;
  std::vector<double> value;
  std::vector<long> count;
  std::size_t size() const { return lag.size(); }
};

/// Average squared increments over unordered pairs whose distance falls in
/// the closed tolerance band of each lag.
VariogramTriples empirical_variogram(const SampleSet& sample, const LagSchedule& schedule);

struct DecayEstimate {
  double alpha0 = 0.0;     // variogram exponent, clamped to (0, 2)
  double gamma = 0.0;      // tail decay rate = alpha0 + 1
  double intercept = 0.0;  // log-scale intercept
  int m_used = 0;
  bool clamped = false;
};

/// OLS slope of log u_m on log h_m over valid triples (centered regressors),
/// clamped to (eps, 2 - eps) with eps = 1e-3.
DecayEstimate fit_alpha0(const VariogramTriples& triples);

}  // namespace specdens
