#include "specdens/decay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specdens/errors.hpp"

namespace specdens {

void LagSchedule::validate() const {
  if (lags.size() != tolerances.size())
    throw parameter_error("LagSchedule: lags/tolerances length mismatch");
  if (lags.size() < 2) throw parameter_error("LagSchedule: need M >= 2");
  for (std::size_t m = 0; m < lags.size(); ++m) {
    if (!(tolerances[m] > 0.0) || !(tolerances[m] < lags[m]))
      throw parameter_error("LagSchedule: requires 0 < delta_m < h_m");
    if (m > 0) {
      if (!(lags[m] > lags[m - 1]))
        throw parameter_error("LagSchedule: lags must be strictly increasing");
      if (lags[m - 1] + tolerances[m - 1] >= lags[m] - tolerances[m])
        throw parameter_error("LagSchedule: tolerance bins overlap");
    }
  }
}

LagSchedule default_schedule(const SampleSet& sample, double h_max_override) {
  if (sample.size() < 8) throw parameter_error("default_schedule: need N >= 8");
  const double h_max =
      h_max_override > 0.0 ? h_max_override : sample.domain_length / 1000.0;
  if (!(h_max > 0.0)) throw parameter_error("default_schedule: nonpositive h_max");

  constexpr int M = 10;
  const double ratio = std::pow(4.0, 1.0 / (M - 1));  // spans [h_max/4, h_max]
  std::vector<double> lags(M);
  lags[M - 1] = h_max;
  for (int m = M - 2; m >= 0; --m) lags[m] = lags[m + 1] / ratio;

  // Half-widths reach toward the geometric midpoints; shrink slightly so
  // closed bins cannot share a boundary point.
  const double sqrt_ratio = std::sqrt(ratio);
  std::vector<double> tol(M);
  for (int m = 0; m < M; ++m) {
    const double down = lags[m] - lags[m] / sqrt_ratio;
    const double up = lags[m] * sqrt_ratio - lags[m];
    tol[m] = 0.999 * std::min(down, up);
  }

  // Minimum pairwise distance (locations sorted): drop bins entirely below it.
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < sample.size(); ++i)
    min_gap = std::min(min_gap, sample.locations[i] - sample.locations[i - 1]);

  LagSchedule out;
  for (int m = 0; m < M; ++m) {
    if (lags[m] + tol[m] < min_gap && out.lags.empty() && M - m > 2) continue;
    out.lags.push_back(lags[m]);
    out.tolerances.push_back(tol[m]);
  }
  out.validate();
  return out;
}

VariogramTriples empirical_variogram(const SampleSet& sample, const LagSchedule& schedule) {
  schedule.validate();
  const std::size_t M = schedule.size();
  VariogramTriples out;
  out.lag = schedule.lags;
  out.value.assign(M, 0.0);
  out.count.assign(M, 0);

  const double reach = schedule.lags.back() + schedule.tolerances.back();
  const auto& loc = sample.locations;
  const auto& val = sample.values;
  const std::size_t n = sample.size();

  // Sliding window over sorted locations: only pairs within `reach` matter.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n && loc[j] - loc[i] <= reach; ++j) {
      const double d = loc[j] - loc[i];
      // Bins are disjoint and ordered; find the one containing d, if any.
      auto it = std::lower_bound(schedule.lags.begin(), schedule.lags.end(), d);
      for (int probe = 0; probe < 2; ++probe) {
        auto pos = it - schedule.lags.begin() - probe;
        if (pos < 0 || pos >= static_cast<std::ptrdiff_t>(M)) continue;
        const auto m = static_cast<std::size_t>(pos);
        if (d >= schedule.lags[m] - schedule.tolerances[m] &&
            d <= schedule.lags[m] + schedule.tolerances[m]) {
          const double z = val[i] - val[j];
          out.value[m] += z * z;
          out.count[m] += 1;
          break;
        }
      }
    }
  }
  for (std::size_t m = 0; m < M; ++m)
    if (out.count[m] > 0) out.value[m] /= static_cast<double>(out.count[m]);
  return out;
}

DecayEstimate fit_alpha0(const VariogramTriples& triples) {
  std::vector<double> lx, ly;
  for (std::size_t m = 0; m < triples.size(); ++m) {
    if (triples.count[m] > 0 && triples.value[m] > 0.0) {
      lx.push_back(std::log(triples.lag[m]));
      ly.push_back(std::log(triples.value[m]));
    }
  }
  if (lx.size() < 2) throw data_error("fit_alpha0: fewer than 2 valid variogram lags");

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(lx.size());
  my /= static_cast<double>(ly.size());

  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (ly[i] - my) * (lx[i] - mx);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  if (!(sxx > 0.0)) throw data_error("fit_alpha0: zero variance in log lags");

  DecayEstimate est;
  est.m_used = static_cast<int>(lx.size());
  double slope = sxy / sxx;
  constexpr double eps = 1e-3;
  if (slope <= eps) {
    slope = eps;
    est.clamped = true;
  } else if (slope >= 2.0 - eps) {
    slope = 2.0 - eps;
    est.clamped = true;
  }
  est.alpha0 = slope;
  est.gamma = slope + 1.0;
  est.intercept = my - slope * mx;
  return est;
}

}  // namespace specdens
