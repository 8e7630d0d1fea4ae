#include "specdens/spline_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specdens/errors.hpp"

namespace specdens {

namespace {
constexpr double kPi = 3.14159265358979323846;

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}
}  // namespace

double SplineSpectral::weight(int k) const {
  const auto idx = static_cast<std::size_t>(k);
  if (k < 1 || idx >= lag_sums.n.size() || lag_sums.n[idx] == 0) return 0.0;
  const double nk = static_cast<double>(lag_sums.n[idx]);
  const double kp = k * kPi;
  return nk / (nk + 2.0 * kp * kp * lambda);
}

double eval_f_delta(const SplineSpectral& est, double omega) {
  if (est.lag_sums.n.empty() || est.lag_sums.n[0] == 0)
    throw data_error("eval_f_delta: no data in lag class 0");
  if (omega < 0.0 || omega > est.omega_c * (1.0 + 1e-12))
    throw parameter_error("eval_f_delta: frequency outside [0, omega_c]");

  // Normalized to the same convention as the parametric spectral densities,
  // C(h) = 2 int_0^inf f(w)cos(wh)dw, so the aliased estimate satisfies
  // C(k*delta) = 2 int_0^{w_c} f_delta(w)cos(w*k*delta)dw and
  // int_0^{w_c} f_delta = C(0)/2.
  const double wc = est.omega_c;
  double value = est.lag_sums.s[0] / (2.0 * wc * static_cast<double>(est.lag_sums.n[0]));
  const int K = est.lag_sums.max_lag();
  for (int k = 1; k <= K; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    if (est.lag_sums.n[idx] == 0) continue;
    const double kp = k * kPi;
    const double denom = static_cast<double>(est.lag_sums.n[idx]) + 2.0 * kp * kp * est.lambda;
    value += 1.0 / wc * std::cos(kp * omega / wc) * est.lag_sums.s[idx] / denom;
  }
  return value;
}

std::vector<double> default_lambda_grid(std::size_t n_obs) {
  const double lo = 1.0 / static_cast<double>(n_obs);
  const double hi = static_cast<double>(n_obs);
  constexpr int count = 40;
  std::vector<double> grid(count);
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) grid[i] = lo * std::exp(step * i);
  return grid;
}

GcvResult select_lambda_gcv(const LagSums& lag_sums, double omega_c,
                            const std::vector<double>& candidates) {
  (void)omega_c;
  if (candidates.empty()) throw parameter_error("select_lambda_gcv: empty candidate grid");

  std::vector<int> active;
  for (int k = 1; k <= lag_sums.max_lag(); ++k)
    if (lag_sums.n[static_cast<std::size_t>(k)] > 0) active.push_back(k);
  if (active.empty()) throw data_error("select_lambda_gcv: no nonzero lag class with k >= 1");
  const double k_eff = static_cast<double>(active.size());

  std::vector<double> sorted = candidates;
  std::sort(sorted.begin(), sorted.end());

  GcvResult best;
  bool found = false;
  for (double lam : sorted) {
    if (!(lam > 0.0)) throw parameter_error("select_lambda_gcv: candidates must be positive");
    double rss = 0.0, trace = 0.0;
    for (int k : active) {
      const auto idx = static_cast<std::size_t>(k);
      const double nk = static_cast<double>(lag_sums.n[idx]);
      const double y = lag_sums.s[idx] / nk;
      const double kp = k * kPi;
      const double w = nk / (nk + 2.0 * kp * kp * lam);
      rss += nk * (y - w * y) * (y - w * y);
      trace += w;
    }
    const double denom = 1.0 - trace / k_eff;
    if (std::abs(denom) < 1e-14) continue;
    const double score = rss / (denom * denom);
    if (!found || score < best.score) {
      best.lambda = lam;
      best.score = score;
      found = true;
    }
  }
  if (!found) {
    // Degenerate: every candidate left the smoother with a full trace.
    best.lambda = sorted[sorted.size() / 2];
    best.score = std::numeric_limits<double>::quiet_NaN();
    best.degenerate = true;
  }
  return best;
}

double hhc_covariance(const SplineSpectral& est, double h) {
  // Closed form of C_hat(h) = 2 int_0^{w_c} f_delta(w)cos(wh)dw; the factor 2
  // and the density normalization cancel so that C_hat(0) = S_0/n_0, the
  // empirical variance.
  if (h < 0.0) throw parameter_error("hhc_covariance: lag must be nonnegative");
  if (est.lag_sums.n.empty() || est.lag_sums.n[0] == 0)
    throw data_error("hhc_covariance: no data in lag class 0");

  const double x = est.omega_c * h;
  double value = est.lag_sums.s[0] / static_cast<double>(est.lag_sums.n[0]) * sinc(x);
  for (int k = 1; k <= est.lag_sums.max_lag(); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    if (est.lag_sums.n[idx] == 0) continue;
    const double kp = k * kPi;
    const double denom = static_cast<double>(est.lag_sums.n[idx]) + 2.0 * kp * kp * est.lambda;
    value += est.lag_sums.s[idx] / denom * (sinc(kp + x) + sinc(kp - x));
  }
  return value;
}

}  // namespace specdens
