#include "specdens/aliasing.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "specdens/errors.hpp"
#include "specdens/quadrature.hpp"
#include "specdens/special.hpp"

namespace specdens {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double odd_zeta_sum(double gamma) {
  if (!(gamma > 1.0)) throw parameter_error("odd_zeta_sum: requires gamma > 1");
  return 2.0 * (1.0 - std::pow(2.0, -gamma)) * riemann_zeta(gamma);
}

double aliasing_fraction(double omega, double omega_c, double gamma) {
  if (!(gamma > 1.0)) throw parameter_error("aliasing_fraction: requires gamma > 1");
  if (!(omega_c > 0.0) || omega < 0.0 || omega > omega_c * (1.0 + 1e-12))
    throw parameter_error("aliasing_fraction: requires 0 <= omega <= omega_c");
  const double r = std::min(omega / (2.0 * omega_c), 0.5);
  const double two_pow = std::pow(2.0, -gamma);
  const double numerator =
      two_pow * (hurwitz_zeta(gamma, 1.0 + r) + hurwitz_zeta(gamma, 1.0 - r));
  return numerator / odd_zeta_sum(gamma);
}

SpectralEstimate assemble(const SplineSpectral& spline, const DecayEstimate& decay) {
  SpectralEstimate est;
  est.spline = spline;
  est.omega_c = spline.omega_c;
  est.gamma = decay.gamma;
  const double f_cut = eval_f_delta(spline, spline.omega_c);
  if (f_cut < 0.0) {
    est.tail_scale = 0.0;
    est.tail_clamped = true;
  } else {
    est.tail_scale = f_cut / odd_zeta_sum(decay.gamma);
  }
  return est;
}

double eval_yz(const SpectralEstimate& est, double omega) {
  if (omega < 0.0) throw parameter_error("eval_yz: frequency must be nonnegative");
  if (omega > est.omega_c)
    return est.tail_scale * std::pow(omega / est.omega_c, -est.gamma);
  const double correction =
      est.tail_scale * odd_zeta_sum(est.gamma) * aliasing_fraction(omega, est.omega_c, est.gamma);
  return eval_f_delta(est.spline, omega) - correction;
}

double eval_yz_positive(const SpectralEstimate& est, double omega) {
  return std::max(eval_yz(est, omega), 0.0);
}

double tail_cosine_integral(double gamma, double a, double h) {
  if (!(gamma > 1.0)) throw parameter_error("tail_cosine_integral: requires gamma > 1");
  if (!(a > 0.0)) throw parameter_error("tail_cosine_integral: requires a > 0");
  if (h < 0.0) throw parameter_error("tail_cosine_integral: requires h >= 0");
  if (h == 0.0) return std::pow(a, 1.0 - gamma) / (gamma - 1.0);

  // One integration by parts boosts the decay of the oscillatory remainder:
  //   int_a^inf w^-g cos(wh) dw = -a^-g sin(ah)/h + (g/h) int_a^inf w^{-g-1} sin(wh) dw.
  const double boundary = -std::pow(a, -gamma) * std::sin(a * h) / h;
  const double p = gamma + 1.0;
  auto integrand = [&](double w) { return std::pow(w, -p) * std::sin(w * h); };

  // Panels between consecutive zeros of sin(wh); the panel series alternates
  // with decreasing magnitude, so repeated averaging of the partial sums
  // (Euler transform) converges geometrically.
  const double half_period = kPi / h;
  double first_zero = std::ceil(a / half_period) * half_period;
  if (first_zero <= a) first_zero += half_period;

  constexpr double tol = 1e-11;
  double series = 0.0;
  double head = adaptive_simpson(integrand, a, first_zero, tol);

  std::vector<double> partial;
  double running = 0.0;
  double lo = first_zero;
  for (int k = 0; k < 80; ++k) {
    const double hi = lo + half_period;
    running += adaptive_simpson(integrand, lo, hi, tol);
    partial.push_back(running);
    lo = hi;
    if (partial.size() >= 3) {
      const auto n = partial.size();
      if (std::abs(partial[n - 1] - partial[n - 2]) < tol &&
          std::abs(partial[n - 2] - partial[n - 3]) < tol)
        break;
    }
  }
  if (partial.size() < 2) {
    series = partial.empty() ? 0.0 : partial.back();
  } else {
    std::vector<double> avg = partial;
    while (avg.size() > 1) {
      for (std::size_t i = 0; i + 1 < avg.size(); ++i) avg[i] = 0.5 * (avg[i] + avg[i + 1]);
      avg.pop_back();
    }
    series = avg[0];
  }
  return boundary + gamma / h * (head + series);
}

double yz_covariance(const SpectralEstimate& est, double h) {
  if (h < 0.0) throw parameter_error("yz_covariance: lag must be nonnegative");
  if (!(est.gamma > 1.0)) throw parameter_error("yz_covariance: requires gamma > 1");
  auto integrand = [&](double w) { return eval_yz_positive(est, w) * std::cos(w * h); };
  const double low = adaptive_simpson(integrand, 0.0, est.omega_c, 1e-10);
  double tail = 0.0;
  if (est.tail_scale > 0.0)
    tail = est.tail_scale * std::pow(est.omega_c, est.gamma) *
           tail_cosine_integral(est.gamma, est.omega_c, h);
  return 2.0 * (low + tail);
}

YzCovarianceTable::YzCovarianceTable(const SpectralEstimate& est, double h_max,
                                     int freq_panels, double h_step)
    : est_(est), h_max_(h_max), step_(h_step) {
  if (!(h_max > 0.0)) throw parameter_error("YzCovarianceTable: h_max must be positive");
  if (freq_panels % 2 != 0) ++freq_panels;

  // Sample max(f_hat, 0) once on the Simpson grid below the cutoff.
  const double wc = est.omega_c;
  const double dw = wc / freq_panels;
  std::vector<double> fw(static_cast<std::size_t>(freq_panels) + 1);
  std::vector<double> simpson_w(fw.size());
  for (std::size_t i = 0; i < fw.size(); ++i) {
    fw[i] = eval_yz_positive(est, std::min(i * dw, wc));
    simpson_w[i] = (i == 0 || i + 1 == fw.size()) ? 1.0 : (i % 2 ? 4.0 : 2.0);
  }

  const auto n_entries = static_cast<std::size_t>(std::ceil(h_max / step_)) + 2;
  table_.resize(n_entries);
  for (std::size_t j = 0; j < n_entries; ++j) {
    const double h = static_cast<double>(j) * step_;
    double low = 0.0;
    for (std::size_t i = 0; i < fw.size(); ++i)
      low += simpson_w[i] * fw[i] * std::cos(i * dw * h);
    low *= dw / 3.0;
    double tail = 0.0;
    if (est.tail_scale > 0.0)
      tail = est.tail_scale * std::pow(wc, est.gamma) *
             tail_cosine_integral(est.gamma, wc, h);
    table_[j] = 2.0 * (low + tail);
  }
}

double YzCovarianceTable::operator()(double h) const {
  if (h < 0.0) throw parameter_error("YzCovarianceTable: lag must be nonnegative");
  if (h < step_ && h > 0.0) return yz_covariance(est_, h);  // origin cusp
  const double t = h / step_;
  const auto n = table_.size();
  auto j = static_cast<std::size_t>(t);
  if (j + 1 >= n) throw parameter_error("YzCovarianceTable: lag beyond tabulated range");
  const double u = t - static_cast<double>(j);
  // Catmull-Rom cubic on the uniform table.
  const double p1 = table_[j], p2 = table_[j + 1];
  // C(h) is even, so reflect across 0 instead of extrapolating.
  const double p0 = j > 0 ? table_[j - 1] : table_[1];
  const double p3 = j + 2 < n ? table_[j + 2] : 2.0 * p2 - p1;
  return p1 + 0.5 * u * (p2 - p0 + u * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
                                        u * (3.0 * (p1 - p2) + p3 - p0)));
}

}  // namespace specdens
