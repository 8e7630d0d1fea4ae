#include "specdens/models.hpp"

#include <algorithm>
#include <cmath>

#include "specdens/errors.hpp"

namespace specdens {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Matern correlation for half-integer smoothness; exact elementary forms.
double matern_half_integer(double t, int m) {
  const double e = std::exp(-t);
  switch (m) {
    case 0:  // nu = 1/2
      return e;
    case 1:  // nu = 3/2
      return e * (1.0 + t);
    case 2:  // nu = 5/2
      return e * (1.0 + t + t * t / 3.0);
    default: {
      // nu = m + 1/2: exp(-t) * m!/(2m)! * sum_{i=0}^m (m+i)!/(i!(m-i)!) (2t)^{m-i}
      double lead = std::lgamma(m + 1.0) - std::lgamma(2.0 * m + 1.0);
      double sum = 0.0;
      for (int i = 0; i <= m; ++i) {
        double lt = std::lgamma(m + i + 1.0) - std::lgamma(i + 1.0) -
                    std::lgamma(m - i + 1.0) + (m - i) * std::log(2.0 * t);
        sum += std::exp(lead + lt);
      }
      return e * sum;
    }
  }
}

double matern_correlation(double t, double nu) {
  if (t == 0.0) return 1.0;
  const double half = nu - 0.5;
  const double rounded = std::round(half);
  if (rounded >= 0.0 && std::abs(half - rounded) < 1e-12)
    return matern_half_integer(t, static_cast<int>(rounded));
  // General nu via the modified Bessel function of the second kind.
  return 2.0 * std::pow(t / 2.0, nu) / std::tgamma(nu) * std::cyl_bessel_k(nu, t);
}

// int_0^1 (1 - 1.5 t + 0.5 t^3) cos(a t) dt, exact in elementary terms.
double spherical_poly_cosine_integral(double a) {
  if (std::abs(a) < 0.05) {
    // Maclaurin series: sum_n (-1)^n a^{2n} / (2n)! * int_0^1 p(t) t^{2n} dt,
    // with int_0^1 p(t) t^{2n} dt = 1/(2n+1) - 1.5/(2n+2) + 0.5/(2n+4).
    double sum = 0.0, c = 1.0;
    const double a2 = a * a;
    for (int n = 0; n < 10; ++n) {
      const double moment = 1.0 / (2 * n + 1) - 1.5 / (2 * n + 2) + 0.5 / (2 * n + 4);
      sum += c * moment;
      c *= -a2 / ((2.0 * n + 1.0) * (2.0 * n + 2.0));
      if (std::abs(c) < 1e-18) break;
    }
    return sum;
  }
  const double s = std::sin(a), co = std::cos(a);
  const double a2 = a * a, a3 = a2 * a, a4 = a2 * a2;
  const double i0 = s / a;
  const double i1 = (co + a * s - 1.0) / a2;
  const double i3 = (3.0 * a2 - 6.0) * co / a4 + (a2 - 6.0) * s / a3 + 6.0 / a4;
  return i0 - 1.5 * i1 + 0.5 * i3;
}

}  // namespace

ModelKind model_kind_from_string(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
  if (n == "matern") return ModelKind::Matern;
  if (n == "spherical") return ModelKind::Spherical;
  if (n == "exponential") return ModelKind::Exponential;
  throw parameter_error("unknown covariance model kind: " + name);
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Matern: return "matern";
    case ModelKind::Spherical: return "spherical";
    case ModelKind::Exponential: return "exponential";
  }
  return "?";
}

void CovarianceModel::validate() const {
  if (!(sigma2 > 0.0)) throw parameter_error("sigma2 must be positive");
  if (!(range > 0.0)) throw parameter_error("range must be positive");
  if (kind == ModelKind::Matern && !(nu > 0.0)) throw parameter_error("nu must be positive");
}

double covariance(const CovarianceModel& model, double h) {
  model.validate();
  if (h < 0.0) throw parameter_error("covariance: lag must be nonnegative");
  const double t = h / model.range;
  switch (model.kind) {
    case ModelKind::Matern:
      return model.sigma2 * matern_correlation(t, model.nu);
    case ModelKind::Exponential:
      return model.sigma2 * std::exp(-t);
    case ModelKind::Spherical:
      if (t >= 1.0) return 0.0;
      return model.sigma2 * (1.0 - 1.5 * t + 0.5 * t * t * t);
  }
  return 0.0;
}

double spectral_density(const CovarianceModel& model, double omega) {
  model.validate();
  if (omega < 0.0) throw parameter_error("spectral_density: frequency must be nonnegative");
  switch (model.kind) {
    case ModelKind::Matern: {
      const double nu = model.nu;
      const double inv_phi2 = 1.0 / (model.range * model.range);
      const double lead = std::exp(std::lgamma(nu + 0.5) - std::lgamma(nu)) / std::sqrt(kPi);
      return model.sigma2 * lead * std::pow(inv_phi2, nu) *
             std::pow(inv_phi2 + omega * omega, -(nu + 0.5));
    }
    case ModelKind::Exponential: {
      const double phi = model.range;
      return model.sigma2 * phi / (kPi * (1.0 + phi * phi * omega * omega));
    }
    case ModelKind::Spherical:
      // (1/pi) int_0^phi C(h) cos(w h) dh on the compact support.
      return model.sigma2 * model.range / kPi *
             spherical_poly_cosine_integral(omega * model.range);
  }
  return 0.0;
}

double true_variogram(const CovarianceModel& model, double h) {
  return 2.0 * (covariance(model, 0.0) - covariance(model, h));
}

}  // namespace specdens
