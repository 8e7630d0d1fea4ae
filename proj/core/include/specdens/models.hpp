#pragma once

#include <string>

namespace specdens {

enum class ModelKind { Matern, Spherical, Exponential };

ModelKind model_kind_from_string(const std::string& name);
std::string to_string(ModelKind kind);

/// Parametric isotropic covariance model on the real line.
///
/// `range` is the length-scale (the paper writes it phi); `nu` is the
/// Matern smoothness and is ignored by the other kinds.
struct CovarianceModel {
  ModelKind kind = ModelKind::Exponential;
  double sigma2 = 1.0;
  double range = 1.0;
  double nu = 0.5;

  /// Throws parameter_error on non-positive sigma2/range/nu.
  void validate() const;
};

/// C(h) for h >= 0.  Matern at h = 0 returns sigma2 (the limit value);
/// the spherical model is identically zero for h >= range.
double covariance(const CovarianceModel& model, double h);

/// Spectral density f(omega), omega >= 0, normalized so that
/// C(h) = 2 * int_0^inf f(w) cos(w h) dw.
double spectral_density(const CovarianceModel& model, double omega);

/// gamma(h) = 2 (C(0) - C(h)).
double true_variogram(const CovarianceModel& model, double h);

}  // namespace specdens
