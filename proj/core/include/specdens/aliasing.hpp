#pragma once

#include "specdens/decay.hpp"
#include "specdens/spline_spectral.hpp"

namespace specdens {

/// Two-sided sum over odd integers: sum_{j in Z} |1 + 2j|^{-gamma}
/// = 2 (1 - 2^{-gamma}) zeta(gamma).  Requires gamma > 1.
double odd_zeta_sum(double gamma);

/// Aliased-mass fraction a(omega) on [0, omega_c]:
/// sum_{j != 0} (|omega + 2 j omega_c| / omega_c)^{-gamma} / odd_zeta_sum(gamma).
/// Evaluated through Hurwitz zeta; lies in [0, 1).
double aliasing_fraction(double omega, double omega_c, double gamma);

/// Semiparametric spectral density: aliasing-corrected spline on [0, omega_c]
/// plus the algebraic tail tail_scale * (omega/omega_c)^{-gamma}.
struct SpectralEstimate {
  SplineSpectral spline;
  double gamma = 2.0;
  double tail_scale = 0.0;
  double omega_c = 0.0;
  bool tail_clamped = false;  // spline value at the cutoff was negative
};

/// tail_scale = max(f_delta(omega_c), 0) / odd_zeta_sum(gamma), which makes
/// the two-sided evaluation continuous at the cutoff.
SpectralEstimate assemble(const SplineSpectral& spline, const DecayEstimate& decay);

/// The corrected estimate; may be negative below the cutoff.
double eval_yz(const SpectralEstimate& est, double omega);

/// max(eval_yz, 0).
double eval_yz_positive(const SpectralEstimate& est, double omega);

/// C(h) = 2 int_0^inf max(f_hat, 0)(w) cos(w h) dw: adaptive quadrature below
/// the cutoff plus an oscillatory-panel scheme for the algebraic tail.
double yz_covariance(const SpectralEstimate& est, double h);

/// int_a^inf w^{-gamma} cos(w h) dw for a > 0, gamma > 1, h >= 0.
/// One integration by parts, then half-period panels with alternating-series
/// acceleration; absolute tolerance ~1e-10.
double tail_cosine_integral(double gamma, double a, double h);

/// Tabulated yz_covariance over [0, h_max] for bulk evaluation (kriging,
/// integrated-error scoring).  Samples max(f_hat, 0) once on a Simpson grid
/// below the cutoff and interpolates C(h) from a dense lag table.  Lags below
/// one table step go through the exact evaluation: the algebraic tail puts a
/// |h|^(gamma-1) cusp at the origin that polynomial interpolation misses.
class YzCovarianceTable {
 public:
  YzCovarianceTable(const SpectralEstimate& est, double h_max,
                    int freq_panels = 4096, double h_step = 0.05);

  double operator()(double h) const;
  double h_max() const { return h_max_; }

 private:
  SpectralEstimate est_;
  double h_max_;
  double step_;
  std::vector<double> table_;
};

}  // namespace specdens
