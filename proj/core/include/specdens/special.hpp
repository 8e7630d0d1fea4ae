#pragma once

namespace specdens {

/// Hurwitz zeta function zeta(s, q) = sum_{n>=0} (n+q)^{-s}, for s > 1, q > 0.
/// Euler-Maclaurin evaluation, accurate to ~1e-13 relative for s in (1, 30].
double hurwitz_zeta(double s, double q);

/// Riemann zeta for s > 1.
double riemann_zeta(double s);

}  // namespace specdens
