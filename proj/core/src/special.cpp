#include "specdens/special.hpp"

#include <cmath>

#include "specdens/errors.hpp"

namespace specdens {

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0)) throw parameter_error("hurwitz_zeta: requires s > 1");
  if (!(q > 0.0)) throw parameter_error("hurwitz_zeta: requires q > 0");

  // Direct terms up to n = M-1, Euler-Maclaurin correction from M on.
  constexpr int M = 24;
  double sum = 0.0;
  for (int n = 0; n < M; ++n) sum += std::pow(n + q, -s);

  const double a = M + q;
  sum += std::pow(a, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(a, -s);

  // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * a^{-s-2j+1}
  static const double bern[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
                                5.0 / 66, -691.0 / 2730, 7.0 / 6};
  double rising = s;                   // s(s+1)...(s+2j-2), built incrementally
  double apow = std::pow(a, -s - 1.0); // a^{-s-2j+1}
  const double a2 = a * a;
  for (int j = 1; j <= 7; ++j) {
    double fact = 1.0;
    for (int i = 2; i <= 2 * j; ++i) fact *= i;
    const double term = bern[j - 1] / fact * rising * apow;
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) break;
    rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    apow /= a2;
  }
  return sum;
}

double riemann_zeta(double s) { return hurwitz_zeta(s, 1.0); }

}  // namespace specdens
