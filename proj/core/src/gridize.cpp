#include "specdens/gridize.hpp"

#include <cmath>

#include "specdens/errors.hpp"

namespace specdens {

namespace {
constexpr double kPi = 3.14159265358979323846;

long cell_index(double s, double delta) {
  // Round half up: boundary points go to the higher cell.
  return static_cast<long>(std::floor(s / delta + 0.5));
}
}  // namespace

GridSpec GridSpec::from_cutoff(double omega_c, double domain_length) {
  if (!(omega_c > 0.0)) throw parameter_error("GridSpec: omega_c must be positive");
  if (!(domain_length > 0.0)) throw parameter_error("GridSpec: domain_length must be positive");
  GridSpec g;
  g.omega_c = omega_c;
  g.delta = kPi / omega_c;
  g.num_cells = static_cast<int>(cell_index(domain_length, g.delta)) + 1;
  if (g.num_cells < 2) g.num_cells = 2;
  return g;
}

double default_cutoff(const SampleSet& sample) {
  if (!(sample.domain_length > 0.0)) throw parameter_error("default_cutoff: zero domain length");
  if (sample.size() < 2) throw parameter_error("default_cutoff: need N >= 2");
  return static_cast<double>(sample.size()) / sample.domain_length * kPi;
}

LagSums accumulate_lag_sums(const SampleSet& sample, const GridSpec& grid, int k_max) {
  const std::size_t n = sample.size();
  if (n == 0) throw data_error("accumulate_lag_sums: empty sample");

  int cap = grid.num_cells - 1;
  if (k_max >= 0 && k_max < cap) cap = k_max;

  std::vector<long> cell(n);
  for (std::size_t i = 0; i < n; ++i) cell[i] = cell_index(sample.locations[i], grid.delta);

  LagSums out;
  out.s.assign(static_cast<std::size_t>(cap) + 1, 0.0);
  out.n.assign(static_cast<std::size_t>(cap) + 1, 0);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const long k = std::labs(cell[j] - cell[i]);
      if (k > cap) continue;
      out.s[static_cast<std::size_t>(k)] += sample.values[i] * sample.values[j];
      out.n[static_cast<std::size_t>(k)] += 1;
    }
  }
  return out;
}

}  // namespace specdens
