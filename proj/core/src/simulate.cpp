#include "specdens/simulate.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "specdens/errors.hpp"

namespace specdens {

std::vector<double> draw_locations(int n, double domain_length, std::uint64_t seed) {
  if (n < 2) throw parameter_error("draw_locations: n must be >= 2");
  if (!(domain_length > 0.0)) throw parameter_error("draw_locations: domain_length must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, domain_length);
  std::vector<double> s(static_cast<std::size_t>(n));
  for (auto& x : s) x = unif(rng);
  std::sort(s.begin(), s.end());
  return s;
}

SampleSet simulate_gp(const CovarianceModel& model, const std::vector<double>& locations,
                      double domain_length, std::uint64_t seed) {
  model.validate();
  const auto n = static_cast<Eigen::Index>(locations.size());
  if (n < 2) throw data_error("simulate_gp: need at least 2 locations");

  Eigen::MatrixXd sigma(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double c = covariance(model, std::abs(locations[i] - locations[j]));
      sigma(i, j) = c;
      sigma(j, i) = c;
    }

  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) {
    sigma.diagonal().array() += 1e-10 * model.sigma2;
    llt.compute(sigma);
    if (llt.info() != Eigen::Success)
      throw numeric_error("simulate_gp: covariance matrix not positive definite after jitter");
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd z(n);
  for (Eigen::Index i = 0; i < n; ++i) z(i) = gauss(rng);
  Eigen::VectorXd x = llt.matrixL() * z;

  SampleSet out;
  out.locations = locations;
  out.values.assign(x.data(), x.data() + n);
  out.domain_length = domain_length;
  out.canonicalize();
  return out;
}

}  // namespace specdens
