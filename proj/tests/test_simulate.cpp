#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "specdens/errors.hpp"
#include "specdens/simulate.hpp"

using namespace specdens;

TEST_CASE("draw_locations basics") {
  auto s = draw_locations(250, 250.0, 1);
  REQUIRE(s.size() == 250);
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(s.front() >= 0.0);
  CHECK(s.back() <= 250.0);

  auto two = draw_locations(2, 1.0, 99);
  CHECK(two[0] <= two[1]);

  CHECK_THROWS_AS(draw_locations(1, 1.0, 0), parameter_error);
  CHECK_THROWS_AS(draw_locations(10, 0.0, 0), parameter_error);
}

TEST_CASE("draw_locations law of large numbers") {
  auto s = draw_locations(10000, 1.0, 7);
  double mean = 0.0;
  for (double x : s) mean += x;
  mean /= static_cast<double>(s.size());
  CHECK(std::abs(mean - 0.5) < 0.01);
}

TEST_CASE("simulate_gp determinism") {
  CovarianceModel model{ModelKind::Exponential, 1.0, 1.0, 0.5};
  auto loc = draw_locations(20, 10.0, 3);
  auto a = simulate_gp(model, loc, 10.0, 42);
  auto b = simulate_gp(model, loc, 10.0, 42);
  CHECK(a.values == b.values);
  auto c = simulate_gp(model, loc, 10.0, 43);
  CHECK(a.values != c.values);
  CHECK(a.size() == loc.size());
}

TEST_CASE("simulate_gp marginal variance (Monte Carlo)") {
  CovarianceModel model{ModelKind::Exponential, 1.0, 1.0, 0.5};
  std::vector<double> loc = {0.0, 0.7, 1.9, 3.1, 4.6};
  double sum_sq = 0.0;
  const int reps = 2000;
  for (int r = 0; r < reps; ++r) {
    auto s = simulate_gp(model, loc, 5.0, 1000 + static_cast<std::uint64_t>(r));
    sum_sq += s.values[0] * s.values[0];
  }
  CHECK(std::abs(sum_sq / reps - 1.0) < 0.07);
}

TEST_CASE("simulate_gp pair correlation at unit lag (Monte Carlo)") {
  CovarianceModel model{ModelKind::Exponential, 1.0, 1.0, 0.5};
  std::vector<double> loc = {0.0, 1.0, 2.5, 4.0};
  double acc = 0.0;
  const int reps = 2000;
  for (int r = 0; r < reps; ++r) {
    auto s = simulate_gp(model, loc, 5.0, 5000 + static_cast<std::uint64_t>(r));
    acc += s.values[0] * s.values[1];
  }
  CHECK(std::abs(acc / reps - std::exp(-1.0)) < 0.05);
}

TEST_CASE("cholesky factor reconstructs the covariance matrix") {
  CovarianceModel model{ModelKind::Matern, 1.3, 2.0, 1.5};
  auto loc = draw_locations(150, 100.0, 11);
  const auto n = static_cast<Eigen::Index>(loc.size());
  Eigen::MatrixXd sigma(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      sigma(i, j) = covariance(model, std::abs(loc[i] - loc[j]));
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  REQUIRE(llt.info() == Eigen::Success);
  Eigen::MatrixXd l = llt.matrixL();
  CHECK(((l * l.transpose()) - sigma).cwiseAbs().maxCoeff() < 1e-8);
}
