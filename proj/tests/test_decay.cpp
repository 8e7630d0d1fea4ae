#include <cmath>

#include "doctest.h"
#include "specdens/decay.hpp"
#include "specdens/errors.hpp"

using namespace specdens;

namespace {

SampleSet make_sample(std::vector<double> loc, std::vector<double> val, double L) {
  SampleSet s;
  s.locations = std::move(loc);
  s.values = std::move(val);
  s.domain_length = L;
  s.canonicalize();
  return s;
}

// Evenly spaced except for one very close pair, so the smallest pairwise
// distance does not truncate the default lag schedule.
SampleSet dense_sample(int n, double L) {
  std::vector<double> loc(n), val(n, 0.0);
  for (int i = 0; i < n; ++i) loc[i] = L * (i + 0.5) / n;
  loc[1] = loc[0] + 1e-4;
  return make_sample(loc, val, L);
}

}  // namespace

TEST_CASE("default schedule respects the h < L/1000 rule") {
  auto s = dense_sample(250, 250.0);
  auto sched = default_schedule(s);
  CHECK(sched.size() == 10);
  CHECK(sched.lags.back() == doctest::Approx(0.25));
  CHECK(sched.lags.front() == doctest::Approx(0.0625));
  for (double h : sched.lags) CHECK(h <= 0.25);

  auto s1000 = dense_sample(1000, 1000.0);
  CHECK(default_schedule(s1000).lags.back() == doctest::Approx(1.0));
}

TEST_CASE("sparse samples keep only the trailing reachable bins") {
  // All locations at spacing 1: every default bin tops out below the smallest
  // pairwise distance, so only the last two lags survive.
  std::vector<double> loc(250), val(250, 0.0);
  for (int i = 0; i < 250; ++i) loc[i] = static_cast<double>(i) + 0.5;
  auto s = make_sample(loc, val, 250.0);
  auto sched = default_schedule(s);
  CHECK(sched.size() == 2);
  CHECK(sched.lags.back() == doctest::Approx(0.25));
}

TEST_CASE("schedule bins are pairwise disjoint and valid") {
  auto sched = default_schedule(dense_sample(500, 500.0));
  sched.validate();  // would throw on overlap
  for (std::size_t m = 1; m < sched.size(); ++m)
    CHECK(sched.lags[m - 1] + sched.tolerances[m - 1] <
          sched.lags[m] - sched.tolerances[m]);
}

TEST_CASE("empirical variogram hand case") {
  auto s = make_sample({0.0, 1.0}, {1.0, 3.0}, 2.0);
  LagSchedule sched;
  sched.lags = {0.5, 1.0};
  sched.tolerances = {0.05, 0.1};
  auto v = empirical_variogram(s, sched);
  CHECK(v.count[0] == 0);
  CHECK(v.count[1] == 1);
  CHECK(v.value[1] == doctest::Approx(4.0));
}

TEST_CASE("constant field has zero variogram") {
  auto s = make_sample({0.0, 0.3, 0.9, 1.4, 2.0}, {2.5, 2.5, 2.5, 2.5, 2.5}, 2.0);
  LagSchedule sched;
  sched.lags = {0.4, 1.0};
  sched.tolerances = {0.2, 0.3};
  auto v = empirical_variogram(s, sched);
  for (std::size_t m = 0; m < v.size(); ++m) CHECK(v.value[m] == 0.0);
}

TEST_CASE("pairs exactly at the bin edge are included (closed band)") {
  auto s = make_sample({0.0, 1.1}, {0.0, 2.0}, 2.0);
  LagSchedule sched;
  sched.lags = {0.5, 1.0};
  sched.tolerances = {0.05, 0.1};  // upper edge of bin 2 is exactly 1.1
  auto v = empirical_variogram(s, sched);
  CHECK(v.count[1] == 1);
  CHECK(v.value[1] == doctest::Approx(4.0));
}

TEST_CASE("variogram is invariant to sample order") {
  auto a = make_sample({0.0, 0.4, 1.0, 1.5}, {1.0, -1.0, 2.0, 0.5}, 2.0);
  auto b = make_sample({1.5, 0.4, 0.0, 1.0}, {0.5, -1.0, 1.0, 2.0}, 2.0);
  LagSchedule sched;
  sched.lags = {0.5, 1.1};
  sched.tolerances = {0.2, 0.3};
  auto va = empirical_variogram(a, sched);
  auto vb = empirical_variogram(b, sched);
  CHECK(va.count == vb.count);
  for (std::size_t m = 0; m < va.size(); ++m)
    CHECK(va.value[m] == doctest::Approx(vb.value[m]).epsilon(1e-14));
}

TEST_CASE("OLS is exact on noiseless power laws") {
  VariogramTriples t;
  t.lag = {0.01, 0.02, 0.05, 0.1, 0.2};
  t.count = {5, 5, 5, 5, 5};

  SUBCASE("u = 3 h^1") {
    for (double h : t.lag) t.value.push_back(3.0 * h);
    auto est = fit_alpha0(t);
    CHECK(est.alpha0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(est.gamma == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(est.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-10));
    CHECK_FALSE(est.clamped);
  }
  SUBCASE("u = 2 h^0.5") {
    for (double h : t.lag) t.value.push_back(2.0 * std::sqrt(h));
    auto est = fit_alpha0(t);
    CHECK(est.alpha0 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(est.gamma == doctest::Approx(1.5).epsilon(1e-12));
  }
}

TEST_CASE("slope invariances") {
  VariogramTriples t;
  t.lag = {0.01, 0.03, 0.09};
  t.count = {3, 3, 3};
  t.value = {0.4, 0.9, 2.5};
  const auto base = fit_alpha0(t);

  SUBCASE("scaling u only moves the intercept") {
    VariogramTriples scaled = t;
    for (auto& u : scaled.value) u *= 7.0;
    auto est = fit_alpha0(scaled);
    CHECK(est.alpha0 == doctest::Approx(base.alpha0).epsilon(1e-12));
    CHECK(est.intercept == doctest::Approx(base.intercept + std::log(7.0)).epsilon(1e-10));
  }
  SUBCASE("rescaling lags keeps the slope") {
    VariogramTriples scaled = t;
    for (auto& h : scaled.lag) h *= 5.0;
    CHECK(fit_alpha0(scaled).alpha0 == doctest::Approx(base.alpha0).epsilon(1e-12));
  }
}

TEST_CASE("clamping flags out-of-range slopes") {
  VariogramTriples t;
  t.lag = {0.01, 0.1};
  t.count = {2, 2};
  t.value = {1e-8, 1.0};  // slope 8 on the log scale
  auto est = fit_alpha0(t);
  CHECK(est.alpha0 == doctest::Approx(2.0 - 1e-3));
  CHECK(est.clamped);
  CHECK(est.gamma == est.alpha0 + 1.0);
}

TEST_CASE("too few valid triples is an error") {
  VariogramTriples t;
  t.lag = {0.01, 0.1};
  t.count = {0, 2};
  t.value = {0.0, 1.0};
  CHECK_THROWS_AS(fit_alpha0(t), data_error);
}
