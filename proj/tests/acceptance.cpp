// Acceptance gate: one criterion per invocation, selected by argv[1] (1-9).
// Prints exactly one [PASS]/[FAIL] line and exits 0/1.

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "specdens/aliasing.hpp"
#include "specdens/bench.hpp"
#include "specdens/decay.hpp"
#include "specdens/gridize.hpp"
#include "specdens/kriging.hpp"
#include "specdens/models.hpp"
#include "specdens/quadrature.hpp"
#include "specdens/simulate.hpp"
#include "specdens/spline_spectral.hpp"

namespace fs = std::filesystem;
using namespace specdens;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double odd_sum_brute(double g, long jmax = 1000000) {
  double sum = 0.0;
  for (long j = jmax; j >= 1; --j)
    sum += std::pow(1.0 + 2.0 * j, -g) + std::pow(2.0 * j - 1.0, -g);
  sum += 1.0;
  sum += 2.0 * std::pow(2.0 * jmax + 1.0, 1.0 - g) / (2.0 * (g - 1.0));
  return sum;
}

double aliasing_brute(double w, double wc, double g, long jmax = 1000000) {
  double num = 0.0;
  for (long j = jmax; j >= 1; --j) {
    num += std::pow((w + 2.0 * j * wc) / wc, -g);
    num += std::pow(std::abs(w - 2.0 * j * wc) / wc, -g);
  }
  num += 2.0 * std::pow(2.0 * jmax + 1.0, 1.0 - g) / (2.0 * (g - 1.0));
  return num / odd_sum_brute(g, jmax);
}

// Random lag-class fixture whose spline value stays positive at the cutoff.
SplineSpectral random_fixture(std::uint64_t seed, double lambda, bool positive_at_cutoff) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.1, 1.0);
  std::uniform_int_distribution<long> cnt(1, 30);
  const int K = 10;
  LagSums sums;
  sums.s.resize(K + 1);
  sums.n.resize(K + 1);
  sums.n[0] = cnt(rng) + 10;
  sums.s[0] = (4.0 + mag(rng)) * static_cast<double>(sums.n[0]);
  for (int k = 1; k <= K; ++k) {
    sums.n[k] = cnt(rng);
    const double amp = positive_at_cutoff ? 0.2 : 1.5;
    sums.s[k] = amp * mag(rng) * static_cast<double>(sums.n[k]) * (rng() % 2 ? 1.0 : -1.0);
  }
  return SplineSpectral{sums, kPi, lambda};
}

SampleSet make_sample(std::vector<double> loc, std::vector<double> val, double L) {
  SampleSet s;
  s.locations = std::move(loc);
  s.values = std::move(val);
  s.domain_length = L;
  s.canonicalize();
  return s;
}

// ---------------------------------------------------------------------------

Check criterion_1() {
  Check c;
  c.expect(std::abs(odd_zeta_sum(2.0) - kPi * kPi / 4.0) < 1e-8, "odd_zeta_sum(2) != pi^2/4");
  c.expect(std::abs(aliasing_fraction(0.0, kPi, 2.0) - 1.0 / 3.0) < 1e-8,
           "aliasing_fraction(0,.,2) != 1/3");
  for (double g : {1.2, 1.5, 2.0, 3.0}) {
    c.expect(std::abs(odd_zeta_sum(g) - odd_sum_brute(g)) < 1e-8, "odd_zeta_sum vs brute");
    for (double w : {0.0, 0.4 * kPi, kPi})
      c.expect(std::abs(aliasing_fraction(w, kPi, g) - aliasing_brute(w, kPi, g)) < 1e-8,
               "aliasing_fraction vs brute");
  }
  return c;
}

Check criterion_2() {
  Check c;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto est = random_fixture(seed, 0.1 + 0.05 * static_cast<double>(seed), false);
    for (double h : {0.0, 0.5, 1.0, 5.0}) {
      const double oracle =
          2.0 * adaptive_simpson(
                    [&](double w) { return eval_f_delta(est, w) * std::cos(w * h); },
                    0.0, kPi, 1e-11);
      c.expect(std::abs(hhc_covariance(est, h) - oracle) < 1e-8,
               "hhc_covariance vs quadrature at h=" + std::to_string(h));
    }
  }
  return c;
}

Check criterion_3() {
  Check c;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> gdist(1.1, 2.9);
  int tested = 0;
  for (std::uint64_t seed = 1; tested < 50; ++seed) {
    auto spline = random_fixture(1000 + seed, 0.3, true);
    DecayEstimate decay;
    decay.gamma = gdist(rng);
    decay.alpha0 = decay.gamma - 1.0;
    auto est = assemble(spline, decay);
    if (est.tail_clamped) continue;  // negative cutoff value: no continuity contract
    ++tested;
    const double left = eval_yz(est, est.omega_c);
    const double right = eval_yz(est, est.omega_c * (1.0 + 1e-14));
    c.expect(std::abs(left - right) < 1e-9,
             "cutoff jump " + std::to_string(std::abs(left - right)));
  }
  return c;
}

Check criterion_4() {
  Check c;
  const CovarianceModel model{ModelKind::Exponential, 1.0, 1.0, 0.5};
  const int n = 1000, reps = 200;
  std::vector<double> alphas;
  for (int rep = 0; rep < reps; ++rep) {
    const auto seed = 500 + static_cast<std::uint64_t>(rep);
    auto loc = draw_locations(n, static_cast<double>(n), seed);
    auto sample = simulate_gp(model, loc, static_cast<double>(n), seed ^ 0x9e3779b97f4a7c15ULL);
    auto triples = empirical_variogram(sample, default_schedule(sample));
    alphas.push_back(fit_alpha0(triples).alpha0);
  }
  const double med = median(alphas);
  c.expect(med >= 0.7 && med <= 1.3, "median alpha0 = " + std::to_string(med));
  return c;
}

ExperimentConfig setup_config(ModelKind kind, int n, std::vector<Method> methods) {
  ExperimentConfig cfg;
  cfg.model = {kind, 1.0, 1.0, 0.5};
  cfg.n = n;
  cfg.replicates = 100;
  cfg.seed = 20000;
  cfg.methods = std::move(methods);
  return cfg;
}

double score_of(const ExperimentResult& res, Method m, double ScoreRow::* field) {
  for (const auto& row : res.summary)
    if (row.method == m) return row.*field;
  return std::nan("");
}

Check criterion_5() {
  Check c;
  auto cfg = setup_config(ModelKind::Matern, 250, {Method::Hhc, Method::Yz});
  const auto res = run_experiment(cfg);
  const double hhc = score_of(res, Method::Hhc, &ScoreRow::mipe);
  const double yz = score_of(res, Method::Yz, &ScoreRow::mipe);
  c.expect(yz < 0.1 * hhc,
           "mIPE yz=" + std::to_string(yz) + " vs hhc=" + std::to_string(hhc));
  return c;
}

Check criterion_6() {
  Check c;
  auto cfg =
      setup_config(ModelKind::Spherical, 500, {Method::Hhc, Method::Yz, Method::Matern});
  const auto res = run_experiment(cfg);
  const double hhc_c = score_of(res, Method::Hhc, &ScoreRow::ise_c);
  const double yz_c = score_of(res, Method::Yz, &ScoreRow::ise_c);
  const double yz_p = score_of(res, Method::Yz, &ScoreRow::mipe);
  const double mat_p = score_of(res, Method::Matern, &ScoreRow::mipe);
  c.expect(yz_c < hhc_c,
           "ISE(C) yz=" + std::to_string(yz_c) + " vs hhc=" + std::to_string(hhc_c));
  c.expect(mat_p > 0.5 * yz_p,
           "mIPE matern=" + std::to_string(mat_p) + " vs yz=" + std::to_string(yz_p));
  return c;
}

Check criterion_7() {
  Check c;
  auto cfg = setup_config(ModelKind::Matern, 500, {Method::Yz});
  const auto res = run_experiment(cfg);
  const double yz_f = score_of(res, Method::Yz, &ScoreRow::ise_f);
  c.expect(yz_f < 0.03, "median ISE(f) yz=" + std::to_string(yz_f));
  return c;
}

Check criterion_8() {
  Check c;

  // pair-count identity
  {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(0.0, 80.0);
    std::normal_distribution<double> gauss;
    std::vector<double> loc(128), val(128);
    for (std::size_t i = 0; i < loc.size(); ++i) {
      loc[i] = unif(rng);
      val[i] = gauss(rng);
    }
    auto s = make_sample(loc, val, 80.0);
    auto sums = accumulate_lag_sums(s, GridSpec::from_cutoff(default_cutoff(s), 80.0));
    long total = 0;
    for (long n : sums.n) total += n;
    c.expect(total == 128 * 129 / 2, "pair-count identity");
  }

  // OLS exactness on a noiseless power law
  {
    VariogramTriples t;
    t.lag = {0.01, 0.02, 0.05, 0.1};
    t.count = {4, 4, 4, 4};
    for (double h : t.lag) t.value.push_back(3.0 * std::pow(h, 1.4));
    auto est = fit_alpha0(t);
    c.expect(std::abs(est.alpha0 - 1.4) < 1e-10, "OLS exactness");
  }

  // kriging interpolation + covariance-scaling invariance
  {
    const CovarianceModel model{ModelKind::Exponential, 1.0, 2.0, 0.5};
    auto s = make_sample({0.5, 1.7, 3.1, 4.9}, {1.0, -0.4, 2.2, 0.3}, 6.0);
    auto cov = [&](double h) { return covariance(model, h); };
    auto at_obs = krige(s, cov, s.locations);
    for (std::size_t i = 0; i < s.size(); ++i)
      c.expect(std::abs(at_obs.predictions[i] - s.values[i]) < 1e-6,
               "kriging interpolation");
    auto base = krige(s, cov, {2.0, 2.9});
    auto scaled = krige(s, [&](double h) { return 17.0 * cov(h); }, {2.0, 2.9});
    for (std::size_t i = 0; i < base.predictions.size(); ++i)
      c.expect(std::abs(base.predictions[i] - scaled.predictions[i]) < 1e-9,
               "covariance-scaling invariance");
  }

  // normalization 2 int f = C(0), truncation plus analytic tail remainders
  {
    const double cut = 2000.0;
    for (ModelKind kind : {ModelKind::Exponential, ModelKind::Spherical}) {
      const CovarianceModel m{kind, 1.3, 0.8, 0.5};
      auto f = [&](double w) { return spectral_density(m, w); };
      // split the range so the adaptive rule is not forced to resolve the
      // oscillatory far tail from one root interval
      double total = 2.0 * (adaptive_simpson(f, 0.0, 50.0, 1e-10) +
                            adaptive_simpson(f, 50.0, cut, 1e-10));
      if (kind == ModelKind::Exponential) {
        total += 2.0 * m.sigma2 / kPi * (kPi / 2.0 - std::atan(m.range * cut));
      } else {
        total += 2.0 * 1.5 * m.sigma2 / (kPi * m.range * cut);  // envelope bound, ~1e-4
      }
      const double tol = kind == ModelKind::Spherical ? 2e-4 : 1e-6;
      c.expect(std::abs(total - covariance(m, 0.0)) < tol, "normalization 2 int f = C(0)");
    }
  }
  return c;
}

Check criterion_9() {
  Check c;
#ifndef SPECDENS_CLI_PATH
  c.expect(false, "command line tool was not built");
  return c;
#else
  const fs::path dir =
      fs::temp_directory_path() / ("specdens_accept9_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path cfg = dir / "config.json";
  std::ofstream(cfg) << R"({
    "model": {"kind": "matern", "sigma2": 1.0, "range": 1.0, "nu": 0.5},
    "n": 100, "replicates": 4, "seed": 321,
    "methods": ["hhc", "yz", "matern"],
    "n_pred": 50, "ise_c_h_max": 50.0, "h_max_variogram": 5.0
  })";

  auto run_once = [&](const std::string& sub) {
    const std::string cmd = std::string(SPECDENS_CLI_PATH) + " --out-dir " +
                            (dir / sub).string() + " benchmark --config " + cfg.string() +
                            " >/dev/null 2>/dev/null";
    return std::system(cmd.c_str());
  };
  c.expect(run_once("a") == 0, "first benchmark run failed");
  c.expect(run_once("b") == 0, "second benchmark run failed");

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  };
  const std::string a = slurp(dir / "a" / "summary.csv");
  const std::string b = slurp(dir / "b" / "summary.csv");
  c.expect(!a.empty() && a == b, "summary CSVs differ between runs");
  fs::remove_all(dir);
  return c;
#endif
}

const char* kDescriptions[] = {
    "",
    "special-function values match brute-force sums to 1e-8",
    "closed-form spline covariance matches quadrature to 1e-8",
    "two-sided estimate continuous at the cutoff over 50 fixtures",
    "decay-rate recovery on exponential data, median in [0.7, 1.3]",
    "setup one n=250: median mIPE(yz) < 0.1 x median mIPE(hhc)",
    "setup two n=500: ISE(C) ordering and mIPE parity band",
    "setup one n=500: median ISE(f)(yz) < 0.03",
    "property suite: pair counts, OLS, kriging, normalization",
    "benchmark reruns produce byte-identical summary CSVs",
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <criterion 1-9>\n", argv[0]);
    return 2;
  }
  const int which = std::atoi(argv[1]);
  if (which < 1 || which > 9) {
    std::fprintf(stderr, "criterion out of range: %s\n", argv[1]);
    return 2;
  }

  Check c;
  try {
    switch (which) {
      case 1: c = criterion_1(); break;
      case 2: c = criterion_2(); break;
      case 3: c = criterion_3(); break;
      case 4: c = criterion_4(); break;
      case 5: c = criterion_5(); break;
      case 6: c = criterion_6(); break;
      case 7: c = criterion_7(); break;
      case 8: c = criterion_8(); break;
      case 9: c = criterion_9(); break;
    }
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }

  std::printf("[%s] criterion %d: %s%s%s\n", c.ok ? "PASS" : "FAIL", which,
              kDescriptions[which], c.ok ? "" : " -- ", c.ok ? "" : c.detail.c_str());
  return c.ok ? 0 : 1;
}
