#include "specdens/bench.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <thread>

#include "specdens/errors.hpp"
#include "specdens/gridize.hpp"
#include "specdens/kriging.hpp"
#include "specdens/quadrature.hpp"
#include "specdens/simulate.hpp"

namespace specdens {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double ise_f(const CurveFn& estimate, const CurveFn& truth, double omega_c) {
  auto sq = [&](double w) {
    const double d = estimate(w) - truth(w);
    return d * d;
  };
  return composite_simpson(sq, 0.0, omega_c, 2048);
}

double ise_c(const CurveFn& estimate, const CurveFn& truth, double h_max) {
  auto sq = [&](double h) {
    const double d = estimate(h) - truth(h);
    return d * d;
  };
  return composite_simpson(sq, 0.0, h_max, 4096);
}

Method method_from_string(const std::string& name) {
  if (name == "hhc") return Method::Hhc;
  if (name == "yz") return Method::Yz;
  if (name == "matern") return Method::Matern;
  throw parameter_error("unknown method: " + name);
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Hhc: return "hhc";
    case Method::Yz: return "yz";
    case Method::Matern: return "matern";
  }
  return "?";
}

double median(std::vector<double> v) {
  if (v.empty()) throw parameter_error("median: empty input");
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// ---------------------------------------------------------------------------
// Matern maximum likelihood
// ---------------------------------------------------------------------------

namespace {

// Nelder-Mead simplex minimization, no derivatives.
std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> start, double step, int max_evals,
                                double ftol, bool& converged) {
  const std::size_t dim = start.size();
  struct Vertex {
    std::vector<double> x;
    double fx;
  };
  std::vector<Vertex> simplex;
  simplex.push_back({start, f(start)});
  for (std::size_t d = 0; d < dim; ++d) {
    auto x = start;
    x[d] += step;
    simplex.push_back({x, f(x)});
  }
  int evals = static_cast<int>(dim) + 1;
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; };

  converged = false;
  while (evals < max_evals) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    if (std::abs(simplex.back().fx - simplex.front().fx) <
        ftol * (std::abs(simplex.front().fx) + ftol)) {
      converged = true;
      break;
    }
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v)
      for (std::size_t d = 0; d < dim; ++d) centroid[d] += simplex[v].x[d] / dim;

    auto blend = [&](double coeff) {
      std::vector<double> x(dim);
      for (std::size_t d = 0; d < dim; ++d)
        x[d] = centroid[d] + coeff * (simplex.back().x[d] - centroid[d]);
      return x;
    };

    auto reflected = blend(-1.0);
    double fr = f(reflected);
    ++evals;
    if (fr < simplex.front().fx) {
      auto expanded = blend(-2.0);
      double fe = f(expanded);
      ++evals;
      simplex.back() = fe < fr ? Vertex{expanded, fe} : Vertex{reflected, fr};
    } else if (fr < simplex[dim - 1].fx) {
      simplex.back() = {reflected, fr};
    } else {
      auto contracted = blend(0.5);
      double fc = f(contracted);
      ++evals;
      if (fc < simplex.back().fx) {
        simplex.back() = {contracted, fc};
      } else {
        for (std::size_t v = 1; v <= dim; ++v) {
          for (std::size_t d = 0; d < dim; ++d)
            simplex[v].x[d] = 0.5 * (simplex[v].x[d] + simplex[0].x[d]);
          simplex[v].fx = f(simplex[v].x);
          ++evals;
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(), by_value);
  return simplex.front().x;
}

}  // namespace

MaternFit fit_matern_mle(const SampleSet& sample) {
  const auto n = static_cast<Eigen::Index>(sample.size());
  if (n < 8) throw data_error("fit_matern_mle: need N >= 8");

  double var = 0.0;
  for (double v : sample.values) var += v * v;
  var /= static_cast<double>(n);
  if (!(var > 0.0)) throw data_error("fit_matern_mle: degenerate constant data");

  const double mean_spacing = sample.domain_length / static_cast<double>(n);
  const double phi_lo = 1e-2 * mean_spacing, phi_hi = 10.0 * mean_spacing;
  const double nu_lo = 0.1, nu_hi = 5.0;
  const double sigma2_lo = 1e-3, sigma2_hi = 1e3;

  Eigen::MatrixXd dist(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double d = std::abs(sample.locations[i] - sample.locations[j]);
      dist(i, j) = d;
      dist(j, i) = d;
    }
  const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(sample.values.data(), n);

  // sigma2 is profiled out: sigma2_hat = x' R^{-1} x / N, leaving the
  // objective N log(sigma2_hat) + log|R| over (log phi, log nu).
  double best_sigma2 = var;
  auto objective = [&](const std::vector<double>& p) -> double {
    const double phi = std::clamp(std::exp(p[0]), phi_lo, phi_hi);
    const double nu = std::clamp(std::exp(p[1]), nu_lo, nu_hi);
    CovarianceModel corr{ModelKind::Matern, 1.0, phi, nu};
    Eigen::MatrixXd r(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      r(i, i) = 1.0 + 1e-10;
      for (Eigen::Index j = 0; j < i; ++j) {
        const double c = covariance(corr, dist(i, j));
        r(i, j) = c;
        r(j, i) = c;
      }
    }
    Eigen::LLT<Eigen::MatrixXd> llt(r);
    if (llt.info() != Eigen::Success) return 1e30;
    double logdet = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
    const double quad = x.dot(llt.solve(x));
    if (!(quad > 0.0)) return 1e30;
    const double s2 = std::clamp(quad / static_cast<double>(n), sigma2_lo, sigma2_hi);
    best_sigma2 = s2;
    return static_cast<double>(n) * std::log(s2) + logdet +
           quad / s2;  // equals N + ... at the unclamped optimum
  };

  const double phi_start = std::clamp(sample.domain_length / 10.0, 2.0 * phi_lo, 0.5 * phi_hi);
  bool converged = false;
  auto best = nelder_mead(objective, {std::log(phi_start), std::log(0.5)}, 0.5, 200,
                          1e-8, converged);
  const double fbest = objective(best);  // refresh best_sigma2 for the winner
  (void)fbest;

  MaternFit fit;
  fit.model.kind = ModelKind::Matern;
  fit.model.range = std::clamp(std::exp(best[0]), phi_lo, phi_hi);
  fit.model.nu = std::clamp(std::exp(best[1]), nu_lo, nu_hi);
  fit.model.sigma2 = best_sigma2;
  fit.converged = converged;

  // Report the actual Gaussian log-likelihood at the optimum.
  {
    CovarianceModel corr{ModelKind::Matern, 1.0, fit.model.range, fit.model.nu};
    Eigen::MatrixXd r(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      r(i, i) = 1.0 + 1e-10;
      for (Eigen::Index j = 0; j < i; ++j) {
        const double c = covariance(corr, dist(i, j));
        r(i, j) = c;
        r(j, i) = c;
      }
    }
    Eigen::LLT<Eigen::MatrixXd> llt(r);
    double logdet = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
    const double quad = x.dot(llt.solve(x));
    fit.log_likelihood = -0.5 * (static_cast<double>(n) * std::log(2.0 * kPi * fit.model.sigma2) +
                                 logdet + quad / fit.model.sigma2);
  }
  return fit;
}

// ---------------------------------------------------------------------------
// Monte Carlo experiment
// ---------------------------------------------------------------------------

void ExperimentConfig::validate() const {
  model.validate();
  if (replicates < 1) throw parameter_error("ExperimentConfig: replicates must be >= 1");
  if (n < 8) throw parameter_error("ExperimentConfig: n must be >= 8");
  if (methods.empty()) throw parameter_error("ExperimentConfig: methods must be nonempty");
  if (n_pred < 1) throw parameter_error("ExperimentConfig: n_pred must be >= 1");
}

namespace {

struct ReplicateOutput {
  std::vector<DetailRow> rows;
  // Pooled squared prediction differences per method, in method order.
  std::vector<std::vector<double>> ipe_values;
};

ReplicateOutput run_replicate(const ExperimentConfig& cfg, int rep) {
  const double domain_length = static_cast<double>(cfg.n);
  const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(rep);

  auto locations = draw_locations(cfg.n, domain_length, seed);
  SampleSet sample =
      simulate_gp(cfg.model, locations, domain_length, seed ^ 0x9e3779b97f4a7c15ULL);

  const double omega_c = cfg.omega_c > 0.0 ? cfg.omega_c : default_cutoff(sample);
  const GridSpec grid = GridSpec::from_cutoff(omega_c, domain_length);
  const LagSums sums = accumulate_lag_sums(sample, grid);
  const auto lambda_grid =
      cfg.lambda_grid.empty() ? default_lambda_grid(sample.size()) : cfg.lambda_grid;
  const GcvResult gcv = select_lambda_gcv(sums, omega_c, lambda_grid);
  const SplineSpectral spline{sums, omega_c, gcv.lambda};

  auto f_true = [&](double w) { return spectral_density(cfg.model, w); };
  auto c_true = [&](double h) { return covariance(cfg.model, h); };

  const auto targets = prediction_targets(domain_length, cfg.n_pred);
  const KrigingResult pred_true = krige(sample, c_true, targets);

  std::vector<double> krig_var;  // true kriging variance per target, for the
  if (cfg.normalized_mipe) {     // normalized mIPE variant
    const auto n = static_cast<Eigen::Index>(sample.size());
    Eigen::MatrixXd sigma(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j <= i; ++j) {
        const double c = c_true(std::abs(sample.locations[i] - sample.locations[j]));
        sigma(i, j) = c;
        sigma(j, i) = c;
      }
    Eigen::LLT<Eigen::MatrixXd> llt(sigma);
    for (double s : targets) {
      Eigen::VectorXd c(n);
      for (Eigen::Index i = 0; i < n; ++i) c(i) = c_true(std::abs(s - sample.locations[i]));
      krig_var.push_back(c_true(0.0) - c.dot(llt.solve(c)));
    }
  }

  ReplicateOutput out;
  out.ipe_values.resize(cfg.methods.size());

  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
    const Method method = cfg.methods[mi];
    DetailRow row;
    row.replicate = rep;
    row.method = method;
    try {
      CurveFn f_est, c_est;
      YzCovarianceTable* table = nullptr;
      std::unique_ptr<YzCovarianceTable> table_holder;
      switch (method) {
        case Method::Hhc: {
          f_est = [spline](double w) { return eval_f_delta(spline, w); };
          c_est = [spline](double h) { return hhc_covariance(spline, h); };
          break;
        }
        case Method::Yz: {
          const LagSchedule schedule = default_schedule(sample, cfg.h_max_variogram);
          const VariogramTriples triples = empirical_variogram(sample, schedule);
          const DecayEstimate decay = fit_alpha0(triples);
          const SpectralEstimate est = assemble(spline, decay);
          const double h_needed = std::max(cfg.ise_c_h_max, domain_length) + 1.0;
          table_holder = std::make_unique<YzCovarianceTable>(est, h_needed);
          table = table_holder.get();
          f_est = [est](double w) { return eval_yz_positive(est, w); };
          c_est = [table](double h) { return (*table)(h); };
          break;
        }
        case Method::Matern: {
          const MaternFit fit = fit_matern_mle(sample);
          if (!fit.converged) throw numeric_error("matern MLE did not converge");
          const CovarianceModel m = fit.model;
          f_est = [m](double w) { return spectral_density(m, w); };
          c_est = [m](double h) { return covariance(m, h); };
          break;
        }
      }
      row.ise_f = ise_f(f_est, f_true, omega_c);
      row.ise_c = ise_c(c_est, c_true, cfg.ise_c_h_max);
      const KrigingResult pred = krige(sample, c_est, targets);
      std::vector<double> sq = ipe(pred, pred_true);
      if (cfg.normalized_mipe)
        for (std::size_t t = 0; t < sq.size(); ++t)
          sq[t] /= std::max(krig_var[t], 1e-300);
      row.median_ipe = median(sq);
      out.ipe_values[mi] = std::move(sq);
    } catch (const std::exception& e) {
      row.flagged = true;
      row.flag_reason = e.what();
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

int thread_count() {
  if (const char* env = std::getenv("SPECDENS_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();

  std::vector<ReplicateOutput> outputs(static_cast<std::size_t>(config.replicates));
  const int workers = std::min(thread_count(), config.replicates);
  std::atomic<int> next{0};
  auto work = [&] {
    for (;;) {
      const int rep = next.fetch_add(1);
      if (rep >= config.replicates) return;
      outputs[static_cast<std::size_t>(rep)] = run_replicate(config, rep);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  ExperimentResult result;
  for (const auto& o : outputs)
    for (const auto& row : o.rows) result.detail.push_back(row);

  for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
    ScoreRow score;
    score.method = config.methods[mi];
    score.n = config.n;
    std::vector<double> fs, cs, pooled;
    for (std::size_t rep = 0; rep < outputs.size(); ++rep) {
      const DetailRow& row = outputs[rep].rows[mi];
      if (row.flagged) {
        ++score.flagged_replicates;
        continue;
      }
      fs.push_back(row.ise_f);
      cs.push_back(row.ise_c);
      const auto& vals = outputs[rep].ipe_values[mi];
      pooled.insert(pooled.end(), vals.begin(), vals.end());
    }
    if (fs.empty()) throw numeric_error("run_experiment: every replicate flagged for method " +
                                        to_string(score.method));
    score.ise_f = median(fs);
    score.ise_c = median(cs);
    score.mipe = median(pooled);
    result.summary.push_back(score);
  }
  return result;
}

}  // namespace specdens
