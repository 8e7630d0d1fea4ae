#include "specdens/kriging.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>

#include "specdens/errors.hpp"

namespace specdens {

KrigingResult krige(const SampleSet& sample, const CovarianceFn& cov,
                    const std::vector<double>& targets) {
  const auto n = static_cast<Eigen::Index>(sample.size());
  if (n == 0) throw data_error("krige: empty sample");

  const double c0 = cov(0.0);
  if (!(c0 > 0.0)) throw numeric_error("krige: covariance evaluator has C(0) <= 0");

  Eigen::MatrixXd sigma(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double c = cov(std::abs(sample.locations[i] - sample.locations[j]));
      sigma(i, j) = c;
      sigma(j, i) = c;
    }

  const Eigen::VectorXd x =
      Eigen::Map<const Eigen::VectorXd>(sample.values.data(), n);

  static constexpr double kLadder[] = {0.0, 1e-8, 1e-6, 1e-4};
  Eigen::LLT<Eigen::MatrixXd> llt;
  Eigen::VectorXd weights;  // Sigma^{-1} X, reused per target
  double jitter_used = -1.0;
  for (double rel : kLadder) {
    Eigen::MatrixXd trial = sigma;
    trial.diagonal().array() += rel * c0;
    llt.compute(trial);
    if (llt.info() == Eigen::Success) {
      jitter_used = rel;
      weights = llt.solve(x);
      break;
    }
  }
  if (jitter_used < 0.0) {
    // Estimated covariances need not be positive definite (a signed spectral
    // estimate can produce an indefinite matrix); solve the system anyway so
    // the plug-in predictor stays comparable.
    Eigen::LDLT<Eigen::MatrixXd> ldlt(sigma);
    if (ldlt.info() != Eigen::Success)
      throw numeric_error("krige: covariance matrix not factorizable");
    weights = ldlt.solve(x);
    if (!weights.allFinite()) throw numeric_error("krige: singular covariance matrix");
    jitter_used = 0.0;
  }

  KrigingResult out;
  out.targets = targets;
  out.jitter_used = jitter_used;
  out.predictions.reserve(targets.size());
  for (double s : targets) {
    double pred = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      pred += cov(std::abs(s - sample.locations[i])) * weights(i);
    if (!std::isfinite(pred)) throw numeric_error("krige: non-finite prediction");
    out.predictions.push_back(pred);
  }
  return out;
}

std::vector<double> prediction_targets(double domain_length, int n_pred) {
  if (n_pred < 1) throw parameter_error("prediction_targets: n_pred must be >= 1");
  if (!(domain_length > 0.0))
    throw parameter_error("prediction_targets: domain_length must be positive");
  std::vector<double> t(static_cast<std::size_t>(n_pred));
  for (int i = 1; i <= n_pred; ++i)
    t[static_cast<std::size_t>(i - 1)] = domain_length * i / (n_pred + 1.0);
  return t;
}

std::vector<double> ipe(const KrigingResult& pred_est, const KrigingResult& pred_true) {
  if (pred_est.targets != pred_true.targets)
    throw parameter_error("ipe: prediction target sets differ");
  std::vector<double> out(pred_est.predictions.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double d = pred_est.predictions[i] - pred_true.predictions[i];
    out[i] = d * d;
  }
  return out;
}

}  // namespace specdens
