#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specdens/aliasing.hpp"
#include "specdens/decay.hpp"
#include "specdens/models.hpp"
#include "specdens/sample.hpp"
#include "specdens/spline_spectral.hpp"

namespace specdens {

using CurveFn = std::function<double(double)>;

/// ISE(f) = int_0^{omega_c} (fhat - f)^2, composite Simpson with 2048 panels.
double ise_f(const CurveFn& estimate, const CurveFn& truth, double omega_c);

/// ISE(C) = int_0^{h_max} (Chat - C)^2, composite Simpson with 4096 panels.
double ise_c(const CurveFn& estimate, const CurveFn& truth, double h_max = 100.0);

struct MaternFit {
  CovarianceModel model;
  double log_likelihood = 0.0;
  bool converged = false;
};

/// Gaussian maximum likelihood over (sigma2, range, nu).  sigma2 is profiled
/// out; (log range, log nu) run through a bounded Nelder-Mead simplex.
MaternFit fit_matern_mle(const SampleSet& sample);

enum class Method { Hhc, Yz, Matern };
Method method_from_string(const std::string& name);
std::string to_string(Method m);

struct ExperimentConfig {
  CovarianceModel model;
  int n = 250;
  int replicates = 100;
  std::uint64_t seed = 1;
  double omega_c = 0.0;  // <= 0 means "auto" (rho * pi)
  double h_max_variogram = 0.0;  // <= 0 means domain_length / 1000
  std::vector<double> lambda_grid;  // empty means default 40-point grid
  std::vector<Method> methods = {Method::Hhc, Method::Yz, Method::Matern};
  int n_pred = 100;
  double ise_c_h_max = 100.0;
  bool normalized_mipe = false;  // divide squared differences by the kriging variance

  void validate() const;
};

struct DetailRow {
  int replicate = 0;
  Method method = Method::Hhc;
  double ise_f = 0.0;
  double ise_c = 0.0;
  double median_ipe = 0.0;  // median over this replicate's targets
  bool flagged = false;     // estimation failed; excluded from summaries
  std::string flag_reason;
};

struct ScoreRow {
  Method method = Method::Hhc;
  int n = 0;
  double ise_f = 0.0;
  double ise_c = 0.0;
  double mipe = 0.0;  // median over targets x replicates, pooled
  int flagged_replicates = 0;
};

struct ExperimentResult {
  std::vector<ScoreRow> summary;
  std::vector<DetailRow> detail;
};

double median(std::vector<double> v);

/// Full Monte Carlo protocol: simulate, estimate per method, score with
/// ISE(f), ISE(C) and pooled median IPE.  Replicate j uses seed base + j;
/// results are deterministic for a given config.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace specdens
