// Command-line front end: simulate / estimate / krige / benchmark.
//
// Exit codes: 0 success, 2 usage error, 3 data error, 4 numerical error.
// Errors go to stderr as one JSON object per line.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "specdens/aliasing.hpp"
#include "specdens/bench.hpp"
#include "specdens/decay.hpp"
#include "specdens/errors.hpp"
#include "specdens/gridize.hpp"
#include "specdens/io.hpp"
#include "specdens/kriging.hpp"
#include "specdens/models.hpp"
#include "specdens/simulate.hpp"
#include "specdens/spline_spectral.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace specdens;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw data_error("write failed: " + path.string());
}

void write_manifest(const fs::path& dir, const std::string& command, const json& config,
                    const std::vector<std::string>& outputs, const std::string& stem) {
  json m;
  m["command"] = command;
  m["version"] = kVersion;
  m["timestamp"] = timestamp_utc();
  m["config"] = config;
  m["outputs"] = outputs;
  write_text(dir / (stem + ".manifest.json"), m.dump(2) + "\n");
}

json model_to_json(const CovarianceModel& m) {
  return json{{"kind", to_string(m.kind)},
              {"sigma2", m.sigma2},
              {"range", m.range},
              {"nu", m.nu}};
}

struct ModelFlags {
  std::string kind;
  double sigma2 = 1.0;
  double range = 1.0;
  double nu = 0.5;

  void attach(CLI::App* cmd, bool required) {
    auto* k = cmd->add_option("--model", kind, "covariance kind: matern|spherical|exponential");
    if (required) k->required();
    cmd->add_option("--sigma2", sigma2, "marginal variance");
    cmd->add_option("--range", range, "range parameter");
    cmd->add_option("--nu", nu, "matern smoothness");
  }

  CovarianceModel build() const {
    CovarianceModel m{model_kind_from_string(kind), sigma2, range, nu};
    m.validate();
    return m;
  }
};

// Shared spectral-fit pipeline used by `estimate` and `krige --method ...`.
struct Fitted {
  SplineSpectral spline;
  GcvResult gcv;
  double omega_c = 0.0;
  // yz extras, unset when method == "hhc"
  bool has_tail = false;
  DecayEstimate decay;
  SpectralEstimate yz;
  VariogramTriples variogram;
};

Fitted fit_sample(const SampleSet& sample, const std::string& method, double omega_c_flag,
                  double lambda_flag, double h_max_variogram) {
  Fitted fit;
  fit.omega_c = omega_c_flag > 0.0 ? omega_c_flag : default_cutoff(sample);
  const GridSpec grid = GridSpec::from_cutoff(fit.omega_c, sample.domain_length);
  const LagSums sums = accumulate_lag_sums(sample, grid);
  if (lambda_flag > 0.0) {
    fit.gcv.lambda = lambda_flag;
    fit.gcv.score = 0.0;
  } else {
    fit.gcv = select_lambda_gcv(sums, fit.omega_c, default_lambda_grid(sample.size()));
  }
  fit.spline = SplineSpectral{sums, fit.omega_c, fit.gcv.lambda};

  long nonzero = 0;
  for (long n : sums.n)
    if (n > 0) ++nonzero;
  std::fprintf(stderr, "info: K=%d nonzero_lag_classes=%ld lambda=%s\n", sums.max_lag(),
               nonzero, format_double(fit.gcv.lambda).c_str());

  if (method == "yz") {
    const LagSchedule schedule = default_schedule(sample, h_max_variogram);
    fit.variogram = empirical_variogram(sample, schedule);
    fit.decay = fit_alpha0(fit.variogram);
    fit.yz = assemble(fit.spline, fit.decay);
    fit.has_tail = true;
  } else if (method != "hhc") {
    throw parameter_error("unknown estimation method: " + method);
  }
  return fit;
}

json sidecar_json(const Fitted& fit, const std::string& method) {
  const LagSums& sums = fit.spline.lag_sums;
  long nonzero = 0;
  for (long n : sums.n)
    if (n > 0) ++nonzero;
  json side;
  side["method"] = method;
  side["omega_c"] = fit.omega_c;
  side["lambda"] = fit.spline.lambda;
  side["gcv_score"] = fit.gcv.score;
  side["gcv_degenerate"] = fit.gcv.degenerate;
  side["num_lag_classes"] = sums.max_lag() + 1;
  side["nonzero_lag_classes"] = nonzero;
  if (fit.has_tail) {
    side["alpha0"] = fit.decay.alpha0;
    side["gamma"] = fit.decay.gamma;
    side["alpha0_clamped"] = fit.decay.clamped;
    side["variogram_lags_used"] = fit.decay.m_used;
    side["tail_scale"] = fit.yz.tail_scale;
    side["tail_clamped"] = fit.yz.tail_clamped;
  }
  return side;
}

// ---------------------------------------------------------------------------

int cmd_simulate(const fs::path& out_dir, const ModelFlags& mf, int n, double domain_length,
                 std::uint64_t seed, const std::string& out_name) {
  const CovarianceModel model = mf.build();
  const double L = domain_length > 0.0 ? domain_length : static_cast<double>(n);
  auto locations = draw_locations(n, L, seed);
  SampleSet sample = simulate_gp(model, locations, L, seed ^ 0x9e3779b97f4a7c15ULL);

  fs::create_directories(out_dir);
  const fs::path csv = out_dir / out_name;
  write_sample_csv(sample, csv.string());

  json cfg;
  cfg["model"] = model_to_json(model);
  cfg["n"] = n;
  cfg["domain_length"] = L;
  cfg["seed"] = seed;
  write_manifest(out_dir, "simulate", cfg, {csv.string()}, csv.stem().string());
  return 0;
}

int cmd_estimate(const fs::path& out_dir, const std::string& input, const std::string& method,
                 double domain_length, double omega_c_flag, double lambda_flag,
                 double h_max_variogram, int grid_points, double grid_max,
                 const std::string& variogram_csv, const std::string& prefix) {
  SampleSet sample = read_sample_csv(input, domain_length);
  Fitted fit = fit_sample(sample, method, omega_c_flag, lambda_flag, h_max_variogram);

  const double wmax =
      grid_max > 0.0 ? grid_max : (method == "yz" ? 2.0 * fit.omega_c : fit.omega_c);
  std::string curve = "omega,f\n";
  for (int i = 0; i < grid_points; ++i) {
    const double w = wmax * i / (grid_points - 1);
    const double f = fit.has_tail ? eval_yz_positive(fit.yz, w) : eval_f_delta(fit.spline, w);
    curve += format_double(w) + "," + format_double(f) + "\n";
  }

  fs::create_directories(out_dir);
  const fs::path curve_path = out_dir / (prefix + ".csv");
  const fs::path side_path = out_dir / (prefix + ".json");
  write_text(curve_path, curve);
  write_text(side_path, sidecar_json(fit, method).dump(2) + "\n");
  std::vector<std::string> outputs = {curve_path.string(), side_path.string()};

  if (!variogram_csv.empty() && fit.has_tail) {
    std::string table = "h,u,count\n";
    for (std::size_t m = 0; m < fit.variogram.size(); ++m)
      table += format_double(fit.variogram.lag[m]) + "," +
               format_double(fit.variogram.value[m]) + "," +
               std::to_string(fit.variogram.count[m]) + "\n";
    const fs::path vpath = out_dir / variogram_csv;
    write_text(vpath, table);
    outputs.push_back(vpath.string());
  }

  json cfg;
  cfg["input"] = input;
  cfg["method"] = method;
  cfg["omega_c"] = omega_c_flag > 0.0 ? json(omega_c_flag) : json("auto");
  cfg["lambda"] = lambda_flag > 0.0 ? json(lambda_flag) : json("gcv");
  cfg["grid_points"] = grid_points;
  cfg["grid_max"] = wmax;
  write_manifest(out_dir, "estimate", cfg, outputs, prefix);
  return 0;
}

int cmd_krige(const fs::path& out_dir, const std::string& input, double domain_length,
              const std::string& method, const ModelFlags& mf, bool model_given, int n_pred,
              std::vector<double> targets, double omega_c_flag, double lambda_flag,
              double h_max_variogram, const std::string& out_name) {
  SampleSet sample = read_sample_csv(input, domain_length);
  if (targets.empty()) targets = prediction_targets(sample.domain_length, n_pred);

  CovarianceFn c_est;
  json cov_cfg;
  std::unique_ptr<YzCovarianceTable> table;
  Fitted fit;
  if (model_given) {
    const CovarianceModel model = mf.build();
    c_est = [model](double h) { return covariance(model, h); };
    cov_cfg = model_to_json(model);
  } else {
    fit = fit_sample(sample, method, omega_c_flag, lambda_flag, h_max_variogram);
    if (fit.has_tail) {
      table = std::make_unique<YzCovarianceTable>(fit.yz, sample.domain_length + 1.0);
      YzCovarianceTable* t = table.get();
      c_est = [t](double h) { return (*t)(h); };
    } else {
      const SplineSpectral spline = fit.spline;
      c_est = [spline](double h) { return hhc_covariance(spline, h); };
    }
    cov_cfg = json{{"method", method}};
  }

  const KrigingResult res = krige(sample, c_est, targets);
  std::string csv = "s,xhat\n";
  for (std::size_t i = 0; i < res.targets.size(); ++i)
    csv += format_double(res.targets[i]) + "," + format_double(res.predictions[i]) + "\n";

  fs::create_directories(out_dir);
  const fs::path path = out_dir / out_name;
  write_text(path, csv);

  json cfg;
  cfg["input"] = input;
  cfg["covariance"] = cov_cfg;
  cfg["n_pred"] = static_cast<int>(targets.size());
  cfg["jitter_used"] = res.jitter_used;
  write_manifest(out_dir, "krige", cfg, {path.string()}, path.stem().string());
  return 0;
}

ExperimentConfig parse_benchmark_config(const json& j) {
  ExperimentConfig cfg;
  if (!j.contains("model")) throw data_error("benchmark config: missing \"model\"");
  const json& m = j.at("model");
  cfg.model.kind = model_kind_from_string(m.at("kind").get<std::string>());
  cfg.model.sigma2 = m.value("sigma2", 1.0);
  cfg.model.range = m.value("range", 1.0);
  cfg.model.nu = m.value("nu", 0.5);
  cfg.n = j.value("n", 250);
  cfg.replicates = j.value("replicates", 100);
  cfg.seed = j.value("seed", std::uint64_t{1});
  if (j.contains("omega_c") && j.at("omega_c").is_number())
    cfg.omega_c = j.at("omega_c").get<double>();  // anything else means auto
  cfg.h_max_variogram = j.value("h_max_variogram", 0.0);
  if (j.contains("lambda_grid"))
    cfg.lambda_grid = j.at("lambda_grid").get<std::vector<double>>();
  if (j.contains("methods")) {
    cfg.methods.clear();
    for (const auto& name : j.at("methods"))
      cfg.methods.push_back(method_from_string(name.get<std::string>()));
  }
  cfg.n_pred = j.value("n_pred", 100);
  cfg.ise_c_h_max = j.value("ise_c_h_max", 100.0);
  cfg.normalized_mipe = j.value("normalized_mipe", false);
  cfg.validate();
  return cfg;
}

void dump_curves(const fs::path& out_dir, const ExperimentConfig& cfg,
                 std::vector<std::string>& outputs) {
  // Reproduce replicate 0 and write estimated vs true curves for plotting.
  const double L = static_cast<double>(cfg.n);
  auto locations = draw_locations(cfg.n, L, cfg.seed);
  SampleSet sample = simulate_gp(cfg.model, locations, L, cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  Fitted fit = fit_sample(sample, "yz", cfg.omega_c, 0.0, cfg.h_max_variogram);

  std::string fcsv = "omega,f_true,f_hhc,f_yz\n";
  const int pts = 512;
  for (int i = 0; i < pts; ++i) {
    const double w = 2.0 * fit.omega_c * i / (pts - 1);
    const double hhc = w <= fit.omega_c ? eval_f_delta(fit.spline, w) : 0.0;
    fcsv += format_double(w) + "," + format_double(spectral_density(cfg.model, w)) + "," +
            format_double(hhc) + "," + format_double(eval_yz_positive(fit.yz, w)) + "\n";
  }
  const fs::path fpath = out_dir / "curves_f.csv";
  write_text(fpath, fcsv);
  outputs.push_back(fpath.string());

  YzCovarianceTable table(fit.yz, cfg.ise_c_h_max + 1.0);
  std::string ccsv = "h,c_true,c_hhc,c_yz\n";
  for (int i = 0; i < pts; ++i) {
    const double h = cfg.ise_c_h_max * i / (pts - 1);
    ccsv += format_double(h) + "," + format_double(covariance(cfg.model, h)) + "," +
            format_double(hhc_covariance(fit.spline, h)) + "," + format_double(table(h)) + "\n";
  }
  const fs::path cpath = out_dir / "curves_c.csv";
  write_text(cpath, ccsv);
  outputs.push_back(cpath.string());
}

int cmd_benchmark(const fs::path& out_dir, const std::string& config_path, bool curves) {
  std::ifstream in(config_path);
  if (!in) throw data_error("cannot open config: " + config_path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw data_error(std::string("benchmark config: ") + e.what());
  }
  const ExperimentConfig cfg = parse_benchmark_config(j);
  const ExperimentResult result = run_experiment(cfg);

  std::string summary = "n,method,ise_f,ise_c,mipe,flagged_replicates\n";
  for (const auto& row : result.summary)
    summary += std::to_string(row.n) + "," + to_string(row.method) + "," +
               format_double(row.ise_f) + "," + format_double(row.ise_c) + "," +
               format_double(row.mipe) + "," + std::to_string(row.flagged_replicates) + "\n";

  std::string detail = "replicate,method,ise_f,ise_c,median_ipe,flagged,flag_reason\n";
  for (const auto& row : result.detail)
    detail += std::to_string(row.replicate) + "," + to_string(row.method) + "," +
              format_double(row.ise_f) + "," + format_double(row.ise_c) + "," +
              format_double(row.median_ipe) + "," + (row.flagged ? "1" : "0") + "," +
              row.flag_reason + "\n";

  fs::create_directories(out_dir);
  const fs::path spath = out_dir / "summary.csv";
  const fs::path dpath = out_dir / "detail.csv";
  write_text(spath, summary);
  write_text(dpath, detail);
  std::vector<std::string> outputs = {spath.string(), dpath.string()};
  if (curves) dump_curves(out_dir, cfg, outputs);

  json resolved;
  resolved["model"] = model_to_json(cfg.model);
  resolved["n"] = cfg.n;
  resolved["replicates"] = cfg.replicates;
  resolved["seed"] = cfg.seed;
  resolved["omega_c"] = cfg.omega_c > 0.0 ? json(cfg.omega_c) : json("auto");
  resolved["h_max_variogram"] = cfg.h_max_variogram;
  resolved["lambda_grid"] = cfg.lambda_grid;
  json methods = json::array();
  for (Method m : cfg.methods) methods.push_back(to_string(m));
  resolved["methods"] = methods;
  resolved["n_pred"] = cfg.n_pred;
  resolved["ise_c_h_max"] = cfg.ise_c_h_max;
  resolved["normalized_mipe"] = cfg.normalized_mipe;
  write_manifest(out_dir, "benchmark", resolved, outputs, "benchmark");
  return 0;
}

void print_error(const char* kind, const std::string& message) {
  json e;
  e["error"] = kind;
  e["message"] = message;
  std::fprintf(stderr, "%s\n", e.dump().c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiparametric spectral density estimation for irregular 1-D data"};
  app.require_subcommand(1);

  std::string out_dir = ".";
  app.add_option("--out-dir", out_dir, "directory for all outputs")->capture_default_str();

  // simulate
  auto* sim = app.add_subcommand("simulate", "draw a Gaussian process sample");
  ModelFlags sim_model;
  sim_model.attach(sim, true);
  int sim_n = 250;
  double sim_L = 0.0;
  std::uint64_t sim_seed = 1;
  std::string sim_out = "sample.csv";
  sim->add_option("--n", sim_n, "number of observations")->required();
  sim->add_option("--domain-length", sim_L, "domain length (default: n)");
  sim->add_option("--seed", sim_seed, "RNG seed")->capture_default_str();
  sim->add_option("--out", sim_out, "output CSV name")->capture_default_str();

  // estimate
  auto* est = app.add_subcommand("estimate", "fit a spectral density to a sample CSV");
  std::string est_input, est_method = "yz", est_prefix = "estimate", est_vario;
  double est_L = 0.0, est_wc = 0.0, est_lambda = 0.0, est_hmax = 0.0, est_gmax = 0.0;
  int est_pts = 512;
  est->add_option("--input", est_input, "sample CSV (s,x)")->required();
  est->add_option("--method", est_method, "hhc|yz")->capture_default_str();
  est->add_option("--domain-length", est_L, "domain length (default: max location)");
  est->add_option("--omega-c", est_wc, "cutoff frequency (default: auto)");
  est->add_option("--lambda", est_lambda, "fixed smoothing parameter (default: GCV)");
  est->add_option("--h-max-variogram", est_hmax, "largest variogram lag");
  est->add_option("--grid-points", est_pts, "frequency grid size")->capture_default_str();
  est->add_option("--grid-max", est_gmax, "largest frequency in the output grid");
  est->add_option("--variogram-csv", est_vario, "also dump the variogram table");
  est->add_option("--out", est_prefix, "output prefix")->capture_default_str();

  // krige
  auto* kri = app.add_subcommand("krige", "simple kriging at target locations");
  std::string kri_input, kri_method = "yz", kri_out = "predictions.csv";
  double kri_L = 0.0, kri_wc = 0.0, kri_lambda = 0.0, kri_hmax = 0.0;
  int kri_npred = 100;
  std::vector<double> kri_targets;
  ModelFlags kri_model;
  kri->add_option("--input", kri_input, "sample CSV (s,x)")->required();
  kri_model.attach(kri, false);
  kri->add_option("--method", kri_method, "estimated covariance: hhc|yz")
      ->capture_default_str();
  kri->add_option("--domain-length", kri_L, "domain length (default: max location)");
  kri->add_option("--omega-c", kri_wc, "cutoff frequency (default: auto)");
  kri->add_option("--lambda", kri_lambda, "fixed smoothing parameter (default: GCV)");
  kri->add_option("--h-max-variogram", kri_hmax, "largest variogram lag");
  kri->add_option("--n-pred", kri_npred, "evenly spaced targets")->capture_default_str();
  kri->add_option("--target", kri_targets, "explicit target location (repeatable)");
  kri->add_option("--out", kri_out, "output CSV name")->capture_default_str();

  // benchmark
  auto* ben = app.add_subcommand("benchmark", "Monte Carlo method comparison");
  std::string ben_config;
  bool ben_curves = false;
  ben->add_option("--config", ben_config, "experiment config JSON")->required();
  ben->add_flag("--curves", ben_curves, "dump replicate-0 curve CSVs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return 2;
  }

  try {
    if (sim->parsed())
      return cmd_simulate(out_dir, sim_model, sim_n, sim_L, sim_seed, sim_out);
    if (est->parsed())
      return cmd_estimate(out_dir, est_input, est_method, est_L, est_wc, est_lambda, est_hmax,
                          est_pts, est_gmax, est_vario, est_prefix);
    if (kri->parsed())
      return cmd_krige(out_dir, kri_input, kri_L, kri_method, kri_model,
                       kri->count("--model") > 0, kri_npred, kri_targets, kri_wc, kri_lambda,
                       kri_hmax, kri_out);
    if (ben->parsed()) return cmd_benchmark(out_dir, ben_config, ben_curves);
  } catch (const parameter_error& e) {
    print_error("usage", e.what());
    return 2;
  } catch (const data_error& e) {
    print_error("data", e.what());
    return 3;
  } catch (const numeric_error& e) {
    print_error("numeric", e.what());
    return 4;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 4;
  }
  return 0;
}
