// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line each. Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bench/config.hpp"
#include "bench/suite.hpp"
#include "dynsgd/batch_stats.hpp"
#include "dynsgd/driver.hpp"
#include "dynsgd/newsvendor.hpp"
#include "dynsgd/normal.hpp"
#include "dynsgd/optimizers.hpp"
#include "dynsgd/options_portfolio.hpp"
#include "dynsgd/projection.hpp"
#include "dynsgd/sampling_rules.hpp"
#include "oracles.hpp"

using namespace dynsgd;

namespace {

struct Failure {
  std::string detail;
};

using CriterionFn = std::function<void(std::string&)>;

void require(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

// ---------------------------------------------------------------- criterion 1

void criterion_rule_arithmetic(std::string& note) {
  const double z = normal_quantile(0.95);
  const double z2 = z * z;

  const int per_dim_expected = static_cast<int>(std::ceil(100.0 * 4.0 * z2 / 4.0));
  require(per_dim_expected == 271, "recomputed per-dimension example is not 271");
  const SamplingController pd(SamplingRuleKind::PerDimensionMedian, 0.05, 100, 4, 8192);
  const int pd_result = per_dimension_next_size({{2.0}, {4.0}, 100}, pd);
  require(pd_result == 271, "per-dimension rule returned " + std::to_string(pd_result));

  const int single_expected = static_cast<int>(std::ceil(100.0 * 25.0 * z2 / 625.0));
  require(single_expected == 11, "recomputed single-rule example is not 11");
  const SamplingController su(SamplingRuleKind::SingleUpdate, 0.05, 100, 4, 8192);
  const int su_result = single_update_next_size({{3.0, 4.0}, {1.0, 1.0}, 100}, su);
  require(su_result == 11, "single rule returned " + std::to_string(su_result));

  note = "271 and 11 reproduced exactly";
}

// ---------------------------------------------------------------- criterion 2

struct DescentStats {
  double single_fraction = 0.0;
  double median_coordinate_fraction = 0.0;
};

DescentStats descent_experiment(SamplingRuleKind rule, std::uint64_t seed) {
  // f(x) = 0.5 ||x - target||^2 in dimension 10; per-sample gradients carry
  // additive N(0, diag(sigma^2)) noise with sigma far above the gradient
  // scale so the controller has real work to do. A small eta keeps the
  // iterate quasi-stationary over the measured window.
  const std::size_t dim = 10;
  const int burn_in = 100, measured = 1000;
  Vector target(dim, 5.0), sigma(dim);
  RngStream setup(seed, 0);
  for (auto& s : sigma) s = 50.0 + 150.0 * setup.next_uniform();

  OptimizerState state{Vector(dim, 15.0), 1, std::nullopt};
  SamplingController ctl(rule, 0.05, 32, 4, 8192);
  RngStream noise(seed, 1);
  const SgdConfig sgd{0.05};
  const auto region = FeasibleRegion::nonnegative_orthant();

  std::vector<int> coordinate_hits(dim, 0);
  int single_hits = 0;
  Matrix samples;
  for (int iter = 1; iter <= burn_in + measured; ++iter) {
    Vector true_grad(dim);
    for (std::size_t k = 0; k < dim; ++k) true_grad[k] = state.iterate[k] - target[k];

    const int n = ctl.current_size();
    samples = Matrix(n, dim);
    for (int s = 0; s < n; ++s)
      for (std::size_t k = 0; k < dim; ++k)
        samples(s, k) = true_grad[k] + sigma[k] * noise.next_normal();
    const GradientBatchStats stats = accumulate_stats(samples);

    if (iter > burn_in) {
      double inner = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        inner += stats.mean[k] * true_grad[k];
        const bool agree = (stats.mean[k] > 0.0) == (true_grad[k] > 0.0);
        coordinate_hits[k] += agree;
      }
      single_hits += inner > 0.0;
    }
    sgd_step(state, stats.mean, sgd, region);
    next_size(stats, ctl);
  }

  std::vector<double> fractions(dim);
  for (std::size_t k = 0; k < dim; ++k)
    fractions[k] = static_cast<double>(coordinate_hits[k]) / measured;
  std::nth_element(fractions.begin(), fractions.begin() + (dim - 1) / 2, fractions.end());
  return {static_cast<double>(single_hits) / measured, fractions[(dim - 1) / 2]};
}

void criterion_descent_probability(std::string& note) {
  const auto pd = descent_experiment(SamplingRuleKind::PerDimensionMedian, 101);
  require(pd.median_coordinate_fraction >= 0.90,
          "per-dimension median-coordinate agreement " +
              std::to_string(pd.median_coordinate_fraction));
  const auto su = descent_experiment(SamplingRuleKind::SingleUpdate, 102);
  require(su.single_fraction >= 0.90,
          "single-rule descent fraction " + std::to_string(su.single_fraction));
  char buf[96];
  std::snprintf(buf, sizeof(buf), "per-dim median %.3f, single %.3f",
                pd.median_coordinate_fraction, su.single_fraction);
  note = buf;
}

// ---------------------------------------------------------------- criterion 3

void criterion_gradient_oracles(std::string& note) {
  // Newsvendor, away from the min(x, D) kinks.
  {
    RngStream gen(200, 0);
    const auto spec = generate_newsvendor_instance(10, gen);
    RngStream sample_rng(200, 1);
    const auto batch = newsvendor_sample(spec, 1, sample_rng);
    RngStream point_rng(200, 2);
    int tested = 0;
    while (tested < 20) {
      Vector x(10);
      for (auto& v : x) v = 0.5 + 49.5 * point_rng.next_uniform();
      bool near_kink = false;
      for (std::size_t i = 0; i < 10; ++i)
        if (std::abs(x[i] - batch.outcomes(0, i)) < 1e-3) near_kink = true;
      if (near_kink) continue;
      ++tested;
      const Matrix grads = newsvendor_gradient(spec, x, batch);
      const auto utility = [&](const Vector& p) {
        std::vector<double> values;
        newsvendor_objective_samples(spec, p, batch, values);
        return values[0];
      };
      double max_grad = 0.0, max_err = 0.0;
      for (std::size_t i = 0; i < 10; ++i) {
        const double fd = oracles::central_difference(utility, x, i, 1e-6);
        max_grad = std::max(max_grad, std::abs(grads(0, i)));
        max_err = std::max(max_err, std::abs(fd + grads(0, i)));
      }
      require(max_err <= 1e-5 * max_grad,
              "newsvendor relative error " + std::to_string(max_err / max_grad));
    }
  }
  // Options portfolio, interior feasible points.
  {
    RngStream gen(201, 0);
    const auto spec = generate_options_instance(5, gen);
    RngStream sample_rng(201, 1);
    const auto batch = options_sample(spec, 1, sample_rng);
    RngStream point_rng(201, 2);
    for (int trial = 0; trial < 20; ++trial) {
      Vector x(10);
      double sum = 0.0;
      for (auto& v : x) {
        v = point_rng.next_uniform();
        sum += v;
      }
      const double budget = 0.85 * point_rng.next_uniform() + 0.05;
      for (auto& v : x) v = 0.001 + v * budget / sum;
      const Matrix grads = options_gradient(spec, x, batch);
      const auto log_wealth = [&](const Vector& p) {
        std::vector<double> values;
        options_objective_samples(spec, p, batch, values);
        return values[0];
      };
      double max_grad = 0.0, max_err = 0.0;
      for (std::size_t i = 0; i < 10; ++i) {
        const double fd = oracles::central_difference(log_wealth, x, i, 1e-6);
        max_grad = std::max(max_grad, std::abs(grads(0, i)));
        max_err = std::max(max_err, std::abs(fd + grads(0, i)));
      }
      require(max_err <= 1e-5 * max_grad,
              "options relative error " + std::to_string(max_err / max_grad));
    }
  }
  note = "20 non-kink points per problem within 1e-5";
}

// ---------------------------------------------------------------- criterion 4

void criterion_projection(std::string& note) {
  const std::size_t dim = 10;
  RngStream rng(300, 0);
  const auto orthant = FeasibleRegion::nonnegative_orthant();
  const auto simplex = FeasibleRegion::capped_simplex(1.0);
  for (const auto& region : {orthant, simplex}) {
    for (int trial = 0; trial < 10000; ++trial) {
      Vector v(dim);
      for (auto& x : v) x = 2.0 * rng.next_normal();
      const Vector p = project(region, v);
      require(project(region, p) == p, "projection is not idempotent");
      for (int k = 0; k < 100; ++k) {
        Vector z(dim);
        if (region.kind() == RegionKind::NonnegativeOrthant) {
          for (auto& x : z) x = std::abs(rng.next_normal());
        } else {
          double sum = 0.0;
          for (auto& x : z) {
            x = -std::log(rng.next_uniform());
            sum += x;
          }
          const double scale = rng.next_uniform() / sum;
          for (auto& x : z) x *= scale;
        }
        double inner = 0.0;
        for (std::size_t i = 0; i < dim; ++i) inner += (z[i] - p[i]) * (v[i] - p[i]);
        require(inner <= 1e-10, "optimality inequality violated: " + std::to_string(inner));
      }
    }
  }
  note = "10^4 points per region, 100 witnesses each";
}

// ---------------------------------------------------------------- criterion 5

void criterion_quantile(std::string& note) {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double p = 1e-6 + (1.0 - 2e-6) * (static_cast<double>(i) + 0.5) / 1000.0;
    const double err = std::abs(normal_quantile(p) - oracles::normal_quantile_bisect(p));
    worst = std::max(worst, err);
    require(err <= 1e-8, "quantile error " + std::to_string(err) + " at p=" + std::to_string(p));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "worst error %.2e over 1000 points", worst);
  note = buf;
}

// ---------------------------------------------------------------- criterion 6

void criterion_black_scholes(std::string& note) {
  RngStream param_rng(400, 0);
  RngStream mc_rng(400, 1);
  for (int trial = 0; trial < 10; ++trial) {
    const double sigma = 0.1 + 0.5 * param_rng.next_uniform();
    const double rate = 0.05 * param_rng.next_uniform();
    const auto [call, put] = bs_atm_prices(sigma, rate);

    const double parity = call - put - (1.0 - std::exp(-rate));
    require(std::abs(parity) <= 1e-12, "parity residual " + std::to_string(parity));

    const auto mc_call = oracles::mc_atm_price(sigma, rate, true, 1000000, mc_rng);
    require(std::abs(call - mc_call.mean) <= 3.0 * mc_call.std_error,
            "call price off by " + std::to_string((call - mc_call.mean) / mc_call.std_error) +
                " standard errors");
    const auto mc_put = oracles::mc_atm_price(sigma, rate, false, 1000000, mc_rng);
    require(std::abs(put - mc_put.mean) <= 3.0 * mc_put.std_error,
            "put price off by " + std::to_string((put - mc_put.mean) / mc_put.std_error) +
                " standard errors");
  }
  note = "10 random (sigma, r) pairs within 3 standard errors";
}

// ---------------------------------------------------------------- criterion 7

struct ComboOutcome {
  std::string name;
  int seeds_passed = 0;
  std::string detail;
};

ComboOutcome figure_combo(ProblemKind problem, Method method) {
  ComboOutcome outcome;
  outcome.name = std::string(problem == ProblemKind::Newsvendor ? "newsvendor" : "options") +
                 "/" + (method == Method::BasicSgd ? "sgd" : "adam");
  for (std::uint64_t seed : {1, 2, 3}) {
    bench::ExperimentConfig cfg = bench::default_config();
    cfg.problem = problem;
    cfg.method = method;
    cfg.seed = seed;
    bench::validate_config(cfg);

    const bench::SuiteResult suite = bench::run_suite(cfg);
    double best_fixed = -std::numeric_limits<double>::infinity();
    double best_fixed_se = 0.0;
    double pd_final = 0.0, single_final = 0.0;
    for (const auto& run : suite.runs) {
      const double final_obj = run.trace.back().objective;
      if (run.label == "PD") {
        pd_final = final_obj;
      } else if (run.label == "1D") {
        single_final = final_obj;
      } else if (final_obj > best_fixed) {
        best_fixed = final_obj;
        best_fixed_se = run.final_std_error;
      }
    }
    const double floor = best_fixed - best_fixed_se;
    const bool ok = pd_final >= floor && single_final >= floor;
    outcome.seeds_passed += ok;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s seed %llu: PD %.6g, 1D %.6g, best fixed %.6g (se %.2g)%s",
                  outcome.name.c_str(), static_cast<unsigned long long>(seed), pd_final,
                  single_final, best_fixed, best_fixed_se, ok ? "" : " [behind]");
    std::printf("       %s\n", buf);
    std::fflush(stdout);
  }
  return outcome;
}

void criterion_figure_shapes(std::string& note) {
  std::string summary;
  for (const auto problem : {ProblemKind::Newsvendor, ProblemKind::OptionsPortfolio}) {
    for (const auto method : {Method::BasicSgd, Method::Adam}) {
      const ComboOutcome outcome = figure_combo(problem, method);
      summary += outcome.name + " " + std::to_string(outcome.seeds_passed) + "/3; ";
      require(outcome.seeds_passed >= 2,
              outcome.name + ": dynamic rules beat the best fixed rule in only " +
                  std::to_string(outcome.seeds_passed) + " of 3 seeds");
    }
  }
  note = summary;
}

// ---------------------------------------------------------------- criterion 8

void criterion_adam_defaults(std::string& note) {
  const AdamConfig defaults{};
  require(defaults.eta == 0.001, "eta default is not 0.001");
  require(defaults.beta1 == 0.9, "beta1 default is not 0.9");
  require(defaults.beta2 == 0.999, "beta2 default is not 0.999");
  require(defaults.epsilon == 1e-8, "epsilon default is not 1e-8");
  const bench::ExperimentConfig cfg = bench::default_config();
  require(cfg.adam.eta == 0.001 && cfg.adam.beta1 == 0.9 && cfg.adam.beta2 == 0.999 &&
              cfg.adam.epsilon == 1e-8,
          "harness defaults disagree");
  note = "eta 0.001, beta1 0.9, beta2 0.999, epsilon 1e-8";
}

// ---------------------------------------------------------------- criterion 9

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot read " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::stringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

void criterion_cli_determinism(std::string& note) {
  namespace fs = std::filesystem;
  const fs::path work = fs::temp_directory_path() / "dynsgd_acceptance_cli";
  fs::remove_all(work);
  fs::create_directories(work);

  const fs::path config_path = work / "repro.cfg";
  {
    std::ofstream cfg(config_path);
    cfg << "problem = newsvendor\n"
        << "method = sgd\n"
        << "rules = pd,1d,32\n"
        << "seed = 7\n"
        << "dimension = 10\n"
        << "max_iterations = 400\n"
        << "eval_samples = 2000\n";
  }

  const auto run_once = [&](const std::string& out_dir) {
    const std::string cmd = std::string(SGDBENCH_BIN) + " run --config " + config_path.string() +
                            " --set output_dir=" + (work / out_dir).string() + " > " +
                            (work / (out_dir + ".log")).string() + " 2>&1";
    require(std::system(cmd.c_str()) == 0, "CLI run failed, see " + out_dir + ".log");
  };
  run_once("a");
  run_once("b");

  for (const std::string label : {"PD", "1D", "32"}) {
    const auto rows_a = read_csv((work / "a" / ("newsvendor_sgd_" + label + ".csv")).string());
    const auto rows_b = read_csv((work / "b" / ("newsvendor_sgd_" + label + ".csv")).string());
    require(rows_a.size() == rows_b.size(), label + ": row counts differ");
    require(rows_a.size() > 2, label + ": trace is unexpectedly short");
    for (std::size_t r = 0; r < rows_a.size(); ++r) {
      require(rows_a[r].size() == 5 && rows_b[r].size() == 5, label + ": malformed csv row");
      for (std::size_t c = 0; c < 5; ++c) {
        if (c == 2) continue;  // wall_seconds is the machine-dependent column
        require(rows_a[r][c] == rows_b[r][c],
                label + ": row " + std::to_string(r) + " column " + std::to_string(c) +
                    " differs (" + rows_a[r][c] + " vs " + rows_b[r][c] + ")");
      }
    }
  }
  fs::remove_all(work);
  note = "two CLI runs identical apart from wall-clock columns";
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    CriterionFn fn;
  };
  const std::vector<Entry> criteria = {
      {1, "rule arithmetic exactness", criterion_rule_arithmetic},
      {2, "descent-probability property", criterion_descent_probability},
      {3, "gradient-oracle correctness", criterion_gradient_oracles},
      {4, "projection correctness", criterion_projection},
      {5, "quantile accuracy", criterion_quantile},
      {6, "black-scholes consistency", criterion_black_scholes},
      {7, "figure-shape reproduction", criterion_figure_shapes},
      {8, "adam defaults", criterion_adam_defaults},
      {9, "run determinism", criterion_cli_determinism},
  };

  int failures = 0;
  for (const auto& entry : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = true;
    std::string detail;
    try {
      entry.fn(note);
    } catch (const Failure& f) {
      ok = false;
      detail = f.detail;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("unexpected error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok) {
      std::printf("[PASS] criterion %d: %s (%.1fs) %s\n", entry.id, entry.name, secs,
                  note.empty() ? "" : ("- " + note).c_str());
    } else {
      ++failures;
      std::printf("[FAIL] criterion %d: %s (%.1fs) - %s\n", entry.id, entry.name, secs,
                  detail.c_str());
    }
    std::fflush(stdout);
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
