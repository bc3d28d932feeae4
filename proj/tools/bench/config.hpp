#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynsgd/driver.hpp"
#include "dynsgd/newsvendor.hpp"
#include "dynsgd/options_portfolio.hpp"
#include "dynsgd/sampling_rules.hpp"

namespace bench {

// One rule in the experiment grid. Labels follow the figure legends:
// "PD", "1D", and the size itself for fixed rules.
struct RuleSpec {
  dynsgd::SamplingRuleKind kind = dynsgd::SamplingRuleKind::Fixed;
  int fixed_size = 32;
  std::string label;
};

struct ExperimentConfig {
  dynsgd::ProblemKind problem = dynsgd::ProblemKind::Newsvendor;
  dynsgd::Method method = dynsgd::Method::BasicSgd;
  std::vector<RuleSpec> rules;
  std::uint64_t seed = 1;

  double alpha = 0.05;
  int n0 = 32;
  int n_min = 4;
  int n_max = 8192;
  double epsilon_grad = 1e-12;

  double eta0 = 1.0;
  dynsgd::AdamConfig adam{};

  std::optional<double> budget_seconds;        // default 20 (newsvendor) / 30 (options)
  std::optional<std::int64_t> max_iterations;  // alternative budget
  std::size_t eval_samples = 10000;
  std::size_t dimension = 50;
  std::optional<double> start_fill;  // overrides the problem's default start
  double trace_growth = 1.02;
  bool parallel = false;

  std::string output_dir = "out";
  std::string instance_file;  // load instead of generating when non-empty

  dynsgd::NewsvendorGenConfig newsvendor{};
  dynsgd::OptionsGenConfig options{};

  // Budget seconds after the per-problem default is applied.
  double effective_budget_seconds() const;
  std::string stem() const;  // e.g. "newsvendor_sgd"
};

ExperimentConfig default_config();

// Applies one `key = value` assignment; throws std::invalid_argument with the
// key name and constraint on any violation. Shared by the file parser and the
// CLI flag overrides.
void apply_key_value(ExperimentConfig& cfg, const std::string& key, const std::string& value);

// Key-value file: one assignment per line, '#' comments, unknown keys rejected.
ExperimentConfig parse_config_file(const std::string& path);

// Cross-field checks; fills rule labels. Called by parse_config_file and again
// by the CLI after flag overrides.
void validate_config(ExperimentConfig& cfg);

std::vector<RuleSpec> parse_rule_list(const std::string& text);

}  // namespace bench
