#include "bench/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bench {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& constraint) {
  throw std::invalid_argument("config: key '" + key + "' = '" + value + "': " + constraint);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double d = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return d;
  } catch (const std::exception&) {
    bad_value(key, value, "expected a real number");
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    bad_value(key, value, "expected an integer");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  const std::string v = lower(value);
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  bad_value(key, value, "expected a boolean (0/1/true/false)");
}

}  // namespace

std::vector<RuleSpec> parse_rule_list(const std::string& text) {
  std::vector<RuleSpec> rules;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    token = lower(trim(token));
    if (token.empty()) continue;
    RuleSpec rule;
    if (token == "pd") {
      rule.kind = dynsgd::SamplingRuleKind::PerDimensionMedian;
      rule.label = "PD";
    } else if (token == "1d") {
      rule.kind = dynsgd::SamplingRuleKind::SingleUpdate;
      rule.label = "1D";
    } else {
      const std::int64_t n = parse_int("rules", token);
      if (n < 2) bad_value("rules", token, "fixed sizes must be at least 2");
      rule.kind = dynsgd::SamplingRuleKind::Fixed;
      rule.fixed_size = static_cast<int>(n);
      rule.label = std::to_string(n);
    }
    rules.push_back(std::move(rule));
  }
  if (rules.empty())
    throw std::invalid_argument("config: key 'rules' needs at least one of pd, 1d, or a size");
  return rules;
}

ExperimentConfig default_config() {
  ExperimentConfig cfg;
  cfg.rules = parse_rule_list("pd,1d,32,256,512");
  return cfg;
}

double ExperimentConfig::effective_budget_seconds() const {
  if (budget_seconds) return *budget_seconds;
  return problem == dynsgd::ProblemKind::Newsvendor ? 20.0 : 30.0;
}

std::string ExperimentConfig::stem() const {
  const std::string p = problem == dynsgd::ProblemKind::Newsvendor ? "newsvendor" : "options";
  const std::string m = method == dynsgd::Method::BasicSgd ? "sgd" : "adam";
  return p + "_" + m;
}

void apply_key_value(ExperimentConfig& cfg, const std::string& raw_key, const std::string& raw) {
  const std::string key = lower(trim(raw_key));
  const std::string value = trim(raw);

  if (key == "problem") {
    const std::string v = lower(value);
    if (v == "newsvendor")
      cfg.problem = dynsgd::ProblemKind::Newsvendor;
    else if (v == "options")
      cfg.problem = dynsgd::ProblemKind::OptionsPortfolio;
    else
      bad_value(key, value, "expected 'newsvendor' or 'options'");
  } else if (key == "method") {
    const std::string v = lower(value);
    if (v == "sgd")
      cfg.method = dynsgd::Method::BasicSgd;
    else if (v == "adam")
      cfg.method = dynsgd::Method::Adam;
    else
      bad_value(key, value, "expected 'sgd' or 'adam'");
  } else if (key == "rules") {
    cfg.rules = parse_rule_list(value);
  } else if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "alpha") {
    const double a = parse_double(key, value);
    if (!(a > 0.0 && a < 0.5)) bad_value(key, value, "alpha must lie in (0, 0.5)");
    cfg.alpha = a;
  } else if (key == "n0") {
    const auto n = parse_int(key, value);
    if (n < 2) bad_value(key, value, "initial batch size must be at least 2");
    cfg.n0 = static_cast<int>(n);
  } else if (key == "n_min") {
    const auto n = parse_int(key, value);
    if (n < 2) bad_value(key, value, "n_min must be at least 2");
    cfg.n_min = static_cast<int>(n);
  } else if (key == "n_max") {
    const auto n = parse_int(key, value);
    if (n < 2) bad_value(key, value, "n_max must be at least 2");
    cfg.n_max = static_cast<int>(n);
  } else if (key == "epsilon_grad") {
    const double e = parse_double(key, value);
    if (!(e > 0.0)) bad_value(key, value, "epsilon_grad must be positive");
    cfg.epsilon_grad = e;
  } else if (key == "eta0") {
    const double e = parse_double(key, value);
    if (!(e > 0.0)) bad_value(key, value, "eta0 must be positive");
    cfg.eta0 = e;
  } else if (key == "adam_eta") {
    const double e = parse_double(key, value);
    if (!(e > 0.0)) bad_value(key, value, "adam_eta must be positive");
    cfg.adam.eta = e;
  } else if (key == "adam_beta1") {
    const double b = parse_double(key, value);
    if (!(b >= 0.0 && b < 1.0)) bad_value(key, value, "beta1 must lie in [0, 1)");
    cfg.adam.beta1 = b;
  } else if (key == "adam_beta2") {
    const double b = parse_double(key, value);
    if (!(b >= 0.0 && b < 1.0)) bad_value(key, value, "beta2 must lie in [0, 1)");
    cfg.adam.beta2 = b;
  } else if (key == "adam_epsilon") {
    const double e = parse_double(key, value);
    if (!(e > 0.0)) bad_value(key, value, "adam_epsilon must be positive");
    cfg.adam.epsilon = e;
  } else if (key == "budget_seconds") {
    const double s = parse_double(key, value);
    if (!(s >= 0.0)) bad_value(key, value, "budget must be nonnegative");
    cfg.budget_seconds = s;
  } else if (key == "max_iterations") {
    const auto n = parse_int(key, value);
    if (n < 0) bad_value(key, value, "max_iterations must be nonnegative");
    cfg.max_iterations = n;
  } else if (key == "eval_samples") {
    const auto n = parse_int(key, value);
    if (n < 2) bad_value(key, value, "eval_samples must be at least 2");
    cfg.eval_samples = static_cast<std::size_t>(n);
  } else if (key == "dimension") {
    const auto n = parse_int(key, value);
    if (n < 1) bad_value(key, value, "dimension must be positive");
    cfg.dimension = static_cast<std::size_t>(n);
  } else if (key == "start_fill") {
    cfg.start_fill = parse_double(key, value);
  } else if (key == "trace_growth") {
    const double g = parse_double(key, value);
    if (!(g >= 1.0)) bad_value(key, value, "trace_growth must be at least 1");
    cfg.trace_growth = g;
  } else if (key == "parallel") {
    cfg.parallel = parse_bool(key, value);
  } else if (key == "output_dir") {
    cfg.output_dir = value;
  } else if (key == "instance_file") {
    cfg.instance_file = value;
  } else if (key == "rate") {
    const double r = parse_double(key, value);
    if (r < 0.0) bad_value(key, value, "rate must be nonnegative");
    cfg.options.rate = r;
  } else if (key == "nv_price_min") {
    cfg.newsvendor.price_min = parse_double(key, value);
  } else if (key == "nv_price_max") {
    cfg.newsvendor.price_max = parse_double(key, value);
  } else if (key == "nv_cost") {
    const double c = parse_double(key, value);
    if (!(c > 0.0)) bad_value(key, value, "cost must be positive");
    cfg.newsvendor.unit_cost = c;
  } else if (key == "nv_lambda") {
    const double l = parse_double(key, value);
    if (!(l > 0.0)) bad_value(key, value, "risk aversion must be positive");
    cfg.newsvendor.risk_aversion = l;
  } else if (key == "nv_demand_mu") {
    cfg.newsvendor.demand_mu = parse_double(key, value);
  } else if (key == "nv_sigma_min") {
    const double s = parse_double(key, value);
    if (s < 0.0) bad_value(key, value, "sigma must be nonnegative");
    cfg.newsvendor.sigma_min = s;
  } else if (key == "nv_sigma_max") {
    const double s = parse_double(key, value);
    if (s < 0.0) bad_value(key, value, "sigma must be nonnegative");
    cfg.newsvendor.sigma_max = s;
  } else if (key == "nv_correlation") {
    const double c = parse_double(key, value);
    if (!(c > -1.0 && c < 1.0)) bad_value(key, value, "correlation must lie in (-1, 1)");
    cfg.newsvendor.correlation = c;
  } else if (key == "opt_factors") {
    const auto n = parse_int(key, value);
    if (n < 1) bad_value(key, value, "factor count must be positive");
    cfg.options.num_factors = static_cast<std::size_t>(n);
  } else if (key == "opt_vol_min") {
    const double v = parse_double(key, value);
    if (!(v > 0.0)) bad_value(key, value, "volatility must be positive");
    cfg.options.vol_min = v;
  } else if (key == "opt_vol_max") {
    const double v = parse_double(key, value);
    if (!(v > 0.0)) bad_value(key, value, "volatility must be positive");
    cfg.options.vol_max = v;
  } else if (key == "opt_mu_scale") {
    const double s = parse_double(key, value);
    if (s < 0.0) bad_value(key, value, "mu scale must be nonnegative");
    cfg.options.mu_scale = s;
  } else if (key == "opt_positive_prob") {
    const double p = parse_double(key, value);
    if (!(p >= 0.0 && p <= 1.0)) bad_value(key, value, "probability must lie in [0, 1]");
    cfg.options.positive_prob = p;
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

void validate_config(ExperimentConfig& cfg) {
  if (cfg.rules.empty()) throw std::invalid_argument("config: at least one rule is required");
  if (cfg.n_min > cfg.n_max)
    throw std::invalid_argument("config: n_min must not exceed n_max");
  if (cfg.n0 < cfg.n_min || cfg.n0 > cfg.n_max)
    throw std::invalid_argument("config: n0 must lie within [n_min, n_max]");
  if (cfg.newsvendor.price_min > cfg.newsvendor.price_max)
    throw std::invalid_argument("config: nv_price_min must not exceed nv_price_max");
  if (cfg.newsvendor.sigma_min > cfg.newsvendor.sigma_max)
    throw std::invalid_argument("config: nv_sigma_min must not exceed nv_sigma_max");
  if (cfg.options.vol_min > cfg.options.vol_max)
    throw std::invalid_argument("config: opt_vol_min must not exceed opt_vol_max");
  if (cfg.budget_seconds && cfg.max_iterations && *cfg.budget_seconds == 0.0 &&
      *cfg.max_iterations == 0)
    throw std::invalid_argument("config: budget is empty");
  std::set<std::string> labels;
  for (const auto& rule : cfg.rules)
    if (!labels.insert(rule.label).second)
      throw std::invalid_argument("config: duplicate rule '" + rule.label + "'");
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot read '" + path + "'");
  ExperimentConfig cfg = default_config();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  ": expected 'key = value'");
    try {
      apply_key_value(cfg, line.substr(0, eq), line.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  validate_config(cfg);
  return cfg;
}

}  // namespace bench
