#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bench/config.hpp"
#include "bench/plot.hpp"
#include "bench/suite.hpp"
#include "dynsgd/instance_io.hpp"
#include "dynsgd/newsvendor.hpp"
#include "dynsgd/options_portfolio.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::vector<std::string> overrides;  // key=value
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "Key-value config file");
  cmd->add_option("--set", flags.overrides,
                  "Override any config key, e.g. --set alpha=0.01 (repeatable)");
}

bench::ExperimentConfig load_config(const CommonFlags& flags) {
  bench::ExperimentConfig cfg =
      flags.config_path.empty() ? bench::default_config() : bench::parse_config_file(flags.config_path);
  for (const auto& assignment : flags.overrides) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--set expects key=value, got '" + assignment + "'");
    bench::apply_key_value(cfg, assignment.substr(0, eq), assignment.substr(eq + 1));
  }
  bench::validate_config(cfg);
  return cfg;
}

int run_generate(const CommonFlags& flags, const std::string& out_path) {
  bench::ExperimentConfig cfg = load_config(flags);
  dynsgd::RngStream rng(cfg.seed, 0);
  dynsgd::InstanceSpec spec;
  if (cfg.problem == dynsgd::ProblemKind::Newsvendor)
    spec = dynsgd::generate_newsvendor_instance(cfg.dimension, rng, cfg.newsvendor);
  else
    spec = dynsgd::generate_options_instance(cfg.dimension, rng, cfg.options);
  const std::string path = out_path.empty()
                               ? (cfg.problem == dynsgd::ProblemKind::Newsvendor
                                      ? "newsvendor_instance.json"
                                      : "options_instance.json")
                               : out_path;
  dynsgd::save_instance(spec, path);
  std::cout << "wrote " << path << "\n";
  return 0;
}

int run_suite_cmd(const CommonFlags& flags) {
  bench::ExperimentConfig cfg = load_config(flags);
  const bench::SuiteResult suite = bench::run_suite(cfg);
  const bench::EmittedFiles files = bench::emit_traces(suite, cfg, cfg.output_dir);

  std::cout << "wrote " << files.wide << "\n";
  for (const auto& path : files.long_format) std::cout << "wrote " << path << "\n";
  std::printf("%-6s %12s %14s %14s %14s\n", "rule", "iterations", "samples", "wall(s)",
              "final obj");
  for (const auto& run : suite.runs) {
    const auto& last = run.trace.back();
    std::printf("%-6s %12lld %14lld %14.3f %14.6g\n", run.label.c_str(),
                static_cast<long long>(last.iteration), static_cast<long long>(last.cum_samples),
                last.wall_seconds, last.objective);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mini-batch SGD benchmark harness with dynamic sample-size rules"};
  app.require_subcommand(1);

  CommonFlags generate_flags;
  std::string generate_out;
  CLI::App* generate = app.add_subcommand("generate", "Write a random instance spec to disk");
  add_common(generate, generate_flags);
  generate->add_option("--out", generate_out, "Output instance file (JSON)");

  CommonFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "Run the configured experiment suite");
  add_common(run, run_flags);

  std::string plot_in, plot_out, plot_title;
  CLI::App* plot = app.add_subcommand("plot", "Render a wide data file as an SVG chart");
  plot->add_option("--in", plot_in, "Wide data file from 'run'")->required();
  plot->add_option("--out", plot_out, "Output SVG path")->required();
  plot->add_option("--title", plot_title, "Chart title (defaults to the file stem)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return run_generate(generate_flags, generate_out);
    if (run->parsed()) return run_suite_cmd(run_flags);
    if (plot->parsed()) {
      bench::emit_plot(plot_in, plot_out, plot_title);
      std::cout << "wrote " << plot_out << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
