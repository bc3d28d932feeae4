#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bench/config.hpp"
#include "dynsgd/driver.hpp"
#include "dynsgd/problem.hpp"

namespace bench {

struct LabeledTrace {
  std::string label;
  std::vector<dynsgd::TraceRecord> trace;
  dynsgd::Vector final_iterate;
  double final_std_error = 0.0;  // evaluator standard error at the final iterate
};

struct SuiteResult {
  std::vector<LabeledTrace> runs;
};

// Builds the suite's shared problem instance: loaded from instance_file when
// set, otherwise generated from substream 0 of the seed.
std::unique_ptr<dynsgd::StochasticProblem> build_problem(const ExperimentConfig& cfg);

// Runs every configured rule against one shared instance and one shared
// common-random-number evaluator. Substreams: 0 instance, 1 evaluator,
// 2+i the i-th rule's optimization sampling.
SuiteResult run_suite(const ExperimentConfig& cfg);

struct EmittedFiles {
  std::string wide;
  std::vector<std::string> long_format;
};

// Writes one wide whitespace-separated file (header "T <label>...", 200 rows,
// objectives resampled onto the time grid by last observation carried forward)
// plus one long-format CSV per run with every TraceRecord field.
EmittedFiles emit_traces(const SuiteResult& suite, const ExperimentConfig& cfg,
                         const std::string& output_dir);

}  // namespace bench
