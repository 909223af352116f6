#ifndef OCO_HARNESS_HPP
#define OCO_HARNESS_HPP

#include <memory>
#include <string>
#include <vector>

#include "oco/config.hpp"
#include "oco/game.hpp"
#include "oco/learner.hpp"
#include "oco/trace_io.hpp"

namespace oco {

std::unique_ptr<OnlineLearner> build_learner(const std::string& algorithm, const EnvPtr& env,
                                             const std::string& eta = "auto");

struct ExperimentResult {
    RunTrace trace;
    std::vector<ReportRow> rows;
    bool all_pass = true;
    std::string first_violation;  // "theorem @ tau_or_interval" when !all_pass
};

// Builds the environment and learner, runs the game, computes every metric
// and the applicable theorem checks. Does not touch the filesystem.
ExperimentResult run_experiment(const ExperimentConfig& config);

// run_experiment plus trace/report emission at the configured paths.
ExperimentResult run_experiment_to_files(const ExperimentConfig& config);

// Measured-vs-bound rows for a recorded run (also used for trace replay).
std::vector<ReportRow> evaluate_trace(const RunTrace& trace, const std::string& algorithm);

}  // namespace oco

#endif
