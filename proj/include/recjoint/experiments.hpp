#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "recjoint/records_limits.hpp"
#include "recjoint/report.hpp"

namespace recjoint {

struct ExperimentContext {
    std::uint64_t seed = 20260822;
    int workers = 0; // 0 = hardware concurrency
    bool fast = false; // reduced trial counts for quick suite runs
};

using ExperimentConfig = std::map<std::string, std::string>;

/// Registered experiment names in ordinal order (one per acceptance check).
std::vector<std::string> experiment_names();

/// Runs one registered experiment.  Config keys override experiment-specific
/// defaults (e.g. "trials", "j", "k"); unknown names raise
/// UnknownExperimentError.
ExperimentReport run_experiment(const std::string& name, const ExperimentConfig& config,
                                const ExperimentContext& ctx);

/// Runs the whole registry ("all") or the reduced-scale variant ("fast").
std::vector<ExperimentReport> run_suite(const std::string& suite,
                                        const ExperimentContext& ctx);

/// Deterministic convergence study: for each n, j = ceil(lambda_1 n) and
/// k = ceil(lambda_2 n), and the report's estimate is the sup over the grid of
/// |finite-n pair df at a_n y + b_n  -  limiting pair df at y|.
std::vector<ExperimentReport> converge_study(const UnivariateLaw& law,
                                             const LambdaVector& lv,
                                             const std::vector<long>& n_list,
                                             const std::vector<std::vector<double>>& grid);

} // namespace recjoint
