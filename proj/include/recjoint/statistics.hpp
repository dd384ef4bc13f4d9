#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "recjoint/report.hpp"
#include "recjoint/sampling.hpp"

namespace recjoint {

/// Fraction of draws coordinatewise <= point, with binomial standard error
/// sqrt(p(1-p)/N).
std::pair<double, double> empirical_cdf(const SampleBatch& batch,
                                        const std::vector<double>& point);

struct KsResult {
    double statistic; // sup-distance D
    double p_value;   // 1 - K(sqrt(N_eff) D)
};

/// One-sample Kolmogorov-Smirnov test against a cdf; D takes both one-sided
/// step evaluations at every sample point.  Requires N >= 10.
KsResult ks_one_sample(std::vector<double> sample,
                       const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov test with effective size nm/(n+m).
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Compares the batch's empirical cdf against a theory cdf on a grid of at
/// most 25 points; z per point uses the theory-based binomial standard error
/// and the report passes iff max |z| <= 3.
ExperimentReport grid_compare(
    const SampleBatch& batch,
    const std::function<double(const std::vector<double>&)>& theory,
    const std::vector<std::vector<double>>& grid);

/// Sample mean and batch-means standard error (sqrt(var of per-batch means /
/// n_batches)); used for moment checks without distributional assumptions.
std::pair<double, double> batch_means(const std::vector<double>& values,
                                      std::size_t n_batches);

/// Mean of the values with standard error sd/sqrt(n); for aggregating
/// per-batch statistics.
std::pair<double, double> mean_and_se(const std::vector<double>& values);

/// Maps a p-value onto the report z-scale: exactly 3 at p = 0.01, below 3
/// for larger p.
double p_value_to_z(double p);

} // namespace recjoint
