#include "recjoint/statistics.hpp"

#include <algorithm>
#include <cmath>

#include "recjoint/errors.hpp"
#include "recjoint/specfun.hpp"

namespace recjoint {

std::pair<double, double> empirical_cdf(const SampleBatch& batch,
                                        const std::vector<double>& point) {
    const std::size_t n = batch.rows();
    if (n == 0) {
        throw EmptyInputError("empirical_cdf: batch is empty");
    }
    if (static_cast<int>(point.size()) != batch.dim) {
        throw DimensionError("empirical_cdf: point dimension mismatch");
    }
    std::size_t count = 0;
    for (std::size_t r = 0; r < n; ++r) {
        bool below = true;
        for (int c = 0; c < batch.dim; ++c) {
            if (batch.at(r, c) > point[c]) {
                below = false;
                break;
            }
        }
        count += below;
    }
    const double p = static_cast<double>(count) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

KsResult ks_one_sample(std::vector<double> sample,
                       const std::function<double(double)>& cdf) {
    const std::size_t n = sample.size();
    if (n < 10) {
        throw SmallSampleError("ks_one_sample: at least 10 observations required");
    }
    std::sort(sample.begin(), sample.end());
    double d = 0.0;
    const double dn = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double F = cdf(sample[i]);
        d = std::max(d, std::abs(static_cast<double>(i + 1) / dn - F));
        d = std::max(d, std::abs(static_cast<double>(i) / dn - F));
    }
    return {d, 1.0 - kolmogorov_limit_cdf(std::sqrt(dn) * d)};
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.size() < 10 || b.size() < 10) {
        throw SmallSampleError("ks_two_sample: at least 10 observations per sample");
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    const double ne = na * nb / (na + nb);
    return {d, 1.0 - kolmogorov_limit_cdf(std::sqrt(ne) * d)};
}

ExperimentReport grid_compare(
    const SampleBatch& batch,
    const std::function<double(const std::vector<double>&)>& theory,
    const std::vector<std::vector<double>>& grid) {
    if (grid.empty()) {
        throw EmptyInputError("grid_compare: grid must be nonempty");
    }
    if (grid.size() > 25) {
        throw DomainError("grid_compare: grid capped at 25 points");
    }
    ExperimentReport report;
    report.experiment = "grid_compare";
    report.rng = batch.rng;
    report.stream_count = batch.stream_count;
    const double n = static_cast<double>(batch.rows());
    double worst_z = 0.0;
    double worst_dev = 0.0;
    double worst_se = 0.0;
    for (const std::vector<double>& point : grid) {
        const auto [est, se_hat] = empirical_cdf(batch, point);
        const double t = theory(point);
        const double se = std::sqrt(t * (1.0 - t) / n);
        double z;
        if (se > 0.0) {
            z = (est - t) / se;
        } else {
            z = est == t ? 0.0 : 1e9;
        }
        report.rows.push_back({point, "", t, est, se, z});
        if (std::abs(z) > std::abs(worst_z)) {
            worst_z = z;
            worst_dev = est - t;
            worst_se = se;
        }
        (void)se_hat;
    }
    report.theory = 0.0;
    report.estimate = worst_dev;
    report.stderror = worst_se;
    report.z = worst_z;
    report.pass = std::abs(worst_z) <= 3.0;
    return report;
}

std::pair<double, double> batch_means(const std::vector<double>& values,
                                      std::size_t n_batches) {
    if (values.size() < 2 * n_batches || n_batches < 2) {
        throw SmallSampleError("batch_means: not enough values for the batch count");
    }
    const std::size_t per = values.size() / n_batches;
    std::vector<double> means(n_batches, 0.0);
    for (std::size_t b = 0; b < n_batches; ++b) {
        double s = 0.0;
        for (std::size_t i = b * per; i < (b + 1) * per; ++i) {
            s += values[i];
        }
        means[b] = s / static_cast<double>(per);
    }
    double grand = 0.0;
    for (double m : means) grand += m;
    grand /= static_cast<double>(n_batches);
    double var = 0.0;
    for (double m : means) var += (m - grand) * (m - grand);
    var /= static_cast<double>(n_batches - 1);
    return {grand, std::sqrt(var / static_cast<double>(n_batches))};
}

std::pair<double, double> mean_and_se(const std::vector<double>& values) {
    if (values.size() < 2) {
        throw SmallSampleError("mean_and_se: at least two values required");
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size() - 1);
    return {mean, std::sqrt(var / static_cast<double>(values.size()))};
}

double p_value_to_z(double p) {
    // Calibrated so the conventional p > 0.01 acceptance maps onto |z| <= 3.
    const double z001 = std_normal_quantile(1.0 - 0.005);
    if (p <= 0.0) return 1e9;
    if (p >= 1.0) return 0.0;
    return 3.0 * std_normal_quantile(1.0 - 0.5 * p) / z001;
}

} // namespace recjoint
