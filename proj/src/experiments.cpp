#include "recjoint/experiments.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "recjoint/errors.hpp"
#include "recjoint/records_exact.hpp"
#include "recjoint/records_kl.hpp"
#include "recjoint/sampling.hpp"
#include "recjoint/specfun.hpp"
#include "recjoint/statistics.hpp"

namespace recjoint {
namespace {

constexpr std::uint64_t kStreamBlock = 1ull << 20;
constexpr std::uint64_t kSubStream = 1ull << 16;

long cfg_long(const ExperimentConfig& cfg, const std::string& key, long dflt) {
    auto it = cfg.find(key);
    return it == cfg.end() ? dflt : std::stol(it->second);
}

double cfg_double(const ExperimentConfig& cfg, const std::string& key, double dflt) {
    auto it = cfg.find(key);
    return it == cfg.end() ? dflt : std::stod(it->second);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Statistical subcheck: z is the standardized deviation.
ReportRow stat_row(const std::string& label, double theory, double estimate, double se) {
    double z;
    if (se > 0.0) {
        z = (estimate - theory) / se;
    } else {
        z = estimate == theory ? 0.0 : 1e9;
    }
    return {{}, label, theory, estimate, se, z};
}

// Deterministic subcheck: the tolerance maps onto |z| = 3, via stderr = tol/3.
ReportRow det_row(const std::string& label, double theory, double estimate, double tol) {
    const double se = tol / 3.0;
    return {{}, label, theory, estimate, se, (estimate - theory) / se};
}

// Goodness-of-fit subcheck: p-value mapped so p = 0.01 sits exactly at |z| = 3.
ReportRow ks_row(const std::string& label, double p_value) {
    return {{}, label, 0.01, p_value, 0.0, p_value_to_z(p_value)};
}

void set_verdict_from_rows(ExperimentReport& r) {
    const ReportRow* worst = nullptr;
    for (const ReportRow& row : r.rows) {
        if (!worst || std::abs(row.z) > std::abs(worst->z)) {
            worst = &row;
        }
    }
    if (worst) {
        r.z = worst->z;
        r.theory = worst->theory;
        r.estimate = worst->estimate;
        r.stderror = worst->stderror;
    }
    r.pass = std::abs(r.z) <= 3.0;
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> batch_ranges(std::size_t rows,
                                                              std::size_t n_batches) {
    const std::size_t per = rows / n_batches;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(n_batches);
    for (std::size_t b = 0; b < n_batches; ++b) {
        out.emplace_back(b * per, (b + 1) * per);
    }
    return out;
}

// Mean over batches of a per-range statistic, with its batch-means SE.
std::pair<double, double> batched_stat(
    std::size_t rows, std::size_t n_batches,
    const std::function<double(std::size_t, std::size_t)>& stat) {
    std::vector<double> values;
    values.reserve(n_batches);
    for (const auto& [lo, hi] : batch_ranges(rows, n_batches)) {
        values.push_back(stat(lo, hi));
    }
    return mean_and_se(values);
}

double range_mean(const SampleBatch& b, int col, std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t r = lo; r < hi; ++r) s += b.at(r, col);
    return s / static_cast<double>(hi - lo);
}

double range_cov(const SampleBatch& b, int c1, int c2, std::size_t lo, std::size_t hi) {
    const double m1 = range_mean(b, c1, lo, hi);
    const double m2 = range_mean(b, c2, lo, hi);
    double s = 0.0;
    for (std::size_t r = lo; r < hi; ++r) {
        s += (b.at(r, c1) - m1) * (b.at(r, c2) - m2);
    }
    return s / static_cast<double>(hi - lo - 1);
}

double range_corr(const SampleBatch& b, int c1, int c2, std::size_t lo, std::size_t hi) {
    const double v1 = range_cov(b, c1, c1, lo, hi);
    const double v2 = range_cov(b, c2, c2, lo, hi);
    return range_cov(b, c1, c2, lo, hi) / std::sqrt(v1 * v2);
}

double exact_acceptance_theory(const RecordIndexSet& idx) {
    const std::vector<long>& js = idx.indices();
    double rate = 1.0 / static_cast<double>(js[0]);
    for (std::size_t m = 1; m < js.size(); ++m) {
        rate *= static_cast<double>(js[m] - js[m - 1]) / static_cast<double>(js[m]);
    }
    return rate;
}

// ---- experiment 1: symmetrized divergence equals j/k under any margins ----

ExperimentReport exp_kl_identity(const ExperimentConfig& cfg, const ExperimentContext& ctx) {
    ExperimentReport r;
    const double tol = cfg_double(cfg, "tolerance", 1e-6);
    const long j_only = cfg_long(cfg, "j", 0);
    const long k_only = cfg_long(cfg, "k", 0);
    const long k_max = cfg_long(cfg, "k_max", ctx.fast ? 5 : 10);
    const std::vector<UnivariateLaw> laws = {UnivariateLaw::negexp(),
                                             UnivariateLaw::stdexp(),
                                             UnivariateLaw::uniform()};
    std::vector<std::pair<long, long>> pairs;
    if (j_only > 0 && k_only > 0) {
        pairs.emplace_back(j_only, k_only);
    } else {
        for (long j = 1; j < k_max; ++j) {
            for (long k = j + 1; k <= k_max; ++k) {
                pairs.emplace_back(j, k);
            }
        }
    }
    for (const UnivariateLaw& law : laws) {
        for (const auto& [j, k] : pairs) {
            auto p = [&law, j = j, k = k](double y) { return pair_record_pdf(law, j, k, y); };
            auto q = [&law, j = j](double y) { return single_record_pdf(law, j, y); };
            const double lo = law.lower_endpoint();
            const double hi = law.upper_endpoint();
            const double fwd = kl_quadrature(p, q, lo, hi, 1e-9);
            const double rev = kl_quadrature(q, p, lo, hi, 1e-9);
            const double target = static_cast<double>(j) / static_cast<double>(k);
            std::ostringstream label;
            label << law.name() << " j=" << j << " k=" << k;
            r.rows.push_back(det_row(label.str(), target, fwd + rev, tol));
        }
    }
    r.params["tolerance"] = fmt(tol);
    r.params["k_max"] = std::to_string(k_max);
    set_verdict_from_rows(r);
    return r;
}

// ---- experiment 2: closed-form divergences match quadrature ----

ExperimentReport exp_kl_closed_vs_quadrature(const ExperimentConfig& cfg,
                                             const ExperimentContext& ctx) {
    (void)ctx;
    ExperimentReport r;
    const double tol = cfg_double(cfg, "tolerance", 1e-8);
    const UnivariateLaw law = UnivariateLaw::negexp();
    const std::vector<std::pair<long, long>> pairs = {{1, 2}, {2, 5}, {3, 7}};
    for (const auto& [j, k] : pairs) {
        auto p = [&law, j = j, k = k](double y) { return pair_record_pdf(law, j, k, y); };
        auto q = [&law, j = j](double y) { return single_record_pdf(law, j, y); };
        const double fwd_quad = kl_quadrature(p, q, -std::numeric_limits<double>::infinity(),
                                              0.0, 1e-10);
        const double rev_quad = kl_quadrature(q, p, -std::numeric_limits<double>::infinity(),
                                              0.0, 1e-10);
        std::ostringstream base;
        base << "j=" << j << " k=" << k;
        r.rows.push_back(
            det_row("forward " + base.str(), kl_forward_negexp(j, k), fwd_quad, tol));
        r.rows.push_back(
            det_row("reverse " + base.str(), kl_reverse_negexp(j, k), rev_quad, tol));
    }
    r.params["tolerance"] = fmt(tol);
    set_verdict_from_rows(r);
    return r;
}

// ---- experiment 3: brute-force rejection oracle vs the pair closed form ----

ExperimentReport exp_pair_law_bruteforce(const ExperimentConfig& cfg,
                                         const ExperimentContext& ctx) {
    const long j = cfg_long(cfg, "j", 2);
    const long k = cfg_long(cfg, "k", 5);
    const std::uint64_t trials =
        static_cast<std::uint64_t>(cfg_long(cfg, "trials", ctx.fast ? 800 : 4000));
    const RecordIndexSet idx({j, k});
    SamplerOptions opt;
    opt.seed = ctx.seed;
    opt.stream_base = 3 * kStreamBlock;
    opt.workers = ctx.workers;
    const SampleBatch batch =
        simulate_conditional_records_bruteforce(UnivariateLaw::negexp(), idx, trials, opt);
    // Grid chosen so theory values spread over (0.03, 0.72).
    const std::vector<double> g1 = {-1.2, -0.8, -0.55, -0.35, -0.2};
    const std::vector<double> g2 = {-0.45, -0.3, -0.2, -0.12, -0.05};
    std::vector<std::vector<double>> grid;
    for (double a : g1) {
        for (double b : g2) {
            grid.push_back({a, b});
        }
    }
    ExperimentReport r = grid_compare(
        batch,
        [j, k](const std::vector<double>& pt) {
            return pair_record_cdf_negexp(j, k, pt[0], pt[1]);
        },
        grid);
    r.params["j"] = std::to_string(j);
    r.params["k"] = std::to_string(k);
    r.params["trials"] = std::to_string(trials);
    r.params["proposals"] = std::to_string(batch.n_proposed);
    return r;
}

// ---- experiment 4: exact block-maxima sampler agrees with brute force ----

ExperimentReport exp_exact_vs_bruteforce(const ExperimentConfig& cfg,
                                         const ExperimentContext& ctx) {
    ExperimentReport r;
    const long j = cfg_long(cfg, "j", 2);
    const long k = cfg_long(cfg, "k", 5);
    const std::uint64_t trials =
        static_cast<std::uint64_t>(cfg_long(cfg, "trials", ctx.fast ? 1500 : 10000));
    const RecordIndexSet idx({j, k});
    const UnivariateLaw law = UnivariateLaw::negexp();
    SamplerOptions opt;
    opt.seed = ctx.seed;
    opt.stream_base = 4 * kStreamBlock;
    opt.workers = ctx.workers;
    const SampleBatch brute = simulate_conditional_records_bruteforce(law, idx, trials, opt);
    opt.stream_base += kSubStream;
    const SampleBatch exact = sample_conditional_records_exact(law, idx, trials, opt);
    r.rows.push_back(
        ks_row("two-sample coordinate 1",
               ks_two_sample(brute.column(0), exact.column(0)).p_value));
    r.rows.push_back(
        ks_row("two-sample coordinate 2",
               ks_two_sample(brute.column(1), exact.column(1)).p_value));
    // Acceptance counts are fixed by construction, so the rate estimate
    // n/M has standard error p sqrt((1-p)/n).
    const double p_brute = record_event_probability(idx);
    const double n = static_cast<double>(trials);
    r.rows.push_back(stat_row("brute-force acceptance rate", p_brute,
                              brute.acceptance_rate(),
                              p_brute * std::sqrt((1.0 - p_brute) / n)));
    const double p_exact = exact_acceptance_theory(idx);
    r.rows.push_back(stat_row("exact-sampler acceptance rate", p_exact,
                              exact.acceptance_rate(),
                              p_exact * std::sqrt((1.0 - p_exact) / n)));
    r.params["j"] = std::to_string(j);
    r.params["k"] = std::to_string(k);
    r.params["trials"] = std::to_string(trials);
    r.rng = brute.rng;
    r.stream_count = brute.stream_count + exact.stream_count;
    set_verdict_from_rows(r);
    return r;
}

// ---- experiment 5: finite-index laws coincide with the limit laws ----

ExperimentReport exp_finite_equals_limit(const ExperimentConfig& cfg,
                                         const ExperimentContext& ctx) {
    (void)ctx;
    ExperimentReport r;
    const double tol = cfg_double(cfg, "tolerance", 1e-12);
    const long j_only = cfg_long(cfg, "j", 0);
    const long k_only = cfg_long(cfg, "k", 0);
    std::vector<std::pair<long, long>> pairs = {{1, 2}, {2, 5}};
    if (j_only > 0 && k_only > 0) {
        pairs = {{j_only, k_only}};
    }
    const std::vector<double> axis = linspace(-3.0, 0.0, 20);
    for (const auto& [j, k] : pairs) {
        const LambdaVector lv({static_cast<double>(j), static_cast<double>(k)});
        double worst = 0.0;
        for (double x1 : axis) {
            for (double x2 : axis) {
                worst = std::max(worst, std::abs(limit_pair_cdf(lv, x1, x2) -
                                                 pair_record_cdf_negexp(j, k, x1, x2)));
            }
        }
        std::ostringstream label;
        label << "pair j=" << j << " k=" << k << " max deviation";
        r.rows.push_back(det_row(label.str(), 0.0, worst, tol));
    }
    if (j_only == 0) {
        const LambdaVector lv({1.0, 2.0, 3.0});
        const std::vector<double> axis3 = linspace(-2.5, 0.0, 8);
        double worst = 0.0;
        for (double x1 : axis3) {
            for (double x2 : axis3) {
                for (double x3 : axis3) {
                    worst = std::max(worst,
                                     std::abs(limit_triple_cdf(lv, x1, x2, x3) -
                                              triple_record_cdf_negexp(1, 2, 3, x1, x2, x3)));
                }
            }
        }
        r.rows.push_back(det_row("triple (1,2,3) max deviation", 0.0, worst, tol));
    }
    r.params["tolerance"] = fmt(tol);
    set_verdict_from_rows(r);
    return r;
}

// ---- experiment 6: limiting pair moments via the chain sampler ----

ExperimentReport exp_limit_pair_moments_mc(const ExperimentConfig& cfg,
                                           const ExperimentContext& ctx) {
    ExperimentReport r;
    const double l1 = cfg_double(cfg, "lambda1", 1.0);
    const double l2 = cfg_double(cfg, "lambda2", 2.0);
    const std::uint64_t trials =
        static_cast<std::uint64_t>(cfg_long(cfg, "trials", ctx.fast ? 200000 : 1000000));
    const std::size_t n_batches = ctx.fast ? 50 : 100;
    const LambdaVector lv({l1, l2});
    SamplerOptions opt;
    opt.seed = ctx.seed;
    opt.stream_base = 6 * kStreamBlock;
    opt.workers = ctx.workers;
    const SampleBatch batch = sample_limit_chain(lv, trials, opt);
    const LimitPairMoments th = limit_pair_moments(lv);
    const std::size_t rows = batch.rows();
    auto add = [&](const std::string& label, double theory,
                   const std::function<double(std::size_t, std::size_t)>& stat) {
        const auto [est, se] = batched_stat(rows, n_batches, stat);
        r.rows.push_back(stat_row(label, theory, est, se));
    };
    add("mean early", th.mean_early,
        [&](std::size_t lo, std::size_t hi) { return range_mean(batch, 0, lo, hi); });
    add("mean late", th.mean_late,
        [&](std::size_t lo, std::size_t hi) { return range_mean(batch, 1, lo, hi); });
    add("var early", th.var_early,
        [&](std::size_t lo, std::size_t hi) { return range_cov(batch, 0, 0, lo, hi); });
    add("var late", th.var_late,
        [&](std::size_t lo, std::size_t hi) { return range_cov(batch, 1, 1, lo, hi); });
    add("covariance", th.covariance,
        [&](std::size_t lo, std::size_t hi) { return range_cov(batch, 0, 1, lo, hi); });
    add("correlation", th.correlation,
        [&](std::size_t lo, std::size_t hi) { return range_corr(batch, 0, 1, lo, hi); });
    add("gap second moment", th.expected_sq_gap, [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            const double g = batch.at(i, 1) - batch.at(i, 0);
            s += g * g;
        }
        return s / static_cast<double>(hi - lo);
    });
    r.alt_theory = 1.0 / (l1 * l1);
    r.note = "gap second moment: the verdict uses the implemented value 2/lambda1^2, "
             "which the variance/covariance identities force; the alternate reference "
             "value 1/lambda1^2 is recorded in alt_theory as a known discrepancy.";
    r.params["lambda1"] = fmt(l1);
    r.params["lambda2"] = fmt(l2);
    r.params["trials"] = std::to_string(trials);
    r.rng = batch.rng;
    r.stream_count = batch.stream_count;
    set_verdict_from_rows(r);
    return r;
}

// ---- experiment 7: trivariate limit law consistency ----

ExperimentReport exp_limit_triple_consistency(const ExperimentConfig& cfg,
                                              const ExperimentContext& ctx) {
    ExperimentReport r;
    const std::uint64_t trials =
        static_cast<std::uint64_t>(cfg_long(cfg, "trials", ctx.fast ? 50000 : 1000000));
    const std::uint64_t accepted =
        static_cast<std::uint64_t>(cfg_long(cfg, "accepted", ctx.fast ? 3000 : 20000));
    const std::size_t n_batches = ctx.fast ? 50 : 100;
    const LambdaVector lv({1.0, 2.0, 3.0});
    SamplerOptions opt;
    opt.seed = ctx.seed;
    opt.stream_base = 7 * kStreamBlock;
    opt.workers = ctx.workers;
    const SampleBatch chain = sample_limit_chain(lv, trials, opt);
    const std::array<double, 9> cov = limit_triple_cov(lv);
    const std::size_t rows = chain.rows();
    auto add_cov = [&](const std::string& label, int c1, int c2, double theory) {
        const auto [est, se] = batched_stat(rows, n_batches,
                                            [&](std::size_t lo, std::size_t hi) {
                                                return range_cov(chain, c1, c2, lo, hi);
                                            });
        r.rows.push_back(stat_row(label, theory, est, se));
    };
    add_cov("var 1", 0, 0, cov[0]);
    add_cov("var 2", 1, 1, cov[4]);
    add_cov("var 3", 2, 2, cov[8]);
    add_cov("cov 12", 0, 1, cov[1]);
    add_cov("cov 13", 0, 2, cov[2]);
    add_cov("cov 23", 1, 2, cov[5]);
    // Full-sequence rejection oracle at integer indices (1,2,3), for which
    // the limit law is exact.
    opt.stream_base += kSubStream;
    const RecordIndexSet idx({1, 2, 3});
    const SampleBatch oracle = simulate_conditional_records_bruteforce(
        UnivariateLaw::negexp(), idx, accepted, opt);
    const std::vector<std::vector<double>> points = {{-1.5, -1.0, -0.5},
                                                     {-1.0, -0.5, 0.0}};
    for (const std::vector<double>& pt : points) {
        const double theory = limit_triple_cdf(lv, pt[0], pt[1], pt[2]);
        const auto [est, se_hat] = empirical_cdf(oracle, pt);
        const double se =
            std::sqrt(theory * (1.0 - theory) / static_cast<double>(oracle.rows()));
        std::ostringstream label;
        label << "oracle cdf at (" << pt[0] << "," << pt[1] << "," << pt[2] << ")";
        ReportRow row = stat_row(label.str(), theory, est, se);
        row.x = pt;
        r.rows.push_back(row);
        (void)se_hat;
    }
    // Dropping the earliest bound must reduce the triple law to the pair law
    // in the two later rates, exactly.
    const LambdaVector tail({2.0, 3.0});
    const std::vector<double> axis = linspace(-2.5, 0.0, 12);
    double worst = 0.0;
    for (double x2 : axis) {
        for (double x3 : axis) {
            worst = std::max(worst, std::abs(limit_triple_cdf(lv, 0.0, x2, x3) -
                                             limit_pair_cdf(tail, x2, x3)));
        }
    }
    r.rows.push_back(det_row("marginal consistency max deviation", 0.0, worst, 1e-12));
    // A future record bound does change the law of the earlier pair.
    const double gap = limit_triple_cdf(lv, -1.0, -0.5, 0.0) -
                       limit_pair_cdf(LambdaVector({1.0, 2.0}), -1.0, -0.5);
    ReportRow gap_row{{}, "future-bound gap exceeds 0.2", 0.2, gap, 0.0,
                      gap > 0.2 ? 0.0 : 1e9};
    r.rows.push_back(gap_row);
    r.alt_theory = limit_triple_cdf_alt(lv, -1.5, -1.0, -0.5);
    r.note = "alt_theory evaluates the variant trivariate form (lambda3-lambda1 "
             "exponents in the ordered branch) at (-1.5,-1,-0.5); it fails the "
             "marginal-consistency check and the sampling oracle, so the verdict "
             "uses the supported form.";
    r.params["trials"] = std::to_string(trials);
    r.params["accepted"] = std::to_string(accepted);
    r.rng = chain.rng;
    r.stream_count = chain.stream_count + oracle.stream_count;
    set_verdict_from_rows(r);
    return r;
}

// ---- experiment 8: increment independence and the joint increment df ----

ExperimentReport exp_increment_independence(const ExperimentConfig& cfg,
                                            const ExperimentContext& ctx) {
    ExperimentReport r;
    const std::uint64_t trials =
        static_cast<std::uint64_t>(cfg_long(cfg, "trials", ctx.fast ? 10000 : 100000));
    const std::size_t n_batches = 50;
    const LambdaVector lv({1.0, 2.0, 3.0});
    SamplerOptions opt;
    opt.seed = ctx.seed;
    opt.stream_base = 8 * kStreamBlock;
    opt.workers = ctx.workers;
    const SampleBatch chain = sample_limit_chain(lv, trials, opt);
    const std::size_t rows = chain.rows();
    std::vector<double> inc1(rows);
    std::vector<double> inc2(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        inc1[i] = chain.at(i, 1) - chain.at(i, 0);
        inc2[i] = chain.at(i, 2) - chain.at(i, 1);
    }
    r.rows.push_back(ks_row(
        "increment 1 vs Exp(1)",
        ks_one_sample(inc1, [&](double y) { return y <= 0.0 ? 0.0 : -std::expm1(-lv[0] * y); })
            .p_value));
    r.rows.push_back(ks_row(
        "increment 2 vs Exp(2)",
        ks_one_sample(inc2, [&](double y) { return y <= 0.0 ? 0.0 : -std::expm1(-lv[1] * y); })
            .p_value));
    {
        std::vector<double> vals;
        vals.reserve(n_batches);
        for (const auto& [lo, hi] : batch_ranges(rows, n_batches)) {
            double m1 = 0.0;
            double m2 = 0.0;
            for (std::size_t i = lo; i < hi; ++i) {
                m1 += inc1[i];
                m2 += inc2[i];
            }
            const double cnt = static_cast<double>(hi - lo);
            m1 /= cnt;
            m2 /= cnt;
            double c12 = 0.0;
            double v1 = 0.0;
            double v2 = 0.0;
            for (std::size_t i = lo; i < hi; ++i) {
                c12 += (inc1[i] - m1) * (inc2[i] - m2);
                v1 += (inc1[i] - m1) * (inc1[i] - m1);
                v2 += (inc2[i] - m2) * (inc2[i] - m2);
            }
            vals.push_back(c12 / std::sqrt(v1 * v2));
        }
        const auto [est, se] = mean_and_se(vals);
        r.rows.push_back(stat_row("increment correlation", 0.0, est, se));
    }
    // Joint value/increment df for the pair case.
    const LambdaVector lv2({1.0, 2.0});
    opt.stream_base += kSubStream;
    const SampleBatch pair_chain = sample_limit_chain(lv2, trials, opt);
    const std::vector<std::pair<double, double>> pts = {{-2.0, 1.0}, {-0.5, 1.0}};
    for (const auto& [x, y] : pts) {
        const double theory = limit_record_increment_joint(lv2, x, y);
        std::size_t count = 0;
        for (std::size_t i = 0; i < pair_chain.rows(); ++i) {
            const double e = pair_chain.at(i, 0);
            const double g = pair_chain.at(i, 1) - pair_chain.at(i, 0);
            count += e <= x && g <= y;
        }
        const double est = static_cast<double>(count) / static_cast<double>(pair_chain.rows());
        const double se =
            std::sqrt(theory * (1.0 - theory) / static_cast<double>(pair_chain.rows()));
        std::ostringstream label;
        label << "joint value/increment df at (" << x << "," << y << ")";
        r.rows.push_back(stat_row(label.str(), theory, est, se));
    }
    r.params["trials"] = std::to_string(trials);
    r.rng = chain.rng;
    r.stream_count = chain.stream_count + pair_chain.stream_count;
    set_verdict_from_rows(r);
    return r;
}

// ---- experiment 9: record indicator rates and independence ----

ExperimentReport exp_record_indicator_rates(const ExperimentConfig& cfg,
                                            const ExperimentContext& ctx) {
    ExperimentReport r;
    const std::uint64_t trials =
        static_cast<std::uint64_t>(cfg_long(cfg, "trials", ctx.fast ? 20000 : 1000000));
    const int length = 20;
    const std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
    std::vector<std::array<std::uint64_t, 21>> counts(chunks);
    run_chunked(ctx.seed, 9 * kStreamBlock, chunks, ctx.workers,
                [&](std::uint64_t c, RngStream& stream) {
                    std::array<std::uint64_t, 21> local{};
                    const std::uint64_t start = c * kChunkTrials;
                    const std::uint64_t want = std::min(kChunkTrials, trials - start);
                    for (std::uint64_t t = 0; t < want; ++t) {
                        double best = 0.0;
                        bool rec3 = false;
                        bool rec7 = false;
                        for (int m = 1; m <= length; ++m) {
                            const double u = stream.uniform01();
                            if (u > best) {
                                best = u;
                                ++local[m - 1];
                                rec3 = rec3 || m == 3;
                                rec7 = rec7 || m == 7;
                            }
                        }
                        local[20] += rec3 && rec7;
                    }
                    counts[c] = local;
                });
    std::array<std::uint64_t, 21> total{};
    for (const auto& local : counts) {
        for (int i = 0; i < 21; ++i) {
            total[i] += local[i];
        }
    }
    const double n = static_cast<double>(trials);
    for (int m = 1; m <= length; ++m) {
        const double p = 1.0 / static_cast<double>(m);
        const double est = static_cast<double>(total[m - 1]) / n;
        r.rows.push_back(stat_row("record rate at position " + std::to_string(m), p, est,
                                  std::sqrt(p * (1.0 - p) / n)));
    }
    const double p37 = 1.0 / 21.0;
    r.rows.push_back(stat_row("joint record rate at positions 3 and 7", p37,
                              static_cast<double>(total[20]) / n,
                              std::sqrt(p37 * (1.0 - p37) / n)));
    r.params["trials"] = std::to_string(trials);
    r.params["length"] = std::to_string(length);
    r.rng = {ctx.seed, 9 * kStreamBlock, kRngAlgorithmTag};
    r.stream_count = chunks;
    set_verdict_from_rows(r);
    return r;
}

// ---- experiment 10: the late-value marginal is F^k under every law ----

ExperimentReport exp_marginal_invariance(const ExperimentConfig& cfg,
                                         const ExperimentContext& ctx) {
    (void)ctx;
    ExperimentReport r;
    const double tol = cfg_double(cfg, "tolerance", 1e-12);
    const double sup = std::numeric_limits<double>::infinity();
    const std::vector<UnivariateLaw> laws = {
        UnivariateLaw::negexp(),  UnivariateLaw::stdexp(),   UnivariateLaw::uniform(),
        UnivariateLaw::gev(0.0), UnivariateLaw::gev(0.5), UnivariateLaw::gev(-0.5)};
    const std::vector<std::pair<long, long>> pairs = {{1, 2}, {2, 5}, {7, 9}};
    const std::vector<double> levels = {0.05, 0.2, 0.4, 0.6, 0.8, 0.95};
    for (const UnivariateLaw& law : laws) {
        for (const auto& [j, k] : pairs) {
            double worst = 0.0;
            for (double q : levels) {
                const double y = law.quantile(q);
                worst = std::max(worst, std::abs(pair_record_cdf(law, j, k, sup, y) -
                                                 single_record_cdf(law, k, y)));
            }
            std::ostringstream label;
            label << law.name() << " j=" << j << " k=" << k;
            r.rows.push_back(det_row(label.str(), 0.0, worst, tol));
        }
    }
    r.params["tolerance"] = fmt(tol);
    set_verdict_from_rows(r);
    return r;
}

// ---- experiment 11: deterministic convergence of the finite law ----

ExperimentReport exp_finite_to_limit_convergence(const ExperimentConfig& cfg,
                                                 const ExperimentContext& ctx) {
    (void)ctx;
    ExperimentReport r;
    const double tol = cfg_double(cfg, "final_tolerance", 0.02);
    const UnivariateLaw law = UnivariateLaw::stdexp();
    const LambdaVector lv({0.2, 0.6});
    const std::vector<long> n_list = {25, 50, 100, 200};
    const std::vector<double> axis = {-1.0, -0.5, 0.0, 0.5, 1.0};
    std::vector<std::vector<double>> grid;
    for (double a : axis) {
        for (double b : axis) {
            grid.push_back({a, b});
        }
    }
    const std::vector<ExperimentReport> steps = converge_study(law, lv, n_list, grid);
    std::vector<double> devs;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        devs.push_back(steps[i].estimate);
        ReportRow row{{}, "sup deviation at n=" + std::to_string(n_list[i]), 0.0,
                      steps[i].estimate, 0.0, 0.0};
        r.rows.push_back(row);
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < devs.size(); ++i) {
        decreasing = decreasing && devs[i] < devs[i - 1];
    }
    r.rows.push_back(
        {{}, "strictly decreasing", 1.0, decreasing ? 1.0 : 0.0, 0.0, decreasing ? 0.0 : 1e9});
    r.rows.push_back(det_row("final deviation", 0.0, devs.back(), tol));
    r.params["law"] = law.name();
    r.params["lambda1"] = fmt(lv[0]);
    r.params["lambda2"] = fmt(lv[1]);
    set_verdict_from_rows(r);
    return r;
}

// ---- experiment 12: numbered-record sums and their normal limit ----

ExperimentReport exp_numbered_record_clt(const ExperimentConfig& cfg,
                                         const ExperimentContext& ctx) {
    ExperimentReport r;
    const long n = cfg_long(cfg, "n", 400);
    const std::uint64_t trials = static_cast<std::uint64_t>(cfg_long(cfg, "trials", 2000));
    SamplerOptions opt;
    opt.seed = ctx.seed;
    opt.stream_base = 12 * kStreamBlock;
    opt.workers = ctx.workers;
    const SampleBatch batch = sample_numbered_record(n, trials, opt);
    const std::vector<double> values = batch.column(0);
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    const double dn = static_cast<double>(n);
    const double se = std::sqrt(dn / static_cast<double>(trials));
    r.rows.push_back(stat_row("sample mean", dn, mean, se));
    std::vector<double> standardized(values.size());
    const double sd = std::sqrt(dn);
    for (std::size_t i = 0; i < values.size(); ++i) {
        standardized[i] = (values[i] - dn) / sd;
    }
    r.rows.push_back(ks_row("standardized sums vs standard normal",
                            ks_one_sample(standardized, std_normal_cdf).p_value));
    r.params["n"] = std::to_string(n);
    r.params["trials"] = std::to_string(trials);
    r.rng = batch.rng;
    r.stream_count = batch.stream_count;
    set_verdict_from_rows(r);
    return r;
}

struct RegistryEntry {
    const char* name;
    int ordinal;
    ExperimentReport (*fn)(const ExperimentConfig&, const ExperimentContext&);
};

const RegistryEntry kRegistry[] = {
    {"kl_identity", 1, exp_kl_identity},
    {"kl_closed_vs_quadrature", 2, exp_kl_closed_vs_quadrature},
    {"pair_law_bruteforce", 3, exp_pair_law_bruteforce},
    {"exact_vs_bruteforce", 4, exp_exact_vs_bruteforce},
    {"finite_equals_limit", 5, exp_finite_equals_limit},
    {"limit_pair_moments_mc", 6, exp_limit_pair_moments_mc},
    {"limit_triple_consistency", 7, exp_limit_triple_consistency},
    {"increment_independence", 8, exp_increment_independence},
    {"record_indicator_rates", 9, exp_record_indicator_rates},
    {"marginal_invariance", 10, exp_marginal_invariance},
    {"finite_to_limit_convergence", 11, exp_finite_to_limit_convergence},
    {"numbered_record_clt", 12, exp_numbered_record_clt},
};

} // namespace

std::vector<std::string> experiment_names() {
    std::vector<std::string> names;
    for (const RegistryEntry& e : kRegistry) {
        names.push_back(e.name);
    }
    return names;
}

ExperimentReport run_experiment(const std::string& name, const ExperimentConfig& config,
                                const ExperimentContext& ctx) {
    const RegistryEntry* entry = nullptr;
    for (const RegistryEntry& e : kRegistry) {
        if (name == e.name) {
            entry = &e;
            break;
        }
    }
    if (!entry) {
        std::string known;
        for (const RegistryEntry& e : kRegistry) {
            known += std::string(known.empty() ? "" : ", ") + e.name;
        }
        throw UnknownExperimentError("unknown experiment '" + name + "' (known: " + known +
                                     ")");
    }
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentReport report = entry->fn(config, ctx);
    const auto t1 = std::chrono::steady_clock::now();
    report.schema = 1;
    report.experiment = entry->name;
    report.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (report.rng.algorithm_tag.empty() || report.rng.seed == 0) {
        report.rng = {ctx.seed, static_cast<std::uint64_t>(entry->ordinal) * kStreamBlock,
                      kRngAlgorithmTag};
    }
    report.params.emplace("seed", std::to_string(ctx.seed));
    report.params.emplace("workers", std::to_string(ctx.workers));
    report.params.emplace("scale", ctx.fast ? "fast" : "full");
    report.library_version = kLibraryVersion;
    report.pass = std::abs(report.z) <= 3.0;
    return report;
}

std::vector<ExperimentReport> run_suite(const std::string& suite,
                                        const ExperimentContext& ctx) {
    if (suite != "all" && suite != "fast") {
        throw DomainError("run_suite: suite must be 'all' or 'fast'");
    }
    ExperimentContext local = ctx;
    local.fast = suite == "fast";
    std::vector<ExperimentReport> reports;
    for (const RegistryEntry& e : kRegistry) {
        reports.push_back(run_experiment(e.name, {}, local));
    }
    return reports;
}

std::vector<ExperimentReport> converge_study(const UnivariateLaw& law,
                                             const LambdaVector& lv,
                                             const std::vector<long>& n_list,
                                             const std::vector<std::vector<double>>& grid) {
    if (lv.dim() != 2) {
        throw DimensionError("converge_study: exactly two rates required");
    }
    if (n_list.empty()) {
        throw EmptyInputError("converge_study: n list must be nonempty");
    }
    for (std::size_t i = 1; i < n_list.size(); ++i) {
        if (n_list[i] <= n_list[i - 1]) {
            throw OrderingError("converge_study: n list must be strictly increasing");
        }
    }
    if (grid.empty()) {
        throw EmptyInputError("converge_study: grid must be nonempty");
    }
    std::vector<ExperimentReport> out;
    for (long n : n_list) {
        const long j = static_cast<long>(std::ceil(lv[0] * static_cast<double>(n)));
        const long k = static_cast<long>(std::ceil(lv[1] * static_cast<double>(n)));
        if (j < 1 || k <= j) {
            throw DomainError("converge_study: rates do not map to ordered indices at n=" +
                              std::to_string(n));
        }
        const NormingConstants nc = norming_constants(law, n);
        ExperimentReport r;
        r.experiment = "converge_study";
        double worst = 0.0;
        for (const std::vector<double>& pt : grid) {
            if (pt.size() != 2) {
                throw DimensionError("converge_study: grid points must be bivariate");
            }
            const double finite = pair_record_cdf(law, j, k, nc.a_n * pt[0] + nc.b_n,
                                                  nc.a_n * pt[1] + nc.b_n);
            double limit;
            if (law.id() == LawId::negexp || law.id() == LawId::uniform) {
                limit = limit_pair_cdf_general(UnivariateLaw::negexp(), lv, pt[0], pt[1]);
            } else {
                limit = limit_pair_cdf_general(GevParams{nc.alpha}, lv, pt[0], pt[1]);
            }
            const double dev = std::abs(finite - limit);
            r.rows.push_back({pt, "", limit, finite, 0.0, 0.0});
            worst = std::max(worst, dev);
        }
        r.theory = 0.0;
        r.estimate = worst;
        r.z = 0.0;
        r.pass = true;
        r.params["law"] = law.name();
        r.params["n"] = std::to_string(n);
        r.params["j"] = std::to_string(j);
        r.params["k"] = std::to_string(k);
        r.library_version = kLibraryVersion;
        out.push_back(r);
    }
    return out;
}

} // namespace recjoint
