#include "recjoint/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "recjoint/distributions.hpp"
#include "recjoint/errors.hpp"
#include "recjoint/experiments.hpp"
#include "recjoint/records_exact.hpp"
#include "recjoint/records_kl.hpp"
#include "recjoint/records_limits.hpp"
#include "recjoint/report.hpp"
#include "recjoint/sampling.hpp"
#include "recjoint/specfun.hpp"
#include "recjoint/statistics.hpp"

namespace recjoint {
namespace {

using nlohmann::ordered_json;

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        parts.push_back(cur);
    }
    return parts;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
    if (trim(text).empty()) {
        throw DomainError("missing or empty " + what);
    }
    std::vector<double> out;
    for (const std::string& part : split(text, ',')) {
        const std::string tok = trim(part);
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) {
                throw std::invalid_argument(tok);
            }
            out.push_back(v);
        } catch (const std::exception&) {
            throw DomainError("cannot parse '" + part + "' in " + what);
        }
    }
    return out;
}

std::vector<long> parse_long_list(const std::string& text, const std::string& what) {
    if (trim(text).empty()) {
        throw DomainError("missing or empty " + what);
    }
    std::vector<long> out;
    for (const std::string& part : split(text, ',')) {
        const std::string tok = trim(part);
        try {
            std::size_t used = 0;
            const long v = std::stol(tok, &used);
            if (used != tok.size()) {
                throw std::invalid_argument(tok);
            }
            out.push_back(v);
        } catch (const std::exception&) {
            throw DomainError("cannot parse '" + part + "' in " + what);
        }
    }
    return out;
}

std::vector<std::vector<double>> parse_grid(const std::string& text) {
    std::vector<std::vector<double>> grid;
    for (const std::string& part : split(text, ';')) {
        if (trim(part).empty()) {
            continue;
        }
        grid.push_back(parse_double_list(part, "grid point '" + part + "'"));
    }
    if (grid.empty()) {
        throw DomainError("grid is empty");
    }
    return grid;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) {
        throw DomainError("cannot open output file '" + path + "'");
    }
    f << text;
}

void set_verdict(ExperimentReport& r) {
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

double exact_rate_theory(const RecordIndexSet& idx) {
    const std::vector<long>& js = idx.indices();
    double rate = 1.0 / static_cast<double>(js[0]);
    for (std::size_t m = 1; m < js.size(); ++m) {
        rate *= static_cast<double>(js[m] - js[m - 1]) / static_cast<double>(js[m]);
    }
    return rate;
}

struct Cfg {
    std::string target;
    std::string law_text = "negexp";
    std::string family = "exact";
    std::string indices_text;
    std::string lambdas_text;
    std::string x_text;
    std::string y_text;
    std::string grid_text;
    std::string nlist_text;
    std::string suite = "all";
    std::string out_path;
    std::string format;
    std::string experiment;
    std::vector<std::string> experiments;
    double alpha = 0.0;
    double u = 0.0;
    double q = 0.0;
    long n = 0;
    long j = 0;
    long k = 0;
    long trials = 10000;
    std::uint64_t seed = 20260822;
    std::uint64_t stream_base = 0;
    std::uint64_t budget = 1000000000;
    int workers = 0;
    bool has_alpha = false;
    bool has_grid = false;
    bool has_law = false;
};

UnivariateLaw the_law(const Cfg& cfg) { return UnivariateLaw::parse(cfg.law_text); }

std::vector<long> need_indices(const Cfg& cfg, std::size_t want = 0) {
    std::vector<long> idx = parse_long_list(cfg.indices_text, "--indices");
    if (want != 0 && idx.size() != want) {
        throw DomainError("--indices must list " + std::to_string(want) +
                          " values for this target");
    }
    return idx;
}

std::vector<double> need_x(const Cfg& cfg, std::size_t want = 0) {
    std::vector<double> xs = parse_double_list(cfg.x_text, "--x");
    if (want != 0 && xs.size() != want) {
        throw DomainError("--x must list " + std::to_string(want) +
                          " values for this target");
    }
    return xs;
}

std::vector<double> need_y(const Cfg& cfg, std::size_t want = 0) {
    std::vector<double> ys = parse_double_list(cfg.y_text, "--y");
    if (want != 0 && ys.size() != want) {
        throw DomainError("--y must list " + std::to_string(want) +
                          " values for this target");
    }
    return ys;
}

LambdaVector need_lambdas(const Cfg& cfg, std::size_t want = 0) {
    std::vector<double> ls = parse_double_list(cfg.lambdas_text, "--lambdas");
    if (want != 0 && ls.size() != want) {
        throw DomainError("--lambdas must list " + std::to_string(want) +
                          " values for this target");
    }
    return LambdaVector(ls);
}

void emit_scalar(const Cfg& cfg, const std::string& target, double value,
                 std::ostream& out) {
    if (cfg.format == "json") {
        ordered_json j{{"target", target}, {"value", value}};
        out << j.dump(2) << "\n";
    } else {
        out << format_value(value) << "\n";
    }
    if (!cfg.out_path.empty()) {
        ordered_json j{{"target", target}, {"value", value}};
        write_file(cfg.out_path, j.dump(2) + "\n");
    }
}

void emit_object(const Cfg& cfg, ordered_json j, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    out << text;
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, text);
    }
}

int run_eval(const Cfg& cfg, std::ostream& out) {
    const std::string& t = cfg.target;
    if (cfg.family == "exact") {
        if (t == "event-prob") {
            emit_scalar(cfg, t, record_event_probability(RecordIndexSet(need_indices(cfg))),
                        out);
        } else if (t == "cdf") {
            emit_scalar(cfg, t, the_law(cfg).cdf(need_x(cfg, 1)[0]), out);
        } else if (t == "pdf") {
            emit_scalar(cfg, t, the_law(cfg).pdf(need_x(cfg, 1)[0]), out);
        } else if (t == "quantile") {
            emit_scalar(cfg, t, the_law(cfg).quantile(cfg.q), out);
        } else if (t == "from-negexp") {
            emit_scalar(cfg, t, the_law(cfg).from_negexp(need_x(cfg, 1)[0]), out);
        } else if (t == "to-negexp") {
            emit_scalar(cfg, t, the_law(cfg).to_negexp(need_x(cfg, 1)[0]), out);
        } else if (t == "single-cdf") {
            emit_scalar(cfg, t,
                        single_record_cdf(the_law(cfg), need_indices(cfg, 1)[0],
                                          need_x(cfg, 1)[0]),
                        out);
        } else if (t == "single-pdf") {
            emit_scalar(cfg, t,
                        single_record_pdf(the_law(cfg), need_indices(cfg, 1)[0],
                                          need_x(cfg, 1)[0]),
                        out);
        } else if (t == "pair-cdf") {
            const auto idx = need_indices(cfg, 2);
            const auto xs = need_x(cfg, 2);
            emit_scalar(cfg, t, pair_record_cdf(the_law(cfg), idx[0], idx[1], xs[0], xs[1]),
                        out);
        } else if (t == "pair-pdf") {
            const auto idx = need_indices(cfg, 2);
            emit_scalar(cfg, t,
                        pair_record_pdf(the_law(cfg), idx[0], idx[1], need_x(cfg, 1)[0]),
                        out);
        } else if (t == "marginal-early") {
            const auto idx = need_indices(cfg, 2);
            emit_scalar(cfg, t, pair_marginal_early(idx[0], idx[1], need_x(cfg, 1)[0]), out);
        } else if (t == "marginal-late") {
            const auto idx = need_indices(cfg, 2);
            emit_scalar(cfg, t, pair_marginal_late(idx[0], idx[1], need_x(cfg, 1)[0]), out);
        } else if (t == "triple-cdf") {
            const auto idx = need_indices(cfg, 3);
            const auto xs = need_x(cfg, 3);
            emit_scalar(cfg, t,
                        triple_record_cdf_negexp(idx[0], idx[1], idx[2], xs[0], xs[1], xs[2]),
                        out);
        } else if (t == "d-cdf") {
            const RecordIndexSet idx(need_indices(cfg));
            emit_scalar(cfg, t, d_record_cdf_negexp(idx, need_x(cfg, idx.indices().size())),
                        out);
        } else if (t == "norming") {
            if (cfg.n < 1) {
                throw DomainError("eval norming requires --n >= 1");
            }
            const NormingConstants nc = norming_constants(the_law(cfg), cfg.n);
            emit_object(cfg,
                        ordered_json{{"target", t},
                                     {"a_n", nc.a_n},
                                     {"b_n", nc.b_n},
                                     {"alpha", nc.alpha}},
                        out);
        } else if (t == "attracting-limit") {
            emit_scalar(cfg, t, attracting_limit_cdf(the_law(cfg), need_x(cfg, 1)[0]), out);
        } else if (t == "gev-cdf") {
            emit_scalar(cfg, t, gev_cdf(cfg.alpha, need_x(cfg, 1)[0]), out);
        } else if (t == "digamma") {
            emit_scalar(cfg, t, digamma(need_x(cfg, 1)[0]), out);
        } else if (t == "kolmogorov-cdf") {
            emit_scalar(cfg, t, kolmogorov_limit_cdf(need_x(cfg, 1)[0]), out);
        } else {
            throw DomainError(
                "unknown eval target '" + t +
                "' for --law-family exact (known: event-prob, cdf, pdf, quantile, "
                "from-negexp, to-negexp, single-cdf, single-pdf, pair-cdf, pair-pdf, "
                "marginal-early, marginal-late, triple-cdf, d-cdf, norming, "
                "attracting-limit, gev-cdf, digamma, kolmogorov-cdf)");
        }
        return 0;
    }
    if (cfg.family != "limit") {
        throw DomainError("--law-family must be 'exact' or 'limit'");
    }
    if (t == "pair-cdf") {
        const auto xs = need_x(cfg, 2);
        emit_scalar(cfg, t, limit_pair_cdf(need_lambdas(cfg, 2), xs[0], xs[1]), out);
    } else if (t == "marginals") {
        const auto m = limit_pair_marginals(need_lambdas(cfg, 2), need_x(cfg, 1)[0]);
        emit_object(cfg, ordered_json{{"target", t}, {"early", m[0]}, {"late", m[1]}}, out);
    } else if (t == "moments") {
        const LimitPairMoments m = limit_pair_moments(need_lambdas(cfg, 2));
        emit_object(cfg,
                    ordered_json{{"target", t},
                                 {"mean_early", m.mean_early},
                                 {"mean_late", m.mean_late},
                                 {"var_early", m.var_early},
                                 {"var_late", m.var_late},
                                 {"covariance", m.covariance},
                                 {"correlation", m.correlation},
                                 {"expected_sq_gap", m.expected_sq_gap},
                                 {"expected_sq_gap_alt", m.expected_sq_gap / 2.0}},
                    out);
    } else if (t == "pair-general") {
        const auto ys = need_x(cfg, 2);
        const LambdaVector lv = need_lambdas(cfg, 2);
        double v;
        if (cfg.has_alpha) {
            v = limit_pair_cdf_general(GevParams{cfg.alpha}, lv, ys[0], ys[1]);
        } else {
            v = limit_pair_cdf_general(the_law(cfg), lv, ys[0], ys[1]);
        }
        emit_scalar(cfg, t, v, out);
    } else if (t == "exceedance") {
        emit_scalar(cfg, t,
                    conditional_exceedance_limit(GevParams{cfg.alpha}, need_lambdas(cfg, 2),
                                                 cfg.u, need_y(cfg, 1)[0]),
                    out);
    } else if (t == "triple-cdf") {
        const auto xs = need_x(cfg, 3);
        const LambdaVector lv = need_lambdas(cfg, 3);
        const double v = limit_triple_cdf(lv, xs[0], xs[1], xs[2]);
        const double alt = limit_triple_cdf_alt(lv, xs[0], xs[1], xs[2]);
        if (cfg.format == "json") {
            emit_object(cfg, ordered_json{{"target", t}, {"value", v}, {"alt_value", alt}},
                        out);
        } else {
            emit_scalar(cfg, t, v, out);
        }
    } else if (t == "triple-cov") {
        const auto c = limit_triple_cov(need_lambdas(cfg, 3));
        emit_object(cfg,
                    ordered_json{{"target", t},
                                 {"cov",
                                  {{c[0], c[1], c[2]}, {c[3], c[4], c[5]}, {c[6], c[7], c[8]}}}},
                    out);
    } else if (t == "chain-means") {
        emit_object(cfg,
                    ordered_json{{"target", t}, {"means", limit_chain_means(need_lambdas(cfg))}},
                    out);
    } else if (t == "increments-cdf") {
        const LambdaVector lv = need_lambdas(cfg);
        emit_scalar(cfg, t,
                    limit_increments_cdf(lv, need_y(cfg, static_cast<std::size_t>(lv.dim()) - 1)),
                    out);
    } else if (t == "increment-joint") {
        emit_scalar(cfg, t,
                    limit_record_increment_joint(need_lambdas(cfg, 2), need_x(cfg, 1)[0],
                                                 need_y(cfg, 1)[0]),
                    out);
    } else {
        throw DomainError(
            "unknown eval target '" + t +
            "' for --law-family limit (known: pair-cdf, marginals, moments, pair-general, "
            "exceedance, triple-cdf, triple-cov, chain-means, increments-cdf, "
            "increment-joint)");
    }
    return 0;
}

int run_kl(const Cfg& cfg, std::ostream& out) {
    if (cfg.j < 1 || cfg.k <= cfg.j) {
        throw DomainError("kl requires 1 <= --j < --k");
    }
    const KlResult closed = kl_distance(cfg.j, cfg.k);
    const UnivariateLaw law = the_law(cfg);
    auto p = [&](double y) { return pair_record_pdf(law, cfg.j, cfg.k, y); };
    auto q = [&](double y) { return single_record_pdf(law, cfg.j, y); };
    const double lo = law.lower_endpoint();
    const double hi = law.upper_endpoint();
    const double check = kl_quadrature(p, q, lo, hi, 1e-9) + kl_quadrature(q, p, lo, hi, 1e-9);
    emit_object(cfg,
                ordered_json{{"j", cfg.j},
                             {"k", cfg.k},
                             {"law", law.name()},
                             {"forward", closed.forward},
                             {"reverse", closed.reverse},
                             {"distance", closed.distance},
                             {"quadrature_check", check}},
                out);
    return 0;
}

int run_simulate(const Cfg& cfg, std::ostream& out) {
    SamplerOptions opt;
    opt.seed = cfg.seed;
    opt.stream_base = cfg.stream_base;
    opt.workers = cfg.workers;
    opt.proposal_budget = cfg.budget;
    if (cfg.trials < 1) {
        throw DomainError("--trials must be positive");
    }
    const std::uint64_t trials = static_cast<std::uint64_t>(cfg.trials);
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentReport rep;
    SampleBatch batch;
    if (cfg.experiment == "bruteforce" || cfg.experiment == "exact") {
        const RecordIndexSet idx(need_indices(cfg));
        const UnivariateLaw law = the_law(cfg);
        const bool brute = cfg.experiment == "bruteforce";
        batch = brute ? simulate_conditional_records_bruteforce(law, idx, trials, opt)
                      : sample_conditional_records_exact(law, idx, trials, opt);
        if (cfg.has_grid) {
            const auto grid = parse_grid(cfg.grid_text);
            const int d = idx.dim();
            rep = grid_compare(
                batch,
                [&](const std::vector<double>& pt) {
                    if (static_cast<int>(pt.size()) != d) {
                        throw DimensionError("grid point dimension mismatch");
                    }
                    if (d == 2) {
                        return pair_record_cdf(law, idx.indices()[0], idx.indices()[1], pt[0],
                                               pt[1]);
                    }
                    std::vector<double> eta(pt.size());
                    for (std::size_t i = 0; i < pt.size(); ++i) {
                        eta[i] = law.to_negexp(pt[i]);
                    }
                    return d_record_cdf_negexp(idx, eta);
                },
                grid);
        }
        const double p_theory =
            brute ? record_event_probability(idx) : exact_rate_theory(idx);
        const double se =
            p_theory * std::sqrt((1.0 - p_theory) / static_cast<double>(trials));
        ReportRow rate{{}, "acceptance rate", p_theory, batch.acceptance_rate(), se, 0.0};
        rate.z = (rate.estimate - rate.theory) / se;
        rep.rows.push_back(rate);
        set_verdict(rep);
        rep.params["law"] = law.name();
        rep.params["indices"] = cfg.indices_text;
    } else if (cfg.experiment == "chain") {
        const LambdaVector lv = need_lambdas(cfg);
        batch = sample_limit_chain(lv, trials, opt);
        if (cfg.has_grid) {
            const auto grid = parse_grid(cfg.grid_text);
            if (lv.dim() != 2 && lv.dim() != 3) {
                throw DomainError("chain grid comparison supports 2 or 3 rates");
            }
            rep = grid_compare(
                batch,
                [&](const std::vector<double>& pt) {
                    if (static_cast<int>(pt.size()) != lv.dim()) {
                        throw DimensionError("grid point dimension mismatch");
                    }
                    return lv.dim() == 2 ? limit_pair_cdf(lv, pt[0], pt[1])
                                         : limit_triple_cdf(lv, pt[0], pt[1], pt[2]);
                },
                grid);
        } else {
            const std::vector<double> means = limit_chain_means(lv);
            for (int c = 0; c < lv.dim(); ++c) {
                const auto [est, se] = mean_and_se(batch.column(c));
                ReportRow row{{}, "mean of coordinate " + std::to_string(c + 1), means[c],
                              est, se, 0.0};
                row.z = se > 0 ? (est - means[c]) / se : 0.0;
                rep.rows.push_back(row);
            }
            set_verdict(rep);
        }
        rep.params["lambdas"] = cfg.lambdas_text;
    } else if (cfg.experiment == "numbered") {
        if (cfg.n < 1) {
            throw DomainError("simulate numbered requires --n >= 1");
        }
        if (cfg.has_grid) {
            throw DomainError("simulate numbered takes no --grid");
        }
        batch = sample_numbered_record(cfg.n, trials, opt);
        const auto [est, se] = mean_and_se(batch.column(0));
        ReportRow row{{}, "sample mean", static_cast<double>(cfg.n), est, se, 0.0};
        row.z = (est - row.theory) / se;
        rep.rows.push_back(row);
        set_verdict(rep);
        rep.params["n"] = std::to_string(cfg.n);
    } else {
        throw DomainError("unknown --experiment '" + cfg.experiment +
                          "' (known: bruteforce, exact, chain, numbered)");
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.schema = 1;
    rep.experiment = "simulate_" + cfg.experiment;
    rep.params["trials"] = std::to_string(cfg.trials);
    rep.params["seed"] = std::to_string(cfg.seed);
    rep.params["workers"] = std::to_string(cfg.workers);
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    rep.rng = batch.rng;
    rep.stream_count = batch.stream_count;
    rep.library_version = kLibraryVersion;
    const std::string json_text = report_to_json(rep) + "\n";
    if (cfg.format == "csv") {
        out << report_rows_to_csv(rep);
    } else {
        out << json_text;
    }
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, cfg.format == "csv" ? report_rows_to_csv(rep) : json_text);
    }
    return rep.pass ? 0 : 1;
}

int run_verify(const Cfg& cfg, std::ostream& out) {
    ExperimentContext ctx;
    ctx.seed = cfg.seed;
    ctx.workers = cfg.workers;
    ctx.fast = cfg.suite == "fast";
    if (cfg.suite != "all" && cfg.suite != "fast") {
        throw DomainError("--suite must be 'all' or 'fast'");
    }
    std::vector<ExperimentReport> reports;
    if (cfg.experiments.empty()) {
        reports = run_suite(cfg.suite, ctx);
    } else {
        for (const std::string& name : cfg.experiments) {
            reports.push_back(run_experiment(name, {}, ctx));
        }
    }
    bool all_pass = true;
    for (const ExperimentReport& r : reports) {
        all_pass = all_pass && r.pass;
        char line[160];
        std::snprintf(line, sizeof line, "%-4s %-28s z=%-10.4g %6ld ms", r.pass ? "PASS" : "FAIL",
                      r.experiment.c_str(), r.z, r.runtime_ms);
        out << line << "\n";
    }
    out << (all_pass ? "VERIFY PASS" : "VERIFY FAIL") << " (" << reports.size()
        << " experiments)\n";
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, reports_to_json(reports) + "\n");
    }
    return all_pass ? 0 : 1;
}

int run_converge(const Cfg& cfg, std::ostream& out) {
    const UnivariateLaw law = the_law(cfg);
    const LambdaVector lv = need_lambdas(cfg, 2);
    const std::vector<long> n_list = parse_long_list(cfg.nlist_text, "--n-list");
    std::vector<std::vector<double>> grid;
    if (cfg.has_grid) {
        grid = parse_grid(cfg.grid_text);
    } else {
        const std::vector<double> axis = {-1.0, -0.5, 0.0, 0.5, 1.0};
        for (double a : axis) {
            for (double b : axis) {
                grid.push_back({a, b});
            }
        }
    }
    const std::vector<ExperimentReport> reports = converge_study(law, lv, n_list, grid);
    for (const ExperimentReport& r : reports) {
        out << "n=" << r.params.at("n") << " j=" << r.params.at("j") << " k="
            << r.params.at("k") << " sup_deviation=" << format_value(r.estimate) << "\n";
    }
    if (cfg.format == "json") {
        out << reports_to_json(reports) << "\n";
    }
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, reports_to_json(reports) + "\n");
    }
    return 0;
}

} // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    Cfg cfg;
    CLI::App app{"Exact and asymptotic laws of jointly conditioned record values"};
    app.name("recjoint");
    app.require_subcommand(1);
    app.footer("Negative numeric arguments: quote with a leading space (--x \" -1,-0.5\")\n"
               "or use the equals form (--x=-1,-0.5).");

    CLI::App* eval = app.add_subcommand("eval", "Evaluate one distribution quantity");
    eval->add_option("target", cfg.target, "Quantity to evaluate (e.g. pair-cdf)")
        ->required();
    CLI::Option* eval_law = eval->add_option("--law", cfg.law_text,
                                             "Law id: negexp|stdexp|uniform|gev:<alpha>");
    eval->add_option("--law-family", cfg.family, "exact (finite-index) or limit laws")
        ->check(CLI::IsMember({"exact", "limit"}));
    eval->add_option("--indices", cfg.indices_text, "Record indices j,k,...");
    eval->add_option("--lambdas", cfg.lambdas_text, "Limit rates l1,l2,...");
    eval->add_option("--x", cfg.x_text, "Evaluation point(s) x1,x2,...");
    eval->add_option("--y", cfg.y_text, "Secondary point(s) y1,y2,...");
    CLI::Option* eval_alpha = eval->add_option("--alpha", cfg.alpha, "Extreme-value shape");
    eval->add_option("--n", cfg.n, "Sample size (norming constants)");
    eval->add_option("--u", cfg.u, "Conditioning threshold (exceedance)");
    eval->add_option("--q", cfg.q, "Probability level (quantile)");
    eval->add_option("--format", cfg.format, "json for structured output")
        ->check(CLI::IsMember({"json", "plain"}));
    eval->add_option("--out", cfg.out_path, "Write JSON result to this path");

    CLI::App* kl = app.add_subcommand("kl", "Record divergence identities");
    kl->add_option("--j", cfg.j, "Early record index")->required();
    kl->add_option("--k", cfg.k, "Late record index")->required();
    kl->add_option("--law", cfg.law_text, "Law for the quadrature check");
    kl->add_option("--out", cfg.out_path, "Write JSON result to this path");

    CLI::App* sim = app.add_subcommand("simulate", "Run one sampler and report");
    sim->add_option("--experiment", cfg.experiment,
                    "bruteforce|exact|chain|numbered")
        ->required();
    sim->add_option("--law", cfg.law_text, "Law id for record samplers");
    sim->add_option("--indices", cfg.indices_text, "Record indices j,k,...");
    sim->add_option("--lambdas", cfg.lambdas_text, "Limit rates for the chain sampler");
    sim->add_option("--n", cfg.n, "Record number for the numbered sampler");
    sim->add_option("--trials", cfg.trials, "Accepted draws to produce");
    sim->add_option("--seed", cfg.seed, "RNG seed");
    sim->add_option("--stream-base", cfg.stream_base, "First stream id");
    sim->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)");
    sim->add_option("--budget", cfg.budget, "Proposal budget for rejection sampling");
    CLI::Option* sim_grid =
        sim->add_option("--grid", cfg.grid_text, "Grid points \"x1,x2;x1,x2;...\"");
    sim->add_option("--out", cfg.out_path, "Write the report to this path");
    sim->add_option("--format", cfg.format, "json (default) or csv of grid rows")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* verify = app.add_subcommand("verify", "Run the verification registry");
    verify->add_option("--suite", cfg.suite, "all (default) or fast")
        ->check(CLI::IsMember({"all", "fast"}));
    verify->add_option("--experiment", cfg.experiments,
                       "Run only the named experiment(s)");
    verify->add_option("--seed", cfg.seed, "RNG seed");
    verify->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)");
    verify->add_option("--out", cfg.out_path, "Write the JSON report array to this path");

    CLI::App* conv = app.add_subcommand("converge", "Finite-to-limit convergence study");
    conv->add_option("--law", cfg.law_text, "Law id")->required();
    conv->add_option("--lambdas", cfg.lambdas_text, "Two rates l1,l2")->required();
    conv->add_option("--n-list", cfg.nlist_text, "Increasing sizes n1,n2,...")->required();
    CLI::Option* conv_grid =
        conv->add_option("--grid", cfg.grid_text, "Grid points \"y1,y2;y1,y2;...\"");
    conv->add_option("--out", cfg.out_path, "Write the JSON report array to this path");
    conv->add_option("--format", cfg.format, "json to print the report array")
        ->check(CLI::IsMember({"json", "plain"}));

    std::vector<const char*> argv;
    argv.push_back("recjoint");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run 'recjoint --help' for usage\n";
        return 2;
    }
    cfg.has_alpha = eval_alpha->count() > 0;
    cfg.has_law = eval_law->count() > 0;
    cfg.has_grid = sim_grid->count() > 0 || conv_grid->count() > 0;
    try {
        if (eval->parsed()) {
            return run_eval(cfg, out);
        }
        if (kl->parsed()) {
            return run_kl(cfg, out);
        }
        if (sim->parsed()) {
            return run_simulate(cfg, out);
        }
        if (verify->parsed()) {
            return run_verify(cfg, out);
        }
        if (conv->parsed()) {
            return run_converge(cfg, out);
        }
        err << app.help();
        return 2;
    } catch (const Error& e) {
        const bool usage = dynamic_cast<const DomainError*>(&e) != nullptr ||
                           dynamic_cast<const OrderingError*>(&e) != nullptr ||
                           dynamic_cast<const DimensionError*>(&e) != nullptr ||
                           dynamic_cast<const EmptyInputError*>(&e) != nullptr ||
                           dynamic_cast<const UnsupportedLawError*>(&e) != nullptr ||
                           dynamic_cast<const UnknownExperimentError*>(&e) != nullptr;
        err << "error: " << e.what() << "\n";
        return usage ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace recjoint
