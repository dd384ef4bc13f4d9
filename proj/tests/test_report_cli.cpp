#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "recjoint/cli.hpp"
#include "recjoint/errors.hpp"
#include "recjoint/report.hpp"

using namespace recjoint;

namespace {

ExperimentReport full_report() {
    ExperimentReport r;
    r.schema = 1;
    r.experiment = "demo";
    r.params = {{"law", "negexp"}, {"seed", "42"}};
    r.theory = 0.1 + 0.2;
    r.estimate = 0.30000001;
    r.stderror = 1.25e-8;
    r.z = 0.8;
    r.pass = true;
    r.runtime_ms = 123;
    r.rng = {42, 7, kRngAlgorithmTag};
    r.stream_count = 3;
    r.rows.push_back({{-1.0, -0.5}, "", 0.31, 0.3099, 0.004, -0.025});
    r.rows.push_back({{}, "acceptance rate", 0.5, 0.493, 0.005, -1.4});
    r.alt_theory = 1.0;
    r.note = "alternate reference value recorded";
    r.library_version = kLibraryVersion;
    return r;
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::ostringstream out;
    std::ostringstream err;
    const int rc = parse_and_dispatch(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}

} // namespace

TEST_CASE("report JSON round-trips every field exactly") {
    const ExperimentReport r = full_report();
    const ExperimentReport back = report_from_json(report_to_json(r));
    CHECK(back.schema == r.schema);
    CHECK(back.experiment == r.experiment);
    CHECK(back.params == r.params);
    CHECK(back.theory == r.theory);
    CHECK(back.estimate == r.estimate);
    CHECK(back.stderror == r.stderror);
    CHECK(back.z == r.z);
    CHECK(back.pass == r.pass);
    CHECK(back.runtime_ms == r.runtime_ms);
    CHECK(back.rng.seed == r.rng.seed);
    CHECK(back.rng.stream_id == r.rng.stream_id);
    CHECK(back.rng.algorithm_tag == r.rng.algorithm_tag);
    CHECK(back.stream_count == r.stream_count);
    REQUIRE(back.rows.size() == r.rows.size());
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        CHECK(back.rows[i].x == r.rows[i].x);
        CHECK(back.rows[i].label == r.rows[i].label);
        CHECK(back.rows[i].theory == r.rows[i].theory);
        CHECK(back.rows[i].estimate == r.rows[i].estimate);
        CHECK(back.rows[i].stderror == r.rows[i].stderror);
        CHECK(back.rows[i].z == r.rows[i].z);
    }
    CHECK(back.has_alt_theory());
    CHECK(back.alt_theory == r.alt_theory);
    CHECK(back.note == r.note);
    CHECK(back.library_version == r.library_version);
}

TEST_CASE("the alternate-reference key is omitted when unset") {
    ExperimentReport r = full_report();
    r.alt_theory = std::numeric_limits<double>::quiet_NaN();
    r.note.clear();
    const std::string text = report_to_json(r);
    CHECK(text.find("alt_theory") == std::string::npos);
    CHECK(text.find("\"note\"") == std::string::npos);
    const ExperimentReport back = report_from_json(text);
    CHECK_FALSE(back.has_alt_theory());
    CHECK(std::isnan(back.alt_theory));
    CHECK(back.note.empty());
}

TEST_CASE("unsupported schema versions are rejected") {
    CHECK_THROWS_AS(report_from_json("{\"schema\": 2}"), DomainError);
}

TEST_CASE("CSV output lists coordinates then statistics") {
    ExperimentReport r;
    r.rows.push_back({{-1.0, -0.5}, "", 0.5, 0.25, 0.125, -2.0});
    r.rows.push_back({{-2.0, -1.5}, "", 0.25, 0.375, 0.0625, 2.0});
    const std::string csv = report_rows_to_csv(r);
    CHECK(csv.rfind("x1,x2,theory,estimate,stderr,z\n", 0) == 0);
    CHECK(csv.find("\n-1,-0.5,0.5,0.25,0.125,-2\n") != std::string::npos);
    // A labeled row inserts a leading label column.
    r.rows.push_back({{}, "acceptance rate", 0.5, 0.4375, 0.03125, -2.0});
    const std::string labeled = report_rows_to_csv(r);
    CHECK(labeled.rfind("label,x1,x2,theory,estimate,stderr,z\n", 0) == 0);
    CHECK(labeled.find("acceptance rate,,,0.5,0.4375,0.03125,-2\n") != std::string::npos);
}

TEST_CASE("report arrays serialize as JSON arrays") {
    const std::string text = reports_to_json({full_report(), full_report()});
    const auto parsed = nlohmann::json::parse(text);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].at("experiment") == "demo");
    CHECK(parsed[1].at("schema") == 1);
}

TEST_CASE("cli evaluates the joint record df") {
    std::string out;
    const int rc = run_cli({"eval", "pair-cdf", "--indices", "1,2", "--x=-1,-0.5"}, &out);
    CHECK(rc == 0);
    CHECK(out.find("0.31092503706024") != std::string::npos);
}

TEST_CASE("cli rejects unordered record indices with a usage error") {
    std::string out;
    std::string err;
    const int rc = run_cli({"simulate", "--experiment", "bruteforce", "--law", "negexp",
                            "--indices", "2,1", "--trials", "100"},
                           &out, &err);
    CHECK(rc == 2);
    CHECK_FALSE(err.empty());
}

TEST_CASE("cli rejects unknown evaluation targets") {
    std::string err;
    const int rc = run_cli({"eval", "no-such-quantity"}, nullptr, &err);
    CHECK(rc == 2);
    CHECK(err.find("no-such-quantity") != std::string::npos);
}

TEST_CASE("cli fast verification suite passes at a fixed seed") {
    std::string out;
    const int rc = run_cli({"verify", "--suite", "fast", "--seed", "42"}, &out);
    CHECK(rc == 0);
    CHECK(out.find("VERIFY PASS") != std::string::npos);
}

TEST_CASE("cli convergence study is exact at sample size one") {
    std::string out;
    const int rc =
        run_cli({"converge", "--law", "negexp", "--lambdas", "1,2", "--n-list", "1"}, &out);
    CHECK(rc == 0);
    CHECK(out.find("sup_deviation=0") != std::string::npos);
}

TEST_CASE("cli divergence summary includes the quadrature cross-check") {
    std::string out;
    const int rc = run_cli({"kl", "--j", "1", "--k", "2"}, &out);
    CHECK(rc == 0);
    CHECK(out.find("quadrature_check") != std::string::npos);
    CHECK(out.find("0.5") != std::string::npos);
}

TEST_CASE("cli help and missing subcommands use the usual exit codes") {
    CHECK(run_cli({"--help"}) == 0);
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"definitely-not-a-subcommand"}) == 2);
}

TEST_CASE("cli writes structured output to a file on request") {
    const std::string path = "/tmp/recjoint_cli_test_out.json";
    std::remove(path.c_str());
    std::string out;
    const int rc = run_cli({"eval", "moments", "--law-family", "limit", "--lambdas",
                            "1,2", "--out", path},
                           &out);
    CHECK(rc == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    CHECK(text.find("expected_sq_gap") != std::string::npos);
    CHECK(nlohmann::json::parse(text).at("expected_sq_gap").get<double>() == 2.0);
    std::remove(path.c_str());
}

TEST_CASE("cli simulate can emit csv rows for a grid") {
    std::string out;
    const int rc = run_cli({"simulate", "--experiment", "chain", "--lambdas", "1,2",
                            "--trials", "4000", "--seed", "3", "--grid",
                            "-1,-0.5;-2,-1", "--format", "csv"},
                           &out);
    CHECK(rc == 0);
    CHECK(out.rfind("x1,x2,theory,estimate,stderr,z", 0) == 0);
}
