#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "recjoint/rng.hpp"

namespace recjoint {

/// One compared grid point (or named subcheck) inside a report.
struct ReportRow {
    std::vector<double> x; // grid coordinates, possibly empty for subchecks
    std::string label;     // subcheck name when not a grid point
    double theory = 0.0;
    double estimate = 0.0;
    double stderror = 0.0;
    double z = 0.0;
};

/// Outcome of one verification experiment or grid comparison.  The pass
/// verdict is equivalent to |z| <= 3: statistical checks put the largest
/// standardized deviation in z, deterministic checks scale the worst
/// deviation so the stated tolerance maps onto |z| = 3.
struct ExperimentReport {
    int schema = 1;
    std::string experiment;
    std::map<std::string, std::string> params;
    double theory = 0.0;
    double estimate = 0.0;
    double stderror = 0.0;
    double z = 0.0;
    bool pass = false;
    long runtime_ms = 0;
    RngStreamSpec rng;
    std::uint64_t stream_count = 0;
    std::vector<ReportRow> rows;
    double alt_theory = std::numeric_limits<double>::quiet_NaN(); // known-discrepancy value
    std::string note;
    std::string library_version;

    bool has_alt_theory() const { return !std::isnan(alt_theory); }
};

/// Library version string embedded in reports.
extern const char* const kLibraryVersion;

/// JSON serialization (schema 1); round-trips all fields exactly.
std::string report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const std::string& text);

/// CSV of the rows: header x1..xd,theory,estimate,stderr,z (label column
/// inserted when any row is labeled).
std::string report_rows_to_csv(const ExperimentReport& report);

/// Serializes several reports as a JSON array.
std::string reports_to_json(const std::vector<ExperimentReport>& reports);

} // namespace recjoint
