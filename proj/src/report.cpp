#include "recjoint/report.hpp"

#include <sstream>

#include <json.hpp>

#include "recjoint/errors.hpp"

namespace recjoint {
namespace {

using nlohmann::ordered_json;

ordered_json row_to_json(const ReportRow& row) {
    ordered_json j;
    j["x"] = row.x;
    if (!row.label.empty()) {
        j["label"] = row.label;
    }
    j["theory"] = row.theory;
    j["estimate"] = row.estimate;
    j["stderr"] = row.stderror;
    j["z"] = row.z;
    return j;
}

ReportRow row_from_json(const ordered_json& j) {
    ReportRow row;
    row.x = j.at("x").get<std::vector<double>>();
    if (j.contains("label")) {
        row.label = j.at("label").get<std::string>();
    }
    row.theory = j.at("theory").get<double>();
    row.estimate = j.at("estimate").get<double>();
    row.stderror = j.at("stderr").get<double>();
    row.z = j.at("z").get<double>();
    return row;
}

ordered_json report_to_json_obj(const ExperimentReport& r) {
    ordered_json j;
    j["schema"] = r.schema;
    j["experiment"] = r.experiment;
    j["params"] = r.params;
    j["theory"] = r.theory;
    j["estimate"] = r.estimate;
    j["stderr"] = r.stderror;
    j["z"] = r.z;
    j["pass"] = r.pass;
    j["runtime_ms"] = r.runtime_ms;
    j["rng"] = {{"seed", r.rng.seed},
                {"stream_id", r.rng.stream_id},
                {"algorithm_tag", r.rng.algorithm_tag}};
    j["stream_count"] = r.stream_count;
    ordered_json rows = ordered_json::array();
    for (const ReportRow& row : r.rows) {
        rows.push_back(row_to_json(row));
    }
    j["rows"] = rows;
    if (r.has_alt_theory()) {
        j["alt_theory"] = r.alt_theory;
    }
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    j["library_version"] = r.library_version.empty() ? kLibraryVersion : r.library_version;
    return j;
}

ExperimentReport report_from_json_obj(const ordered_json& j) {
    ExperimentReport r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != 1) {
        throw DomainError("report_from_json: unsupported schema " +
                          std::to_string(r.schema));
    }
    r.experiment = j.at("experiment").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    r.theory = j.at("theory").get<double>();
    r.estimate = j.at("estimate").get<double>();
    r.stderror = j.at("stderr").get<double>();
    r.z = j.at("z").get<double>();
    r.pass = j.at("pass").get<bool>();
    r.runtime_ms = j.at("runtime_ms").get<long>();
    const ordered_json& rng = j.at("rng");
    r.rng.seed = rng.at("seed").get<std::uint64_t>();
    r.rng.stream_id = rng.at("stream_id").get<std::uint64_t>();
    r.rng.algorithm_tag = rng.at("algorithm_tag").get<std::string>();
    r.stream_count = j.at("stream_count").get<std::uint64_t>();
    for (const ordered_json& row : j.at("rows")) {
        r.rows.push_back(row_from_json(row));
    }
    if (j.contains("alt_theory")) {
        r.alt_theory = j.at("alt_theory").get<double>();
    }
    if (j.contains("note")) {
        r.note = j.at("note").get<std::string>();
    }
    r.library_version = j.at("library_version").get<std::string>();
    return r;
}

} // namespace

const char* const kLibraryVersion = "1.0.0";

std::string report_to_json(const ExperimentReport& report) {
    return report_to_json_obj(report).dump(2);
}

ExperimentReport report_from_json(const std::string& text) {
    return report_from_json_obj(ordered_json::parse(text));
}

std::string report_rows_to_csv(const ExperimentReport& report) {
    std::size_t dims = 0;
    bool labeled = false;
    for (const ReportRow& row : report.rows) {
        dims = std::max(dims, row.x.size());
        labeled = labeled || !row.label.empty();
    }
    std::ostringstream out;
    out.precision(17);
    if (labeled) {
        out << "label,";
    }
    for (std::size_t i = 1; i <= dims; ++i) {
        out << "x" << i << ",";
    }
    out << "theory,estimate,stderr,z\n";
    for (const ReportRow& row : report.rows) {
        if (labeled) {
            out << row.label << ",";
        }
        for (std::size_t i = 0; i < dims; ++i) {
            if (i < row.x.size()) {
                out << row.x[i];
            }
            out << ",";
        }
        out << row.theory << "," << row.estimate << "," << row.stderror << "," << row.z
            << "\n";
    }
    return out.str();
}

std::string reports_to_json(const std::vector<ExperimentReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const ExperimentReport& r : reports) {
        arr.push_back(report_to_json_obj(r));
    }
    return arr.dump(2);
}

} // namespace recjoint
