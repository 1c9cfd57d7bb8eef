#include "xtransform/report.hpp"

#include <fstream>

#include <json.hpp>

#include "xtransform/errors.hpp"

namespace xtransform {

std::string report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["schema"] = 1;
    j["name"] = report.name;
    j["params"] = report.params;
    j["samples"] = report.samples;
    j["worst_slack_or_defect"] = report.worst;
    j["tolerance"] = report.tolerance;
    j["pass"] = report.pass;
    if (!report.details_path.empty()) j["details_path"] = report.details_path;
    return j.dump(2) + "\n";
}

void write_report(const VerificationReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open report output file: " + path);
    out << report_to_json(report);
}

} // namespace xtransform
