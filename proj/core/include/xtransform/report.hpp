#pragma once

#include <map>
#include <string>

namespace xtransform {

/// Outcome of a named verification run. `worst` is the most pessimistic
/// slack (signed, for inequality checks) or defect magnitude observed over
/// all samples; the producer sets `pass` accordingly:
///   slack checks:  pass <=> worst >= -tolerance
///   defect checks: pass <=> |worst| <= tolerance
struct VerificationReport {
    std::string name;
    std::map<std::string, std::string> params;
    long long samples = 0;
    double worst = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string details_path; // empty unless a side file was written
};

/// Deterministic JSON rendering (schema 1, keys sorted, round-trip float
/// formatting). Identical reports serialize to identical bytes.
std::string report_to_json(const VerificationReport& report);

void write_report(const VerificationReport& report, const std::string& path);

} // namespace xtransform
