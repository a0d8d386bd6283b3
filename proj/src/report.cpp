#include "pdm/report.hpp"

#include <cmath>

namespace pdm {

std::size_t VerificationReport::passed() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (c.pass) ++n;
    return n;
}

nlohmann::ordered_json to_json(const CheckRecord& record) {
    nlohmann::ordered_json j;
    j["check"] = record.check;
    j["entry"] = record.entry;
    j["tolerance"] = record.tolerance;
    // non-finite measurements are not representable in JSON
    if (std::isfinite(record.measured)) j["measured"] = record.measured;
    else j["measured"] = nullptr;
    j["pass"] = record.pass;
    j["notes"] = record.notes;
    return j;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["config"] = config;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) arr.push_back(pdm::to_json(c));
    j["checks"] = arr;
    j["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
    return j;
}

} // namespace pdm
