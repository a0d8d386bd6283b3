#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace pdm {

inline constexpr const char* kToolName = "pdmcs";
inline constexpr const char* kToolVersion = "0.1.0";

struct CheckRecord {
    std::string check;
    std::string entry;
    double tolerance = 0.0;
    double measured = 0.0;
    bool pass = false;
    std::vector<std::string> notes;
};

struct VerificationReport {
    nlohmann::ordered_json config;
    std::vector<CheckRecord> checks;

    std::size_t passed() const;
    std::size_t failed() const { return checks.size() - passed(); }
    bool all_pass() const { return failed() == 0; }
    nlohmann::ordered_json to_json() const;
};

nlohmann::ordered_json to_json(const CheckRecord& record);

} // namespace pdm
