#pragma once

// Result of one exact identity check.

#include <chrono>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

namespace astlab {

inline constexpr const char* kVerdictSchema = "astlab.verdict/1";

struct VerdictRecord {
    std::string identity;
    nlohmann::json params = nlohmann::json::object();
    std::string left;
    std::string right;
    bool pass = false;
    bool experimental = false;
    double elapsed_ms = 0;
};

inline VerdictRecord make_verdict(std::string identity, nlohmann::json params, std::string left, std::string right) {
    VerdictRecord v{std::move(identity), std::move(params), std::move(left), std::move(right)};
    v.pass = v.left == v.right;
    return v;
}

/// Runs `check` and records its wall time in the returned record.
template <class F>
VerdictRecord timed(F&& check) {
    const auto start = std::chrono::steady_clock::now();
    VerdictRecord v = check();
    v.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return v;
}

/// Elapsed time is left out unless asked for, so that repeated runs
/// serialise identically.
inline nlohmann::json to_json(const VerdictRecord& v, bool with_time = false) {
    nlohmann::json j{{"schema", kVerdictSchema}, {"identity", v.identity}, {"params", v.params},
                     {"left", v.left},           {"right", v.right},       {"pass", v.pass},
                     {"experimental", v.experimental}};
    if (with_time) j["elapsed_ms"] = v.elapsed_ms;
    return j;
}

}  // namespace astlab
