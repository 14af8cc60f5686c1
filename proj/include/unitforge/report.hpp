#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

#include "unitforge/units.hpp"

namespace unitforge {

/// Envelope for one CLI run. The JSON form is deterministic for fixed inputs
/// and seed; wall-clock duration appears only in the human-readable output.
struct RunReport {
    std::string command;
    std::uint64_t seed = 0;
    bool seed_used = false;
    long checked = 0;
    long passed = 0;
    long failed = 0;
    nlohmann::json failures = nlohmann::json::array();
    nlohmann::json payload;  // command-specific fields, merged at top level

    void count(bool ok) {
        ++checked;
        ++(ok ? passed : failed);
    }

    void absorb(const SweepReport& sweep) {
        checked += sweep.checked;
        failed += static_cast<long>(sweep.failures.size());
        passed += sweep.checked - static_cast<long>(sweep.failures.size());
        for (const CheckReport& f : sweep.failures) {
            failures.push_back({{"params", f.params},
                                {"lhs", f.lhs},
                                {"rhs", f.rhs},
                                {"difference", f.difference}});
        }
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["schema"] = "1";
        j["command"] = command;
        if (seed_used) j["seed"] = seed;
        j["checked"] = checked;
        j["passed"] = passed;
        j["failed"] = failed;
        j["failures"] = failures;
        if (!payload.is_null())
            for (auto& [k, v] : payload.items()) j[k] = v;
        return j;
    }

    int exit_code() const { return failed == 0 ? 0 : 1; }
};

}  // namespace unitforge
