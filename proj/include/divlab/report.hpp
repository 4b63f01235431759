#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace divlab {

struct SubCheck {
    std::string name;
    bool passed = false;
    std::string note;
};

/// Machine-checkable record of a reproduced (or failed) structural fact.
/// Serialization is deterministic except for the elapsed-time field.
struct WitnessReport {
    std::string name;
    std::string claim;  // the statement being verified, spelled out
    std::vector<std::string> inputs;
    bool reproduced = false;
    std::vector<SubCheck> details;
    double elapsed_ms = 0.0;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["name"] = name;
        j["claim"] = claim;
        j["inputs"] = inputs;
        j["verdict"] = reproduced ? "reproduced" : "failed";
        auto checks = nlohmann::ordered_json::array();
        for (const auto& c : details)
            checks.push_back({{"check", c.name}, {"passed", c.passed}, {"note", c.note}});
        j["checks"] = checks;
        j["elapsed_ms"] = elapsed_ms;
        return j;
    }
};

}  // namespace divlab
