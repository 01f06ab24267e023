#pragma once

#include <string>
#include <vector>

namespace foxbrack {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness; // first offending input, empty when passing
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool allPass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Accumulates one line per named check; keeps the first failure witness.
class ReportBuilder {
public:
    explicit ReportBuilder(std::string suite) { report_.suite = std::move(suite); }

    void note(const std::string& name, bool pass, const std::string& witness = "") {
        for (auto& c : report_.checks) {
            if (c.name == name) {
                if (!pass && c.pass) {
                    c.pass = false;
                    c.witness = witness;
                }
                return;
            }
        }
        report_.checks.push_back({name, pass, pass ? std::string{} : witness});
    }

    Report take() { return std::move(report_); }

private:
    Report report_;
};

} // namespace foxbrack
