#pragma once

// Scenario runners: each one sweeps a fixed battery of cases through two or
// more independent code paths and records every comparison. The checks carry
// a stable group id so callers can aggregate by concern rather than by case.

#include <string>
#include <utility>
#include <vector>

namespace nz {

struct CheckResult {
    std::string group;
    std::string name;
    bool pass = false;
    std::string detail;  // empty on success
};

struct VerificationReport {
    std::string scenario;
    bool pass = true;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, double>> timings_ms;  // filled only on request

    void add(const std::string& group, const std::string& name, bool ok,
             const std::string& detail = {});
    bool group_pass(const std::string& group) const;
    int group_count(const std::string& group) const;
};

struct VerifyOptions {
    long cap = 200000;
    int stabilization_m = 2;
    long max_scale = 4;
    bool g2_swapped = false;
    bool timings = false;
};

VerificationReport verify_main_theorem(const VerifyOptions& opts = {});
VerificationReport verify_minkowski(const VerifyOptions& opts = {});
VerificationReport verify_reflexive(const VerifyOptions& opts = {});
VerificationReport verify_counterexample(const VerifyOptions& opts = {});
VerificationReport verify_eta_iso(const VerifyOptions& opts = {});
VerificationReport verify_gz(const VerifyOptions& opts = {});
VerificationReport verify_hoshino(const VerifyOptions& opts = {});

const std::vector<std::string>& scenario_names();
VerificationReport run_scenario(const std::string& name, const VerifyOptions& opts = {});

}  // namespace nz
