#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hesspoly {

enum class Status { Pass, Fail, Skipped };

inline const char* status_str(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "skipped";
    }
}

struct CheckResult {
    std::string id;
    std::string family;
    Status status = Status::Skipped;
    std::string strategy;
    std::string anchor;
    std::string witness;  // empty when none
    int64_t elapsed_ms = 0;
    bool report_only = false;
};

struct RunConfig {
    uint64_t seed = 20260810;
    size_t term_cap = 5'000'000;
    int qseries_order = 20;
    int random_count = 0;  // 0: expand strategy; >0: randomized evaluation with k points
    bool strict = false;   // promote report-only families to hard failures
    bool no_timing = false;
};

struct Summary {
    int pass = 0;
    int fail = 0;
    int skipped = 0;
    int report_only_fail = 0;
};

struct Report {
    std::string schema_version = "1";
    std::string tool = "hesspoly";
    RunConfig config;
    std::vector<CheckResult> results;

    Summary summary() const;
};

/// Deterministic JSON rendering; elapsed fields are zeroed when
/// config.no_timing is set.
std::string report_json(const Report& r);

/// 0 when nothing failed hard, 1 otherwise.  Report-only failures count only
/// under strict.
int report_exit_code(const Report& r);

}  // namespace hesspoly
