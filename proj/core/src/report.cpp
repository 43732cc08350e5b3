#include "hesspoly/report.hpp"

#include <json.hpp>

namespace hesspoly {

Summary Report::summary() const {
    Summary s;
    for (const auto& r : results) {
        switch (r.status) {
            case Status::Pass: ++s.pass; break;
            case Status::Fail:
                if (r.report_only)
                    ++s.report_only_fail;
                else
                    ++s.fail;
                break;
            case Status::Skipped: ++s.skipped; break;
        }
    }
    return s;
}

std::string report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = r.schema_version;
    j["tool"] = r.tool;
    j["seed"] = r.config.seed;
    j["config"] = {{"term_cap", r.config.term_cap},
                   {"qseries_order", r.config.qseries_order},
                   {"random_count", r.config.random_count},
                   {"strict", r.config.strict}};
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& c : r.results) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["family"] = c.family;
        e["status"] = status_str(c.status);
        e["strategy"] = c.strategy;
        e["anchor"] = c.anchor;
        if (!c.witness.empty()) e["witness"] = c.witness;
        e["elapsed_ms"] = r.config.no_timing ? 0 : c.elapsed_ms;
        if (c.report_only) e["report_only"] = true;
        results.push_back(std::move(e));
    }
    j["results"] = std::move(results);
    Summary s = r.summary();
    j["summary"] = {{"pass", s.pass},
                    {"fail", s.fail},
                    {"skipped", s.skipped},
                    {"report_only_fail", s.report_only_fail}};
    return j.dump(2) + "\n";
}

int report_exit_code(const Report& r) {
    Summary s = r.summary();
    if (s.fail > 0) return 1;
    if (r.config.strict && s.report_only_fail > 0) return 1;
    return 0;
}

}  // namespace hesspoly
