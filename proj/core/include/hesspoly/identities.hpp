#pragma once

#include <functional>

#include "hesspoly/ratfunc.hpp"
#include "hesspoly/report.hpp"

namespace hesspoly {
namespace identities {

enum class Strategy { Expand, ExpandAfterPullback, RatFuncEq, Procedural };

inline const char* strategy_str(Strategy s) {
    switch (s) {
        case Strategy::Expand: return "expand";
        case Strategy::ExpandAfterPullback: return "expand-after-pullback";
        case Strategy::RatFuncEq: return "ratfunc";
        default: return "procedural";
    }
}

struct PolyPair {
    std::string label;
    MPoly lhs, rhs;
};

struct RatPair {
    std::string label;
    RatFunc lhs, rhs;
};

struct IdentityEntry {
    std::string id;
    std::string anchor;
    std::string description;
    Strategy strategy = Strategy::Expand;
    bool report_only = false;
    std::function<std::vector<PolyPair>()> poly_pairs;  // Expand / ExpandAfterPullback
    std::function<std::vector<RatPair>()> rat_pairs;    // RatFuncEq
    std::function<CheckResult(const RunConfig&)> procedural;

    std::string family() const { return id.substr(0, id.find('-')); }
};

/// The full catalog, in report order (IG, BU, W, KL, CW, GM, EL, QS, JI).
const std::vector<IdentityEntry>& catalog();

const IdentityEntry* find(const std::string& id);

/// Expand LHS - RHS to canonical form (cross-multiplied for rational
/// functions); pass iff identically zero.
CheckResult verify_expand(const IdentityEntry& e, const RunConfig& cfg);

/// Evaluate LHS - RHS at k random rational points with numerators and
/// denominators bounded by 10^4, avoiding denominator zero sets.  Procedural
/// entries are reported skipped.
CheckResult verify_random(const IdentityEntry& e, int k, uint64_t seed);

/// Run every entry whose family equals `filter` ("all" for everything);
/// results ordered by catalog position.
std::vector<CheckResult> run_catalog(const std::string& filter, const RunConfig& cfg);

}  // namespace identities
}  // namespace hesspoly
