#include <doctest.h>

#include <hesspoly/forms.hpp>
#include <hesspoly/identities.hpp>
#include <hesspoly/rng.hpp>

using namespace hesspoly;
using namespace hesspoly::identities;

TEST_CASE("catalog families are complete") {
    RunConfig cfg;
    auto ig = run_catalog("IG", cfg);
    CHECK(ig.size() == 7);
    for (const auto& r : ig) CHECK(r.status == Status::Pass);
    CHECK(run_catalog("nosuch", cfg).empty());
}

TEST_CASE("hand-anchored spot value of BU-1") {
    // Phi^3 - 64 Psi^3 = 450241 = (-671)^2 at (Y0, Y1) = (1, 2)
    const auto* e = find("BU-1");
    REQUIRE(e != nullptr);
    auto pairs = e->poly_pairs();
    REQUIRE(pairs.size() == 1);
    std::vector<Cyclo> pt = {Cyclo(1), Cyclo(2), Cyclo(0), Cyclo(0), Cyclo(0)};
    CHECK(pairs[0].lhs.eval(pt).rational_value() == 450241);
    CHECK(pairs[0].rhs.eval(pt).rational_value() == Rational(-671) * Rational(-671));
}

TEST_CASE("W-3 difference collapses to the zero polynomial") {
    const auto* e = find("W-3");
    REQUIRE(e != nullptr);
    auto pairs = e->poly_pairs();
    CHECK((pairs[0].lhs - pairs[0].rhs).is_zero());
}

TEST_CASE("random evaluation agrees with expansion across seeds") {
    RunConfig cfg;
    for (const char* id : {"IG-1", "W-7", "KL-3", "BU-3", "GM-5"}) {
        const auto* e = find(id);
        REQUIRE(e != nullptr);
        auto expanded = verify_expand(*e, cfg);
        for (uint64_t seed : {1u, 2u, 3u}) {
            auto random = verify_random(*e, 5, seed);
            CHECK(random.status == expanded.status);
        }
    }
}

TEST_CASE("a corrupted coefficient is detected") {
    // IG-1 with the leading coefficient 4 changed to 5:
    // 5 G^3 + H^2 G - C6 G - 4 C9 is no longer identically zero
    const MPoly& G = forms::build("G");
    const MPoly& H = forms::build("H");
    MPoly corrupted = G.pow(3).scaled(rat(5)) + H.pow(2) * G - forms::build("C6") * G -
                      forms::build("C9").scaled(rat(4));
    CHECK(!corrupted.is_zero());
    // and the randomized checker sees it with a witnessing point
    Rng rng(99);
    bool caught = false;
    std::vector<Cyclo> witness;
    for (int i = 0; i < 10 && !caught; ++i) {
        std::vector<Cyclo> pt;
        for (int v = 0; v < 3; ++v) pt.push_back(Cyclo(rng.next_rational(100, 10)));
        if (!corrupted.eval(pt).is_zero()) {
            caught = true;
            witness = pt;
        }
    }
    CHECK(caught);
    CHECK(witness.size() == 3);
}

TEST_CASE("expand-after-pullback is needed exactly for W-11") {
    RunConfig cfg;
    for (const auto& e : catalog()) {
        if (e.strategy != Strategy::Expand || !e.poly_pairs) continue;
        // every expand entry holds at the independent-variable level; checked
        // by the catalog run elsewhere.  Here confirm W-11 genuinely fails
        // without the pullback.
        if (e.id != "W-11") continue;
    }
    const auto* w11 = find("W-11");
    REQUIRE(w11 != nullptr);
    CHECK(w11->strategy == Strategy::ExpandAfterPullback);
    auto pairs = w11->poly_pairs();
    CHECK(!(pairs[0].lhs - pairs[0].rhs).is_zero());  // fails in independent w6
}

TEST_CASE("procedural entries are skipped by the random checker") {
    const auto* e = find("EL-1");
    REQUIRE(e != nullptr);
    CHECK(verify_random(*e, 3, 1).status == Status::Skipped);
}

TEST_CASE("report-only flags") {
    const auto* bu5 = find("BU-5");
    REQUIRE(bu5 != nullptr);
    CHECK(bu5->report_only);
    const auto* qs4 = find("QS-4");
    REQUIRE(qs4 != nullptr);
    CHECK(qs4->report_only);
    for (int i = 1; i <= 5; ++i) {
        const auto* ji = find("JI-" + std::to_string(i));
        REQUIRE(ji != nullptr);
        CHECK(ji->report_only);
    }
}
