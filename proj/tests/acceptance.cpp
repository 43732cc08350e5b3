// Acceptance suite: one line per criterion, exit 0 iff all pass.
//
// Each criterion prints its sub-checks; tolerances and expected values are
// pinned here in code.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hesspoly/elliptic.hpp"
#include "hesspoly/forms.hpp"
#include "hesspoly/groups.hpp"
#include "hesspoly/identities.hpp"
#include "hesspoly/lines27.hpp"
#include "hesspoly/qseries.hpp"
#include "hesspoly/rng.hpp"

using namespace hesspoly;

namespace {

struct Criterion {
    int number;
    bool pass = true;
    std::ostringstream notes;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes << "    FAILED: " << what << "\n";
        }
    }
    void note(const std::string& s) { notes << "    " << s << "\n"; }
};

int64_t ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

// --------------------------------------------------------------------------
// 1. identity suite
// --------------------------------------------------------------------------
Criterion criterion1() {
    Criterion c{1};
    RunConfig cfg;
    auto t0 = std::chrono::steady_clock::now();
    for (const char* fam : {"IG", "BU", "W", "KL", "CW", "GM"}) {
        for (const auto& r : identities::run_catalog(fam, cfg)) {
            if (r.id == "BU-5") continue;  // report-only, excluded by the gate
            c.check(r.status == Status::Pass, r.id + " verify_expand (" + r.witness + ")");
            if (r.id == "W-7" || r.id == "W-8" || r.id == "W-9")
                c.check(r.elapsed_ms < 180000, r.id + " under 3 minutes");
        }
    }
    int64_t total = ms_since(t0);
    c.note("family runtime " + std::to_string(total) + " ms");
    c.check(total < 600000, "full family runtime under 10 minutes");

    // hand-anchored spot values
    const auto* bu1 = identities::find("BU-1");
    auto pairs = bu1->poly_pairs();
    std::vector<Cyclo> pt12 = {Cyclo(1), Cyclo(2), Cyclo(0), Cyclo(0), Cyclo(0)};
    c.check(pairs[0].lhs.eval(pt12).rational_value() == 450241,
            "BU-1 at (1,2) equals 450241");
    c.check(pairs[0].rhs.eval(pt12).rational_value() == Rational(-671) * Rational(-671),
            "t(1,2) = -671 squared");
    const auto* w3 = identities::find("W-3");
    auto w3p = w3->poly_pairs();
    c.check((w3p[0].lhs - w3p[0].rhs).is_zero(), "W-3 difference is the zero polynomial");
    std::vector<Cyclo> pt = {Cyclo(1), Cyclo(2), Cyclo(3)};
    c.check(forms::build("C9").eval(pt).rational_value() == 3458, "C9(1,2,3) = 3458");
    return c;
}

// --------------------------------------------------------------------------
// 2. lines
// --------------------------------------------------------------------------
Criterion criterion2() {
    Criterion c{2};
    const auto& m = lines27::Model::instance();  // construction validates on S
    c.check(m.lines().size() == 27, "exactly 27 lines");
    bool regular = true;
    for (int i = 0; i < 27; ++i) regular = regular && m.degree(i) == 10;
    c.check(regular, "incidence graph 10-regular");
    c.check(m.edge_count() == 135, "135 edges");

    auto canon = [](std::vector<Cyclo> p) {
        for (const auto& v : p)
            if (!v.is_zero()) {
                Cyclo inv = v.inverse();
                for (auto& x : p) x = x * inv;
                break;
            }
        return p;
    };
    auto p14 = m.meet(m.index_of("l1"), m.index_of("l4"));
    std::vector<Cyclo> want14 = {Cyclo(0), Cyclo(0), Cyclo(0), Cyclo(0), Cyclo(1), Cyclo(-1)};
    c.check(p14.has_value() && *p14 == canon(want14), "meet(l1, l4) = (0,0,0,0,1,-1)");
    c.check(!m.meet(m.index_of("l1"), m.index_of("l5")).has_value(), "l1, l5 disjoint");
    auto p1112 = m.meet(m.index_of("l_{1,1}"), m.index_of("l_{1,2}"));
    Cyclo w = Cyclo::omega();
    std::vector<Cyclo> want1112 = {Cyclo(-2) * w, w, w, Cyclo(-2), Cyclo(1), Cyclo(1)};
    c.check(p1112.has_value() && *p1112 == canon(want1112),
            "l_{1,1} ^ l_{1,2} = (-2w, w, w, -2, 1, 1) projectively");

    c.check(m.double_sixes().size() == 36, "exactly 36 double sixes");

    auto s = m.schlafli();
    struct Expect {
        int i, j;
        const char* label;
    };
    const Expect table[] = {{1, 2, "l1"},      {1, 3, "l9"}, {1, 4, "l_{0,5}"},
                            {1, 5, "l_{0,4}"}, {1, 6, "l5"}, {2, 3, "l_{0,6}"},
                            {2, 4, "l6"},      {2, 5, "l8"}, {2, 6, "l_{0,3}"},
                            {3, 4, "l2"},      {3, 5, "l4"}, {3, 6, "l_{0,2}"},
                            {4, 5, "l_{0,1}"}, {4, 6, "l7"}, {5, 6, "l3"}};
    for (const auto& e : table)
        c.check(m.lines()[s.c[e.i][e.j]].label == e.label,
                std::string("Schlafli c") + std::to_string(e.i) + std::to_string(e.j) + " = " +
                    e.label);

    static const char* kTables[4][27] = {
        {"l1", "l4", "l7", "l3", "l6", "l9", "l2", "l5", "l8",
         "l_{0,2}", "l_{0,1}", "l_{0,5}", "l_{0,3}", "l_{0,6}", "l_{0,4}",
         "l_{2,2}", "l_{2,1}", "l_{2,5}", "l_{2,3}", "l_{2,6}", "l_{2,4}",
         "l_{1,2}", "l_{1,1}", "l_{1,5}", "l_{1,3}", "l_{1,6}", "l_{1,4}"},
        {"l7", "l8", "l9", "l1", "l2", "l3", "l4", "l5", "l6",
         "l_{0,4}", "l_{0,6}", "l_{0,2}", "l_{0,5}", "l_{0,1}", "l_{0,3}",
         "l_{1,4}", "l_{1,6}", "l_{1,2}", "l_{1,5}", "l_{1,1}", "l_{1,3}",
         "l_{2,4}", "l_{2,6}", "l_{2,2}", "l_{2,5}", "l_{2,1}", "l_{2,3}"},
        {"l1", "l3", "l2", "l7", "l9", "l8", "l4", "l6", "l5",
         "l_{0,1}", "l_{0,2}", "l_{0,6}", "l_{0,5}", "l_{0,4}", "l_{0,3}",
         "l_{1,1}", "l_{1,2}", "l_{1,6}", "l_{1,5}", "l_{1,4}", "l_{1,3}",
         "l_{2,1}", "l_{2,2}", "l_{2,6}", "l_{2,5}", "l_{2,4}", "l_{2,3}"},
        {"l2", "l3", "l1", "l5", "l6", "l4", "l8", "l9", "l7",
         "l_{0,4}", "l_{0,3}", "l_{0,6}", "l_{0,5}", "l_{0,1}", "l_{0,2}",
         "l_{1,4}", "l_{1,3}", "l_{1,6}", "l_{1,5}", "l_{1,1}", "l_{1,2}",
         "l_{2,4}", "l_{2,3}", "l_{2,6}", "l_{2,5}", "l_{2,1}", "l_{2,2}"}};
    const char gens[4] = {'E', 'A', 'B', 'C'};
    for (int gi = 0; gi < 4; ++gi) {
        auto perm = m.induced_permutation(gens[gi]);
        bool all = true;
        for (int i = 0; i < 27; ++i) all = all && m.lines()[perm[i]].label == kTables[gi][i];
        c.check(all, std::string("all 27 ") + gens[gi] + "-table rows match");
    }

    auto sc = m.conjugation_permutation();
    int fixed = 0;
    for (int i = 0; i < 27; ++i)
        if (sc[i] == i) ++fixed;
    c.check(fixed == 15, "sigma_c fixes exactly 15 lines");
    bool ab = true;
    for (int i = 0; i < 6; ++i) ab = ab && sc[s.a[i]] == s.b[i];
    c.check(ab, "sigma_c maps the a-row of N to the b-row");
    return c;
}

// --------------------------------------------------------------------------
// 3. groups
// --------------------------------------------------------------------------
Criterion criterion3() {
    Criterion c{3};
    using namespace groups;
    c.check(closure(gen_set("hessian216"), ClosureMode::Projective).order() == 216,
            "projective order of <A,B,C,D,E> is 216");

    const auto& m = lines27::Model::instance();
    std::vector<std::vector<int>> perms;
    for (char g : {'A', 'B', 'C', 'E'}) {
        auto p = m.induced_permutation(g);
        c.check(m.is_graph_automorphism(p),
                std::string("rho(") + g + ") is an incidence-graph automorphism");
        perms.push_back(p);
    }
    size_t perm_order = m.perm_group_order(perms);
    // As stated the gate pins 72, the order claimed in the source text.  The
    // faithful permutation image is 36: E^2 = -B forces rho(E)^2 = rho(B) on
    // lines (the text's own tables confirm it), so the stated value cannot
    // hold for the 27-line action; 72 is the order of the induced 6x6 matrix
    // group (checked below), and of the permutation group once sigma_c is
    // adjoined.
    c.check(perm_order == 72, "line-permutation group order 72 as stated (computed " +
                                  std::to_string(perm_order) + ")");
    {
        auto with_sc = perms;
        with_sc.push_back(m.conjugation_permutation());
        c.note("computed <rho(A),rho(B),rho(C),rho(E)> = " + std::to_string(perm_order) +
               ", with sigma_c adjoined = " + std::to_string(m.perm_group_order(with_sc)));
    }

    c.check(m.aut_order() == 51840, "full automorphism group order 51840");

    auto g4 = closure(gen_set("g4"), ClosureMode::Matrix);
    size_t z = center_order(g4, gen_set("g4"));
    c.check(g4.order() == 2592, "matrix order of G4 is 2592");
    c.check(z == 12, "center order 12");
    c.check(g4.order() / z == 216, "quotient order 216");

    for (const char* name : {"burkhardt", "maschke", "induced6", "hessian216"})
        for (const auto& r : verify_matrix_relations(name))
            c.check(r.pass, std::string(name) + ": " + r.name);

    auto ind = closure(gen_set("induced6"), ClosureMode::Matrix);
    c.check(ind.order() == 72, "induced 6x6 closure has 72 elements");
    c.check(gen_set("induced6").gen("E").det() == Cyclo(-1), "det of the induced E is -1");
    bool integral = true;
    for (const auto& row : integrality_report(ind))
        integral = integral && row.det_integer && row.trace_integer;
    c.check(integral, "all 72 induced elements have integer determinant and trace");
    return c;
}

// --------------------------------------------------------------------------
// 4. elliptic
// --------------------------------------------------------------------------
Criterion criterion4() {
    Criterion c{4};
    auto t3 = elliptic::three_torsion_P2();
    c.check(t3.pass, "[3]P2 = O and [2]P2 = -P2 (" + t3.detail + ")");
    auto dbl = elliptic::doubling_identity_z();
    c.check(dbl.pass, "[2]P matches the displayed pair");
    auto disc = elliptic::discriminant_E2t();
    c.check(disc.pass, "disc(E_{2,t}) exact");
    c.check(elliptic::j_of_E_z().pass, "j(E) = -C12^3/FC12^3");
    c.check(elliptic::j_of_E2t().pass, "j(E_{2,t}) = 27 t^3 (t^3+8)^3/(t^3-1)^3");
    c.check(elliptic::hauptmodul_check().pass, "Hauptmodul composition identity");
    c.check(elliptic::j_correspondence_check().pass, "j1(1/r) = j2(r) correspondence");
    auto kod = elliptic::kodaira_E2t();
    c.check(kod.pass, "Kodaira I3 at t = 1, w, w^2, infinity (" + kod.detail + ")");
    c.check(elliptic::deuring_invariants().pass, "Deuring j identity in alpha");
    c.check(elliptic::hessian_sections().pass, "nine sections of H_mu");
    c.check(elliptic::isogeny_divisibility().pass, "3-isogeny divisibility");
    c.check(elliptic::point_5_14_on_E().pass, "Eq. 5.14 point on E");

    auto ln = elliptic::lutz_nagell_at(1, 2, 3);
    c.check(ln.not_torsion, "Lutz-Nagell at (1,2,3) certifies not-torsion");
    c.check(ln.mazur_not_torsion, "Mazur sweep agrees at (1,2,3)");
    Rng rng(0x5eed);
    int extra = 0, tried = 0;
    while (extra < 4 && tried < 500) {
        ++tried;
        long a = rng.next_in(-9, 9), b = rng.next_in(-9, 9), d = rng.next_in(-9, 9);
        std::vector<Cyclo> pt = {Cyclo(a), Cyclo(b), Cyclo(d)};
        Rational A = forms::build("C12").eval(pt).rational_value() * -27;
        Rational B = forms::build("C18").eval(pt).rational_value() * 54;
        if (A * A * A * 4 + B * B * 27 == 0) continue;
        if (forms::build("C9").eval(pt).rational_value() == 0) continue;
        auto r = elliptic::lutz_nagell_at(a, b, d);
        c.check(r.not_torsion && r.mazur_not_torsion,
                "random triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(d) + ") certifies not-torsion");
        ++extra;
    }
    c.check(extra == 4, "found 4 random certifying triples");
    return c;
}

// --------------------------------------------------------------------------
// 5. q-series
// --------------------------------------------------------------------------
Criterion criterion5() {
    Criterion c{5};
    auto t0 = std::chrono::steady_clock::now();
    c.check(qseries::verify_theta_eisenstein(21).pass,
            "Eq. 3.2 holds coefficientwise through q^20");
    c.check(qseries::delta_two_routes(31).pass, "Delta product vs Eisenstein through q^30");
    c.check(qseries::picard_fuchs_residual(12).pass, "Picard-Fuchs residual vanishes at N=12");
    int64_t total = ms_since(t0);
    c.note("q-series runtime " + std::to_string(total) + " ms");
    c.check(total < 60000, "q-series runtime under 60 seconds");
    return c;
}

// --------------------------------------------------------------------------
// 6. oracle concordance
// --------------------------------------------------------------------------
Criterion criterion6() {
    Criterion c{6};
    RunConfig cfg;
    for (const auto& e : identities::catalog()) {
        if (e.strategy == identities::Strategy::Procedural) continue;
        auto expanded = identities::verify_expand(e, cfg);
        for (uint64_t seed : {11u, 22u, 33u}) {
            auto rnd = identities::verify_random(e, 10, seed);
            c.check(rnd.status == expanded.status,
                    e.id + " random(k=10, seed=" + std::to_string(seed) +
                        ") agrees with expand");
        }
    }
    // ten random single-coefficient mutations, each must be detected
    Rng rng(0xbadc0de);
    std::vector<const identities::IdentityEntry*> expandable;
    for (const auto& e : identities::catalog())
        if (e.strategy == identities::Strategy::Expand && e.poly_pairs) expandable.push_back(&e);
    for (int trial = 0; trial < 10; ++trial) {
        const auto* e = expandable[rng.next_in(0, expandable.size() - 1)];
        auto pairs = e->poly_pairs();
        auto& pair = pairs[rng.next_in(0, pairs.size() - 1)];
        // perturb one stored coefficient of the left side by +1 (the
        // perturbed monomial is the constant term when the side expands to
        // the zero polynomial)
        MPoly bump(pair.lhs.space(), pair.lhs.conductor());
        if (pair.lhs.is_zero()) {
            bump.set_term(Monomial{}, Cyclo(1));
        } else {
            long idx = rng.next_in(0, pair.lhs.term_count() - 1);
            auto it = pair.lhs.terms().begin();
            std::advance(it, idx);
            bump.set_term(it->first, Cyclo(1));
        }
        MPoly mutated = pair.lhs + bump;
        bool detected = !(mutated - pair.rhs).is_zero();
        c.check(detected, e->id + " mutation #" + std::to_string(trial) + " detected");
    }
    return c;
}

// --------------------------------------------------------------------------
// 7. determinism
// --------------------------------------------------------------------------
Criterion criterion7() {
    Criterion c{7};
    RunConfig cfg;
    cfg.no_timing = true;
    cfg.seed = 777;
    Report a, b;
    a.config = cfg;
    b.config = cfg;
    a.results = identities::run_catalog("IG", cfg);
    b.results = identities::run_catalog("IG", cfg);
    c.check(report_json(a) == report_json(b), "library-level JSON byte-identical");

#ifdef HESSPOLY_CLI_PATH
    auto run_cli = [&](const std::string& out) {
        std::string cmd = std::string(HESSPOLY_CLI_PATH) +
                          " --no-timing --seed 777 --json " + out +
                          " verify --catalog IG > /dev/null 2>&1";
        return std::system(cmd.c_str());
    };
    int r1 = run_cli("/tmp/hesspoly_det_1.json");
    int r2 = run_cli("/tmp/hesspoly_det_2.json");
    c.check(r1 == 0 && r2 == 0, "CLI runs exit 0");
    std::ifstream f1("/tmp/hesspoly_det_1.json"), f2("/tmp/hesspoly_det_2.json");
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    c.check(!s1.str().empty() && s1.str() == s2.str(),
            "repeated CLI runs produce byte-identical JSON");
#endif
    return c;
}

}  // namespace

int main() {
    const char* names[7] = {
        "identity suite (IG, BU, W, KL, CW, GM + spot values)",
        "27 lines (incidence, meets, double sixes, Schlafli, action tables, sigma_c)",
        "groups (orders, relations, integrality)",
        "elliptic battery",
        "q-series",
        "oracle concordance and mutation sensitivity",
        "determinism"};
    Criterion (*runners[7])() = {criterion1, criterion2, criterion3, criterion4,
                                 criterion5, criterion6, criterion7};
    bool all = true;
    for (int i = 0; i < 7; ++i) {
        Criterion c = runners[i]();
        std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": "
                  << names[i] << "\n";
        std::cout << c.notes.str();
        all = all && c.pass;
    }
    std::cout << (all ? "ACCEPTANCE: all criteria pass\n"
                      : "ACCEPTANCE: at least one criterion failed\n");
    return all ? 0 : 1;
}
