#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "hesspoly/elliptic.hpp"
#include "hesspoly/forms.hpp"
#include "hesspoly/groups.hpp"
#include "hesspoly/identities.hpp"
#include "hesspoly/lines27.hpp"
#include "hesspoly/qseries.hpp"
#include "hesspoly/report.hpp"

using namespace hesspoly;
using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    std::string json_path;
    uint64_t seed = 20260810;
    bool strict = false;
    bool no_timing = false;
    size_t term_cap = 5'000'000;
    int order = 20;
};

void emit(const GlobalOpts& g, const std::string& text, const ordered_json& j) {
    std::cout << text;
    if (!g.json_path.empty()) {
        std::ofstream out(g.json_path);
        out << j.dump(2) << "\n";
    }
}

RunConfig config_of(const GlobalOpts& g) {
    RunConfig cfg;
    cfg.seed = g.seed;
    cfg.strict = g.strict;
    cfg.no_timing = g.no_timing;
    cfg.term_cap = g.term_cap;
    cfg.qseries_order = g.order;
    return cfg;
}

int run_verify(const GlobalOpts& g, const std::string& filter, int random_k) {
    RunConfig cfg = config_of(g);
    cfg.random_count = random_k;
    Report rep;
    rep.config = cfg;
    rep.results = identities::run_catalog(filter, cfg);
    std::ostringstream text;
    if (rep.results.empty()) text << "warning: no catalog entries match '" << filter << "'\n";
    for (const auto& r : rep.results) {
        text << r.id << " [" << r.strategy << "] " << status_str(r.status);
        if (r.report_only) text << " (report-only)";
        if (!r.witness.empty()) text << "  " << r.witness;
        text << "\n";
    }
    Summary s = rep.summary();
    text << "pass " << s.pass << ", fail " << s.fail << ", skipped " << s.skipped
         << ", report-only fail " << s.report_only_fail << "\n";
    std::cout << text.str();
    if (!g.json_path.empty()) {
        std::ofstream out(g.json_path);
        out << report_json(rep);
    }
    return report_exit_code(rep);
}

int run_forms_list() {
    for (const auto& d : forms::list()) {
        std::cout << d.name << "  space=" << d.space_id;
        if (d.degree) std::cout << "  degree=" << *d.degree;
        std::cout << "\n";
    }
    return 0;
}

int run_forms_show(const std::string& name) {
    if (!forms::is_registered(name)) {
        std::cerr << "unknown form: " << name << "\n";
        return 2;
    }
    const MPoly& p = forms::build(name);
    std::cout << name << " in " << p.space()->id << " (" << p.term_count() << " terms)\n";
    std::cout << p.str() << "\n";
    return 0;
}

int run_group(const GlobalOpts& g, const std::string& which, const std::string& mode,
              size_t cap, bool deep) {
    const auto& gs = groups::gen_set(which);
    ordered_json j;
    j["group"] = which;
    j["dimension"] = gs.dim;
    j["conductor"] = gs.conductor;
    j["sqrt_minus3_embedding"] = "1 + 2*w";
    std::ostringstream text;
    text << "group " << which << " (dim " << gs.dim << ", conductor " << gs.conductor << ")\n";

    auto relations = groups::verify_matrix_relations(which);
    ordered_json rels = ordered_json::array();
    bool rel_fail = false;
    for (const auto& r : relations) {
        rels.push_back({{"relation", r.name}, {"pass", r.pass}});
        text << "  relation " << r.name << ": " << (r.pass ? "pass" : "FAIL") << "\n";
        rel_fail = rel_fail || !r.pass;
    }
    j["relations"] = rels;

    bool want_matrix = mode == "matrix";
    if (which == "burkhardt" && !deep) {
        text << "  closure skipped (use --deep to enumerate the 25920-element group)\n";
        j["closure"] = "skipped";
    } else {
        auto gc = groups::closure(gs, want_matrix ? groups::ClosureMode::Matrix
                                                  : groups::ClosureMode::Projective,
                                  cap);
        j["mode"] = want_matrix ? "matrix" : "projective";
        j["order"] = gc.order();
        text << "  " << (want_matrix ? "matrix" : "projective") << " order: " << gc.order()
             << "\n";
        if (want_matrix) {
            size_t z = groups::center_order(gc, gs);
            size_t sc = groups::scalar_subgroup_order(gc);
            j["center_order"] = z;
            j["scalar_subgroup_order"] = sc;
            text << "  center order: " << z << ", scalar subgroup: " << sc << "\n";
        }
        if (which == "induced6" && want_matrix) {
            auto rows = groups::integrality_report(gc);
            int non_integer = 0;
            for (const auto& r : rows)
                if (!r.det_integer || !r.trace_integer) ++non_integer;
            j["integrality"] = {{"elements", rows.size()}, {"non_integer", non_integer}};
            text << "  integrality: " << rows.size() << " elements, " << non_integer
                 << " with non-integer det or trace\n";
            ordered_json table = ordered_json::array();
            for (const auto& r : rows)
                table.push_back({{"det", r.det.str()}, {"trace", r.trace.str()}});
            j["integrality_table"] = table;
        }
    }
    emit(g, text.str(), j);
    return rel_fail ? 1 : 0;
}

int run_lines(const GlobalOpts& g) {
    const auto& m = lines27::Model::instance();
    ordered_json j;
    std::ostringstream text;
    ordered_json jl = ordered_json::array();
    for (const auto& l : m.lines()) {
        ordered_json row = ordered_json::array();
        for (int r = 0; r < 2; ++r) {
            ordered_json v = ordered_json::array();
            for (int c = 0; c < 6; ++c) v.push_back(l.basis.at(r, c).str());
            row.push_back(v);
        }
        jl.push_back({{"label", l.label}, {"basis", row}});
    }
    j["lines"] = jl;
    int edges = m.edge_count();
    j["edges"] = edges;
    bool regular = true;
    for (int i = 0; i < 27; ++i) regular = regular && m.degree(i) == 10;
    j["ten_regular"] = regular;
    auto ds = m.double_sixes();
    j["double_six_count"] = ds.size();
    auto s = m.schlafli();
    ordered_json sch;
    for (int i = 1; i <= 6; ++i)
        for (int k = i + 1; k <= 6; ++k)
            sch["c" + std::to_string(i) + std::to_string(k)] = m.lines()[s.c[i][k]].label;
    j["schlafli"] = sch;

    auto cycles = [&](const std::vector<int>& p) {
        std::ostringstream out;
        std::vector<bool> seen(27, false);
        for (int i = 0; i < 27; ++i) {
            if (seen[i] || p[i] == i) continue;
            out << "(";
            int cur = i;
            bool first = true;
            while (!seen[cur]) {
                seen[cur] = true;
                if (!first) out << " ";
                out << m.lines()[cur].label;
                first = false;
                cur = p[cur];
            }
            out << ")";
        }
        std::string r = out.str();
        return r.empty() ? std::string("()") : r;
    };
    ordered_json perms;
    std::vector<std::vector<int>> gens;
    for (char c : {'A', 'B', 'C', 'E'}) {
        auto p = m.induced_permutation(c);
        perms[std::string(1, c)] = cycles(p);
        gens.push_back(p);
    }
    j["generator_permutations"] = perms;
    j["generator_group_order"] = m.perm_group_order(gens);
    auto sc = m.conjugation_permutation();
    int fixed = 0;
    for (int i = 0; i < 27; ++i)
        if (sc[i] == i) ++fixed;
    // sigma_c is a product of six transpositions, an even permutation; its
    // coordinate action is entrywise conjugation (the identity matrix
    // composed with conjugation of scalars), determinant 1.
    j["sigma_c"] = {{"cycles", cycles(sc)},
                    {"fixed_lines", fixed},
                    {"permutation_sign", 1},
                    {"coordinate_action_det", 1}};
    gens.push_back(sc);
    j["group_order_with_sigma_c"] = m.perm_group_order(gens);
    j["aut_order"] = m.aut_order();
    j["vertex_orbits"] = m.aut_orbit_count();

    text << "27 lines, " << edges << " incidences, 10-regular: " << (regular ? "yes" : "NO")
         << "\n"
         << "double sixes: " << ds.size() << "\n"
         << "<rho(A),rho(B),rho(C),rho(E)> order: " << j["generator_group_order"] << "\n"
         << "with sigma_c adjoined: " << j["group_order_with_sigma_c"] << "\n"
         << "Aut(L) order: " << j["aut_order"] << " (vertex orbits: " << j["vertex_orbits"]
         << ")\n";
    emit(g, text.str(), j);
    return 0;
}

int run_curve(const GlobalOpts& g, const std::string& which, const std::string& op,
              const std::string& at) {
    ordered_json j;
    std::ostringstream text;
    j["curve"] = which;
    j["op"] = op;
    auto fail_usage = [&](const std::string& msg) {
        std::cerr << msg << "\n";
        return 2;
    };
    if (which == "E2t") {
        const VariableSpace* sp = space("t1");
        MPoly t = MPoly::var(sp, "t");
        MPoly one = MPoly::constant(sp, rat(1));
        MPoly A = -(t * (t.pow(3) + one.scaled(rat(8)))).scaled(rat(3));
        MPoly B = -(t.pow(6) - t.pow(3).scaled(rat(20)) - one.scaled(rat(8))).scaled(rat(2));
        ShortCurve<RatFunc> E{RatFunc(A), RatFunc(B), RatFunc(one)};
        if (op == "j") {
            j["j"] = E.j().str();
            text << "j = " << E.j().str() << "\n";
        } else if (op == "disc") {
            j["disc"] = E.disc().str();
            text << "disc = " << E.disc().str() << "\n";
        } else if (op.rfind("mul:", 0) == 0) {
            int mm = std::stoi(op.substr(4));
            auto P = E.at(RatFunc(t.pow(2).scaled(rat(3))),
                          RatFunc((t.pow(3) - one).scaled(rat(4))));
            auto Q = E.mul(mm, P);
            if (Q.inf) {
                j["result"] = "infinity";
                text << "[" << mm << "]P2 = O\n";
            } else {
                j["x"] = Q.x.str();
                j["y"] = Q.y.str();
                text << "[" << mm << "]P2 = (" << Q.x.str() << ", " << Q.y.str() << ")\n";
            }
        } else {
            return fail_usage("unsupported op for E2t: " + op);
        }
    } else if (which == "E") {
        if (op == "lutznagell" || op.rfind("mul:", 0) == 0) {
            long z1 = 1, z2 = 2, z3 = 3;
            if (!at.empty()) {
                if (sscanf(at.c_str(), "%ld,%ld,%ld", &z1, &z2, &z3) != 3)
                    return fail_usage("--at expects z1,z2,z3");
            }
            if (op == "lutznagell") {
                auto r = elliptic::lutz_nagell_at(z1, z2, z3);
                j["at"] = {z1, z2, z3};
                j["not_torsion"] = r.not_torsion;
                j["mazur_not_torsion"] = r.mazur_not_torsion;
                j["detail"] = r.detail;
                text << "P = (3 C6, 108 C9) at (" << z1 << "," << z2 << "," << z3
                     << "): " << (r.not_torsion ? "not-torsion" : "torsion-possible") << " ("
                     << r.detail << ")\n";
            } else {
                int mm = std::stoi(op.substr(4));
                std::vector<Cyclo> pt = {Cyclo(z1), Cyclo(z2), Cyclo(z3)};
                Rational A = forms::build("C12").eval(pt).rational_value() * -27;
                Rational B = forms::build("C18").eval(pt).rational_value() * 54;
                ShortCurve<Rational> E{A, B, Rational(1)};
                auto P = E.at(forms::build("C6").eval(pt).rational_value() * 3,
                              forms::build("C9").eval(pt).rational_value() * 108);
                auto Q = E.mul(mm, P);
                if (Q.inf) {
                    j["result"] = "infinity";
                    text << "[" << mm << "]P = O\n";
                } else {
                    j["x"] = Q.x.get_str();
                    j["y"] = Q.y.get_str();
                    text << "[" << mm << "]P = (" << Q.x.get_str() << ", " << Q.y.get_str()
                         << ")\n";
                }
            }
        } else if (op == "j") {
            auto c = elliptic::j_of_E_z();
            j["identity"] = "j = -C12^3/FC12^3";
            j["pass"] = c.pass;
            text << c.detail << "\n";
        } else if (op == "disc") {
            MPoly A = forms::build("C12").scaled(rat(-27));
            MPoly B = forms::build("C18").scaled(rat(54));
            MPoly disc = (A.pow(3).scaled(rat(4)) + B.pow(2).scaled(rat(27))).scaled(rat(-16));
            j["disc_terms"] = disc.term_count();
            text << "disc has " << disc.term_count() << " terms over z1, z2, z3\n";
        } else {
            return fail_usage("unsupported op for E: " + op);
        }
    } else if (which == "E1t") {
        if (op == "j") {
            auto c = elliptic::hauptmodul_check();
            j["identity"] = "j(rho(t)) = 27 t^3 (t^3+8)^3/(t^3-1)^3";
            j["pass"] = c.pass;
            text << c.detail << "\n";
        } else {
            return fail_usage("E1t supports op j (the Hauptmodul composition)");
        }
    } else if (which == "deuring") {
        auto c = elliptic::deuring_invariants();
        j["pass"] = c.pass;
        j["detail"] = c.detail;
        text << c.detail << "\n";
        emit(g, text.str(), j);
        return c.pass ? 0 : 1;
    } else if (which == "hessfam") {
        auto a = elliptic::hessian_sections();
        auto b = elliptic::isogeny_divisibility();
        auto c = elliptic::point_5_14_on_E();
        j["sections"] = {{"pass", a.pass}, {"detail", a.detail}};
        j["isogeny"] = {{"pass", b.pass}, {"detail", b.detail}};
        j["point_5_14"] = {{"pass", c.pass}, {"detail", c.detail}};
        text << a.detail << "\n" << b.detail << "\n" << c.detail << "\n";
        emit(g, text.str(), j);
        return (a.pass && b.pass && c.pass) ? 0 : 1;
    } else {
        return fail_usage("unknown curve: " + which);
    }
    emit(g, text.str(), j);
    return 0;
}

int run_qseries(const GlobalOpts& g, const std::string& check, int order) {
    ordered_json j;
    std::ostringstream text;
    j["check"] = check;
    j["order"] = order;
    qseries::Check c{false, "unknown check"};
    if (check == "theta") {
        c = qseries::verify_theta_eisenstein(order);
        QSeries t0 = qseries::theta_A2(0, std::min(order, 12));
        ordered_json coeffs = ordered_json::array();
        for (long k = 0; k < std::min(order, 12); ++k) coeffs.push_back(t0.at_int(k).get_str());
        j["theta0_coefficients"] = coeffs;
    } else if (check == "picardfuchs") {
        c = qseries::picard_fuchs_residual(order);
    } else if (check == "delta") {
        c = qseries::delta_two_routes(order);
    } else if (check == "rform") {
        c = qseries::rform_ode_residual(order);
    } else {
        std::cerr << "unknown qseries check: " << check << "\n";
        return 2;
    }
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    text << check << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.detail << ")\n";
    emit(g, text.str(), j);
    return c.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suite for Hessian-polyhedron invariants, the 27 lines "
                 "of the hexahedral cubic surface, and the associated elliptic fibrations"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--json", g.json_path, "write a JSON report to this path");
    app.add_option("--seed", g.seed, "seed for randomized evaluation");
    app.add_flag("--strict", g.strict, "report-only failures affect the exit code");
    app.add_flag("--no-timing", g.no_timing, "zero elapsed fields in JSON output");
    app.add_option("--term-cap", g.term_cap, "polynomial expansion term cap");
    app.add_option("--order", g.order, "q-series truncation order");

    auto* verify = app.add_subcommand("verify", "run the identity catalog");
    std::string filter = "all";
    int random_k = 0;
    verify->add_option("--catalog", filter,
                       "family (IG, BU, W, KL, CW, GM, EL, QS, JI) or 'all'");
    verify->add_option("--random", random_k, "evaluate at k random points instead of expanding");

    auto* formsc = app.add_subcommand("forms", "registered forms");
    auto* forms_list = formsc->add_subcommand("list", "list all registered forms");
    auto* forms_show = formsc->add_subcommand("show", "print one form");
    std::string form_name;
    forms_show->add_option("name", form_name, "form name")->required();

    auto* group = app.add_subcommand("group", "matrix group computations");
    std::string which_group, group_mode = "projective";
    size_t cap = 100000;
    bool deep = false;
    group->add_option("--which", which_group, "generator set name")->required();
    group->add_option("--mode", group_mode, "projective|matrix");
    group->add_option("--cap", cap, "element cap for the closure");
    group->add_flag("--deep", deep, "allow the expensive full burkhardt closure");

    auto* lines = app.add_subcommand("lines", "the 27-line configuration");
    bool lines_report = false;
    lines->add_flag("--report", lines_report, "full report");

    auto* curve = app.add_subcommand("curve", "elliptic curve computations");
    std::string which_curve, curve_op = "j", curve_at;
    curve->add_option("--which", which_curve, "E|E1t|E2t|deuring|hessfam")->required();
    curve->add_option("--op", curve_op, "j|disc|mul:m|lutznagell");
    curve->add_option("--at", curve_at, "specialization z1,z2,z3");

    auto* qs = app.add_subcommand("qseries", "q-expansion checks");
    std::string qs_check;
    qs->add_option("--check", qs_check, "theta|picardfuchs|delta|rform")->required();

    auto* rep = app.add_subcommand("report", "run the full identity catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(g, filter, random_k);
        if (formsc->parsed()) {
            if (forms_list->parsed()) return run_forms_list();
            if (forms_show->parsed()) return run_forms_show(form_name);
            std::cerr << "forms requires a subcommand (list|show)\n";
            return 2;
        }
        if (group->parsed()) return run_group(g, which_group, group_mode, cap, deep);
        if (lines->parsed()) return run_lines(g);
        if (curve->parsed()) return run_curve(g, which_curve, curve_op, curve_at);
        if (qs->parsed()) return run_qseries(g, qs_check, g.order);
        if (rep->parsed()) return run_verify(g, "all", 0);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
