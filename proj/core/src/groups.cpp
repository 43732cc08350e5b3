#include "hesspoly/groups.hpp"

#include <deque>
#include <map>
#include <set>

namespace hesspoly {
namespace groups {

namespace {

Mat scaled_by_inverse_sqrt_minus3(const Mat& m) {
    return m.scaled(Cyclo::sqrt_minus3().inverse());
}

GenSet make_hessian216() {
    GenSet s;
    s.name = "hessian216";
    s.dim = 3;
    s.conductor = 3;
    Mat A = Mat::from_strings(3, 3, {"0", "1", "0", "0", "0", "1", "1", "0", "0"}, 3);
    Mat B = Mat::from_strings(3, 3, {"1", "0", "0", "0", "0", "1", "0", "1", "0"}, 3);
    Mat C = Mat::from_strings(3, 3, {"1", "0", "0", "0", "w", "0", "0", "0", "w^2"}, 3);
    Mat D = Mat::from_strings(3, 3, {"1", "0", "0", "0", "w", "0", "0", "0", "w"}, 3);
    Mat E = scaled_by_inverse_sqrt_minus3(
        Mat::from_strings(3, 3, {"1", "1", "1", "1", "w", "w^2", "1", "w^2", "w"}, 3));
    s.gens = {{"A", A}, {"B", B}, {"C", C}, {"D", D}, {"E", E}};
    return s;
}

GenSet make_h72() {
    GenSet s = make_hessian216();
    s.name = "h72";
    s.gens.erase(s.gens.begin() + 3);  // drop D
    return s;
}

GenSet make_burkhardt() {
    GenSet s;
    s.name = "burkhardt";
    s.dim = 5;
    s.conductor = 3;
    Mat B = scaled_by_inverse_sqrt_minus3(Mat::from_strings(
        5, 5,
        {"1", "2", "0", "0", "0",
         "1", "-1", "0", "0", "0",
         "0", "0", "1", "1", "1",
         "0", "0", "1", "w", "w^2",
         "0", "0", "1", "w^2", "w"},
        3));
    Mat C = Mat::from_strings(5, 5,
                              {"1", "0", "0", "0", "0",
                               "0", "1", "0", "0", "0",
                               "0", "0", "0", "0", "1",
                               "0", "0", "1", "0", "0",
                               "0", "0", "0", "1", "0"},
                              3);
    Mat D = Mat::from_strings(5, 5,
                              {"-1", "0", "0", "0", "0",
                               "0", "0", "-1", "0", "0",
                               "0", "-1", "0", "0", "0",
                               "0", "0", "0", "-1", "0",
                               "0", "0", "0", "0", "-1"},
                              3);
    Mat S2 = Mat::from_strings(5, 5,
                               {"1", "0", "0", "0", "0",
                                "0", "w^2", "0", "0", "0",
                                "0", "0", "1", "0", "0",
                                "0", "0", "0", "w^2", "0",
                                "0", "0", "0", "0", "w^2"},
                               3);
    s.gens = {{"B", B}, {"C", C}, {"D", D}, {"S2", S2}};
    return s;
}

GenSet make_maschke() {
    GenSet s;
    s.name = "maschke";
    s.dim = 4;
    s.conductor = 12;
    Mat A = Mat::from_strings(
        4, 4, {"1", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "1", "0", "0"},
        12);
    Mat B = Mat::from_strings(
        4, 4, {"-1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "1", "0", "0", "1", "0"},
        12);
    Mat C = Mat::from_strings(
        4, 4, {"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "w", "0", "0", "0", "0", "w^2"},
        12);
    Mat D = Mat::from_strings(
        4, 4, {"w", "0", "0", "0", "0", "1", "0", "0", "0", "0", "w", "0", "0", "0", "0", "w"},
        12);
    Mat E = Mat::from_strings(4, 4,
                              {"1", "0", "0", "0",
                               "0", "1", "1", "1",
                               "0", "1", "w", "w^2",
                               "0", "1", "w^2", "w"},
                              12);
    Cyclo inv_s = Cyclo::sqrt_minus3().inverse().embedded(12);
    for (int r = 1; r < 4; ++r)
        for (int c = 1; c < 4; ++c) E.at(r, c) = E.at(r, c) * inv_s;
    Mat F = Mat::from_strings(
        4, 4, {"0", "0", "-1", "0", "0", "1", "0", "0", "-1", "0", "0", "0", "0", "0", "0", "-1"},
        12);
    Mat J = Mat::identity(4).scaled(Cyclo::zeta(4).embedded(12));
    s.gens = {{"A", A}, {"B", B}, {"C", C}, {"D", D}, {"E", E}, {"F", F}, {"J", J}};
    return s;
}

GenSet make_g3() {
    GenSet s;
    s.name = "g3";
    s.dim = 2;
    s.conductor = 12;
    Mat M3 = Mat::from_strings(2, 2, {"1", "2", "1", "-1"}, 12).scaled(
        Cyclo::sqrt3().inverse());
    Mat N3 = Mat::from_strings(2, 2, {"1", "0", "0", "w"}, 12);
    s.gens = {{"M3", M3}, {"N3", N3}};
    return s;
}

GenSet make_h2() {
    GenSet s;
    s.name = "h2";
    s.dim = 2;
    s.conductor = 8;
    Mat M2 = Mat::from_strings(2, 2, {"1", "1", "1", "-1"}, 8).scaled(Cyclo::sqrt2().inverse());
    Mat N2 = Mat::from_strings(2, 2, {"1", "0", "0", "z8^2"}, 8);
    s.gens = {{"M2", M2}, {"N2", N2}};
    return s;
}

GenSet make_g4() {
    GenSet s;
    s.name = "g4";
    s.dim = 3;
    s.conductor = 12;
    Mat P12 = Mat::from_strings(3, 3, {"0", "1", "0", "1", "0", "0", "0", "0", "1"}, 12);
    Mat P123 = Mat::from_strings(3, 3, {"0", "1", "0", "0", "0", "1", "1", "0", "0"}, 12);
    Mat Dg = Mat::from_strings(3, 3, {"1", "0", "0", "0", "1", "0", "0", "0", "w"}, 12);
    Mat W = Mat::from_strings(3, 3, {"1", "1", "1", "1", "w", "w^2", "1", "w^2", "w"}, 12)
                .scaled(Cyclo::sqrt3().inverse());
    s.gens = {{"P12", P12}, {"P123", P123}, {"diag11w", Dg}, {"W", W}};
    return s;
}

GenSet make_induced6() {
    GenSet s;
    s.name = "induced6";
    s.dim = 6;
    s.conductor = 3;
    Mat A = Mat::from_strings(6, 6,
                              {"0", "1", "0", "0", "0", "0",
                               "0", "0", "1", "0", "0", "0",
                               "1", "0", "0", "0", "0", "0",
                               "0", "0", "0", "1", "0", "0",
                               "0", "0", "0", "0", "1", "0",
                               "0", "0", "0", "0", "0", "1"},
                              3);
    Mat B = Mat::from_strings(6, 6,
                              {"1", "0", "0", "0", "0", "0",
                               "0", "0", "1", "0", "0", "0",
                               "0", "1", "0", "0", "0", "0",
                               "0", "0", "0", "1", "0", "0",
                               "0", "0", "0", "0", "0", "1",
                               "0", "0", "0", "0", "1", "0"},
                              3);
    Mat C = Mat::from_strings(6, 6,
                              {"1", "0", "0", "0", "0", "0",
                               "0", "1", "0", "0", "0", "0",
                               "0", "0", "1", "0", "0", "0",
                               "0", "0", "0", "1", "0", "0",
                               "0", "0", "0", "0", "w^2", "0",
                               "0", "0", "0", "0", "0", "w"},
                              3);
    Mat E = Mat::from_strings(6, 6,
                              {"1", "1", "1", "6", "3", "3",
                               "1", "1", "1", "6", "3*w^2", "3*w",
                               "1", "1", "1", "6", "3*w", "3*w^2",
                               "1", "1", "1", "-3", "0", "0",
                               "3", "3*w^2", "3*w", "0", "0", "0",
                               "3", "3*w", "3*w^2", "0", "0", "0"},
                              3);
    E = E.scaled(Cyclo::sqrt_minus3().pow(3).inverse());
    s.gens = {{"A", A}, {"B", B}, {"C", C}, {"E", E}};
    return s;
}

std::map<std::string, GenSet>& registry() {
    static std::map<std::string, GenSet> r = [] {
        std::map<std::string, GenSet> m;
        for (auto&& g : {make_hessian216(), make_h72(), make_burkhardt(), make_maschke(),
                         make_g3(), make_h2(), make_g4(), make_induced6()})
            m.emplace(g.name, g);
        return m;
    }();
    return r;
}

}  // namespace

const Mat& GenSet::gen(const std::string& gname) const {
    for (const auto& [n, m] : gens)
        if (n == gname) return m;
    throw std::invalid_argument("no generator " + gname + " in set " + name);
}

const GenSet& gen_set(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown generator set: " + name);
    return it->second;
}

std::vector<std::string> gen_set_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

bool GroupClosure::contains(const Mat& m) const {
    Mat probe = mode == ClosureMode::Projective ? m.projective_canonical() : m;
    for (const auto& e : elements)
        if (e == probe) return true;
    return false;
}

GroupClosure closure(const GenSet& gens, ClosureMode mode, size_t cap) {
    auto canon = [&](const Mat& m) {
        return mode == ClosureMode::Projective ? m.projective_canonical() : m;
    };
    GroupClosure gc;
    gc.mode = mode;
    std::set<Mat> seen;
    std::deque<Mat> queue;
    Mat id = Mat::identity(gens.dim);
    seen.insert(canon(id));
    queue.push_back(canon(id));
    gc.elements.push_back(canon(id));
    while (!queue.empty()) {
        Mat cur = queue.front();
        queue.pop_front();
        for (const auto& [gname, g] : gens.gens) {
            Mat next = canon(cur * g);
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw closure_cap_exceeded("closure of " + gens.name + " exceeded cap " +
                                               std::to_string(cap));
                gc.elements.push_back(next);
                queue.push_back(next);
            }
        }
    }
    return gc;
}

size_t center_order(const GroupClosure& gc, const GenSet& gens) {
    size_t count = 0;
    for (const auto& e : gc.elements) {
        bool commutes = true;
        for (const auto& [n, g] : gens.gens) {
            if (!(e * g == g * e)) {
                commutes = false;
                break;
            }
        }
        if (commutes) ++count;
    }
    return count;
}

size_t scalar_subgroup_order(const GroupClosure& gc) {
    size_t count = 0;
    for (const auto& e : gc.elements) {
        bool scalar = true;
        const Cyclo& d = e.at(0, 0);
        for (int i = 0; i < e.rows() && scalar; ++i)
            for (int j = 0; j < e.cols() && scalar; ++j) {
                if (i == j ? !(e.at(i, j) == d) : !e.at(i, j).is_zero()) scalar = false;
            }
        if (scalar) ++count;
    }
    return count;
}

namespace {

Mat word(const GenSet& s, const std::string& letters) {
    Mat acc = Mat::identity(s.dim);
    size_t i = 0;
    while (i < letters.size()) {
        // longest-match generator name
        size_t best = 0;
        for (const auto& [n, g] : s.gens)
            if (letters.compare(i, n.size(), n) == 0 && n.size() > best) best = n.size();
        if (best == 0) throw std::invalid_argument("bad word: " + letters);
        acc = acc * s.gen(letters.substr(i, best));
        i += best;
    }
    return acc;
}

Mat mpow(Mat m, int e) {
    Mat acc = Mat::identity(m.rows());
    for (int i = 0; i < e; ++i) acc = acc * m;
    return acc;
}

}  // namespace

std::vector<RelationResult> verify_matrix_relations(const std::string& set_name) {
    const GenSet& s = gen_set(set_name);
    std::vector<RelationResult> out;
    auto check = [&](const std::string& label, const Mat& lhs, const Mat& rhs) {
        out.push_back({label, lhs == rhs});
    };
    Mat I = Mat::identity(s.dim);
    if (set_name == "burkhardt") {
        check("B^4 = I", mpow(s.gen("B"), 4), I);
        check("C^3 = I", mpow(s.gen("C"), 3), I);
        check("D^2 = I", mpow(s.gen("D"), 2), I);
        check("S2^3 = I", mpow(s.gen("S2"), 3), I);
        Mat B2lit = Mat::from_strings(5, 5,
                                      {"1", "0", "0", "0", "0",
                                       "0", "1", "0", "0", "0",
                                       "0", "0", "1", "0", "0",
                                       "0", "0", "0", "0", "1",
                                       "0", "0", "0", "1", "0"},
                                      3);
        check("B^2 = -(swap Y3,Y4)", mpow(s.gen("B"), 2), -B2lit);
        Mat CD = Mat::from_strings(5, 5,
                                   {"-1", "0", "0", "0", "0",
                                    "0", "0", "-1", "0", "0",
                                    "0", "0", "0", "0", "-1",
                                    "0", "-1", "0", "0", "0",
                                    "0", "0", "0", "-1", "0"},
                                   3);
        Mat DC = Mat::from_strings(5, 5,
                                   {"-1", "0", "0", "0", "0",
                                    "0", "0", "0", "0", "-1",
                                    "0", "-1", "0", "0", "0",
                                    "0", "0", "-1", "0", "0",
                                    "0", "0", "0", "-1", "0"},
                                   3);
        Mat C2D = Mat::from_strings(5, 5,
                                    {"-1", "0", "0", "0", "0",
                                     "0", "0", "-1", "0", "0",
                                     "0", "0", "0", "-1", "0",
                                     "0", "0", "0", "0", "-1",
                                     "0", "-1", "0", "0", "0"},
                                    3);
        Mat DC2 = Mat::from_strings(5, 5,
                                    {"-1", "0", "0", "0", "0",
                                     "0", "0", "0", "-1", "0",
                                     "0", "-1", "0", "0", "0",
                                     "0", "0", "0", "0", "-1",
                                     "0", "0", "-1", "0", "0"},
                                    3);
        check("CD literal", word(s, "CD"), CD);
        check("DC literal", word(s, "DC"), DC);
        check("C^2 D literal", word(s, "CCD"), C2D);
        check("D C^2 literal", word(s, "DCC"), DC2);
        Mat CD2 = Mat::from_strings(5, 5,
                                    {"1", "0", "0", "0", "0",
                                     "0", "0", "0", "0", "1",
                                     "0", "0", "0", "1", "0",
                                     "0", "0", "1", "0", "0",
                                     "0", "1", "0", "0", "0"},
                                    3);
        Mat DC_2 = Mat::from_strings(5, 5,
                                     {"1", "0", "0", "0", "0",
                                      "0", "0", "0", "1", "0",
                                      "0", "0", "0", "0", "1",
                                      "0", "1", "0", "0", "0",
                                      "0", "0", "1", "0", "0"},
                                     3);
        check("(CD)^2 = (DC^2)^2 literal", mpow(word(s, "CD"), 2), CD2);
        check("(DC^2)^2 literal", mpow(word(s, "DCC"), 2), CD2);
        check("(DC)^2 = (C^2 D)^2 literal", mpow(word(s, "DC"), 2), DC_2);
        check("(C^2 D)^2 literal", mpow(word(s, "CCD"), 2), DC_2);
        for (const auto& [n, g] : s.gens) check("det(" + n + ") = 1", Mat(1, 1, {g.det()}), Mat(1, 1, {Cyclo(1).embedded(3)}));
    } else if (set_name == "maschke") {
        check("B^2 = I", mpow(s.gen("B"), 2), I);
        check("F^2 = I", mpow(s.gen("F"), 2), I);
        check("(AB)^2 = I", mpow(word(s, "AB"), 2), I);
        check("(BA)^2 = I", mpow(word(s, "BA"), 2), I);
        check("(BFB)^2 = I", mpow(word(s, "BFB"), 2), I);
        check("(ABF)^2 = -I", mpow(word(s, "ABF"), 2), -I);
        check("(BFA)^2 = -I", mpow(word(s, "BFA"), 2), -I);
        check("(ABF BFA)^2 = -I", mpow(word(s, "ABFBFA"), 2), -I);
        check("BFB = FBF", word(s, "BFB"), word(s, "FBF"));
        check("ABF = -FAB", word(s, "ABF"), -word(s, "FAB"));
        for (const auto& [n, g] : s.gens) {
            check("det(" + n + ") = 1", Mat(1, 1, {g.det()}),
                  Mat(1, 1, {Cyclo(1).embedded(12)}));
            check(n + " unitary", g.conj_transposed() * g, I);
        }
    } else if (set_name == "induced6") {
        check("A^3 = I", mpow(s.gen("A"), 3), I);
        check("B^2 = I", mpow(s.gen("B"), 2), I);
        check("C^3 = I", mpow(s.gen("C"), 3), I);
        check("E^4 = I", mpow(s.gen("E"), 4), I);
        Mat E2lit = Mat::from_strings(6, 6,
                                      {"-1", "0", "0", "0", "0", "0",
                                       "0", "0", "-1", "0", "0", "0",
                                       "0", "-1", "0", "0", "0", "0",
                                       "0", "0", "0", "-1", "0", "0",
                                       "0", "0", "0", "0", "0", "-1",
                                       "0", "0", "0", "0", "-1", "0"},
                                      3);
        check("E^2 literal", mpow(s.gen("E"), 2), E2lit);
    } else if (set_name == "hessian216" || set_name == "h72") {
        check("A^3 = I", mpow(s.gen("A"), 3), I);
        check("B^2 = I", mpow(s.gen("B"), 2), I);
        check("C^3 = I", mpow(s.gen("C"), 3), I);
    } else {
        // no displayed relations registered
    }
    return out;
}

std::optional<Cyclo> semi_invariant_scalar(const MPoly& f, const Mat& g) {
    if (f.is_zero()) return Cyclo(1);
    MPoly image = f.substitute_linear(g);
    if (image.is_zero()) return std::nullopt;
    // candidate scalar from the leading term of f
    const auto& [lm, lc] = *f.terms().begin();
    auto it = image.terms().find(lm);
    if (it == image.terms().end()) return std::nullopt;
    int mc = std::max(f.conductor(), image.conductor());
    Cyclo lambda = it->second.embedded(mc) * lc.embedded(mc).inverse();
    if (image.with_conductor(mc) == f.with_conductor(mc).scaled(lambda)) return lambda;
    return std::nullopt;
}

std::optional<std::vector<Cyclo>> express_in_basis(const MPoly& f,
                                                   std::span<const MPoly> basis) {
    if (basis.empty()) return std::nullopt;
    // union of monomials
    std::vector<Monomial> mons;
    std::set<std::array<uint8_t, kMaxVars>> seen;
    auto note = [&](const MPoly& p) {
        for (const auto& [m, c] : p.terms())
            if (seen.insert(m.e).second) mons.push_back(m);
    };
    note(f);
    for (const auto& b : basis) note(b);
    int mc = f.conductor();
    for (const auto& b : basis) mc = std::max(mc, b.conductor());
    Mat sys(static_cast<int>(mons.size()), static_cast<int>(basis.size()));
    std::vector<Cyclo> rhs(mons.size(), Cyclo(Rational(0)).embedded(mc));
    MPoly fm = f.with_conductor(mc);
    for (size_t r = 0; r < mons.size(); ++r) {
        auto it = fm.terms().find(mons[r]);
        if (it != fm.terms().end()) rhs[r] = it->second;
        for (size_t c = 0; c < basis.size(); ++c) {
            MPoly bm = basis[c].with_conductor(mc);
            auto bit = bm.terms().find(mons[r]);
            sys.at(static_cast<int>(r), static_cast<int>(c)) =
                bit != bm.terms().end() ? bit->second : Cyclo(Rational(0)).embedded(mc);
        }
    }
    bool consistent = false;
    auto sol = solve_linear(sys, rhs, &consistent);
    if (!consistent) return std::nullopt;
    return sol[0];
}

std::vector<IntegralityRow> integrality_report(const GroupClosure& gc) {
    std::vector<IntegralityRow> rows;
    rows.reserve(gc.elements.size());
    for (const auto& e : gc.elements) {
        IntegralityRow r{e.det(), e.trace(), false, false};
        r.det_integer = r.det.is_rational() && is_integer(r.det.rational_value());
        r.trace_integer = r.trace.is_rational() && is_integer(r.trace.rational_value());
        rows.push_back(std::move(r));
    }
    return rows;
}

GroupClosure closure_of(const std::vector<Mat>& gens, size_t cap) {
    GenSet s;
    s.name = "(ad hoc)";
    s.dim = gens.empty() ? 0 : gens.front().rows();
    for (size_t i = 0; i < gens.size(); ++i)
        s.gens.emplace_back("g" + std::to_string(i), gens[i]);
    return closure(s, ClosureMode::Matrix, cap);
}

GroupClosure g3_even_closure() {
    const GenSet& g3 = gen_set("g3");
    const Mat &M3 = g3.gen("M3"), &N3 = g3.gen("N3");
    return closure_of({N3, M3 * N3 * M3});
}

std::vector<std::pair<Mat, int>> h2_closure_with_character(size_t cap) {
    const GenSet& s = gen_set("h2");
    std::map<Mat, int> chi;
    std::deque<Mat> queue;
    Mat id = Mat::identity(2);
    chi[id] = 1;
    queue.push_back(id);
    int chi_gen[2] = {-1, 1};  // chi(M2) = -1, chi(N2) = +1
    while (!queue.empty()) {
        Mat cur = queue.front();
        queue.pop_front();
        int cv = chi[cur];
        for (size_t gi = 0; gi < s.gens.size(); ++gi) {
            Mat next = cur * s.gens[gi].second;
            int nv = cv * chi_gen[gi];
            auto it = chi.find(next);
            if (it == chi.end()) {
                if (chi.size() >= cap) throw closure_cap_exceeded("h2 closure exceeded cap");
                chi[next] = nv;
                queue.push_back(next);
            } else if (it->second != nv) {
                throw std::logic_error("h2 character is inconsistent");
            }
        }
    }
    std::vector<std::pair<Mat, int>> out(chi.begin(), chi.end());
    return out;
}

}  // namespace groups
}  // namespace hesspoly
