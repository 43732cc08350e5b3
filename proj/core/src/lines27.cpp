#include "hesspoly/lines27.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hesspoly/forms.hpp"
#include "hesspoly/groups.hpp"

namespace hesspoly {
namespace lines27 {

namespace {

constexpr int kLines = 27;

std::string label_for(int idx) {
    if (idx < 9) return "l" + std::to_string(idx + 1);
    int j = (idx - 9) / 6;
    int k = (idx - 9) % 6 + 1;
    return "l_{" + std::to_string(j) + "," + std::to_string(k) + "}";
}

// permutation sigma_k of (g4, g5, g6) targets for l_{j,k}, 0-based columns
const int kSigma[6][3] = {{3, 4, 5}, {3, 5, 4}, {4, 3, 5}, {4, 5, 3}, {5, 3, 4}, {5, 4, 3}};

}  // namespace

const Model& Model::instance() {
    static Model m;
    return m;
}

Model::Model() {
    build_lines();
    validate_on_surface();
    build_adjacency();
    build_actions();
}

void Model::build_lines() {
    auto nullspace_line = [&](const Mat& constraints, const std::string& label) {
        auto ns = constraints.nullspace();
        if (ns.size() != 2)
            throw std::logic_error("line " + label + " has solution space of rank " +
                                   std::to_string(ns.size()));
        Mat basis(2, 6);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 6; ++c) basis.at(r, c) = ns[r][c];
        basis.rref();
        lines_.push_back({label, basis});
    };

    // l_1 .. l_9: g_p = 0, sum of the other two of (g1,g2,g3) = 0,
    // g_{3+q} = 0, sum of the other two of (g4,g5,g6) = 0.
    for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) {
            Mat m(4, 6);
            m.at(0, p) = Cyclo(1);
            for (int c = 0; c < 3; ++c)
                if (c != p) m.at(1, c) = Cyclo(1);
            m.at(2, 3 + q) = Cyclo(1);
            for (int c = 3; c < 6; ++c)
                if (c != 3 + q) m.at(3, c) = Cyclo(1);
            nullspace_line(m, label_for(3 * p + q));
        }
    }
    // l_{j,k}: g_i = w^j g_{sigma_k(i)} and g1+g2+g3 = 0.
    Cyclo w = Cyclo::omega();
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 6; ++k) {
            Mat m(4, 6);
            for (int i = 0; i < 3; ++i) {
                m.at(i, i) = Cyclo(1);
                m.at(i, kSigma[k][i]) = -w.pow(j);
            }
            for (int c = 0; c < 3; ++c) m.at(3, c) = Cyclo(1);
            nullspace_line(m, label_for(9 + 6 * j + k));
        }
    }
}

void Model::validate_on_surface() const {
    for (const auto& line : lines_) {
        const Mat& b = line.basis;
        auto coord = [&](int row, int c) { return b.at(row, c); };
        // the two linear equations on both basis vectors
        for (int row = 0; row < 2; ++row) {
            Cyclo s1 = coord(row, 0) + coord(row, 1) + coord(row, 2);
            Cyclo s2 = coord(row, 3) + coord(row, 4) + coord(row, 5);
            if (!s1.is_zero() || !s2.is_zero())
                throw std::logic_error("line " + line.label + " violates a linear equation of S");
        }
        // cubic equation on s*u + t*v: all four (s,t)-coefficients vanish
        Cyclo c30, c21, c12, c03;
        for (int i = 0; i < 6; ++i) {
            Cyclo sign = (i < 3) ? Cyclo(1) : Cyclo(-1);
            const Cyclo &u = b.at(0, i), &v = b.at(1, i);
            c30 += sign * u.pow(3);
            c21 += sign * Cyclo(3) * u.pow(2) * v;
            c12 += sign * Cyclo(3) * u * v.pow(2);
            c03 += sign * v.pow(3);
        }
        if (!c30.is_zero() || !c21.is_zero() || !c12.is_zero() || !c03.is_zero())
            throw std::logic_error("line " + line.label + " is not contained in S");
    }
}

int Model::index_of(const std::string& label) const {
    for (int i = 0; i < kLines; ++i)
        if (lines_[i].label == label) return i;
    throw std::invalid_argument("unknown line label: " + label);
}

int Model::identify(const Mat& basis2x6) const {
    Mat b = basis2x6;
    int rank = b.rref();
    if (rank != 2) return -1;
    for (int i = 0; i < kLines; ++i)
        if (lines_[i].basis == b) return i;
    return -1;
}

std::optional<std::vector<Cyclo>> Model::meet(int i, int j) const {
    // alpha*u1 + beta*v1 = gamma*u2 + delta*v2
    Mat m(6, 4);
    for (int c = 0; c < 6; ++c) {
        m.at(c, 0) = lines_[i].basis.at(0, c);
        m.at(c, 1) = lines_[i].basis.at(1, c);
        m.at(c, 2) = -lines_[j].basis.at(0, c);
        m.at(c, 3) = -lines_[j].basis.at(1, c);
    }
    auto ns = m.nullspace();
    if (ns.empty()) return std::nullopt;
    const auto& w = ns.front();
    std::vector<Cyclo> pt(6);
    for (int c = 0; c < 6; ++c)
        pt[c] = w[0] * lines_[i].basis.at(0, c) + w[1] * lines_[i].basis.at(1, c);
    // canonicalize: first nonzero coordinate = 1
    for (const auto& v : pt) {
        if (!v.is_zero()) {
            Cyclo inv = v.inverse();
            for (auto& x : pt) x = x * inv;
            break;
        }
    }
    return pt;
}

void Model::build_adjacency() {
    for (int i = 0; i < kLines; ++i)
        for (int j = i + 1; j < kLines; ++j) {
            bool meets = meet(i, j).has_value();
            adj_[i][j] = meets;
            adj_[j][i] = meets;
        }
}

int Model::degree(int i) const { return static_cast<int>(adj_[i].count()); }

int Model::edge_count() const {
    int total = 0;
    for (int i = 0; i < kLines; ++i) total += degree(i);
    return total / 2;
}

std::vector<DoubleSix> Model::double_sixes() const {
    // sixers: 6-element sets of pairwise disjoint lines
    std::vector<std::array<int, 6>> sixers;
    std::array<int, 6> cur{};
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == 6) {
            sixers.push_back(cur);
            return;
        }
        for (int v = start; v < kLines; ++v) {
            bool ok = true;
            for (int k = 0; k < depth; ++k)
                if (adj_[cur[k]][v]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);

    std::vector<DoubleSix> out;
    for (size_t s = 0; s < sixers.size(); ++s) {
        for (size_t t = s + 1; t < sixers.size(); ++t) {
            const auto &A = sixers[s], &B = sixers[t];
            bool shares = false;
            for (int a : A)
                for (int b : B)
                    if (a == b) shares = true;
            if (shares) continue;
            // partner of a in B = the unique non-neighbor
            std::array<int, 6> partner{};
            bool good = true;
            std::set<int> used;
            for (int ai = 0; ai < 6 && good; ++ai) {
                int count = 0, who = -1;
                for (int b : B)
                    if (!adj_[A[ai]][b]) {
                        ++count;
                        who = b;
                    }
                if (count != 1 || used.count(who)) {
                    good = false;
                } else {
                    partner[ai] = who;
                    used.insert(who);
                }
            }
            if (good) out.push_back({A, partner});
        }
    }
    return out;
}

Model::Schlafli Model::schlafli() const {
    Schlafli s{};
    const char* a_labels[6] = {"l_{1,1}", "l_{2,2}", "l_{2,3}", "l_{1,4}", "l_{1,5}", "l_{2,6}"};
    const char* b_labels[6] = {"l_{2,1}", "l_{1,2}", "l_{1,3}", "l_{2,4}", "l_{2,5}", "l_{1,6}"};
    for (int i = 0; i < 6; ++i) {
        s.a[i] = index_of(a_labels[i]);
        s.b[i] = index_of(b_labels[i]);
    }
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (i == j) {
                if (adj_[s.a[i]][s.b[j]])
                    throw std::logic_error("double six: a_i meets b_i");
            } else if (!adj_[s.a[i]][s.b[j]]) {
                throw std::logic_error("double six: a_i misses b_j, i != j");
            }
        }
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            int found = -1, count = 0;
            for (int v = 0; v < kLines; ++v) {
                bool in_rows = false;
                for (int k = 0; k < 6; ++k)
                    if (s.a[k] == v || s.b[k] == v) in_rows = true;
                if (in_rows) continue;
                if (adj_[v][s.a[i - 1]] && adj_[v][s.b[j - 1]] && adj_[v][s.a[j - 1]] &&
                    adj_[v][s.b[i - 1]]) {
                    found = v;
                    ++count;
                }
            }
            if (count != 1) throw std::logic_error("Schlafli c_ij not unique");
            s.c[i][j] = found;
        }
    return s;
}

void Model::build_actions() {
    // g_i as cubics in z, with x = Q1 - Q2 and the composites of the text
    const auto& gs = groups::gen_set("h72");
    const Mat& Az = gs.gen("A");
    const Mat& Bz = gs.gen("B");
    const Mat& Cz = gs.gen("C");
    const Mat& Ez = gs.gen("E");
    MPoly x = (forms::build("Q1") - forms::build("Q2")).with_conductor(3);
    std::vector<MPoly> g = {
        x.substitute_linear(Ez),       x.substitute_linear(Cz * Ez),
        x.substitute_linear(Cz * Cz * Ez), x,
        x.substitute_linear(Cz),      x.substitute_linear(Cz * Cz)};
    auto action_matrix = [&](const Mat& M) {
        Mat T(6, 6);
        for (int i = 0; i < 6; ++i) {
            MPoly img = g[i].substitute_linear(M);
            auto coeffs = groups::express_in_basis(img, g);
            if (!coeffs) throw std::logic_error("g_i o M is not in span(g_1..g_6)");
            for (int j = 0; j < 6; ++j) T.at(i, j) = (*coeffs)[j];
        }
        return T;
    };
    actions_ = {{'A', action_matrix(Az)},
                {'B', action_matrix(Bz)},
                {'C', action_matrix(Cz)},
                {'E', action_matrix(Ez)}};
}

const Mat& Model::coordinate_action(char gen) const {
    for (const auto& [c, m] : actions_)
        if (c == gen) return m;
    throw std::invalid_argument("unknown generator");
}

std::vector<int> Model::induced_permutation(char gen) const {
    // The generators act on lines through their defining conditions, the same
    // convention as on forms: the image of l under M is {p : M p in l}.  That
    // is the inverse of the forward point map p -> T p, so compute the
    // forward permutation and invert it.  (T itself is one representative of
    // the action modulo the two linear relations cutting out the span of the
    // configuration, hence not invertible as a 6x6 matrix.)
    const Mat& T = coordinate_action(gen);
    std::vector<int> forward(kLines), perm(kLines);
    for (int i = 0; i < kLines; ++i) {
        Mat image(2, 6);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 6; ++c) {
                Cyclo acc;
                for (int k = 0; k < 6; ++k) acc += T.at(c, k) * lines_[i].basis.at(r, k);
                image.at(r, c) = acc;
            }
        int j = identify(image);
        if (j < 0)
            throw std::logic_error("image of " + lines_[i].label +
                                   " is not one of the 27 lines");
        forward[i] = j;
    }
    for (int i = 0; i < kLines; ++i) perm[forward[i]] = i;
    return perm;
}

std::vector<int> Model::conjugation_permutation() const {
    std::vector<int> perm(kLines);
    for (int i = 0; i < kLines; ++i) {
        int j = identify(lines_[i].basis.conjugated());
        if (j < 0) throw std::logic_error("conjugate line not identified");
        perm[i] = j;
    }
    return perm;
}

bool Model::is_graph_automorphism(const std::vector<int>& perm) const {
    for (int i = 0; i < kLines; ++i)
        for (int j = i + 1; j < kLines; ++j)
            if (adj_[i][j] != adj_[perm[i]][perm[j]]) return false;
    return true;
}

size_t Model::perm_group_order(const std::vector<std::vector<int>>& gens) const {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> id(kLines);
    for (int i = 0; i < kLines; ++i) id[i] = i;
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        auto cur = queue.back();
        queue.pop_back();
        for (const auto& g : gens) {
            std::vector<int> next(kLines);
            for (int i = 0; i < kLines; ++i) next[i] = g[cur[i]];
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen.size();
}

namespace {

struct AutSearch {
    const std::array<std::bitset<27>, 27>& adj;
    std::array<int, 27> order;   // source vertices in search order
    std::array<int, 27> image{};
    std::bitset<27> used;
    uint64_t count = 0;
    std::vector<std::array<int, 27>>* collect = nullptr;

    explicit AutSearch(const std::array<std::bitset<27>, 27>& a) : adj(a) {
        // greedy order: next vertex with most already-ordered neighbors
        std::bitset<27> chosen;
        for (int pos = 0; pos < 27; ++pos) {
            int best = -1, best_score = -1;
            for (int v = 0; v < 27; ++v) {
                if (chosen[v]) continue;
                int score = static_cast<int>((adj[v] & chosen).count());
                if (score > best_score) {
                    best_score = score;
                    best = v;
                }
            }
            order[pos] = best;
            chosen[best] = true;
        }
    }

    void run(int pos) {
        if (pos == 27) {
            ++count;
            if (collect) collect->push_back(image);
            return;
        }
        int v = order[pos];
        std::bitset<27> cand = ~used;
        for (int prev = 0; prev < pos; ++prev) {
            int u = order[prev];
            if (adj[v][u])
                cand &= adj[image[u]];
            else
                cand &= ~adj[image[u]];
        }
        for (int w = 0; w < 27; ++w) {
            if (!cand[w]) continue;
            image[v] = w;
            used[w] = true;
            run(pos + 1);
            used[w] = false;
        }
    }
};

}  // namespace

uint64_t Model::aut_order() const {
    AutSearch s(adj_);
    s.run(0);
    return s.count;
}

int Model::aut_orbit_count() const {
    AutSearch s(adj_);
    std::vector<std::array<int, 27>> all;
    s.collect = &all;
    s.run(0);
    std::vector<int> parent(kLines);
    for (int i = 0; i < kLines; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& perm : all)
        for (int v = 0; v < kLines; ++v) {
            int a = find(v), b = find(perm[v]);
            if (a != b) parent[a] = b;
        }
    std::set<int> roots;
    for (int v = 0; v < kLines; ++v) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

}  // namespace lines27
}  // namespace hesspoly
