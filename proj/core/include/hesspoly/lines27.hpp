#pragma once

#include <array>
#include <bitset>
#include <optional>

#include "hesspoly/matrix.hpp"

namespace hesspoly {
namespace lines27 {

/// A projective line in P^5, stored as the canonical (reduced row echelon)
/// basis of its rank-2 row space over Q(omega).
struct LineRep {
    std::string label;
    Mat basis;  // 2 x 6, RREF
};

struct DoubleSix {
    std::array<int, 6> a;
    std::array<int, 6> b;  // a[i] pairs with b[i]
};

/// The 27-line configuration of the cubic surface
///   g1+g2+g3 = 0, g4+g5+g6 = 0, g1^3+g2^3+g3^3 = g4^3+g5^3+g6^3.
class Model {
  public:
    /// Builds all 27 lines and validates each symbolically on the surface.
    static const Model& instance();

    const std::vector<LineRep>& lines() const { return lines_; }
    int index_of(const std::string& label) const;
    /// Index of the canonical line equal to the given 2x6 row space, or -1.
    int identify(const Mat& basis2x6) const;

    /// Common projective point (canonicalized), or empty when disjoint.
    std::optional<std::vector<Cyclo>> meet(int i, int j) const;

    bool adjacent(int i, int j) const { return adj_[i][j]; }
    int degree(int i) const;
    int edge_count() const;

    std::vector<DoubleSix> double_sixes() const;

    /// Schlafli labels relative to the double six N of the text:
    /// a-row (l_{1,1}, l_{2,2}, l_{2,3}, l_{1,4}, l_{1,5}, l_{2,6}).
    struct Schlafli {
        std::array<int, 6> a, b;
        int c[7][7];  // c[i][j] for 1 <= i < j <= 6
    };
    Schlafli schlafli() const;

    /// Permutation of the 27 lines induced by a generator of the coordinate
    /// action ('A', 'B', 'C', 'E'); perm[i] = image index.
    std::vector<int> induced_permutation(char gen) const;
    /// Entrywise complex conjugation.
    std::vector<int> conjugation_permutation() const;

    /// Is the permutation an automorphism of the incidence graph?
    bool is_graph_automorphism(const std::vector<int>& perm) const;

    /// Order of the permutation group generated by the given permutations.
    size_t perm_group_order(const std::vector<std::vector<int>>& gens) const;

    /// Order of the full automorphism group of the incidence graph
    /// (partition-refinement backtracking; no external solver).
    uint64_t aut_order() const;
    /// Number of vertex orbits under the full automorphism group.
    int aut_orbit_count() const;

    /// 6x6 matrix of the generator action on (g1..g6) coordinates, derived
    /// by expressing each g_i o M in the basis g1..g6.
    const Mat& coordinate_action(char gen) const;

  private:
    Model();
    std::vector<LineRep> lines_;
    std::array<std::bitset<27>, 27> adj_;
    std::vector<std::pair<char, Mat>> actions_;

    void build_lines();
    void validate_on_surface() const;
    void build_adjacency();
    void build_actions();
};

}  // namespace lines27
}  // namespace hesspoly
