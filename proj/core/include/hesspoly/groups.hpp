#pragma once

#include <optional>

#include "hesspoly/matrix.hpp"
#include "hesspoly/mpoly.hpp"

namespace hesspoly {
namespace groups {

enum class ClosureMode { Matrix, Projective };

struct GenSet {
    std::string name;
    int dim = 0;
    int conductor = 1;
    std::vector<std::pair<std::string, Mat>> gens;

    const Mat& gen(const std::string& gname) const;
};

/// Registered generator sets: hessian216, h72, burkhardt, maschke, g3, h2,
/// g4, induced6.
const GenSet& gen_set(const std::string& name);
std::vector<std::string> gen_set_names();

struct GroupClosure {
    ClosureMode mode;
    std::vector<Mat> elements;  // canonical representatives, BFS order
    size_t order() const { return elements.size(); }
    bool contains(const Mat& m) const;
};

struct closure_cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Breadth-first closure under products.  Throws closure_cap_exceeded when
/// more than `cap` distinct elements appear.
GroupClosure closure(const GenSet& gens, ClosureMode mode, size_t cap = 100000);

/// Number of elements commuting with every generator (matrix mode).
size_t center_order(const GroupClosure& gc, const GenSet& gens);

/// Number of scalar matrices in a matrix-mode closure.
size_t scalar_subgroup_order(const GroupClosure& gc);

struct RelationResult {
    std::string name;
    bool pass;
};

/// Checks every relation registered for the set (e.g. B^4=C^3=D^2=S2^3=I for
/// burkhardt); exact matrix arithmetic.
std::vector<RelationResult> verify_matrix_relations(const std::string& set_name);

/// lambda with F(g z) = lambda F(z), when it exists.
std::optional<Cyclo> semi_invariant_scalar(const MPoly& f, const Mat& g);

/// Exact coefficients writing f in the linear span of basis; empty when f is
/// not in the span.
std::optional<std::vector<Cyclo>> express_in_basis(const MPoly& f,
                                                   std::span<const MPoly> basis);

struct IntegralityRow {
    Cyclo det;
    Cyclo trace;
    bool det_integer;
    bool trace_integer;
};

/// Determinant and trace of every element of a closure, with integrality
/// flags (integer means a rational with denominator one).
std::vector<IntegralityRow> integrality_report(const GroupClosure& gc);

/// Matrix closure of <M2, N2> together with the character chi(M2) = -1,
/// chi(N2) = 1; returns (element, chi) pairs.  chi is well defined because it
/// is a character of the abstract group.
std::vector<std::pair<Mat, int>> h2_closure_with_character(size_t cap = 100000);

/// Closure of an ad-hoc generator list (matrix mode).
GroupClosure closure_of(const std::vector<Mat>& gens, size_t cap = 100000);

/// The even (det = 1) subgroup of <M3, N3>, isomorphic to SL2(F3): closure of
/// N3 and M3 N3 M3.
GroupClosure g3_even_closure();

}  // namespace groups
}  // namespace hesspoly
