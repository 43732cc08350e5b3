#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "hesspoly/matrix.hpp"
#include "hesspoly/space.hpp"

namespace hesspoly {

struct term_cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kMaxVars = 12;
/// Degree reported for the zero polynomial ("minus infinity").
constexpr int kNegInfinity = INT32_MIN;

struct Monomial {
    std::array<uint8_t, kMaxVars> e{};

    int deg(int nvars) const {
        int d = 0;
        for (int i = 0; i < nvars; ++i) d += e[i];
        return d;
    }
    bool operator==(const Monomial&) const = default;
};

/// Graded-lexicographic, highest term first; gives deterministic leading-term
/// iteration order in the term map.
struct GradLexDesc {
    int nvars;
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.deg(nvars), db = b.deg(nvars);
        if (da != db) return da > db;
        for (int i = 0; i < nvars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
        return false;
    }
};

/// Sparse multivariate polynomial over Q(zeta_n).  All coefficients share one
/// conductor; no zero coefficients are stored.  Values are immutable in
/// spirit: every operation returns a new canonical polynomial.
class MPoly {
  public:
    using TermMap = std::map<Monomial, Cyclo, GradLexDesc>;

    explicit MPoly(const VariableSpace* sp, int conductor = 1);

    static MPoly zero(const VariableSpace* sp, int conductor = 1) { return MPoly(sp, conductor); }
    static MPoly constant(const VariableSpace* sp, const Cyclo& c);
    static MPoly constant(const VariableSpace* sp, const Rational& r) {
        return constant(sp, Cyclo(r));
    }
    static MPoly var(const VariableSpace* sp, int index, int conductor = 1);
    static MPoly var(const VariableSpace* sp, const std::string& name, int conductor = 1) {
        return var(sp, sp->index_of(name), conductor);
    }

    const VariableSpace* space() const { return sp_; }
    int conductor() const { return cond_; }
    const TermMap& terms() const { return t_; }
    size_t term_count() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }

    /// kNegInfinity for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int* deg_out = nullptr) const;

    /// Same polynomial with coefficients lifted into Q(zeta_m).
    MPoly with_conductor(int m) const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly scaled(const Cyclo& c) const;
    MPoly scaled(const Rational& r) const { return scaled(Cyclo(r)); }
    MPoly pow(unsigned e) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    /// F(M * variable vector); M must be square of the space dimension.
    MPoly substitute_linear(const Mat& m) const;

    /// Composition: one polynomial image per variable, all in the target space.
    MPoly substitute_map(const VariableSpace* target, std::span<const MPoly> images) const;

    MPoly partial_derivative(int var) const;
    MPoly partial_derivative(const std::string& name) const {
        return partial_derivative(sp_->index_of(name));
    }

    Cyclo eval(std::span<const Cyclo> point) const;

    struct Division;
    /// Exact division: returns quotient Q with *this == Q * g, or the
    /// remainder at the point the leading-term reduction got stuck.
    Division divide_exact(const MPoly& g) const;

    /// Canonical text, terms in grad-lex order.
    std::string str() const;

    /// Sets a coefficient (dropping zeros); used by builders.
    void set_term(const Monomial& m, const Cyclo& c);

    static size_t term_cap();
    static void set_term_cap(size_t cap);

  private:
    const VariableSpace* sp_;
    int cond_;
    TermMap t_;

    void check_cap() const;
    static void align(MPoly& a, MPoly& b);
};

struct MPoly::Division {
    bool ok;
    MPoly value;  // quotient when ok, remainder witness otherwise
};

/// Determinant of the Jacobian matrix d(forms)/d(vars), expanded exactly.
/// Cofactor expansion up to 4x4, fraction-free elimination above.
MPoly jacobian_det(std::span<const MPoly> forms, std::span<const int> vars);

class RatFunc;
/// substitute_map allowing rational-function images; the result is a RatFunc.
RatFunc substitute_map_rat(const MPoly& f, const VariableSpace* target,
                           std::span<const RatFunc> images);

}  // namespace hesspoly
