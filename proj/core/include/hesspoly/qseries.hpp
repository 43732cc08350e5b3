#pragma once

#include <map>
#include <string>
#include <vector>

#include "hesspoly/rational.hpp"

namespace hesspoly {

/// Truncated formal expansion in fractional powers of q with exact rational
/// coefficients.  Exponents are integer multiples of 1/d; coefficients with
/// exponent below the frontier `known` (exclusive, in units of 1/d) are
/// correct, everything at or beyond it is unknown.  Arithmetic tightens the
/// frontier pessimistically and never claims unverified coefficients.
class QSeries {
  public:
    static constexpr long kInf = LONG_MAX / 4;

    QSeries(long d, long known) : d_(d), known_(known) {}

    static QSeries one(long d) {
        QSeries s(d, kInf);
        s.c_[0] = 1;
        return s;
    }
    static QSeries constant(long d, const Rational& r) {
        QSeries s(d, kInf);
        if (r != 0) s.c_[0] = r;
        return s;
    }
    /// c * q^(num/d)
    static QSeries monomial(long d, long num, const Rational& c) {
        QSeries s(d, kInf);
        if (c != 0) s.c_[num] = c;
        return s;
    }

    long denom() const { return d_; }
    long known() const { return known_; }
    /// Smallest stored exponent (units of 1/d); frontier when zero so far.
    long lead() const { return c_.empty() ? known_ : c_.begin()->first; }
    bool is_zero_on_window() const { return c_.empty(); }
    const std::map<long, Rational>& coeffs() const { return c_; }

    /// Coefficient of q^(num/d); throws past the frontier.
    Rational at(long num) const;
    /// Coefficient of the integer power q^k.
    Rational at_int(long k) const { return at(k * d_); }

    /// Same series with exponent denominator m (d | m).
    QSeries rescaled(long m) const;
    QSeries truncated(long new_known) const;

    QSeries operator-() const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    /// Requires a nonzero leading coefficient of o inside its window.
    QSeries operator/(const QSeries& o) const;
    QSeries scaled(const Rational& r) const;
    QSeries pow_int(long e) const;
    QSeries inverse() const;

    /// q d/dq: multiplies the coefficient of q^e by e.
    QSeries q_d_dq() const;

    void set(long num, const Rational& r);

    std::string str(long max_terms = 12) const;

  private:
    long d_;
    std::map<long, Rational> c_;
    long known_;

    static long lcm_den(const QSeries& a, const QSeries& b);
};

namespace qseries {

/// theta_0 (which = 0) or theta_1 (which = 1) of the hexagonal lattice, all
/// exponents below N complete.  d = 3.
QSeries theta_A2(int which, int N);

/// E4 or E6 normalized Eisenstein series to q^(N-1); d = 1.
QSeries eisenstein(int k, int N);

QSeries delta_eisenstein(int N);
QSeries delta_product(int N);

/// Product of eta(k*tau)^e factors as a d-denominator series complete below
/// q^N.  Throws when an exponent k*e/24 or a factor grain k is not an
/// integer multiple of 1/d.
QSeries eta_quotient(const std::vector<std::pair<Rational, int>>& factors, int N, long d = 72);

struct Check {
    bool pass;
    std::string detail;
};

/// theta0^4 + 8 theta0 theta1^3 = E4 and theta0^6 - 20 theta0^3 theta1^3
/// - 8 theta1^6 = E6, coefficientwise below q^N.
Check verify_theta_eisenstein(int N);

/// Delta via (E4^3 - E6^2)/1728 against the product formula, below q^N.
Check delta_two_routes(int N);

/// Residual of (t^3 - 1) f'' + 3 t^2 f' + t f with t, f eta expressions;
/// window determined by N integer q-powers of input series.
Check picard_fuchs_residual(int N);

/// Same solution pair written in the variable r (t = 9r + 1):
/// r (27 r^2 + 9 r + 1) f'' + (9r+1)^2 f' + 3 (9r+1) f.
Check rform_ode_residual(int N);

}  // namespace qseries

}  // namespace hesspoly
