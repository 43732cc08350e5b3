#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hesspoly/rational.hpp"

namespace hesspoly {

struct conductor_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The n-th cyclotomic polynomial, integer coefficients from constant term up.
/// Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.
std::vector<Integer> cyclotomic_polynomial(int n);

/// Element of Q(zeta_n), stored as a residue modulo Phi_n with rational
/// coefficients.  Conductor 1 is plain Q.  Values are immutable once built;
/// every operation returns a reduced (canonical) result, so equality is
/// coefficient-sequence equality.
class Cyclo {
  public:
    Cyclo() : n_(1), c_(1, Rational(0)) {}
    explicit Cyclo(const Rational& r) : n_(1), c_(1, r) {}
    explicit Cyclo(long v) : n_(1), c_(1, rat(v)) {}
    Cyclo(int n, std::vector<Rational> coeffs);

    /// zeta_n itself.
    static Cyclo zeta(int n);
    /// omega = zeta_3.
    static Cyclo omega() { return zeta(3); }
    /// sqrt(-3) = 1 + 2*omega, conductor 3.
    static Cyclo sqrt_minus3();
    /// sqrt(5) = 1 + 2*eps + 2*eps^4 with eps = zeta_5, conductor 5.
    static Cyclo sqrt5();
    /// sqrt(3) = zeta_12 + zeta_12^11, conductor 12.
    static Cyclo sqrt3();
    /// sqrt(2) = zeta_8 + zeta_8^7, conductor 8.
    static Cyclo sqrt2();

    int conductor() const { return n_; }
    int degree() const { return static_cast<int>(c_.size()); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational rational_value() const;

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws on zero.
    Cyclo inverse() const;
    Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }

    /// zeta_n -> zeta_n^(n-1); an involutive field automorphism fixing Q.
    Cyclo conjugate() const;

    /// Image in Q(zeta_m); requires conductor() | m.
    Cyclo embedded(int m) const;

    Cyclo pow(long e) const;

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }
    /// Total order on (conductor, coefficient sequence); used for canonical
    /// dedup in group closures.
    bool operator<(const Cyclo& o) const;

    /// Canonical text, e.g. "1 + 2*w" (conductor 3) or "z12^3" (conductor 12).
    std::string str() const;
    /// Inverse of str(); conductor inferred from the symbols present, lifted
    /// to `hint` when given.
    static Cyclo parse(const std::string& text, int conductor_hint = 0);

    /// Floating-point image under zeta_n -> exp(2*pi*i/n); diagnostics only.
    std::complex<double> approx() const;

  private:
    int n_;
    std::vector<Rational> c_;  // length = euler_phi(n_)

    void reduce_tail(std::vector<Rational>& raw) const;
};

int euler_phi(int n);

inline Cyclo operator*(const Rational& r, const Cyclo& a) { return Cyclo(r) * a; }
inline Cyclo operator*(long v, const Cyclo& a) { return Cyclo(v) * a; }

}  // namespace hesspoly
