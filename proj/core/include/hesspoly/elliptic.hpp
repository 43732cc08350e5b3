#pragma once

#include <string>

#include "hesspoly/ratfunc.hpp"

namespace hesspoly {

/// Short Weierstrass curve y^2 = x^3 + A x + B over any exact field type E
/// supporting +, -, *, /, == (Rational, Cyclo, RatFunc).  Small integers are
/// synthesized from the supplied `one`, so E needs no extra traits.
template <class E>
class ShortCurve {
  public:
    struct Pt {
        bool inf;
        E x, y;
    };

    ShortCurve(E A, E B, E one)
        : A_(std::move(A)), B_(std::move(B)), one_(one), zero_(one - one) {}

    const E& A() const { return A_; }
    const E& B() const { return B_; }

    E num(long v) const {
        bool neg = v < 0;
        unsigned long mag = neg ? -static_cast<unsigned long>(v) : v;
        E acc = zero_;
        E base = one_;
        while (mag) {
            if (mag & 1) acc = acc + base;
            mag >>= 1;
            if (mag) base = base + base;
        }
        return neg ? zero_ - acc : acc;
    }

    Pt infinity() const { return {true, zero_, zero_}; }
    Pt at(E x, E y) const { return {false, std::move(x), std::move(y)}; }

    bool on_curve(const Pt& p) const {
        if (p.inf) return true;
        return p.y * p.y == p.x * p.x * p.x + A_ * p.x + B_;
    }

    bool eq(const Pt& p, const Pt& q) const {
        if (p.inf || q.inf) return p.inf == q.inf;
        return p.x == q.x && p.y == q.y;
    }

    Pt neg(const Pt& p) const {
        if (p.inf) return p;
        return {false, p.x, zero_ - p.y};
    }

    Pt add(const Pt& p, const Pt& q) const {
        if (p.inf) return q;
        if (q.inf) return p;
        if (p.x == q.x) {
            if (p.y == zero_ - q.y) return infinity();
            // tangent
            E lam = (num(3) * p.x * p.x + A_) / (num(2) * p.y);
            E x3 = lam * lam - p.x - q.x;
            E y3 = lam * (p.x - x3) - p.y;
            return {false, x3, y3};
        }
        E lam = (q.y - p.y) / (q.x - p.x);
        E x3 = lam * lam - p.x - q.x;
        E y3 = lam * (p.x - x3) - p.y;
        return {false, x3, y3};
    }

    Pt mul(long m, const Pt& p) const {
        if (m < 0) return neg(mul(-m, p));
        Pt acc = infinity();
        Pt base = p;
        while (m) {
            if (m & 1) acc = add(acc, base);
            m >>= 1;
            if (m) base = add(base, base);
        }
        return acc;
    }

    /// -16 (4 A^3 + 27 B^2)
    E disc() const {
        return num(-16) * (num(4) * A_ * A_ * A_ + num(27) * B_ * B_);
    }
    /// c4 = -48 A
    E c4() const { return num(-48) * A_; }
    /// j = c4^3 / Delta = 6912 A^3 / (4 A^3 + 27 B^2)
    E j() const {
        return num(6912) * A_ * A_ * A_ / (num(4) * A_ * A_ * A_ + num(27) * B_ * B_);
    }

  private:
    E A_, B_, one_, zero_;
};

/// General Weierstrass form y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
/// with the standard derived quantities.
template <class E>
class LongCurve {
  public:
    LongCurve(E a1, E a2, E a3, E a4, E a6, E one)
        : a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6), one_(one), zero_(one - one) {}

    E num(long v) const {
        bool neg = v < 0;
        unsigned long mag = neg ? -static_cast<unsigned long>(v) : v;
        E acc = zero_;
        E base = one_;
        while (mag) {
            if (mag & 1) acc = acc + base;
            mag >>= 1;
            if (mag) base = base + base;
        }
        return neg ? zero_ - acc : acc;
    }

    E b2() const { return a1_ * a1_ + num(4) * a2_; }
    E b4() const { return num(2) * a4_ + a1_ * a3_; }
    E b6() const { return a3_ * a3_ + num(4) * a6_; }
    E b8() const {
        return a1_ * a1_ * a6_ + num(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
               a4_ * a4_;
    }
    E c4() const { return b2() * b2() - num(24) * b4(); }
    E c6() const { return zero_ - b2() * b2() * b2() + num(36) * b2() * b4() - num(216) * b6(); }
    E disc() const {
        E B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return zero_ - B2 * B2 * B8 - num(8) * B4 * B4 * B4 - num(27) * B6 * B6 +
               num(9) * B2 * B4 * B6;
    }
    E j() const {
        E C4 = c4();
        return C4 * C4 * C4 / disc();
    }
    /// 1728 disc == c4^3 - c6^2, an internal consistency identity.
    bool invariants_consistent() const {
        E C4 = c4(), C6 = c6();
        return num(1728) * disc() == C4 * C4 * C4 - C6 * C6;
    }

  private:
    E a1_, a2_, a3_, a4_, a6_, one_, zero_;
};

namespace elliptic {

struct Check {
    bool pass;
    std::string detail;
};

/// [2]P2 = -P2 and [3]P2 = O for P2 = (3t^2, 4(t^3-1)) on E_{2,t} over Q(t).
Check three_torsion_P2();

/// Symbolic doubling of P = (3 C6, 108 C9) on y^2 = x^3 - 27 C12 x + 54 C18
/// equals the displayed pair.
Check doubling_identity_z();

/// disc(E_{2,t}) = 2^12 3^3 (t-1)^3 (t^2+t+1)^3.
Check discriminant_E2t();

/// j of the z-coefficient curve equals -C12^3 / FC12^3.
Check j_of_E_z();

/// j(E_{2,t}) = 27 t^3 (t^3+8)^3 / (t^3-1)^3.
Check j_of_E2t();

/// j(rho) with rho = 3(t+2)/(t-1) equals j(E_{2,t}).
Check hauptmodul_check();

/// j1(1/r) = j2(r) plus the long-form j of y^2 + 3t xy + y = x^3.
Check j_correspondence_check();

/// Deuring normal form y^2 + a xy + y = x^3: disc = a^3 - 27 and
/// j = a^3 (a^3-24)^3 / (a^3-27).
Check deuring_invariants();

/// The nine listed sections lie on u^3+v^3+w^3 = 3 mu u v w identically.
Check hessian_sections();

/// y^2+3 mu x y+y-x^3 at y=-v^3, x=-uv is v^3 * (u^3+v^3+3 mu u v - 1).
Check isogeny_divisibility();

/// (3 H^2, 4(H^3-K^3)) lies on the z-coefficient curve.
Check point_5_14_on_E();

/// j is unchanged under (A, B) -> (u^4 A, u^6 B).
Check twist_invariance();

/// deg p <= 4, deg q <= 6, disc nonconstant for E_{2,t}; generic helper for
/// other (p, q) pairs.
Check rationality_criterion_E2t();
bool rationality_criterion(const MPoly& p, const MPoly& q);

struct KodairaFiber {
    std::string place;
    int n;                // ord of disc
    bool multiplicative;  // c4 nonzero at the place
};
struct KodairaResult {
    bool pass;
    std::string detail;
    std::vector<KodairaFiber> fibers;
};
/// Fiber types of E_{2,t} at t = 1, omega, conj(omega), infinity.
KodairaResult kodaira_E2t();
/// ord of disc at a finite place t = c together with the multiplicative flag;
/// n = 0 means not a zero of the discriminant.
KodairaFiber kodaira_at(const MPoly& A, const MPoly& B, const Cyclo& c, const std::string& label);

struct LutzNagellResult {
    bool not_torsion;        // by the Lutz-Nagell conditions
    bool mazur_not_torsion;  // no [m]P = O for m <= 12
    std::string detail;
};
/// The curve specialized at integer (z1, z2, z3) with P = (3 C6, 108 C9).
LutzNagellResult lutz_nagell_at(long z1, long z2, long z3);
/// Generic short-Weierstrass test for integer A, B and a rational point.
LutzNagellResult lutz_nagell(const Rational& A, const Rational& B, const Rational& x,
                             const Rational& y);

/// [m] specialize = specialize [m] for m <= 4 at random integer triples with
/// disc != 0.
Check specialization_commutes(uint64_t seed, int triples);

}  // namespace elliptic

}  // namespace hesspoly
