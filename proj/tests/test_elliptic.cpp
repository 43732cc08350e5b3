#include <doctest.h>

#include <hesspoly/elliptic.hpp>
#include <hesspoly/forms.hpp>
#include <hesspoly/rng.hpp>

using namespace hesspoly;
using namespace hesspoly::elliptic;

TEST_CASE("group law axioms on y^2 = x^3 - x over Q") {
    ShortCurve<Rational> E{Rational(-1), Rational(0), Rational(1)};
    // collect rational points by brute multiples of a generator of the free
    // part of a twisted curve is overkill; sample via the 2-isogeny-free
    // trick: use points of y^2 = x^3 - x ... which is rank 0.  Instead use
    // y^2 = x^3 - 2x + 1 with known point (1, 0)?  Simplest: random points on
    // y^2 = x^3 + t^2 - t^3-ish is fiddly, so take multiples of a non-torsion
    // point on y^2 = x^3 - 2x + 2:
    ShortCurve<Rational> E2{Rational(-2), Rational(2), Rational(1)};
    auto P = E2.at(Rational(1), Rational(1));
    REQUIRE(E2.on_curve(P));
    std::vector<ShortCurve<Rational>::Pt> pts;
    for (int m = -8; m <= 8; ++m) pts.push_back(E2.mul(m, P));
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const auto& a = pts[rng.next_in(0, pts.size() - 1)];
        const auto& b = pts[rng.next_in(0, pts.size() - 1)];
        const auto& c = pts[rng.next_in(0, pts.size() - 1)];
        auto lhs = E2.add(E2.add(a, b), c);
        auto rhs = E2.add(a, E2.add(b, c));
        CHECK(E2.eq(lhs, rhs));
        CHECK(E2.eq(E2.add(a, b), E2.add(b, a)));
        CHECK(E2.add(a, E2.neg(a)).inf);
        CHECK(E2.on_curve(lhs));
    }
    // 2-torsion on y^2 = x^3 - x
    auto T = E.at(Rational(0), Rational(0));
    CHECK(E.mul(2, T).inf);
}

TEST_CASE("the section 5 battery") {
    CHECK(three_torsion_P2().pass);
    CHECK(discriminant_E2t().pass);
    CHECK(j_of_E2t().pass);
    CHECK(hauptmodul_check().pass);
    CHECK(j_correspondence_check().pass);
    CHECK(deuring_invariants().pass);
    CHECK(hessian_sections().pass);
    CHECK(isogeny_divisibility().pass);
    CHECK(point_5_14_on_E().pass);
    CHECK(twist_invariance().pass);
    CHECK(rationality_criterion_E2t().pass);
}

TEST_CASE("symbolic doubling (heavier)") {
    CHECK(doubling_identity_z().pass);
    CHECK(j_of_E_z().pass);
}

TEST_CASE("Kodaira fibers") {
    auto k = kodaira_E2t();
    CHECK(k.pass);
    REQUIRE(k.fibers.size() == 4);
    for (const auto& f : k.fibers) {
        CHECK(f.n == 3);
        CHECK(f.multiplicative);
    }
    // t = 2 is not a zero of the discriminant
    const VariableSpace* sp = space("t1");
    MPoly t = MPoly::var(sp, "t");
    MPoly one = MPoly::constant(sp, rat(1));
    MPoly A = -(t * (t.pow(3) + one.scaled(rat(8)))).scaled(rat(3));
    MPoly B = -(t.pow(6) - t.pow(3).scaled(rat(20)) - one.scaled(rat(8))).scaled(rat(2));
    auto f = kodaira_at(A, B, Cyclo(2), "t=2");
    CHECK(f.n == 0);
}

TEST_CASE("rationality criterion counterexamples") {
    const VariableSpace* sp = space("t1");
    MPoly t = MPoly::var(sp, "t");
    MPoly zero = MPoly::zero(sp);
    MPoly one = MPoly::constant(sp, rat(1));
    CHECK(!rationality_criterion(zero, t.pow(7)));      // y^2 = x^3 + t^7
    CHECK(!rationality_criterion(zero, one));           // constant disc
    CHECK(rationality_criterion(zero, t));              // y^2 = x^3 + t is fine
}

TEST_CASE("Lutz-Nagell") {
    // the headline specialization
    auto r = lutz_nagell_at(1, 2, 3);
    CHECK(r.not_torsion);
    CHECK(r.mazur_not_torsion);
    // x(P), y(P) values: (-5148, 373464)
    std::vector<Cyclo> pt = {Cyclo(1), Cyclo(2), Cyclo(3)};
    CHECK(forms::build("C6").eval(pt).rational_value() * 3 == -5148);
    CHECK(forms::build("C9").eval(pt).rational_value() * 108 == 373464);
    // torsion-possible examples
    auto two_tor = lutz_nagell(Rational(0), Rational(1), Rational(-1), Rational(0));
    CHECK(!two_tor.not_torsion);  // (-1, 0) on y^2 = x^3 + 1 is 2-torsion
    CHECK(!two_tor.mazur_not_torsion);
    auto t2 = lutz_nagell(Rational(-1), Rational(0), Rational(0), Rational(0));
    CHECK(!t2.not_torsion);  // (0,0) on y^2 = x^3 - x
}

TEST_CASE("specialization commutes with the group law") {
    CHECK(specialization_commutes(20260810, 5).pass);
}

TEST_CASE("long curve internal consistency") {
    const VariableSpace* sp = space("al1");
    MPoly a = MPoly::var(sp, "al");
    MPoly one = MPoly::constant(sp, rat(1));
    RatFunc zero{MPoly::zero(sp)};
    LongCurve<RatFunc> E{RatFunc(a), zero, RatFunc(one), zero, zero, RatFunc(one)};
    CHECK(E.invariants_consistent());
}
