#include <doctest.h>

#include <hesspoly/qseries.hpp>
#include <hesspoly/rng.hpp>

using namespace hesspoly;
using namespace hesspoly::qseries;

namespace {

// independent oracle for the hexagonal theta series: the representation
// count r(n) = 6 (d_{1 mod 3}(n) - d_{2 mod 3}(n)) for n >= 1
long r_hexagonal(long n) {
    long acc = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        if (d % 3 == 1) ++acc;
        if (d % 3 == 2) --acc;
    }
    return 6 * acc;
}

// independent sigma_r oracle by trial division
Integer sigma(long n, int r) {
    Integer acc(0);
    for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        Integer p(1);
        for (int i = 0; i < r; ++i) p *= Integer(d);
        acc += p;
    }
    return acc;
}

QSeries random_series(Rng& rng, long d, long known, int terms) {
    QSeries s(d, known);
    for (int t = 0; t < terms; ++t) {
        long e = rng.next_in(0, known - 1);
        s.set(e, rng.next_rational(9, 4));
    }
    return s;
}

}  // namespace

TEST_CASE("theta series against the divisor-count oracle") {
    QSeries t0 = theta_A2(0, 40);
    CHECK(t0.at_int(0) == 1);  // only (0, 0)
    for (long n = 1; n < 40; ++n) CHECK(t0.at_int(n) == r_hexagonal(n));
    // first few: 1 + 6q + 0q^2 + 6q^3 + 6q^4
    CHECK(t0.at_int(1) == 6);
    CHECK(t0.at_int(2) == 0);
    CHECK(t0.at_int(3) == 6);
    CHECK(t0.at_int(4) == 6);
    // theta1: leading exponent 1/3, non-negative integer coefficients
    QSeries t1 = theta_A2(1, 40);
    CHECK(t1.lead() == 1);  // units of 1/3
    for (const auto& [e, c] : t1.coeffs()) {
        CHECK(e % 3 == 1);  // exponents in 1/3 + Z
        CHECK(c >= 0);
        CHECK(is_integer(c));
    }
    // theta0 * theta1^3 has integer exponents only
    QSeries prod = t0 * t1.pow_int(3);
    for (const auto& [e, c] : prod.coeffs()) CHECK(e % 3 == 0);
}

TEST_CASE("Eisenstein series coefficients") {
    QSeries e4 = eisenstein(4, 10);
    CHECK(e4.at_int(0) == 1);
    CHECK(e4.at_int(1) == 240);
    CHECK(e4.at_int(2) == 2160);
    CHECK(e4.at_int(3) == 6720);
    for (long m = 1; m < 10; ++m) CHECK(e4.at_int(m) == Rational(sigma(m, 3)) * 240);
    QSeries e6 = eisenstein(6, 10);
    CHECK(e6.at_int(1) == -504);
    for (long m = 1; m < 10; ++m) CHECK(e6.at_int(m) == Rational(sigma(m, 5)) * -504);
}

TEST_CASE("Delta from both routes") {
    QSeries d = delta_product(12);
    CHECK(d.at_int(1) == 1);
    CHECK(d.at_int(2) == -24);
    CHECK(d.at_int(3) == 252);
    CHECK(d.at_int(4) == -1472);
    CHECK(delta_two_routes(30).pass);
}

TEST_CASE("theta-Eisenstein identities") {
    CHECK(verify_theta_eisenstein(20).pass);
    // mutation: corrupting one coefficient must be detected
    QSeries t0 = theta_A2(0, 20);
    QSeries bad = t0;
    bad.set(6, t0.at_int(2) + 1);
    QSeries e4 = eisenstein(4, 20).rescaled(3);
    QSeries t1 = theta_A2(1, 20);
    QSeries lhs = bad.pow_int(4) + (bad * t1.pow_int(3)).scaled(rat(8));
    CHECK(!(lhs - e4).is_zero_on_window());
}

TEST_CASE("eta quotients") {
    // t - 1 = 9 q^(1/3) (1 + ...) so the ratio has leading exponent 1/3
    QSeries ratio = eta_quotient({{rat(3), 3}, {rat(1, 3), -3}}, 8);
    CHECK(ratio.lead() == 24);  // 24/72 = 1/3
    CHECK(ratio.coeffs().begin()->second == 1);
    // eta(tau)^24 with the q prefactor equals Delta
    QSeries d24 = eta_quotient({{rat(1), 24}}, 10, 1);
    CHECK(d24.at_int(1) == 1);
    CHECK(d24.at_int(2) == -24);
    // empty factor list is the constant 1
    QSeries empty = eta_quotient({}, 5, 72);
    CHECK(empty.at(0) == 1);
    CHECK(empty.lead() == 0);
    // non-representable grain
    CHECK_THROWS(eta_quotient({{rat(1, 5), 1}}, 5, 72));
}

TEST_CASE("Picard-Fuchs residual") {
    CHECK(picard_fuchs_residual(12).pass);
    CHECK(rform_ode_residual(12).pass);
    // replacing f by eta(tau/3)^3 alone must fail
    QSeries eta_ratio = eta_quotient({{rat(3), 3}, {rat(1, 3), -3}}, 12);
    QSeries t = eta_ratio.scaled(rat(9)) + QSeries::one(72);
    QSeries f_wrong = eta_quotient({{rat(1, 3), 3}}, 12);
    QSeries tq = t.q_d_dq();
    QSeries f1 = f_wrong.q_d_dq() / tq;
    QSeries f2 = f1.q_d_dq() / tq;
    QSeries residual =
        (t.pow_int(3) - QSeries::one(72)) * f2 + t.pow_int(2).scaled(rat(3)) * f1 + t * f_wrong;
    CHECK(!residual.is_zero_on_window());
}

TEST_CASE("series ring axioms and the derivation property") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        QSeries a = random_series(rng, 12, 60, 6);
        QSeries b = random_series(rng, 12, 60, 6);
        QSeries c = random_series(rng, 12, 60, 6);
        CHECK(((a + b) + c - (a + (b + c))).is_zero_on_window());
        QSeries lhs = (a * b) * c, rhs = a * (b * c);
        CHECK((lhs - rhs).is_zero_on_window());
        QSeries dist = a * (b + c) - (a * b + a * c);
        CHECK(dist.is_zero_on_window());
        // q d/dq is a derivation
        QSeries der = (a * b).q_d_dq() - (a.q_d_dq() * b + a * b.q_d_dq());
        CHECK(der.is_zero_on_window());
    }
}

TEST_CASE("frontier bookkeeping never claims unknown coefficients") {
    QSeries a(1, 5);  // known below q^5
    a.set(0, Rational(1));
    a.set(4, Rational(7));
    CHECK_THROWS(a.at_int(5));
    QSeries b(1, 3);
    b.set(1, Rational(1));
    QSeries prod = a * b;  // known to min(5 + 1, 3 + 0) = 3
    CHECK(prod.known() == 3);
    CHECK_THROWS(prod.at_int(3));
    // division needs an invertible leading term
    QSeries z(1, 5);
    CHECK_THROWS(a / z);
}
