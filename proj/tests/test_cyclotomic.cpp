#include <doctest.h>

#include <hesspoly/cyclotomic.hpp>
#include <hesspoly/rng.hpp>

using namespace hesspoly;

namespace {

Cyclo random_elem(Rng& rng, int n) {
    int deg = euler_phi(n);
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.push_back(rng.next_rational(20, 10));
    return Cyclo(n, c);
}

// multiply two integer polynomials, low-to-high
std::vector<Integer> ipoly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Integer>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    // Phi_12 = x^4 - x^2 + 1, cross-checked by multiplying out all divisors
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
    auto prod = cyclotomic_polynomial(1);
    for (int d : {2, 3, 4, 6, 12}) prod = ipoly_mul(prod, cyclotomic_polynomial(d));
    std::vector<Integer> x12_minus_1(13, Integer(0));
    x12_minus_1[0] = -1;
    x12_minus_1[12] = 1;
    CHECK(prod == x12_minus_1);
}

TEST_CASE("named radicals square correctly") {
    CHECK((Cyclo::sqrt_minus3() * Cyclo::sqrt_minus3()).rational_value() == -3);
    CHECK((Cyclo::sqrt5() * Cyclo::sqrt5()).rational_value() == 5);
    CHECK((Cyclo::sqrt3() * Cyclo::sqrt3()).rational_value() == 3);
    CHECK((Cyclo::sqrt2() * Cyclo::sqrt2()).rational_value() == 2);
}

TEST_CASE("inverse examples") {
    Cyclo w = Cyclo::omega();
    CHECK(w.inverse() == w.pow(2));
    // (1+2w)^-1 = -(1+2w)/3
    Cyclo s = Cyclo::sqrt_minus3();
    CHECK(s.inverse() == Cyclo(rat(-1, 3)) * s);
    CHECK((s.inverse() * s).is_one());
    CHECK(Cyclo(2).inverse() == Cyclo(rat(1, 2)));
    CHECK_THROWS(Cyclo(0).inverse());
}

TEST_CASE("conjugation") {
    Cyclo w = Cyclo::omega();
    CHECK(w.conjugate() == w.pow(2));
    CHECK(Cyclo(rat(5, 3)).conjugate() == Cyclo(rat(5, 3)));
    Cyclo s = Cyclo::sqrt_minus3();
    CHECK(s.conjugate() == -s);
    CHECK((s.conjugate() * s).rational_value() == 3);
}

TEST_CASE("embedding") {
    Cyclo w = Cyclo::omega();
    CHECK(w.embedded(12) == Cyclo::zeta(12).pow(4));
    CHECK(Cyclo::zeta(4).embedded(12) == Cyclo::zeta(12).pow(3));
    CHECK(Cyclo(rat(7, 2)).embedded(12).rational_value() == rat(7, 2));
    CHECK_THROWS_AS(Cyclo::zeta(5).embedded(12), conductor_mismatch);
    // embed commutes with invert
    Cyclo a = Cyclo(1) + w + w;  // 1 + 2w
    CHECK(a.inverse().embedded(12) == a.embedded(12).inverse());
}

TEST_CASE("field axioms on random samples") {
    for (int n : {3, 4, 5, 12}) {
        Rng rng(42 + n);
        for (int trial = 0; trial < 1000; ++trial) {
            Cyclo a = random_elem(rng, n), b = random_elem(rng, n), c = random_elem(rng, n);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            CHECK(a.conjugate().conjugate() == a);
        }
    }
}

TEST_CASE("render and parse round-trip") {
    Rng rng(7);
    for (int n : {1, 3, 4, 5, 8, 12}) {
        for (int trial = 0; trial < 50; ++trial) {
            Cyclo a = random_elem(rng, n);
            CHECK(Cyclo::parse(a.str(), n) == a);
        }
    }
    CHECK(Cyclo::parse("1 + 2*w") == Cyclo::sqrt_minus3());
    CHECK(Cyclo::parse("-3/2").rational_value() == rat(-3, 2));
    CHECK(Cyclo::parse("i").pow(2).rational_value() == -1);
}

TEST_CASE("approx is only a diagnostic but must be sane") {
    auto v = Cyclo::sqrt_minus3().approx();
    CHECK(std::abs(v.real()) < 1e-9);
    CHECK(std::abs(v.imag() - std::sqrt(3.0)) < 1e-9);
}
