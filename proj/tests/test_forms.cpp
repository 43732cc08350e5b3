#include <doctest.h>

#include <hesspoly/forms.hpp>
#include <hesspoly/groups.hpp>

using namespace hesspoly;

TEST_CASE("every registered form builds; declared degrees are enforced") {
    for (const auto& def : forms::list()) {
        const MPoly& p = forms::build(def.name);
        CHECK(!p.is_zero());
        if (def.degree) {
            int d = 0;
            CHECK(p.is_homogeneous(&d));
            CHECK(d == *def.degree);
        }
    }
    CHECK_THROWS(forms::build("no_such_form"));
}

TEST_CASE("spot values from the defining displays") {
    std::vector<Cyclo> e1 = {Cyclo(1), Cyclo(0), Cyclo(0)};
    CHECK(forms::build("C6").eval(e1).rational_value() == 1);
    std::vector<Cyclo> w6pt = {Cyclo(1), Cyclo(1), Cyclo(1), Cyclo(0), Cyclo(0), Cyclo(0)};
    CHECK(forms::build("W4").eval(w6pt).rational_value() == 729);
    std::vector<Cyclo> y5pt = {Cyclo(1), Cyclo(1), Cyclo(0), Cyclo(0), Cyclo(0)};
    CHECK(forms::build("t").eval(y5pt).rational_value() == -27);
}

TEST_CASE("pullback identifications and kernel") {
    CHECK(forms::pullback_z(forms::build("W2")) == forms::build("C6"));
    CHECK(forms::pullback_z(forms::build("W3")) == forms::build("C9"));
    CHECK(forms::pullback_z(forms::build("W4")) == forms::build("C12"));
    CHECK(forms::pullback_z(forms::build("fW4")) == forms::build("FC12"));
    CHECK(forms::pullback_z(forms::build("W6")) == forms::build("C18"));
    CHECK(forms::pullback_z(forms::build("fW3")).is_zero());
    CHECK(forms::pullback_z(forms::build("fV2")).is_zero());
    CHECK(forms::pullback_z(forms::build("fV3")).is_zero());
    // fU3 - (Q1^3 - Q2^3) + W3 also dies: fU3 itself pulls back to zero
    CHECK(forms::pullback_z(forms::build("fU3")).is_zero());
}

TEST_CASE("duality bookkeeping between Theorem 2.1 images and Eq. 2.13") {
    // renaming (f0 -> H, f1 -> K) in the fk4 images of Phi, Psi, t gives the
    // (H, K) forms of C12, -3 FC12, C18
    const VariableSpace* fk = space("fk4");
    std::vector<MPoly> swap_img = {MPoly::var(fk, "H"), MPoly::var(fk, "K"),
                                   MPoly::var(fk, "f0"), MPoly::var(fk, "f1")};
    std::vector<MPoly> hk_img = {MPoly::var(fk, "H"), MPoly::var(fk, "K")};
    auto swapped = [&](const char* n) { return forms::build(n).substitute_map(fk, swap_img); };
    auto hk = [&](const char* n) { return forms::build(n).substitute_map(fk, hk_img); };
    CHECK(swapped("Phi_fk") == hk("C12_hk"));
    CHECK(swapped("Psi_fk") == hk("FC12_hk").scaled(rat(-3)));
    CHECK(swapped("t_fk") == hk("C18_hk"));
}

TEST_CASE("J4 decomposes in the invariant basis") {
    std::vector<MPoly> basis = {forms::build("Phi"), forms::build("u")};
    auto coeffs = groups::express_in_basis(forms::build("J4"), basis);
    REQUIRE(coeffs.has_value());
    CHECK((*coeffs)[0] == Cyclo(1));
    CHECK((*coeffs)[1] == Cyclo(8));
    // z1^4 is not in the span of Phi
    std::vector<MPoly> just_phi = {forms::build("Phi")};
    CHECK(!groups::express_in_basis(MPoly::var(space("y5"), 0).pow(4), just_phi).has_value());
}

TEST_CASE("x_nu and delta_nu live in the conductor-5 field") {
    for (int nu = 0; nu < 5; ++nu) {
        CHECK(forms::build("x_nu" + std::to_string(nu)).conductor() == 5);
        CHECK(forms::build("delta" + std::to_string(nu)).conductor() == 5);
    }
}
