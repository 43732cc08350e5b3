#include "hesspoly/forms.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace hesspoly {
namespace forms {

namespace {

using P = MPoly;

P v(const char* sp, const char* name) { return MPoly::var(space(sp), name); }
P cst(const char* sp, long r) { return MPoly::constant(space(sp), rat(r)); }

struct Entry {
    FormDef def;
    std::function<P()> build;
};

// ---- z3 space ------------------------------------------------------------

P z_phi() { return v("z3", "z1") * v("z3", "z2") * v("z3", "z3"); }
P z_psi() { return v("z3", "z1").pow(3) + v("z3", "z2").pow(3) + v("z3", "z3").pow(3); }
P z_chi() {
    P X = v("z3", "z1").pow(3), Y = v("z3", "z2").pow(3), Z = v("z3", "z3").pow(3);
    return X * Y + Y * Z + Z * X;
}
P z_Q1() {
    P z1 = v("z3", "z1"), z2 = v("z3", "z2"), z3 = v("z3", "z3");
    return z1 * z2.pow(2) + z2 * z3.pow(2) + z3 * z1.pow(2);
}
P z_Q2() {
    P z1 = v("z3", "z1"), z2 = v("z3", "z2"), z3 = v("z3", "z3");
    return z1.pow(2) * z2 + z2.pow(2) * z3 + z3.pow(2) * z1;
}
P z_G() {
    P z1 = v("z3", "z1"), z2 = v("z3", "z2"), z3 = v("z3", "z3");
    return (z1 - z2) * (z2 - z3) * (z3 - z1);
}
P z_C6() { return z_psi().pow(2) - z_chi().scaled(rat(12)); }
P z_C9() {
    P X = v("z3", "z1").pow(3), Y = v("z3", "z2").pow(3), Z = v("z3", "z3").pow(3);
    return (X - Y) * (Y - Z) * (Z - X);
}
P z_C12() {
    P psi = z_psi(), phi = z_phi();
    return psi * (psi.pow(3) + phi.pow(3).scaled(rat(216)));
}
P z_FC12() {
    P psi = z_psi(), phi = z_phi();
    return phi * (phi.pow(3).scaled(rat(27)) - psi.pow(3));
}
P z_C18() {
    P psi = z_psi(), phi = z_phi();
    return psi.pow(6) - phi.pow(3).scaled(rat(540)) * psi.pow(3) - phi.pow(6).scaled(rat(5832));
}

// complete-weight-enumerator forms under (x, y, z) = (z1, z2, z3)
P z_a_code() { return z_psi(); }
P z_p_code() { return z_phi().scaled(rat(3)); }
P z_b_code() { return z_chi(); }
P z_beta6() { return z_a_code().pow(2) - z_b_code().scaled(rat(12)); }
P z_pi9() {
    P x3 = v("z3", "z1").pow(3), y3 = v("z3", "z2").pow(3), zc = v("z3", "z3").pow(3);
    return (x3 - y3) * (y3 - zc) * (zc - x3);
}
P z_alpha12() {
    P a = z_a_code(), p = z_p_code();
    return a * (a.pow(3) + p.pow(3).scaled(rat(8)));
}

// ---- w6 space ------------------------------------------------------------

P w_U() { return v("w6", "X") + v("w6", "Y") + v("w6", "Z"); }
P w_V() { return v("w6", "X") * v("w6", "Y") * v("w6", "Z"); }
P w_sigma2() {
    P X = v("w6", "X"), Y = v("w6", "Y"), Z = v("w6", "Z");
    return X * Y + Y * Z + Z * X;
}
P w_W2() { return w_U().pow(2) - w_sigma2().scaled(rat(12)); }
P w_W3() {
    P X = v("w6", "X"), Y = v("w6", "Y"), Z = v("w6", "Z");
    return (X - Y) * (Y - Z) * (Z - X);
}
P w_fW3() { return w_V() - v("w6", "ph").pow(3); }
P w_W4() { return w_U() * (w_U().pow(3) + w_V().scaled(rat(216))); }
P w_fW4() { return v("w6", "ph") * (w_V().scaled(rat(27)) - w_U().pow(3)); }
P w_W6() {
    return w_U().pow(6) - w_V().scaled(rat(540)) * w_U().pow(3) - w_V().pow(2).scaled(rat(5832));
}
P w_fV3() {
    P ph = v("w6", "ph"), Q1 = v("w6", "Q1"), Q2 = v("w6", "Q2");
    return Q1.pow(3) + Q2.pow(3) - (w_U() + ph.scaled(rat(6))) * w_sigma2() -
           ph.pow(2).scaled(rat(6)) * w_U() - ph.pow(3).scaled(rat(9));
}
P w_fV2() {
    P ph = v("w6", "ph"), Q1 = v("w6", "Q1"), Q2 = v("w6", "Q2");
    return Q1 * Q2 - w_sigma2() - ph * w_U() - ph.pow(2).scaled(rat(3));
}
P w_fU3() {
    P Q1 = v("w6", "Q1"), Q2 = v("w6", "Q2");
    return Q1.pow(3) - Q2.pow(3) - w_W3();
}
P w_x() { return v("w6", "Q1") - v("w6", "Q2"); }
P w_y() { return w_U() + v("w6", "ph").scaled(rat(6)); }
P w_z() { return w_U() - v("w6", "ph").scaled(rat(3)); }

// ---- y5 space ------------------------------------------------------------

P y_(const char* n) { return v("y5", n); }
P y_f0() { return y_("Y0") + y_("Y1").scaled(rat(2)); }
P y_f1() { return y_("Y0") - y_("Y1"); }
P y_Phi() { return y_("Y0").pow(4) + y_("Y0").scaled(rat(8)) * y_("Y1").pow(3); }
P y_Psi() { return y_("Y0").pow(3) * y_("Y1") - y_("Y1").pow(4); }
P y_t() {
    return y_("Y0").pow(6) - y_("Y0").pow(3).scaled(rat(20)) * y_("Y1").pow(3) -
           y_("Y1").pow(6).scaled(rat(8));
}
P y_phi() { return y_("Y2") * y_("Y3") * y_("Y4"); }
P y_psi() { return y_("Y2").pow(3) + y_("Y3").pow(3) + y_("Y4").pow(3); }
P y_u() { return y_("Y0") * y_psi() + y_("Y1").scaled(rat(6)) * y_phi(); }
P y_Psi1() {
    return y_psi() * (y_("Y1").pow(3).scaled(rat(4)) - y_("Y0").pow(3)) +
           y_phi().scaled(rat(18)) * y_("Y0").pow(2) * y_("Y1");
}
P y_Psi2() {
    return -(y_psi().pow(2) * y_("Y1").pow(2)) -
           y_phi().scaled(rat(3)) * y_psi() * y_("Y0").pow(2) +
           y_phi().pow(2).scaled(rat(18)) * y_("Y0") * y_("Y1");
}
P y_Phi3() {
    return -(y_psi().pow(3) * y_("Y0")) + y_phi().scaled(rat(18)) * y_psi().pow(2) * y_("Y1") +
           y_phi().pow(3).scaled(rat(108)) * y_("Y0");
}
P y_t3() {
    return y_psi().pow(3) * (y_("Y0").pow(3) + y_("Y1").pow(3).scaled(rat(8))) -
           y_phi().scaled(rat(54)) * y_psi().pow(2) * y_("Y0").pow(2) * y_("Y1") +
           y_phi().pow(2).scaled(rat(324)) * y_psi() * y_("Y0") * y_("Y1").pow(2) +
           y_phi().pow(3).scaled(rat(216)) * (y_("Y0").pow(3) - y_("Y1").pow(3));
}
P y_C6() {
    P a = y_("Y2").pow(3), b = y_("Y3").pow(3), c = y_("Y4").pow(3);
    return y_("Y2").pow(6) + y_("Y3").pow(6) + y_("Y4").pow(6) -
           (a * b + b * c + c * a).scaled(rat(10));
}
P y_C9() {
    P a = y_("Y2").pow(3), b = y_("Y3").pow(3), c = y_("Y4").pow(3);
    return (a - b) * (b - c) * (c - a);
}
P y_C12() { return y_psi() * (y_psi().pow(3) + y_phi().pow(3).scaled(rat(216))); }
P y_FC12() { return y_phi() * (y_phi().pow(3).scaled(rat(27)) - y_psi().pow(3)); }
P y_C18() {
    return y_psi().pow(6) - y_phi().pow(3).scaled(rat(540)) * y_psi().pow(3) -
           y_phi().pow(6).scaled(rat(5832));
}
P y_G() { return (y_("Y2") - y_("Y3")) * (y_("Y3") - y_("Y4")) * (y_("Y4") - y_("Y2")); }
P y_H() { return y_psi() + y_phi().scaled(rat(6)); }
P y_K() { return y_psi() - y_phi().scaled(rat(3)); }
P y_J4() { return y_Phi() + y_u().scaled(rat(8)); }
P y_J6() { return y_t() + y_Psi1().scaled(rat(20)) - y_C6().scaled(rat(8)); }
P y_J10() {
    P s = y_Phi() * y_Psi1() + y_u() * y_t() + y_Phi().scaled(rat(2)) * y_C6() +
          y_u().scaled(rat(2)) * y_Psi1() - y_Phi3().scaled(rat(2)) - y_u().scaled(rat(2)) * y_C6();
    return s.scaled(rat(1, 24));
}
P y_J12() {
    P s = y_t().scaled(rat(3)) * y_Psi1() + y_u().scaled(rat(3)) * y_Phi().pow(2) +
          y_Psi1().pow(2).scaled(rat(19)) - y_u().pow(2).scaled(rat(9)) * y_Phi() -
          y_C6().scaled(rat(10)) * y_t() - y_t3().scaled(rat(11)) + y_u().pow(3).scaled(rat(9)) -
          y_C6().scaled(rat(2)) * y_Psi1() - y_C12().scaled(rat(4)) + y_C6().pow(2).scaled(rat(4));
    return s.scaled(rat(1, 24));
}
P y_J18() {
    P s = y_t().scaled(rat(72)) * y_Psi() * y_Psi2() +
          y_u().scaled(rat(9)) * y_Phi().pow(2) * y_Psi1() +
          y_u().pow(2).scaled(rat(9)) * y_Phi() * y_t() + y_C6().scaled(rat(288)) * y_Psi().pow(3) +
          y_Phi().pow(2).scaled(rat(4)) * y_Phi3() - y_t().scaled(rat(18)) * y_t3() -
          y_u().pow(2).scaled(rat(42)) * y_Phi() * y_Psi1() - y_u().pow(3).scaled(rat(20)) * y_t() -
          y_C6().scaled(rat(18)) * y_t() * y_Psi1() -
          y_C6().scaled(rat(18)) * y_Phi().pow(2) * y_u() + y_C12().scaled(rat(84)) * y_t() -
          y_u().scaled(rat(72)) * y_Phi() * y_Phi3() + y_u().pow(3).scaled(rat(162)) * y_Psi1() -
          y_C6().scaled(rat(240)) * y_Psi() * y_Psi2() +
          y_C6().scaled(rat(12)) * y_u().pow(2) * y_Phi() - y_C6().pow(2).scaled(rat(6)) * y_t() +
          y_Psi1().scaled(rat(24)) * y_C12() - y_u().pow(2).scaled(rat(36)) * y_Phi3() -
          y_C6().scaled(rat(6)) * y_t3() - y_C6().scaled(rat(18)) * y_u().pow(3) -
          y_C6().pow(2).scaled(rat(12)) * y_Psi1() - y_C18().scaled(rat(4)) +
          y_C6().scaled(rat(6)) * y_C12() - y_C6().pow(3).scaled(rat(2));
    return s.scaled(rat(1, 864));
}

// ---- fk4 / hk2 spaces -----------------------------------------------------

P k_(const char* n) { return v("fk4", n); }
P fk_u() { return (k_("f0") * k_("H") + k_("f1").scaled(rat(2)) * k_("K")).scaled(rat(1, 3)); }
P fk_Phi() {
    return (k_("f0") * (k_("f0").pow(3) + k_("f1").pow(3).scaled(rat(8)))).scaled(rat(1, 9));
}
P fk_Psi() { return (k_("f1") * (k_("f0").pow(3) - k_("f1").pow(3))).scaled(rat(1, 9)); }
P fk_t() {
    return (k_("f0").pow(6) - k_("f0").pow(3).scaled(rat(20)) * k_("f1").pow(3) -
            k_("f1").pow(6).scaled(rat(8)))
        .scaled(rat(-1, 27));
}
P fk_Psi1() {
    return ((k_("f0").pow(3) - k_("f1").pow(3).scaled(rat(4))) * k_("H") -
            k_("f0").pow(2).scaled(rat(6)) * k_("f1") * k_("K"))
        .scaled(rat(1, 9));
}
P fk_Psi2() {
    return (-(k_("f0").pow(2) * k_("H") * k_("K")) +
            k_("f0").scaled(rat(2)) * k_("f1") * k_("K").pow(2) - k_("f1").pow(2) * k_("H").pow(2))
        .scaled(rat(1, 9));
}
P fk_Phi3() {
    return (k_("f0") * (k_("H").pow(3) - k_("K").pow(3).scaled(rat(4))) -
            k_("f1").scaled(rat(6)) * k_("H").pow(2) * k_("K"))
        .scaled(rat(1, 9));
}
P fk_t3() {
    return (k_("f0").pow(3) * (k_("H").pow(3) + k_("K").pow(3).scaled(rat(8))) -
            k_("f0").pow(2).scaled(rat(18)) * k_("f1") * k_("H").pow(2) * k_("K") +
            k_("f0").scaled(rat(36)) * k_("f1").pow(2) * k_("H") * k_("K").pow(2) +
            k_("f1").pow(3).scaled(rat(8)) * (k_("H").pow(3) - k_("K").pow(3)))
        .scaled(rat(1, 27));
}

P h_(const char* n) { return v("hk2", n); }
P hk_C12() { return (h_("H") * (h_("H").pow(3) + h_("K").pow(3).scaled(rat(8)))).scaled(rat(1, 9)); }
P hk_FC12() { return (h_("K") * (h_("K").pow(3) - h_("H").pow(3))).scaled(rat(1, 27)); }
P hk_C18() {
    return (h_("H").pow(6) - h_("H").pow(3).scaled(rat(20)) * h_("K").pow(3) -
            h_("K").pow(6).scaled(rat(8)))
        .scaled(rat(-1, 27));
}
// code-theoretic forms in the same two variables, (x, y) read as (H, K)
P hk_psi4() { return h_("H").pow(4) + h_("H").scaled(rat(8)) * h_("K").pow(3); }
P hk_k6() {
    return h_("H").pow(6) - h_("H").pow(3).scaled(rat(20)) * h_("K").pow(3) -
           h_("K").pow(6).scaled(rat(8));
}
P hk_xi12() { return h_("K").pow(3) * (h_("H").pow(3) - h_("K").pow(3)).pow(3); }
P hk_psi8() {
    return h_("H").pow(8) + h_("H").pow(4).scaled(rat(14)) * h_("K").pow(4) + h_("K").pow(8);
}
P hk_k12() {
    return h_("H").pow(12) -
           (h_("H").pow(8) * h_("K").pow(4) + h_("H").pow(4) * h_("K").pow(8)).scaled(rat(33)) +
           h_("K").pow(12);
}
P hk_nu24() { return h_("H").pow(4) * h_("K").pow(4) * (h_("H").pow(4) - h_("K").pow(4)).pow(4); }

// ---- a3 space (Klein icosahedral forms) -----------------------------------

P a_(const char* n) { return v("a3", n); }
P kl_A() { return a_("A0").pow(2) + a_("A1") * a_("A2"); }
P kl_B() {
    return a_("A0").pow(4).scaled(rat(8)) * a_("A1") * a_("A2") -
           a_("A0").pow(2).scaled(rat(2)) * a_("A1").pow(2) * a_("A2").pow(2) +
           a_("A1").pow(3) * a_("A2").pow(3) - a_("A0") * (a_("A1").pow(5) + a_("A2").pow(5));
}
P kl_C() {
    P A0 = a_("A0"), A1 = a_("A1"), A2 = a_("A2");
    return A0.pow(6).scaled(rat(320)) * A1.pow(2) * A2.pow(2) -
           A0.pow(4).scaled(rat(160)) * A1.pow(3) * A2.pow(3) +
           A0.pow(2).scaled(rat(20)) * A1.pow(4) * A2.pow(4) +
           (A1.pow(5) * A2.pow(5)).scaled(rat(6)) -
           A0.scaled(rat(4)) * (A1.pow(5) + A2.pow(5)) *
               (A0.pow(4).scaled(rat(32)) - A0.pow(2).scaled(rat(20)) * A1 * A2 +
                (A1.pow(2) * A2.pow(2)).scaled(rat(5))) +
           A1.pow(10) + A2.pow(10);
}
P kl_D() {
    P A0 = a_("A0"), A1 = a_("A1"), A2 = a_("A2");
    return (A1.pow(5) - A2.pow(5)) *
           (A0.pow(10).scaled(rat(-1024)) + A0.pow(8).scaled(rat(3840)) * A1 * A2 -
            A0.pow(6).scaled(rat(3840)) * A1.pow(2) * A2.pow(2) +
            A0.pow(4).scaled(rat(1200)) * A1.pow(3) * A2.pow(3) -
            A0.pow(2).scaled(rat(100)) * A1.pow(4) * A2.pow(4) + A1.pow(10) + A2.pow(10) +
            (A1.pow(5) * A2.pow(5)).scaled(rat(2)) +
            A0 * (A1.pow(5) + A2.pow(5)) *
                (A0.pow(4).scaled(rat(352)) - A0.pow(2).scaled(rat(160)) * A1 * A2 +
                 (A1 * A2).pow(2).scaled(rat(10))));
}
P kl_x_nu(int nu) {
    Cyclo eps = Cyclo::zeta(5);
    P A0 = a_("A0").with_conductor(5), A1 = a_("A1").with_conductor(5),
      A2 = a_("A2").with_conductor(5);
    P four_sq = A0.pow(2).scaled(rat(4)) - A1 * A2;
    return (A1 * four_sq).scaled(-(eps.pow(nu))) +
           (A0.scaled(rat(2)) * A1.pow(2) - A2.pow(3)).scaled(eps.pow(2 * nu)) +
           (A0.scaled(rat(-2)) * A2.pow(2) + A1.pow(3)).scaled(eps.pow(3 * nu)) +
           (A2 * four_sq).scaled(eps.pow(4 * nu));
}
P kl_delta(int nu) {
    Cyclo eps = Cyclo::zeta(5);
    Cyclo s5 = Cyclo::sqrt5();
    P A0 = a_("A0").with_conductor(5), A1 = a_("A1").with_conductor(5),
      A2 = a_("A2").with_conductor(5);
    P first = A1.scaled(eps.pow(4 * nu)) - A2.scaled(eps.pow(nu));
    P tail = A1.scaled(eps.pow(4 * nu)) + A2.scaled(eps.pow(nu));
    P second = A0.scaled(Cyclo(1) + s5) + tail;
    P third = A0.scaled(Cyclo(1) - s5) + tail;
    return first * second * third;
}

// ---- g6 / x4 / mu3 spaces --------------------------------------------------

P g_(const char* n) { return v("g6", n); }
P g_lin1() { return g_("g1") + g_("g2") + g_("g3"); }
P g_lin2() { return g_("g4") + g_("g5") + g_("g6"); }
P g_cubic() {
    return g_("g1").pow(3) + g_("g2").pow(3) + g_("g3").pow(3) - g_("g4").pow(3) -
           g_("g5").pow(3) - g_("g6").pow(3);
}

P x_(const char* n) { return v("x4", n); }
P hex_cubic() {
    return x_("x1").pow(2) * x_("x2") + x_("x1") * x_("x2").pow(2) + x_("x3").pow(2) * x_("x4") +
           x_("x3") * x_("x4").pow(2);
}
P hex_factor12() { return x_("x1").pow(2) + x_("x1") * x_("x2") + x_("x2").pow(2); }
P hex_factor34() { return x_("x3").pow(2) + x_("x3") * x_("x4") + x_("x4").pow(2); }

P m_(const char* n) { return v("mu3", n); }
P hess_pencil_affine() {
    return m_("u").pow(3) + m_("v").pow(3) + (m_("mu") * m_("u") * m_("v")).scaled(rat(3)) -
           cst("mu3", 1);
}
P isog_pullback() {
    // y^2 + 3*mu*x*y + y - x^3 at y = -v^3, x = -u*v
    P u = m_("u"), w = m_("v"), mu = m_("mu");
    P yy = -w.pow(3), xx = -(u * w);
    return yy.pow(2) + (mu * xx * yy).scaled(rat(3)) + yy - xx.pow(3);
}

std::map<std::string, Entry> make_registry() {
    std::map<std::string, Entry> r;
    auto add = [&r](const std::string& name, const char* sp, std::optional<int> deg,
                    std::function<P()> b) {
        r.emplace(name, Entry{FormDef{name, sp, deg}, std::move(b)});
    };

    add("phi", "z3", 3, z_phi);
    add("psi", "z3", 3, z_psi);
    add("chi", "z3", 6, z_chi);
    add("X", "z3", 3, [] { return v("z3", "z1").pow(3); });
    add("Y", "z3", 3, [] { return v("z3", "z2").pow(3); });
    add("Z", "z3", 3, [] { return v("z3", "z3").pow(3); });
    add("Q1", "z3", 3, z_Q1);
    add("Q2", "z3", 3, z_Q2);
    add("G", "z3", 3, z_G);
    add("H", "z3", 3, [] { return z_psi() + z_phi().scaled(rat(6)); });
    add("K", "z3", 3, [] { return z_psi() - z_phi().scaled(rat(3)); });
    add("C6", "z3", 6, z_C6);
    add("C9", "z3", 9, z_C9);
    add("C12", "z3", 12, z_C12);
    add("FC12", "z3", 12, z_FC12);
    add("C18", "z3", 18, z_C18);
    add("a_code", "z3", 3, z_a_code);
    add("p_code", "z3", 3, z_p_code);
    add("b_code", "z3", 6, z_b_code);
    add("beta6", "z3", 6, z_beta6);
    add("pi9", "z3", 9, z_pi9);
    add("alpha12", "z3", 12, z_alpha12);

    add("U", "w6", 1, w_U);
    add("V", "w6", 3, w_V);
    add("W2", "w6", 2, w_W2);
    add("W3", "w6", 3, w_W3);
    add("fW3", "w6", 3, w_fW3);
    add("W4", "w6", 4, w_W4);
    add("fW4", "w6", 4, w_fW4);
    add("W6", "w6", 6, w_W6);
    add("fV3", "w6", 3, w_fV3);
    add("fV2", "w6", 2, w_fV2);
    add("fU3", "w6", 3, w_fU3);
    add("x", "w6", 1, w_x);
    add("y", "w6", 1, w_y);
    add("z", "w6", 1, w_z);

    add("f0", "y5", 1, y_f0);
    add("f1", "y5", 1, y_f1);
    add("Phi", "y5", 4, y_Phi);
    add("Psi", "y5", 4, y_Psi);
    add("t", "y5", 6, y_t);
    add("phi5", "y5", 3, y_phi);
    add("psi5", "y5", 3, y_psi);
    add("u", "y5", 4, y_u);
    add("Psi1", "y5", 6, y_Psi1);
    add("Psi2", "y5", 8, y_Psi2);
    add("Phi3", "y5", 10, y_Phi3);
    add("t3", "y5", 12, y_t3);
    add("C6y", "y5", 6, y_C6);
    add("C9y", "y5", 9, y_C9);
    add("C12y", "y5", 12, y_C12);
    add("FC12y", "y5", 12, y_FC12);
    add("C18y", "y5", 18, y_C18);
    add("Gy", "y5", 3, y_G);
    add("Hy", "y5", 3, y_H);
    add("Ky", "y5", 3, y_K);
    add("J4", "y5", 4, y_J4);
    add("J6", "y5", 6, y_J6);
    add("J10", "y5", 10, y_J10);
    add("J12", "y5", 12, y_J12);
    add("J18", "y5", 18, y_J18);

    add("u_fk", "fk4", 2, fk_u);
    add("Phi_fk", "fk4", 4, fk_Phi);
    add("Psi_fk", "fk4", 4, fk_Psi);
    add("t_fk", "fk4", 6, fk_t);
    add("Psi1_fk", "fk4", 4, fk_Psi1);
    add("Psi2_fk", "fk4", 4, fk_Psi2);
    add("Phi3_fk", "fk4", 4, fk_Phi3);
    add("t3_fk", "fk4", 6, fk_t3);

    add("C12_hk", "hk2", 4, hk_C12);
    add("FC12_hk", "hk2", 4, hk_FC12);
    add("C18_hk", "hk2", 6, hk_C18);
    add("psi4", "hk2", 4, hk_psi4);
    add("k6", "hk2", 6, hk_k6);
    add("xi12", "hk2", 12, hk_xi12);
    add("psi8", "hk2", 8, hk_psi8);
    add("k12", "hk2", 12, hk_k12);
    add("nu24", "hk2", 24, hk_nu24);

    add("klA", "a3", 2, kl_A);
    add("klB", "a3", 6, kl_B);
    add("klC", "a3", 10, kl_C);
    add("klD", "a3", 15, kl_D);
    for (int nu = 0; nu < 5; ++nu) {
        add("x_nu" + std::to_string(nu), "a3", 3, [nu] { return kl_x_nu(nu); });
        add("delta" + std::to_string(nu), "a3", 3, [nu] { return kl_delta(nu); });
    }

    add("S_lin1", "g6", 1, g_lin1);
    add("S_lin2", "g6", 1, g_lin2);
    add("S_cubic", "g6", 3, g_cubic);

    add("hex_cubic", "x4", 3, hex_cubic);
    add("hex_factor12", "x4", 2, hex_factor12);
    add("hex_factor34", "x4", 2, hex_factor34);

    add("hess_pencil_affine", "mu3", std::nullopt, hess_pencil_affine);
    add("isog_pullback", "mu3", std::nullopt, isog_pullback);

    return r;
}

std::map<std::string, Entry>& registry() {
    static std::map<std::string, Entry> r = make_registry();
    return r;
}

}  // namespace

const MPoly& build(const std::string& name) {
    static std::map<std::string, MPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto hit = cache.find(name);
    if (hit != cache.end()) return hit->second;
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown form: " + name);
    MPoly p = it->second.build();
    if (it->second.def.degree) {
        int d = 0;
        if (!p.is_homogeneous(&d) || d != *it->second.def.degree)
            throw std::logic_error("form " + name + " is not homogeneous of declared degree " +
                                   std::to_string(*it->second.def.degree));
    }
    return cache.emplace(name, std::move(p)).first->second;
}

bool is_registered(const std::string& name) { return registry().count(name) > 0; }

std::vector<FormDef> list() {
    std::vector<FormDef> out;
    for (const auto& [k, e] : registry()) out.push_back(e.def);
    return out;
}

const std::vector<MPoly>& pullback_images() {
    static std::vector<MPoly> images = {build("X"),   build("Y"),  build("Z"),
                                        build("phi"), build("Q1"), build("Q2")};
    return images;
}

MPoly pullback_z(const MPoly& f_in_w6) {
    if (f_in_w6.space() != space("w6")) throw space_mismatch("pullback_z: expected w6 polynomial");
    return f_in_w6.substitute_map(space("z3"), pullback_images());
}

}  // namespace forms
}  // namespace hesspoly
