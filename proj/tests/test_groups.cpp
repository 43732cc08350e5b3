#include <doctest.h>

#include <hesspoly/forms.hpp>
#include <hesspoly/groups.hpp>

using namespace hesspoly;
using namespace hesspoly::groups;

TEST_CASE("closure orders") {
    CHECK(closure(gen_set("hessian216"), ClosureMode::Projective).order() == 216);
    // As projective 3x3 transformations <A,B,C,E> has order 36 (E^2 and B
    // agree projectively); the order-72 group of the text is the induced
    // 6x6 matrix group, checked below.
    CHECK(closure(gen_set("h72"), ClosureMode::Projective).order() == 36);
    CHECK(closure(gen_set("induced6"), ClosureMode::Matrix).order() == 72);
    CHECK(closure(gen_set("g4"), ClosureMode::Matrix).order() == 2592);
    CHECK(closure(gen_set("h2"), ClosureMode::Matrix).order() == 192);
    CHECK_THROWS_AS(closure(gen_set("g4"), ClosureMode::Matrix, 100), closure_cap_exceeded);
}

TEST_CASE("projective order times scalar subgroup equals matrix order") {
    for (const char* name : {"hessian216", "g4"}) {
        auto matc = closure(gen_set(name), ClosureMode::Matrix);
        auto proj = closure(gen_set(name), ClosureMode::Projective);
        CHECK(proj.order() * scalar_subgroup_order(matc) == matc.order());
    }
}

TEST_CASE("g4 center and quotient") {
    auto gc = closure(gen_set("g4"), ClosureMode::Matrix);
    size_t z = center_order(gc, gen_set("g4"));
    CHECK(z == 12);
    CHECK(gc.order() / z == 216);
}

TEST_CASE("h2 center contains -I") {
    auto gc = closure(gen_set("h2"), ClosureMode::Matrix);
    CHECK(gc.order() == 192);
    CHECK(center_order(gc, gen_set("h2")) >= 2);
    CHECK(gc.contains(-Mat::identity(2)));
}

TEST_CASE("registered matrix relations") {
    for (const char* name : {"burkhardt", "maschke", "induced6", "hessian216"}) {
        for (const auto& r : verify_matrix_relations(name)) {
            INFO(name << ": " << r.name);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("g3 even subgroup is SL2(F3)") {
    auto even = g3_even_closure();
    CHECK(even.order() == 24);
    // the full <M3, N3> closure is the reflection group of order 48
    CHECK(closure(gen_set("g3"), ClosureMode::Matrix).order() == 48);
}

TEST_CASE("semi-invariant scalars") {
    const auto& gs = gen_set("hessian216");
    auto lam = semi_invariant_scalar(forms::build("C6").with_conductor(3), gs.gen("A"));
    REQUIRE(lam.has_value());
    CHECK(lam->is_one());
    auto lamG = semi_invariant_scalar(forms::build("G").with_conductor(3), gs.gen("B"));
    REQUIRE(lamG.has_value());
    CHECK(*lamG == Cyclo(-1));
    // z1 is not semi-invariant under E
    CHECK(!semi_invariant_scalar(MPoly::var(space("z3"), 0, 3), gs.gen("E")).has_value());
    // multiplicativity over generator pairs when both exist
    const MPoly& C9 = forms::build("C9");
    for (const char* g1 : {"A", "B", "C"}) {
        for (const char* g2 : {"A", "B", "C"}) {
            auto l1 = semi_invariant_scalar(C9.with_conductor(3), gs.gen(g1));
            auto l2 = semi_invariant_scalar(C9.with_conductor(3), gs.gen(g2));
            auto l12 = semi_invariant_scalar(C9.with_conductor(3), gs.gen(g1) * gs.gen(g2));
            REQUIRE(l1.has_value());
            REQUIRE(l2.has_value());
            REQUIRE(l12.has_value());
            CHECK(*l12 == *l1 * *l2);
        }
    }
}

TEST_CASE("integrality of the induced 6x6 group") {
    auto gc = closure(gen_set("induced6"), ClosureMode::Matrix);
    REQUIRE(gc.order() == 72);
    for (const auto& row : integrality_report(gc)) {
        CHECK(row.det_integer);
        CHECK(row.trace_integer);
    }
    const auto& ind = gen_set("induced6");
    CHECK(ind.gen("E").det() == Cyclo(-1));
    CHECK(ind.gen("A").det() == Cyclo(1));
    CHECK(ind.gen("A").trace() == Cyclo(3));
    CHECK(ind.gen("B").trace() == Cyclo(2));
    CHECK(ind.gen("C").trace() == Cyclo(3));
    CHECK(ind.gen("B").det() == Cyclo(1));
    CHECK(ind.gen("C").det() == Cyclo(1));
}

TEST_CASE("closure is stable under generator reordering") {
    GenSet reordered = gen_set("h72");
    std::swap(reordered.gens[0], reordered.gens[2]);
    CHECK(closure(reordered, ClosureMode::Projective).order() ==
          closure(gen_set("h72"), ClosureMode::Projective).order());
}

TEST_CASE("h2 character closure splits 96/96") {
    auto chi = h2_closure_with_character();
    CHECK(chi.size() == 192);
    int plus = 0;
    for (const auto& [m, c] : chi)
        if (c == 1) ++plus;
    CHECK(plus == 96);
}
