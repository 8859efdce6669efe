#include "doctest.h"
#include "properties.hpp"

using namespace fusys;

TEST_CASE("catalog cases are well formed and match the group oracle") {
    std::vector<CatalogCase> cat = standard_catalog();
    CHECK(cat.size() >= 7);
    for (const CatalogCase& c : cat) {
        CAPTURE(c.name);
        Subgroup full = full_subgroup(c.G);
        CHECK(is_normal_in(full, c.N));
        CHECK(p_part(full.order(), c.p) == c.S.order());
        CHECK(c.S.contains_all(c.T));
        CHECK(c.T.contains_all(intersect(c.S, c.N)));

        ProductInstance inst = instance_of(c);
        FusionSystem oracle = oracle_product(c.G, c.N, c.T, c.p);
        CHECK(systems_equal(inst.D(), oracle).equal == c.oracle_equal);
        CHECK(is_saturated(inst.D()).saturated == c.saturated);
        FusionSystem opD = op_residual_subsystem(inst.D());
        FusionSystem opF0 = op_residual_subsystem(inst.F0);
        CHECK(systems_equal(opD, opF0).equal == c.op_identity);
    }
}

TEST_CASE("oracle rejects bad inputs") {
    auto G = make_s4();
    Subgroup full = full_subgroup(G);
    Subgroup S = sylow_in(full, 2);
    Subgroup P = generate_subgroup(G, {G->index_of(Perm{1, 0, 2, 3})});
    CHECK_THROWS_AS(oracle_product(G, P, S, 2), std::invalid_argument);  // not normal
    Subgroup A4 = p_residual_in(full, 2);
    Subgroup Z = center(S);  // order 2, inside A4, so not Sylow in N·Z = A4
    CHECK_THROWS_AS(oracle_product(G, A4, Z, 2), std::invalid_argument);
}

TEST_CASE("scaling example, two lines in a plane") {
    Fixture74 fx = fixture_example_7_4(3);
    CHECK(fx.S.order() == 9);
    CHECK(fx.G1.order() == 18);
    CHECK(fx.G2.order() == 18);
    CHECK(fx.U.order() == 3);
    CHECK(is_saturated(fx.F).saturated);
    CHECK(is_saturated(fx.Gsys).saturated);

    // the two systems differ, yet share the same p-residual subsystem
    CHECK_FALSE(systems_equal(fx.F, fx.Gsys).equal);
    FusionSystem opF = op_residual_subsystem(fx.F);
    FusionSystem opG = op_residual_subsystem(fx.Gsys);
    CHECK(systems_equal(opF, opG).equal);
    CHECK(hyperfocal_subgroup(fx.F).members == fx.U.members);
    CHECK(systems_equal(fx.F0, opF).equal);

    // the two products with the full carrier therefore also differ
    ProductInstance p1(fx.F, fx.F0, fx.S);
    ProductInstance p2(fx.Gsys, opG, fx.S);
    CHECK_FALSE(systems_equal(p1.D(), p2.D()).equal);

    CHECK_THROWS_AS(fixture_example_7_4(2), std::invalid_argument);
}

TEST_CASE("scaling example over a larger field") {
    Fixture74 fx = fixture_example_7_4(5);
    CHECK(fx.S.order() == 25);
    CHECK_FALSE(systems_equal(fx.F, fx.Gsys).equal);
    CHECK(systems_equal(op_residual_subsystem(fx.F),
                        op_residual_subsystem(fx.Gsys)).equal);
}

TEST_CASE("three-dimensional example with an escaping automorphism") {
    Fixture75 fx = fixture_example_7_5(3);
    CHECK(fx.S.order() == 27);
    CHECK(fx.S0.order() == 9);
    CHECK(fx.P.order() == 9);
    CHECK(is_normal_subsystem(fx.F, fx.F0).normal);

    ProductInstance inst(fx.F, fx.F0, fx.S);
    const FusionSystem& D = inst.D();

    // alpha restricts to an element of A°(P) ...
    Morphism alphaP = conjugation_morphism(fx.alpha, fx.P, fx.S);
    AutGroup ac = a_circ(inst, fx.P);
    CHECK(ac.contains(alphaP.images));
    // ... but the product has no nontrivial automorphism of P at all
    CHECK(D.aut(D.subgroup_index(fx.P.members)).order() == 1);
    // hence A(P) is not contained in Aut_{F0 S}(P)
    AutGroup af = a_full(inst, fx.P);
    bool contained = true;
    for (const AutMap& a : af.elems)
        if (!D.aut(D.subgroup_index(fx.P.members)).contains(a)) contained = false;
    CHECK_FALSE(contained);

    CHECK_THROWS_AS(fixture_example_7_5(2), std::invalid_argument);
}
