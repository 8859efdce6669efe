#include "doctest.h"
#include "properties.hpp"

using namespace fusys;

namespace {

// Candidate family for uniqueness: F_T(M) for every intermediate group
// N <= M <= NT containing T.
std::vector<FusionSystem> candidate_family(const CatalogCase& c) {
    Subgroup NT = join(c.N, c.T);
    std::vector<FusionSystem> out;
    for (const Subgroup& M : all_subgroups(NT))
        if (M.contains_all(c.N) && M.contains_all(c.T))
            out.push_back(fusion_system_of(M, c.T, c.p));
    return out;
}

}  // namespace

TEST_CASE("automizer subgroups of the product") {
    ProductInstance inst = instance_of(case_s4a4());
    const Subgroup& S0 = inst.S0();  // V4
    AutGroup ac = a_circ(inst, S0);
    CHECK(ac.order() == 3);
    AutGroup af = a_full(inst, S0);
    CHECK(af.order() == 6);
    // Aut_F(S) is a p-group, so A°(S) is trivial
    CHECK(a_circ(inst, inst.T).order() == 1);
    // domain must lie in the carrier
    Subgroup odd = generate_subgroup(inst.F.parent,
                                     {inst.F.parent->index_of(Perm{1, 2, 0, 3})});
    CHECK_THROWS_AS(a_circ(inst, odd), std::invalid_argument);
}

TEST_CASE("degenerate carriers") {
    CatalogCase c = case_s4a4();
    // T = S: the product is the full ambient system
    ProductInstance big = instance_of(c);
    CHECK(systems_equal(big.D(), big.F).equal);
    // T = S0: the product of a system with its own carrier is itself
    CatalogCase small = c;
    small.T = intersect(c.S, c.N);
    ProductInstance tight = instance_of(small);
    CHECK(systems_equal(tight.D(), tight.F0).equal);
    // F0 = F on the same carrier: product is F again
    FusionSystem F = fusion_system_of_group(c.G, c.S, c.p);
    ProductInstance self(F, F, c.S);
    CHECK(systems_equal(self.D(), F).equal);
}

TEST_CASE("product instance validation") {
    CatalogCase c = case_s4a4();
    FusionSystem F = fusion_system_of_group(c.G, c.S, c.p);
    Subgroup Z = center(c.S);
    FusionSystem FZ = inner_fusion_system(Z, c.p);
    CHECK_THROWS_AS(ProductInstance(F, FZ, c.S), std::invalid_argument);
    // carrier below the subsystem carrier is rejected
    Subgroup S0 = intersect(c.S, c.N);
    FusionSystem F0 = fusion_system_of(c.N, S0, c.p);
    CHECK_THROWS_AS(ProductInstance(F, F0, Z), std::invalid_argument);
}

TEST_CASE("well-placed chains") {
    ProductInstance inst = instance_of(case_s4a4());
    const Subgroup& S0 = inst.S0();
    // the subsystem carrier is always well placed, chain of length one
    WellPlacedCertificate top = is_well_placed(inst, S0);
    CHECK(top.valid);
    CHECK(top.chain.size() == 1);
    WellPlacedSearchResult at_top = find_well_placed(inst, S0);
    CHECK(at_top.morphism.is_identity_map());

    // every subgroup of S0 has a well-placed conjugate; search results revalidate
    for (const Subgroup& Q0 : all_subgroups(S0)) {
        WellPlacedSearchResult r = find_well_placed(inst, Q0);
        CHECK(r.certificate.valid);
        CHECK(inst.D().contains_morphism(
            Morphism{Q0, inst.D().carrier, r.morphism.images}));
        CHECK(is_well_placed(inst, r.morphism.image_subgroup()).valid);
    }
    CHECK_THROWS_AS(is_well_placed(inst, inst.T), std::invalid_argument);
}

TEST_CASE("well-placed conditions can fail for bad class members") {
    // GL(2,3) with semidihedral Sylow: the three cyclic subgroups of order 4
    // inside Q8 are conjugate in the product system, but only the one fixed by
    // the carrier action satisfies the Sylow stabilizer condition.
    ProductInstance inst = instance_of(case_gl23sl23());
    const Subgroup& S0 = inst.S0();
    bool found_invalid = false;
    for (const Subgroup& Q0 : all_subgroups(S0)) {
        WellPlacedCertificate c = is_well_placed(inst, Q0);
        if (c.valid) continue;
        found_invalid = true;
        // the search must still produce a valid conjugate in the same class
        CHECK(find_well_placed(inst, Q0).certificate.valid);
    }
    CHECK(found_invalid);
}

TEST_CASE("hyperfocal subgroup and p-residual subsystem") {
    CatalogCase c = case_s4a4();
    FusionSystem F = fusion_system_of_group(c.G, c.S, c.p);
    Subgroup hyp = hyperfocal_subgroup(F);
    Subgroup V4 = p_core_in(full_subgroup(c.G), 2);
    CHECK(hyp.members == V4.members);

    FusionSystem opF = op_residual_subsystem(F);
    CHECK(opF.carrier.members == V4.members);
    Subgroup A4 = p_residual_in(full_subgroup(c.G), 2);
    CHECK(systems_equal(opF, fusion_system_of(A4, V4, 2)).equal);
    // O^p is idempotent
    CHECK(systems_equal(op_residual_subsystem(opF), opF).equal);

    // inner system: trivial hyperfocal subgroup
    FusionSystem inner = inner_fusion_system(c.S, 2);
    CHECK(hyperfocal_subgroup(inner).order() == 1);

    // non-saturated input is rejected
    auto V = build_group_from_permutations(4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
    Elt a = V->index_of({1, 0, 2, 3}), b = V->index_of({0, 1, 3, 2});
    Morphism phi{generate_subgroup(V, {a}), generate_subgroup(V, {b}), {0, b}};
    FusionSystem bad = generated_subsystem(full_subgroup(V), 2, {phi});
    CHECK_THROWS_AS(hyperfocal_subgroup(bad), std::invalid_argument);

    // F_T with T = S equals O^p(F)S computed as a product
    FusionSystem FT = op_residual_subsystem(F, c.S);
    ProductInstance prod(F, opF, c.S);
    CHECK(systems_equal(FT, prod.D()).equal);
}

TEST_CASE("main theorem verification with the candidate family") {
    CatalogCase c = case_s4a4();
    ProductInstance inst = instance_of(c);
    VerificationReport rep = verify_main_theorem(inst, candidate_family(c));
    CHECK(rep.pass());
    CHECK(rep.candidates_qualified >= 1);
    CHECK(rep.witnesses.empty());
}

TEST_CASE("structural properties of the product construction") {
    for (const char* name : {"s4a4", "a4v4"}) {
        CAPTURE(name);
        ProductInstance inst = instance_of(*find_case(standard_catalog(), name));
        CHECK(props::containment_chain(inst));
        CHECK(props::conjugation_factorization(inst));
        CHECK(props::extension_to_nphi(inst));
        CHECK(props::automizer_lemmas(inst));
    }
}

TEST_CASE("quotients of the product") {
    for (const char* name : {"s4a4", "s4a4xc2"}) {
        CAPTURE(name);
        CatalogCase c = *find_case(standard_catalog(), name);
        ProductInstance inst = instance_of(c);
        const FusionSystem& D = inst.D();
        const Subgroup& S0 = inst.S0();

        // (F0 T)/S0 is the inner system of T/S0
        QuotientSystem q1 = quotient_system(D, S0);
        FusionSystem innerq = inner_fusion_system(q1.quotient.carrier, c.p);
        CHECK(systems_equal(q1.quotient, innerq).equal);

        // image of F0 in D/S0 is trivial; image of D in D/T is trivial
        CHECK(q1.image_of(inst.F0).carrier.order() == 1);
        QuotientSystem q2 = quotient_system(D, inst.T);
        CHECK(q2.quotient.carrier.order() == 1);
    }
}
