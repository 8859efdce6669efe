#include "doctest.h"
#include "properties.hpp"

using namespace fusys;

namespace {

struct S4Fixture {
    GroupPtr G = make_s4();
    Subgroup full = full_subgroup(G);
    Subgroup S = sylow_in(full, 2);
    Subgroup A4 = p_residual_in(full, 2);
    Subgroup V4 = p_core_in(full, 2);
    FusionSystem F = fusion_system_of_group(G, S, 2);
    FusionSystem F0 = fusion_system_of(A4, V4, 2);
};

// V = <(1 2),(3 4)> with the non-inner identification of its two factors
FusionSystem klein_generated_fixture() {
    auto G = build_group_from_permutations(4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
    Elt a = G->index_of({1, 0, 2, 3}), b = G->index_of({0, 1, 3, 2});
    Subgroup V = full_subgroup(G);
    Subgroup A = generate_subgroup(G, {a}), B = generate_subgroup(G, {b});
    Morphism phi{A, B, {0, b}};  // a -> b
    return generated_subsystem(V, 2, {phi});
}

}  // namespace

TEST_CASE("group-induced fusion systems") {
    S4Fixture fx;
    CHECK(fx.F.num_subs() == 10);
    CHECK(fx.F.aut(fx.F.subgroup_index(fx.V4.members)).order() == 6);
    CHECK(fx.F0.aut(fx.F0.subgroup_index(fx.V4.members)).order() == 3);
    CHECK_THROWS_AS(fusion_system_of_group(fx.G, fx.V4, 2), std::invalid_argument);

    // inner system: every automizer is the carrier automizer
    FusionSystem inner = inner_fusion_system(fx.S, 2);
    for (int d = 0; d < inner.num_subs(); ++d)
        CHECK(inner.aut(d).elems == aut_by_conjugation(fx.S, inner.subs[d]).elems);
}

TEST_CASE("fusion axioms hold structurally") {
    S4Fixture fx;
    const auto& F = fx.F;
    for (int d = 0; d < F.num_subs(); ++d) {
        for (const auto& img : F.homs[d]) {
            Morphism m{F.subs[d], F.carrier, img};
            CHECK(is_homomorphism(m));
            // inverse of the isomorphism onto the image is present
            Morphism inv = inverse_onto_image(Morphism{F.subs[d], m.image_subgroup(), img});
            CHECK(F.contains_morphism(inv));
            // restrictions are present
            for (int e = 0; e < F.num_subs(); ++e)
                if (F.subs[d].contains_all(F.subs[e]))
                    CHECK(F.contains_morphism(restrict_morphism(m, F.subs[e])));
        }
        // all carrier conjugations present
        for (Elt t : F.carrier.members)
            CHECK(F.has_map(d, conjugation_morphism(t, F.subs[d], F.carrier).images));
    }
}

TEST_CASE("generated subsystem closure is a fixpoint") {
    S4Fixture fx;
    std::vector<Morphism> gens;
    for (int d = 0; d < fx.F.num_subs(); ++d)
        for (const auto& img : fx.F.homs[d]) gens.push_back(Morphism{fx.F.subs[d], fx.S, img});
    FusionSystem F2 = generated_subsystem(fx.S, 2, gens);
    CHECK(systems_equal(fx.F, F2).equal);
    // generated from the single order-3 automorphism of V4: recovers F_S(S4)
    AutGroup a3 = aut_by_conjugation(fx.A4, fx.V4);
    std::vector<Morphism> small;
    for (const AutMap& a : a3.elems) small.push_back(Morphism{fx.V4, fx.S, a});
    FusionSystem F3 = generated_subsystem(fx.S, 2, small);
    CHECK(systems_equal(fx.F, F3).equal);
}

TEST_CASE("classification predicates on the symmetric-group system") {
    S4Fixture fx;
    SubgroupClassification v4c = classify_subgroup(fx.F, fx.V4);
    CHECK(v4c.fully_normalized);
    CHECK(v4c.fully_automized);
    CHECK(v4c.receptive);
    CHECK(v4c.centric);
    CHECK(v4c.radical);
    CHECK(is_centric(fx.F, fx.F.subgroup_index(fx.S.members)));

    // a non-central involution of S generates a non-centric subgroup
    Subgroup Z = center(fx.S);
    Elt x = -1;
    for (Elt g : fx.S.members)
        if (fx.S.parent->element_order(g) == 2 && !Z.contains(g)) { x = g; break; }
    REQUIRE(x >= 0);
    Subgroup P = generate_subgroup(fx.G, {x});
    CHECK_FALSE(is_centric(fx.F, fx.F.subgroup_index(P.members)));
}

TEST_CASE("saturation and its failure witness") {
    S4Fixture fx;
    CHECK(is_saturated(fx.F).saturated);
    CHECK(is_saturated(fx.F0).saturated);

    FusionSystem E = klein_generated_fixture();
    SaturationReport rep = is_saturated(E);
    CHECK_FALSE(rep.saturated);
    REQUIRE_FALSE(rep.failing_classes.empty());
    const Subgroup& bad = E.subs[rep.failing_classes.front()];
    CHECK(bad.order() == 2);
    // the witness: a fully automized member that is not receptive
    bool witness_found = false;
    for (int e : E.conjugacy_class_ids(rep.failing_classes.front())) {
        ReceptiveResult rr = is_receptive(E, E.subs[e]);
        if (!rr.receptive) {
            witness_found = true;
            CHECK(rr.witness.has_value());
        }
    }
    CHECK(witness_found);
}

TEST_CASE("strong closure") {
    S4Fixture fx;
    CHECK(is_strongly_closed(fx.F, fx.V4));
    CHECK(is_strongly_closed(fx.F, fx.S));
    Subgroup Z = center(fx.S);
    CHECK(Z.order() == 2);
    CHECK_FALSE(is_strongly_closed(fx.F, Z));
}

TEST_CASE("normal subsystem recognition") {
    S4Fixture fx;
    CHECK(is_normal_subsystem(fx.F, fx.F0).normal);
    // inner system on the non-strongly-closed center fails at the closure check
    Subgroup Z = center(fx.S);
    FusionSystem FZ = inner_fusion_system(Z, 2);
    NormalityReport nr = is_normal_subsystem(fx.F, FZ);
    CHECK_FALSE(nr.normal);
    CHECK(nr.failed_condition.substr(0, 2) == "N1");
    // the inner system on S is normal in itself but not in F (strong
    // invariance fails: fusion in F moves maps outside Aut_S)
    FusionSystem FS = inner_fusion_system(fx.S, 2);
    CHECK_FALSE(is_normal_subsystem(fx.F, FS).normal);
}

TEST_CASE("N_phi computation and subsystem restriction") {
    S4Fixture fx;
    // phi with trivial transported obstruction: N_phi contains the centralizer
    for (int d = 0; d < fx.F.num_subs(); ++d) {
        const Subgroup& P = fx.F.subs[d];
        for (const auto& img : fx.F.homs[d]) {
            Morphism phi{P, fx.S, img};
            Subgroup n = compute_N_phi(fx.F, phi);
            CHECK(n.contains_all(centralizer_in(fx.S, P)));
            CHECK(n.contains_all(P));
            CHECK(normalizer_in(fx.S, P).contains_all(n));
        }
    }
    CHECK(props::nphi_restriction(fx.F, fx.F0));
}

TEST_CASE("quotient systems") {
    S4Fixture fx;
    QuotientSystem qs = quotient_system(fx.F, fx.V4);
    CHECK(qs.quotient.carrier.order() == 2);
    CHECK(is_saturated(qs.quotient).saturated);
    // every morphism between kernel-containing subgroups induces a quotient map
    for (int d = 0; d < fx.F.num_subs(); ++d) {
        const Subgroup& P = fx.F.subs[d];
        if (!P.contains_all(fx.V4)) continue;
        for (const auto& img : fx.F.homs[d]) {
            Morphism phi{P, fx.S, img};
            std::set<int> dom;
            for (Elt x : P.members) dom.insert(qs.q.coset_of.at(x));
            std::vector<Elt> qimg;
            for (int coset : dom) {
                Elt rep = -1;
                for (Elt x : P.members)
                    if (qs.q.coset_of.at(x) == coset) { rep = x; break; }
                qimg.push_back(qs.q.coset_of.at(phi.apply(rep)));
            }
            int qd = qs.quotient.subgroup_index(std::vector<Elt>(dom.begin(), dom.end()));
            CHECK(qs.quotient.has_map(qd, qimg));
        }
    }
    // quotient by the trivial subgroup: an isomorphic copy, not the original
    QuotientSystem qt = quotient_system(fx.F, trivial_subgroup(fx.G));
    CHECK(qt.quotient.carrier.order() == fx.S.order());
    CHECK(qt.quotient.morphism_count() == fx.F.morphism_count());
    CHECK(qt.quotient.parent != fx.F.parent);
    CHECK_THROWS_AS(quotient_system(fx.F, center(fx.S)), std::invalid_argument);
}

TEST_CASE("system equality is symmetric and witnesses differences") {
    S4Fixture fx;
    CHECK(systems_equal(fx.F, fx.F).equal);
    FusionSystem inner = inner_fusion_system(fx.S, 2);
    auto ab = systems_equal(fx.F, inner);
    auto ba = systems_equal(inner, fx.F);
    CHECK_FALSE(ab.equal);
    CHECK_FALSE(ba.equal);
    CHECK_FALSE(ab.witness.empty());
    CHECK(is_subsystem_of(inner, fx.F));
    CHECK_FALSE(is_subsystem_of(fx.F, inner));
}

TEST_CASE("dump format") {
    S4Fixture fx;
    std::string d = dump_fusion_system(fx.F);
    CHECK(d.rfind("fusion p=2 carrier=", 0) == 0);
    CHECK(d.find("hom 0 -> 0 : id") != std::string::npos);
}

TEST_CASE("preliminary lemma properties on the symmetric-group case") {
    S4Fixture fx;
    CHECK(props::transport_of_automizers(fx.F));
    CHECK(props::commutator_into_centralizer(fx.F));
    CHECK(props::centric_class_stability(fx.F, fx.F0));
    CHECK(props::normalizer_transport(fx.F, fx.F0));
    CHECK(props::fully_normalized_descends(fx.F, fx.F0));
}
