#include "doctest.h"
#include "fusys/catalog.hpp"
#include "fusys/groupfile.hpp"

#include <sstream>

using namespace fusys;

namespace {
GroupPtr s4() { return make_s4(); }
Subgroup v4_of(const GroupPtr& G) { return p_core_in(full_subgroup(G), 2); }
}  // namespace

TEST_CASE("closure from permutation generators") {
    auto d8 = build_group_from_permutations(4, {{1, 2, 3, 0}, {2, 1, 0, 3}});  // (1234),(13)
    CHECK(d8->order() == 8);
    auto a4 = make_a4();
    CHECK(a4->order() == 12);
    auto triv = build_group_from_permutations(1, {});
    CHECK(triv->order() == 1);
    CHECK(s4()->order() == 24);
}

TEST_CASE("group axioms hold exhaustively on all fixture groups") {
    for (const auto& G : {make_s4(), make_a4(), make_s4_x_c2(), make_s3_x_s3(), make_gl23(),
                          make_sl23()})
        CHECK(validate_group(G));
}

TEST_CASE("order cap raises a size-limit error") {
    CHECK_THROWS_AS(FiniteGroup::from_permutations(4, {{1, 2, 3, 0}}, 2), SizeLimitError);
}

TEST_CASE("subgroup generation is idempotent and Lagrange holds") {
    auto G = s4();
    for (const Subgroup& H : all_subgroups(full_subgroup(G))) {
        CHECK(generate_subgroup(G, H.members).members == H.members);
        CHECK(G->order() % H.order() == 0);
    }
}

TEST_CASE("local subgroup data on the symmetric-group fixture") {
    auto G = s4();
    Subgroup V4 = v4_of(G);
    LocalData ld = local_subgroup_data(G, V4);
    CHECK(ld.normalizer.order() == 24);
    CHECK(ld.centralizer.members == V4.members);

    // transposition (1 3): centralizer of order 4 containing (2 4)
    Perm t13 = {2, 1, 0, 3}, t24 = {0, 3, 2, 1};
    Subgroup P = generate_subgroup(G, {G->index_of(t13)});
    LocalData ld2 = local_subgroup_data(G, P);
    CHECK(ld2.centralizer.order() == 4);
    CHECK(ld2.centralizer.contains(G->index_of(t24)));

    Subgroup full = full_subgroup(G);
    LocalData ld3 = local_subgroup_data(G, full);
    CHECK(ld3.normalizer.order() == 24);
    CHECK(ld3.centralizer.members == center(full).members);
    CHECK(ld3.centralizer.order() == 1);
}

TEST_CASE("Sylow subgroups and cores") {
    auto G = s4();
    SylowData sd = sylow_and_cores(G, 2);
    CHECK(sd.sylow.order() == 8);
    CHECK(sd.p_residual.order() == 12);  // alternating subgroup
    CHECK(sd.p_core.order() == 4);
    CHECK(is_normal_in(full_subgroup(G), sd.p_residual));
    CHECK(is_normal_in(full_subgroup(G), sd.p_core));
    CHECK(sd.sylow.contains_all(sd.p_core));

    auto A = make_a4();
    SylowData sa = sylow_and_cores(A, 2);
    CHECK(sa.sylow.order() == 4);
    CHECK(sa.p_core.members == sa.sylow.members);
    CHECK(sa.p_residual.order() == 12);

    // a p-group: O^p trivial, O_p = G, sylow = G
    auto D8 = build_group_from_permutations(4, {{1, 2, 3, 0}, {2, 1, 0, 3}});
    SylowData sp = sylow_and_cores(D8, 2);
    CHECK(sp.sylow.order() == 8);
    CHECK(sp.p_core.order() == 8);
    CHECK(sp.p_residual.order() == 1);
}

TEST_CASE("conjugation morphisms") {
    auto G = s4();
    Subgroup V4 = v4_of(G);
    Morphism inc = conjugation_morphism(0, V4, full_subgroup(G));
    CHECK(inc.is_identity_map());

    Perm t13 = {2, 1, 0, 3}, t24 = {0, 3, 2, 1}, d = {1, 0, 3, 2};  // (12)(34)
    Subgroup P = generate_subgroup(G, {G->index_of(t13)});
    Subgroup Q = generate_subgroup(G, {G->index_of(t24)});
    Morphism m = conjugation_morphism(G->index_of(d), P, Q);
    CHECK(is_homomorphism(m));
    CHECK(m.image_subgroup().members == Q.members);
    CHECK_THROWS_AS(conjugation_morphism(G->index_of(d), P, P), std::invalid_argument);

    // conjugation by a centralizing element is the identity automorphism
    Morphism c = conjugation_morphism(G->index_of(t24), P, P);
    CHECK(c.is_identity_map());
}

TEST_CASE("inner automorphisms have kernel of center size") {
    auto G = s4();
    Subgroup S = sylow_in(full_subgroup(G), 2);
    AutGroup inn = inner_automorphisms(S);
    CHECK(inn.order() == S.order() / center(S).order());
    CHECK(inn.order() == 4);
}

TEST_CASE("transport of automizers") {
    auto G = s4();
    Subgroup V4 = v4_of(G);
    Subgroup A4 = p_residual_in(full_subgroup(G), 2);
    AutGroup A = aut_by_conjugation(A4, V4);
    CHECK(A.order() == 3);
    Perm t12 = {1, 0, 2, 3};
    Morphism phi = conjugation_morphism(G->index_of(t12), V4, V4);
    AutGroup moved = transport_automorphisms(Morphism{V4, V4, phi.images}, A);
    CHECK(moved.order() == 3);
    // transport is functorial: (A phi*) psi* = A (phi psi)*
    Perm t13 = {2, 1, 0, 3};
    Morphism psi = conjugation_morphism(G->index_of(t13), V4, V4);
    AutGroup lhs = transport_automorphisms(Morphism{V4, V4, psi.images}, moved);
    AutGroup rhs = transport_automorphisms(compose(phi, psi), A);
    CHECK(lhs.elems == rhs.elems);
}

TEST_CASE("quotient groups use canonical coset order") {
    auto G = s4();
    Subgroup V4 = v4_of(G);
    QuotientGroup q = quotient_group(full_subgroup(G), V4);
    CHECK(q.group->order() == 6);
    CHECK(validate_group(q.group));
    bool abelian = true;
    for (Elt a = 0; a < 6 && abelian; ++a)
        for (Elt b = 0; b < 6; ++b)
            if (q.group->mul(a, b) != q.group->mul(b, a)) { abelian = false; break; }
    CHECK_FALSE(abelian);
    CHECK(q.coset_of.at(0) == 0);
}

TEST_CASE("subgroup enumeration is canonical") {
    auto G = s4();
    Subgroup S = sylow_in(full_subgroup(G), 2);
    std::vector<Subgroup> subs = all_subgroups(S);
    CHECK(subs.size() == 10);  // dihedral of order 8
    for (size_t i = 1; i < subs.size(); ++i) CHECK(subgroup_less(subs[i - 1], subs[i]));
}

TEST_CASE("group file parsing") {
    std::istringstream in(
        "# sample\n"
        "degree 4\n"
        "gen a (1 2 3 4)\n"
        "gen b (1 2)\n"
        "subgroup K = a*a, b\n");
    GroupFile gf = parse_group_stream(in);
    CHECK(gf.group->order() == 24);
    CHECK(gf.subgroups.at("K").order() == 8);
    CHECK(evaluate_word(gf, "a*a*a*a") == 0);

    std::istringstream bad1("degree 4\nfoo bar\n");
    CHECK_THROWS_AS(parse_group_stream(bad1), ParseError);
    std::istringstream bad2("degree 4\ngen a (1 5)\n");
    CHECK_THROWS_AS(parse_group_stream(bad2), ParseError);
    std::istringstream bad3("gen a (1 2)\n");
    CHECK_THROWS_AS(parse_group_stream(bad3), ParseError);
    std::istringstream bad4("degree 4\nsubgroup K = z\n");
    CHECK_THROWS_AS(parse_group_stream(bad4), ParseError);
}

TEST_CASE("finite field arithmetic") {
    for (int q : {4, 8, 9, 27}) {
        GaloisField f(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) {
                bool has_inverse = false;
                for (int b = 0; b < q; ++b)
                    if (f.mul(a, b) == 1) { has_inverse = true; break; }
                CHECK(has_inverse);
            }
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
        }
    }
    CHECK_THROWS_AS(GaloisField(6), std::invalid_argument);
}
