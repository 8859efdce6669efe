#pragma once

// Injective group homomorphisms stored as total element maps, and finite
// automorphism groups of a subgroup. Right-action convention: composition
// "a then b" is written compose(a, b).

#include <optional>

#include "fusys/group.hpp"

namespace fusys {

struct Morphism {
    Subgroup domain;
    Subgroup codomain;
    std::vector<Elt> images;  // images[i] = image of domain.members[i]

    Elt apply(Elt x) const {
        auto it = std::lower_bound(domain.members.begin(), domain.members.end(), x);
        if (it == domain.members.end() || *it != x)
            throw std::invalid_argument("element outside morphism domain");
        return images[it - domain.members.begin()];
    }

    std::vector<Elt> image_members() const {
        std::vector<Elt> img = images;
        std::sort(img.begin(), img.end());
        return img;
    }
    Subgroup image_subgroup() const { return Subgroup{domain.parent, image_members()}; }

    bool is_identity_map() const {
        for (size_t i = 0; i < images.size(); ++i)
            if (images[i] != domain.members[i]) return false;
        return true;
    }
};

inline bool is_homomorphism(const Morphism& m) {
    const auto& G = m.domain.parent;
    std::vector<Elt> img = m.image_members();
    for (size_t i = 1; i < img.size(); ++i)
        if (img[i] == img[i - 1]) return false;  // not injective
    for (Elt x : m.domain.members)
        for (Elt y : m.domain.members)
            if (m.apply(G->mul(x, y)) != G->mul(m.apply(x), m.apply(y))) return false;
    for (Elt v : img)
        if (!m.codomain.contains(v)) return false;
    return true;
}

inline Morphism identity_morphism(const Subgroup& P) {
    return Morphism{P, P, P.members};
}

inline Morphism inclusion_morphism(const Subgroup& P, const Subgroup& Q) {
    if (!Q.contains_all(P)) throw std::invalid_argument("inclusion: P not contained in Q");
    return Morphism{P, Q, P.members};
}

// c_g|_P : P -> Q, x |-> g^{-1} x g; requires P^g <= Q.
inline Morphism conjugation_morphism(Elt g, const Subgroup& P, const Subgroup& Q) {
    const auto& G = P.parent;
    std::vector<Elt> img;
    img.reserve(P.members.size());
    for (Elt x : P.members) {
        Elt y = G->conj(x, g);
        if (!Q.contains(y)) throw std::invalid_argument("conjugation image outside codomain");
        img.push_back(y);
    }
    return Morphism{P, Q, std::move(img)};
}

// a then b; requires image(a) inside domain(b).
inline Morphism compose(const Morphism& a, const Morphism& b) {
    std::vector<Elt> img;
    img.reserve(a.images.size());
    for (Elt v : a.images) img.push_back(b.apply(v));
    return Morphism{a.domain, b.codomain, std::move(img)};
}

inline Morphism restrict_morphism(const Morphism& m, const Subgroup& P) {
    if (!m.domain.contains_all(P)) throw std::invalid_argument("restriction outside domain");
    std::vector<Elt> img;
    img.reserve(P.members.size());
    for (Elt x : P.members) img.push_back(m.apply(x));
    return Morphism{P, m.codomain, std::move(img)};
}

// The inverse of the isomorphism onto the image.
inline Morphism inverse_onto_image(const Morphism& m) {
    Subgroup img = m.image_subgroup();
    std::vector<Elt> back(img.members.size());
    for (size_t i = 0; i < m.images.size(); ++i) {
        auto it = std::lower_bound(img.members.begin(), img.members.end(), m.images[i]);
        back[it - img.members.begin()] = m.domain.members[i];
    }
    return Morphism{img, m.domain, std::move(back)};
}

// ---------------------------------------------------------------------------
// Automorphism groups: sets of element maps base -> base, closed under
// composition. Maps are stored as image vectors over base.members, sorted.

using AutMap = std::vector<Elt>;  // images over base.members

inline AutMap aut_identity(const Subgroup& base) { return base.members; }

inline AutMap aut_compose(const Subgroup& base, const AutMap& a, const AutMap& b) {
    AutMap r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        Elt v = a[i];
        auto it = std::lower_bound(base.members.begin(), base.members.end(), v);
        r[i] = b[it - base.members.begin()];
    }
    return r;
}

inline AutMap aut_inverse(const Subgroup& base, const AutMap& a) {
    AutMap r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        auto it = std::lower_bound(base.members.begin(), base.members.end(), a[i]);
        r[it - base.members.begin()] = base.members[i];
    }
    return r;
}

struct AutGroup {
    Subgroup base;
    std::vector<AutMap> elems;  // sorted, unique, closed under composition

    int order() const { return (int)elems.size(); }
    bool contains(const AutMap& a) const {
        return std::binary_search(elems.begin(), elems.end(), a);
    }
    Elt apply(const AutMap& a, Elt x) const {
        auto it = std::lower_bound(base.members.begin(), base.members.end(), x);
        return a[it - base.members.begin()];
    }
    int element_order(const AutMap& a) const {
        AutMap id = aut_identity(base), x = a;
        int k = 1;
        while (x != id) { x = aut_compose(base, x, a); ++k; }
        return k;
    }
    Morphism as_morphism(const AutMap& a) const { return Morphism{base, base, a}; }
};

inline AutGroup generate_aut_group(const Subgroup& base, std::vector<AutMap> gens) {
    std::vector<AutMap> elems{aut_identity(base)};
    std::map<AutMap, bool> seen;
    seen[elems[0]] = true;
    for (auto& g : gens)
        if (seen.emplace(g, true).second) elems.push_back(std::move(g));
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j) {
            AutMap z = aut_compose(base, elems[i], elems[j]);
            if (seen.emplace(z, true).second) elems.push_back(std::move(z));
        }
    std::sort(elems.begin(), elems.end());
    return AutGroup{base, std::move(elems)};
}

// Aut_H(P) = {c_h|_P : h in N_H(P)}
inline AutGroup aut_by_conjugation(const Subgroup& H, const Subgroup& P) {
    const auto& G = P.parent;
    Subgroup NHP = normalizer_in(H, P);
    std::map<AutMap, bool> seen;
    std::vector<AutMap> elems;
    for (Elt h : NHP.members) {
        AutMap a;
        a.reserve(P.members.size());
        for (Elt x : P.members) a.push_back(G->conj(x, h));
        if (seen.emplace(a, true).second) elems.push_back(std::move(a));
    }
    std::sort(elems.begin(), elems.end());
    return AutGroup{P, std::move(elems)};
}

inline AutGroup inner_automorphisms(const Subgroup& P) { return aut_by_conjugation(P, P); }

// A phi* = {phi^{-1} a phi} on the image of phi; phi must be injective with
// image equal to the given codomain subgroup.
inline AutGroup transport_automorphisms(const Morphism& phi, const AutGroup& A) {
    if (!(A.base == phi.domain)) throw std::invalid_argument("transport: base/domain mismatch");
    if (phi.image_members() != phi.codomain.members)
        throw std::invalid_argument("transport: phi is not an isomorphism onto its codomain");
    Morphism inv = inverse_onto_image(phi);
    std::vector<AutMap> elems;
    elems.reserve(A.elems.size());
    for (const AutMap& a : A.elems) {
        AutMap r;
        r.reserve(phi.codomain.members.size());
        for (Elt y : phi.codomain.members) r.push_back(phi.apply(A.apply(a, inv.apply(y))));
        elems.push_back(std::move(r));
    }
    std::sort(elems.begin(), elems.end());
    return AutGroup{phi.codomain, std::move(elems)};
}

// Converts an AutGroup to a FiniteGroup (permutations of base member slots).
inline GroupPtr aut_group_as_group(const AutGroup& A, std::vector<int>* index_of_elem = nullptr) {
    int d = (int)A.base.members.size();
    std::vector<Perm> perms;
    perms.reserve(A.elems.size());
    for (const AutMap& a : A.elems) {
        Perm q(d);
        for (int i = 0; i < d; ++i) {
            auto it = std::lower_bound(A.base.members.begin(), A.base.members.end(), a[i]);
            q[i] = (int)(it - A.base.members.begin());
        }
        perms.push_back(std::move(q));
    }
    GroupPtr G = FiniteGroup::from_permutations(d, perms);
    if (index_of_elem) {
        index_of_elem->resize(A.elems.size());
        for (size_t i = 0; i < perms.size(); ++i) (*index_of_elem)[i] = G->index_of(perms[i]);
    }
    return G;
}

// O^p of an automorphism group: generated by its p'-order elements.
inline AutGroup aut_p_residual(const AutGroup& A, int p) {
    std::vector<AutMap> gens;
    for (const AutMap& a : A.elems)
        if (A.element_order(a) % p != 0) gens.push_back(a);
    return generate_aut_group(A.base, std::move(gens));
}

// O_p of an automorphism group, via the intersection of Sylow p-subgroups.
inline AutGroup aut_p_core(const AutGroup& A, int p) {
    GroupPtr G = aut_group_as_group(A);
    Subgroup core = p_core_in(full_subgroup(G), p);
    // map group elements (slot permutations) back to image vectors
    std::vector<AutMap> elems;
    for (Elt g : core.members) {
        const Perm& q = G->perm(g);
        AutMap a(q.size());
        for (size_t i = 0; i < q.size(); ++i) a[i] = A.base.members[q[i]];
        elems.push_back(std::move(a));
    }
    std::sort(elems.begin(), elems.end());
    return AutGroup{A.base, std::move(elems)};
}

// subgroup of A fixing Q setwise: N_A(Q) for Q <= base
inline AutGroup aut_stabilizer(const AutGroup& A, const Subgroup& Q) {
    std::vector<AutMap> elems;
    for (const AutMap& a : A.elems) {
        bool ok = true;
        for (Elt x : Q.members)
            if (!Q.contains(A.apply(a, x))) { ok = false; break; }
        if (ok) elems.push_back(a);
    }
    return AutGroup{A.base, std::move(elems)};  // already sorted
}

inline AutGroup aut_intersect(const AutGroup& A, const AutGroup& B) {
    std::vector<AutMap> out;
    std::set_intersection(A.elems.begin(), A.elems.end(), B.elems.begin(), B.elems.end(),
                          std::back_inserter(out));
    return AutGroup{A.base, std::move(out)};
}

// product set A·B (a subgroup only when one factor normalizes the other)
inline AutGroup aut_product(const AutGroup& A, const AutGroup& B) {
    std::map<AutMap, bool> seen;
    std::vector<AutMap> out;
    for (const AutMap& a : A.elems)
        for (const AutMap& b : B.elems) {
            AutMap z = aut_compose(A.base, a, b);
            if (seen.emplace(z, true).second) out.push_back(std::move(z));
        }
    std::sort(out.begin(), out.end());
    return AutGroup{A.base, std::move(out)};
}

// [base, a] as a subgroup: generated by x^{-1} * (x a)
inline Subgroup aut_commutator_subgroup(const AutGroup& A, const AutMap& a) {
    const auto& G = A.base.parent;
    std::vector<Elt> seed;
    for (size_t i = 0; i < A.base.members.size(); ++i)
        seed.push_back(G->mul(G->inverse(A.base.members[i]), a[i]));
    return generate_subgroup(G, std::move(seed));
}

}  // namespace fusys
