#pragma once

// Explicit fusion systems on a finite p-group: dense Hom tables over every
// ordered pair of carrier subgroups. A morphism P -> Q is stored once, keyed
// by its domain, as the image vector into the carrier; Hom(P,Q) is the set of
// stored maps with image inside Q, so divisibility and codomain restriction
// are structural rather than enforced per entry.

#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "fusys/morphism.hpp"

namespace fusys {

class FusionSystem {
public:
    int p = 0;
    GroupPtr parent;
    Subgroup carrier;
    std::string provenance;

    std::vector<Subgroup> subs;                       // all subgroups of carrier, canonical order
    std::map<std::vector<Elt>, int> sub_id;           // member list -> index
    std::vector<std::vector<std::vector<Elt>>> homs;  // homs[d]: sorted image vectors

    int subgroup_index(const std::vector<Elt>& members) const {
        auto it = sub_id.find(members);
        return it == sub_id.end() ? -1 : it->second;
    }
    int subgroup_index(const Subgroup& P) const {
        if (P.parent != parent) throw std::invalid_argument("subgroup from a different group");
        int d = subgroup_index(P.members);
        if (d < 0) throw std::invalid_argument("subgroup not within carrier");
        return d;
    }
    const Subgroup& sub(int d) const { return subs[d]; }
    int num_subs() const { return (int)subs.size(); }

    bool has_map(int d, const std::vector<Elt>& img) const {
        return std::binary_search(homs[d].begin(), homs[d].end(), img);
    }
    bool contains_morphism(const Morphism& m) const {
        int d = subgroup_index(m.domain.members);
        return d >= 0 && has_map(d, m.images);
    }

    int image_sub_of(const std::vector<Elt>& img) const {
        std::vector<Elt> s = img;
        std::sort(s.begin(), s.end());
        return subgroup_index(s);
    }

    // Hom_F(P,Q): stored maps with domain P and image inside Q.
    std::vector<Morphism> hom_set(const Subgroup& P, const Subgroup& Q) const {
        int d = subgroup_index(P);
        (void)subgroup_index(Q);  // validates Q <= carrier
        std::vector<Morphism> out;
        for (const auto& img : homs[d]) {
            bool inside = true;
            for (Elt v : img)
                if (!Q.contains(v)) { inside = false; break; }
            if (inside) out.push_back(Morphism{subs[d], Q, img});
        }
        return out;
    }

    AutGroup aut(int d) const {
        const Subgroup& P = subs[d];
        std::vector<AutMap> elems;
        for (const auto& img : homs[d]) {
            std::vector<Elt> s = img;
            std::sort(s.begin(), s.end());
            if (s == P.members) elems.push_back(img);
        }
        return AutGroup{P, std::move(elems)};  // homs[d] sorted => elems sorted
    }
    AutGroup aut(const Subgroup& P) const { return aut(subgroup_index(P)); }

    std::vector<int> conjugacy_class_ids(int d) const {
        std::set<int> cls{d};
        for (const auto& img : homs[d]) cls.insert(image_sub_of(img));
        return std::vector<int>(cls.begin(), cls.end());
    }
    std::vector<Subgroup> conjugacy_class(const Subgroup& P) const {
        std::vector<Subgroup> out;
        for (int e : conjugacy_class_ids(subgroup_index(P))) out.push_back(subs[e]);
        return out;
    }

    long long morphism_count() const {
        long long n = 0;
        for (const auto& h : homs) n += (long long)h.size();
        return n;
    }

    void init_subgroups() {
        subs = all_subgroups(carrier);
        sub_id.clear();
        for (int i = 0; i < (int)subs.size(); ++i) sub_id[subs[i].members] = i;
        homs.assign(subs.size(), {});
    }
};

// ---------------------------------------------------------------------------
// Construction: group-induced systems

// Fusion system on S induced by conjugation by elements of M (an ambient
// subgroup of the common parent group). F_S(G) is M = full group.
inline FusionSystem fusion_system_of(const Subgroup& M, const Subgroup& S, int p) {
    if (!is_p_group(S, p)) throw std::invalid_argument("carrier is not a p-group");
    if (p_part(M.order(), p) != S.order())
        throw std::invalid_argument("carrier is not Sylow-p in the ambient group");
    const auto& G = S.parent;
    FusionSystem F;
    F.p = p;
    F.parent = G;
    F.carrier = S;
    F.provenance = "group-induced";
    F.init_subgroups();
    for (int d = 0; d < F.num_subs(); ++d) {
        const Subgroup& P = F.subs[d];
        std::set<std::vector<Elt>> maps;
        for (Elt g : M.members) {
            std::vector<Elt> img;
            img.reserve(P.members.size());
            bool ok = true;
            for (Elt x : P.members) {
                Elt y = G->conj(x, g);
                if (!S.contains(y)) { ok = false; break; }
                img.push_back(y);
            }
            if (ok) maps.insert(std::move(img));
        }
        F.homs[d].assign(maps.begin(), maps.end());
    }
    return F;
}

inline FusionSystem fusion_system_of_group(const GroupPtr& G, const Subgroup& S, int p) {
    return fusion_system_of(full_subgroup(G), S, p);
}

inline FusionSystem inner_fusion_system(const Subgroup& S, int p) {
    FusionSystem F = fusion_system_of(S, S, p);
    F.provenance = "inner";
    return F;
}

// ---------------------------------------------------------------------------
// Generated subsystems: worklist fixpoint closure of the generators together
// with all T-conjugations, under restriction, inversion of isomorphisms and
// composition. Restriction closure is maintained incrementally, so it
// suffices to compose maps whose domain equals the exact image subgroup.

inline FusionSystem generated_subsystem(const Subgroup& T, int p,
                                        const std::vector<Morphism>& generators,
                                        std::string provenance = "generated") {
    if (!is_p_group(T, p)) throw std::invalid_argument("carrier is not a p-group");
    const auto& G = T.parent;
    FusionSystem F;
    F.p = p;
    F.parent = G;
    F.carrier = T;
    F.provenance = std::move(provenance);
    F.init_subgroups();

    int ns = F.num_subs();
    // subset relation and contained-subgroup lists
    std::vector<std::vector<int>> subs_of(ns);
    for (int a = 0; a < ns; ++a)
        for (int b = 0; b < ns; ++b)
            if (F.subs[a].contains_all(F.subs[b])) subs_of[a].push_back(b);

    std::vector<std::set<std::vector<Elt>>> maps(ns);
    std::vector<std::vector<int>> by_image(ns);  // image sub -> flat ids
    struct Entry { int dom; std::vector<Elt> img; int imgsub; };
    std::vector<Entry> flat;
    std::vector<std::pair<int, int>> queue;  // indices into flat

    auto insert = [&](int d, std::vector<Elt> img) {
        if (!maps[d].insert(img).second) return;
        std::vector<Elt> s = img;
        std::sort(s.begin(), s.end());
        int e = F.subgroup_index(s);
        if (e < 0) throw std::logic_error("morphism image is not a subgroup of the carrier");
        flat.push_back(Entry{d, std::move(img), e});
        by_image[e].push_back((int)flat.size() - 1);
        queue.emplace_back((int)flat.size() - 1, 0);
    };

    // seeds: all conjugations by elements of T, on every subgroup
    for (int d = 0; d < ns; ++d) {
        const Subgroup& P = F.subs[d];
        for (Elt t : T.members) {
            std::vector<Elt> img;
            img.reserve(P.members.size());
            for (Elt x : P.members) img.push_back(G->conj(x, t));
            insert(d, std::move(img));
        }
    }
    for (const Morphism& m : generators) {
        int d = F.subgroup_index(m.domain.members);
        if (d < 0) throw std::invalid_argument("generator domain not a subgroup of the carrier");
        for (Elt v : m.images)
            if (!T.contains(v)) throw std::invalid_argument("generator image leaves the carrier");
        insert(d, m.images);
    }

    auto value_at = [&](const Subgroup& dom, const std::vector<Elt>& img, Elt x) {
        auto it = std::lower_bound(dom.members.begin(), dom.members.end(), x);
        return img[it - dom.members.begin()];
    };

    for (size_t head = 0; head < queue.size(); ++head) {
        int fi = queue[head].first;
        int d = flat[fi].dom;
        std::vector<Elt> img = flat[fi].img;  // copy: flat may reallocate
        int e = flat[fi].imgsub;
        const Subgroup& P = F.subs[d];
        const Subgroup& Pimg = F.subs[e];

        // inverse of the isomorphism onto the image
        {
            std::vector<Elt> back(Pimg.members.size());
            for (size_t i = 0; i < img.size(); ++i) {
                auto it = std::lower_bound(Pimg.members.begin(), Pimg.members.end(), img[i]);
                back[it - Pimg.members.begin()] = P.members[i];
            }
            insert(e, std::move(back));
        }
        // restrictions to every proper subgroup of the domain
        for (int d2 : subs_of[d]) {
            if (d2 == d) continue;
            const Subgroup& P2 = F.subs[d2];
            std::vector<Elt> r;
            r.reserve(P2.members.size());
            for (Elt x : P2.members) r.push_back(value_at(P, img, x));
            insert(d2, std::move(r));
        }
        // compose: this map then maps with domain == image subgroup
        {
            std::vector<std::vector<Elt>> snapshot(maps[e].begin(), maps[e].end());
            for (const auto& m2 : snapshot) {
                std::vector<Elt> z;
                z.reserve(img.size());
                for (Elt v : img) z.push_back(value_at(Pimg, m2, v));
                insert(d, std::move(z));
            }
        }
        // compose: maps whose image subgroup equals this domain, then this map
        {
            std::vector<int> pre = by_image[d];  // snapshot
            for (int fj : pre) {
                const Entry& m1 = flat[fj];
                std::vector<Elt> z;
                z.reserve(m1.img.size());
                for (Elt v : m1.img) z.push_back(value_at(P, img, v));
                insert(m1.dom, std::move(z));
            }
        }
    }

    for (int d = 0; d < ns; ++d) F.homs[d].assign(maps[d].begin(), maps[d].end());
    return F;
}

inline FusionSystem generated_subsystem(const GroupPtr&, const Subgroup& T, int p,
                                        const std::vector<Morphism>& gens) {
    return generated_subsystem(T, p, gens);
}

// ---------------------------------------------------------------------------
// Equality with first-difference witness

struct SystemsEqualResult {
    bool equal = true;
    std::string witness;  // description of first difference
};

inline SystemsEqualResult systems_equal(const FusionSystem& A, const FusionSystem& B) {
    SystemsEqualResult r;
    if (A.p != B.p) return {false, "different primes"};
    if (A.parent != B.parent) return {false, "different parent groups"};
    if (A.carrier.members != B.carrier.members) return {false, "different carriers"};
    for (int d = 0; d < A.num_subs(); ++d) {
        for (const auto& m : A.homs[d])
            if (!B.has_map(d, m))
                return {false, "morphism on subgroup #" + std::to_string(d) +
                                   " present only in the first system"};
        for (const auto& m : B.homs[d])
            if (!A.has_map(d, m))
                return {false, "morphism on subgroup #" + std::to_string(d) +
                                   " present only in the second system"};
    }
    return r;
}

// Hom-set containment: every morphism of A lies in B.
inline bool is_subsystem_of(const FusionSystem& A, const FusionSystem& B) {
    if (A.parent != B.parent || A.p != B.p) return false;
    if (B.subgroup_index(A.carrier.members) < 0) return false;
    for (int d = 0; d < A.num_subs(); ++d) {
        int bd = B.subgroup_index(A.subs[d].members);
        for (const auto& m : A.homs[d])
            if (!B.has_map(bd, m)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Classification predicates

inline Subgroup normalizer_in_carrier(const FusionSystem& F, int d) {
    return normalizer_in(F.carrier, F.subs[d]);
}
inline Subgroup centralizer_in_carrier(const FusionSystem& F, int d) {
    return centralizer_in(F.carrier, F.subs[d]);
}

inline bool is_fully_normalized(const FusionSystem& F, int d) {
    int mine = normalizer_in_carrier(F, d).order();
    for (int e : F.conjugacy_class_ids(d))
        if (normalizer_in_carrier(F, e).order() > mine) return false;
    return true;
}

inline bool is_fully_centralized(const FusionSystem& F, int d) {
    int mine = centralizer_in_carrier(F, d).order();
    for (int e : F.conjugacy_class_ids(d))
        if (centralizer_in_carrier(F, e).order() > mine) return false;
    return true;
}

inline bool is_fully_automized(const FusionSystem& F, int d) {
    AutGroup autF = F.aut(d);
    AutGroup autS = aut_by_conjugation(F.carrier, F.subs[d]);
    return autS.order() == p_part(autF.order(), F.p);
}

inline bool is_centric(const FusionSystem& F, int d) {
    for (int e : F.conjugacy_class_ids(d)) {
        Subgroup c = centralizer_in_carrier(F, e);
        if (!F.subs[e].contains_all(c)) return false;
    }
    return true;
}

inline bool is_radical(const FusionSystem& F, int d) {
    AutGroup core = aut_p_core(F.aut(d), F.p);
    return core.elems == inner_automorphisms(F.subs[d]).elems;
}

// N_phi for an isomorphism phi: P -> Q in F.
inline Subgroup compute_N_phi(const FusionSystem& F, const Morphism& phi) {
    if (!F.contains_morphism(phi)) throw std::invalid_argument("morphism not in the system");
    const auto& G = F.parent;
    Subgroup P = phi.domain;
    Subgroup Q = phi.image_subgroup();
    AutGroup autSQ = aut_by_conjugation(F.carrier, Q);
    Morphism iso{P, Q, phi.images};
    Morphism inv = inverse_onto_image(iso);
    Subgroup NP = normalizer_in(F.carrier, P);
    std::vector<Elt> out;
    for (Elt g : NP.members) {
        // (c_g|_P) phi* as a map on Q
        AutMap a;
        a.reserve(Q.members.size());
        for (Elt y : Q.members) a.push_back(iso.apply(G->conj(inv.apply(y), g)));
        if (autSQ.contains(a)) out.push_back(g);
    }
    return Subgroup{G, std::move(out)};
}

struct ReceptiveResult {
    bool receptive = true;
    // witness of failure: the isomorphism that admits no extension
    std::optional<Morphism> witness;
};

inline ReceptiveResult is_receptive(const FusionSystem& F, const Subgroup& Q) {
    int q = F.subgroup_index(Q);
    for (int e : F.conjugacy_class_ids(q)) {
        const Subgroup& P = F.subs[e];
        for (const auto& img : F.homs[e]) {
            if (F.image_sub_of(img) != q) continue;
            Morphism phi{P, Q, img};
            Subgroup Nphi = compute_N_phi(F, phi);
            int nd = F.subgroup_index(Nphi.members);
            bool extended = false;
            for (const auto& big : F.homs[nd]) {
                bool matches = true;
                for (size_t i = 0; i < P.members.size(); ++i) {
                    auto it = std::lower_bound(Nphi.members.begin(), Nphi.members.end(),
                                               P.members[i]);
                    if (big[it - Nphi.members.begin()] != img[i]) { matches = false; break; }
                }
                if (matches) { extended = true; break; }
            }
            if (!extended) return ReceptiveResult{false, phi};
        }
    }
    return ReceptiveResult{};
}

struct SubgroupClassification {
    bool fully_normalized = false;
    bool fully_centralized = false;
    bool fully_automized = false;
    bool receptive = false;
    bool centric = false;
    bool radical = false;
};

inline SubgroupClassification classify_subgroup(const FusionSystem& F, const Subgroup& P) {
    int d = F.subgroup_index(P);
    SubgroupClassification c;
    c.fully_normalized = is_fully_normalized(F, d);
    c.fully_centralized = is_fully_centralized(F, d);
    c.fully_automized = is_fully_automized(F, d);
    c.receptive = is_receptive(F, P).receptive;
    c.centric = is_centric(F, d);
    c.radical = is_radical(F, d);
    return c;
}

struct SaturationReport {
    bool saturated = true;
    std::vector<int> failing_classes;  // canonical representative ids
};

// Saturation criterion: every conjugacy class contains a member that is both
// fully automized and receptive.
inline SaturationReport is_saturated(const FusionSystem& F) {
    SaturationReport rep;
    std::vector<bool> done(F.num_subs(), false);
    for (int d = 0; d < F.num_subs(); ++d) {
        if (done[d]) continue;
        std::vector<int> cls = F.conjugacy_class_ids(d);
        for (int e : cls) done[e] = true;
        bool ok = false;
        for (int e : cls)
            if (is_fully_automized(F, e) && is_receptive(F, F.subs[e]).receptive) {
                ok = true;
                break;
            }
        if (!ok) {
            rep.saturated = false;
            rep.failing_classes.push_back(cls.front());
        }
    }
    return rep;
}

inline bool is_strongly_closed(const FusionSystem& F, const Subgroup& R) {
    F.subgroup_index(R);  // validates
    for (int d = 0; d < F.num_subs(); ++d) {
        if (!R.contains_all(F.subs[d])) continue;
        for (const auto& img : F.homs[d])
            for (Elt v : img)
                if (!R.contains(v)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Normal subsystems

struct NormalityReport {
    bool normal = true;
    std::string failed_condition;  // first of N0..N4 that fails, with detail
};

inline NormalityReport is_normal_subsystem(const FusionSystem& F, const FusionSystem& F0) {
    const auto& G = F.parent;
    if (F0.parent != G || F0.p != F.p) return {false, "N0: different parent group or prime"};
    // (N0) subsystem containment
    if (!is_subsystem_of(F0, F)) return {false, "N0: not a subsystem (Hom containment fails)"};
    const Subgroup& S0 = F0.carrier;
    // (N1) carrier strongly closed
    if (!is_strongly_closed(F, S0)) return {false, "N1: carrier not strongly closed"};
    // (N2) saturation
    if (!is_saturated(F0).saturated) return {false, "N2: subsystem not saturated"};
    // (N3) strong invariance
    for (int q = 0; q < F0.num_subs(); ++q) {
        const Subgroup& Q = F0.subs[q];
        int fq = F.subgroup_index(Q.members);
        for (const auto& psi_img : F.homs[fq]) {  // psi in Hom_F(Q, S0)
            bool into_S0 = true;
            for (Elt v : psi_img)
                if (!S0.contains(v)) { into_S0 = false; break; }
            if (!into_S0) continue;
            Morphism psi{Q, S0, psi_img};
            for (int d = 0; d < F0.num_subs(); ++d) {
                const Subgroup& P = F0.subs[d];
                if (!Q.contains_all(P)) continue;
                for (const auto& phi_img : F0.homs[d]) {
                    bool in_Q = true;
                    for (Elt v : phi_img)
                        if (!Q.contains(v)) { in_Q = false; break; }
                    if (!in_Q) continue;  // phi in Hom_F0(P,Q)
                    // transported map (psi|_P)^{-1} phi psi on P.psi
                    Morphism psiP = restrict_morphism(psi, P);
                    Subgroup Ppsi = psiP.image_subgroup();
                    Morphism inv = inverse_onto_image(psiP);
                    std::vector<Elt> timg;
                    timg.reserve(Ppsi.members.size());
                    Morphism phi{P, Q, phi_img};
                    for (Elt y : Ppsi.members) timg.push_back(psi.apply(phi.apply(inv.apply(y))));
                    int td = F0.subgroup_index(Ppsi.members);
                    if (td < 0 || !F0.has_map(td, timg))
                        return {false, "N3: strong invariance fails on subgroup pair"};
                }
            }
        }
    }
    // (N4) extension property on S0 C_S(S0)
    Subgroup C = centralizer_in(F.carrier, S0);
    Subgroup S0C = join(S0, C);
    Subgroup Z0 = center(S0);
    int bd = F.subgroup_index(S0C.members);
    AutGroup autF0S0 = F0.aut(F0.subgroup_index(S0.members));
    for (const AutMap& alpha : autF0S0.elems) {
        bool found = false;
        for (const auto& big : F.homs[bd]) {
            std::vector<Elt> s = big;
            std::sort(s.begin(), s.end());
            if (s != S0C.members) continue;  // need an automorphism of S0 C_S(S0)
            Morphism ext{S0C, S0C, big};
            bool restricts = true;
            for (size_t i = 0; i < S0.members.size(); ++i)
                if (ext.apply(S0.members[i]) != alpha[i]) { restricts = false; break; }
            if (!restricts) continue;
            bool comm_ok = true;
            for (Elt c : C.members)
                if (!Z0.contains(G->mul(G->inverse(c), ext.apply(c)))) { comm_ok = false; break; }
            if (comm_ok) { found = true; break; }
        }
        if (!found) return {false, "N4: extension property fails for an automorphism of the carrier"};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Quotient systems

class QuotientSystem {
public:
    const FusionSystem* base = nullptr;
    QuotientGroup q;
    FusionSystem quotient;  // F/R on the full quotient group

    // Image E/R of a subsystem E of the base system, inside the same quotient.
    FusionSystem image_of(const FusionSystem& E) const {
        const auto& G = base->parent;
        // carrier of the image: (E.carrier * R) / R
        Subgroup ER = join(E.carrier, q.kernel);
        std::set<int> carrier_cosets;
        for (Elt x : ER.members) carrier_cosets.insert(q.coset_of.at(x));
        Subgroup qcarrier{q.group, std::vector<Elt>(carrier_cosets.begin(), carrier_cosets.end())};

        std::vector<Morphism> gens;
        for (int d = 0; d < E.num_subs(); ++d) {
            const Subgroup& P = E.subs[d];
            // domain of the induced map: PR/R
            Subgroup PR = join(P, q.kernel);
            std::set<int> dom_set;
            for (Elt x : PR.members) dom_set.insert(q.coset_of.at(x));
            Subgroup qdom{q.group, std::vector<Elt>(dom_set.begin(), dom_set.end())};
            for (const auto& img : E.homs[d]) {
                Morphism phi{P, E.carrier, img};
                std::vector<Elt> qimg;
                qimg.reserve(qdom.members.size());
                for (Elt coset : qdom.members) {
                    // representative of this coset inside P
                    Elt rep = -1;
                    for (Elt x : P.members)
                        if (q.coset_of.count(x) && q.coset_of.at(x) == coset) { rep = x; break; }
                    if (rep < 0) {
                        // coset meets PR but we need a rep in P: cosets of PR/R all meet P
                        for (Elt x : PR.members)
                            if (q.coset_of.at(x) == coset) {
                                // write x = p r
                                for (Elt pm : P.members)
                                    for (Elt r : q.kernel.members)
                                        if (G->mul(pm, r) == x) { rep = pm; break; }
                                if (rep >= 0) break;
                            }
                    }
                    qimg.push_back(q.coset_of.at(phi.apply(rep)));
                }
                gens.push_back(Morphism{qdom, qcarrier, std::move(qimg)});
            }
        }
        FusionSystem img = generated_subsystem(qcarrier, base->p, gens, "quotient-image");
        return img;
    }
};

inline QuotientSystem quotient_system(const FusionSystem& F, const Subgroup& R) {
    if (!is_strongly_closed(F, R)) throw std::invalid_argument("kernel not strongly closed");
    QuotientSystem out;
    out.base = &F;
    out.q = quotient_group(F.carrier, R);

    FusionSystem& Q = out.quotient;
    Q.p = F.p;
    Q.parent = out.q.group;
    Q.carrier = full_subgroup(out.q.group);
    Q.provenance = "quotient";
    Q.init_subgroups();

    const auto& G = F.parent;
    // Hom_{F/R}(P/R, Q/R): maps induced by morphisms between kernel-containing
    // subgroups. Collect them directly; the result is already closed.
    for (int d = 0; d < F.num_subs(); ++d) {
        const Subgroup& P = F.subs[d];
        if (!P.contains_all(R)) continue;
        std::set<int> dom_set;
        for (Elt x : P.members) dom_set.insert(out.q.coset_of.at(x));
        std::vector<Elt> dom(dom_set.begin(), dom_set.end());
        int qd = Q.subgroup_index(dom);
        if (qd < 0) throw std::logic_error("quotient subgroup missing");
        std::set<std::vector<Elt>> qmaps(Q.homs[qd].begin(), Q.homs[qd].end());
        for (const auto& img : F.homs[d]) {
            Morphism phi{P, F.carrier, img};
            // R phi = R holds since R is strongly closed; induced map on cosets
            std::vector<Elt> qimg;
            qimg.reserve(dom.size());
            for (Elt coset : dom) {
                Elt rep = -1;
                for (Elt x : P.members)
                    if (out.q.coset_of.at(x) == coset) { rep = x; break; }
                qimg.push_back(out.q.coset_of.at(phi.apply(rep)));
            }
            (void)G;
            qmaps.insert(std::move(qimg));
        }
        Q.homs[qd].assign(qmaps.begin(), qmaps.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dump format (text), used by the CLI and re-verification tooling.

inline std::vector<Elt> canonical_generators(const Subgroup& P) {
    const auto& G = P.parent;
    std::vector<Elt> gens;
    Subgroup H = trivial_subgroup(G);
    while (H.order() < P.order()) {
        for (Elt x : P.members) {
            if (H.contains(x)) continue;
            gens.push_back(x);
            std::vector<Elt> seed = H.members;
            seed.push_back(x);
            H = generate_subgroup(G, std::move(seed));
            break;
        }
    }
    return gens;
}

inline std::string dump_fusion_system(const FusionSystem& F) {
    std::ostringstream os;
    os << "fusion p=" << F.p << " carrier=" << F.subgroup_index(F.carrier.members) << "\n";
    for (int d = 0; d < F.num_subs(); ++d) {
        const Subgroup& P = F.subs[d];
        std::vector<Elt> gens = canonical_generators(P);
        for (const auto& img : F.homs[d]) {
            Morphism m{P, F.carrier, img};
            os << "hom " << d << " -> " << F.image_sub_of(img) << " :";
            bool first = true;
            for (Elt g : gens) {
                os << (first ? " " : ",") << m.apply(g);
                first = false;
            }
            if (gens.empty()) os << " id";
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace fusys
