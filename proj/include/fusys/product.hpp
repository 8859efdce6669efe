#pragma once

// Product of a normal fusion subsystem with a p-subgroup of the carrier,
// together with the verification bundle: well-placed subgroups, hyperfocal
// subgroup, O^p subsystems and the main-theorem property checks.

#include <chrono>
#include <functional>

#include "fusys/fusion.hpp"

namespace fusys {

// F0 normal in F on S0, and a carrier S0 <= T <= S. The product subsystem is
// computed lazily and cached; all checks share it.
class ProductInstance {
public:
    FusionSystem F;   // ambient saturated system on S
    FusionSystem F0;  // normal subsystem on S0
    Subgroup T;
    int p = 0;

    ProductInstance(FusionSystem ambient, FusionSystem normal, Subgroup carrier,
                    bool check_normality = true)
        : F(std::move(ambient)), F0(std::move(normal)), T(std::move(carrier)), p(F.p) {
        if (F0.parent != F.parent || F0.p != F.p)
            throw std::invalid_argument("subsystem lives in a different ambient group");
        if (!F.carrier.contains_all(T) || !T.contains_all(F0.carrier))
            throw std::invalid_argument("carrier must sit between the subsystem carrier and S");
        if (check_normality) {
            NormalityReport n = is_normal_subsystem(F, F0);
            if (!n.normal) throw std::invalid_argument("not a normal subsystem: " + n.failed_condition);
        }
    }

    const Subgroup& S0() const { return F0.carrier; }

    const FusionSystem& D() const {
        if (!D_) D_ = compute_product();
        return *D_;
    }

private:
    mutable std::optional<FusionSystem> D_;
    FusionSystem compute_product() const;
};

// Product with an arbitrary subgroup R of S: the carrier is S0*R.
inline ProductInstance make_product_instance(FusionSystem F, FusionSystem F0, const Subgroup& R,
                                             bool check_normality = true) {
    Subgroup T = join(F0.carrier, R);
    return ProductInstance(std::move(F), std::move(F0), std::move(T), check_normality);
}

// A°(P): subgroup of Aut_F(P) generated by its p′-elements phi with
// [P,phi] <= P ∩ S0 and phi restricted to P ∩ S0 lying in the subsystem.
inline AutGroup a_circ(const ProductInstance& inst, const Subgroup& P) {
    if (!inst.T.contains_all(P)) throw std::invalid_argument("subgroup not inside the carrier");
    const auto& G = inst.F.parent;
    const Subgroup& S0 = inst.S0();
    Subgroup P0 = intersect(P, S0);
    int p0 = inst.F0.subgroup_index(P0.members);
    AutGroup autF0P0 = inst.F0.aut(p0);
    AutGroup autFP = inst.F.aut(inst.F.subgroup_index(P.members));

    std::vector<AutMap> gens;
    for (const AutMap& phi : autFP.elems) {
        if (autFP.element_order(phi) % inst.p == 0) continue;  // want p'-elements
        bool comm_ok = true;
        for (size_t i = 0; i < P.members.size(); ++i) {
            Elt c = G->mul(G->inverse(P.members[i]), phi[i]);
            if (!P0.contains(c)) { comm_ok = false; break; }
        }
        if (!comm_ok) continue;
        // [P,phi] <= P0 makes P0 phi-invariant; restriction must lie in F0
        AutMap r;
        r.reserve(P0.members.size());
        for (Elt x : P0.members) {
            auto it = std::lower_bound(P.members.begin(), P.members.end(), x);
            r.push_back(phi[it - P.members.begin()]);
        }
        if (!autF0P0.contains(r)) continue;
        gens.push_back(phi);
    }
    return generate_aut_group(P, std::move(gens));
}

// A(P) := Aut_T(P) A°(P)
inline AutGroup a_full(const ProductInstance& inst, const Subgroup& P) {
    AutGroup t = aut_by_conjugation(inst.T, P);
    AutGroup c = a_circ(inst, P);
    std::vector<AutMap> gens = t.elems;
    gens.insert(gens.end(), c.elems.begin(), c.elems.end());
    return generate_aut_group(P, std::move(gens));
}

inline FusionSystem ProductInstance::compute_product() const {
    const Subgroup& s0 = S0();
    std::vector<Morphism> gens;
    std::vector<Subgroup> tsubs = all_subgroups(T);
    for (const Subgroup& P : tsubs) {
        Subgroup P0 = intersect(P, s0);
        if (!is_centric(F0, F0.subgroup_index(P0.members))) continue;
        AutGroup ac = a_circ(*this, P);
        for (const AutMap& a : ac.elems) gens.push_back(Morphism{P, T, a});
    }
    return generated_subsystem(T, p, gens, "product");
}

inline FusionSystem product_subsystem(const ProductInstance& inst) { return inst.D(); }

// ---------------------------------------------------------------------------
// Well-placed subgroups

struct WellPlacedLevel {
    Subgroup subgroup;       // N_i
    bool fully_normalized;   // (i)  N_i fully normalized in the subsystem
    bool aut_sylow;          // (ii) Aut_T(N_i) Sylow-p in Aut_D(N_i)
    bool stabilizer_sylow;   // (iii) N_{Aut_T(N_{i+1})}(N_i) Sylow-p in N_{Aut_D(N_{i+1})}(N_i)
};

struct WellPlacedCertificate {
    std::vector<WellPlacedLevel> chain;
    bool valid = false;
};

// Sylow test for a p-subgroup B of a finite group A given as automorphism sets:
// B is Sylow-p iff |B| equals the p-part of |A| (containment assumed).
inline bool aut_sylow_p(const AutGroup& B, const AutGroup& A, int p) {
    for (const AutMap& b : B.elems)
        if (!A.contains(b)) return false;
    return B.order() == p_part(A.order(), p);
}

inline WellPlacedCertificate is_well_placed(const ProductInstance& inst, const Subgroup& P0) {
    const Subgroup& S0 = inst.S0();
    if (!S0.contains_all(P0)) throw std::invalid_argument("subgroup not inside the subsystem carrier");
    const FusionSystem& D = inst.D();
    WellPlacedCertificate cert;
    cert.valid = true;
    Subgroup Ni = P0;
    for (;;) {
        Subgroup Nnext = normalizer_in(S0, Ni);
        WellPlacedLevel lvl;
        lvl.subgroup = Ni;
        lvl.fully_normalized = is_fully_normalized(inst.F0, inst.F0.subgroup_index(Ni.members));
        AutGroup autD = D.aut(D.subgroup_index(Ni.members));
        AutGroup autT = aut_by_conjugation(inst.T, Ni);
        lvl.aut_sylow = aut_sylow_p(autT, autD, inst.p);
        AutGroup autDnext = D.aut(D.subgroup_index(Nnext.members));
        AutGroup autTnext = aut_by_conjugation(inst.T, Nnext);
        lvl.stabilizer_sylow = aut_sylow_p(aut_stabilizer(autTnext, Ni),
                                           aut_stabilizer(autDnext, Ni), inst.p);
        cert.valid = cert.valid && lvl.fully_normalized && lvl.aut_sylow && lvl.stabilizer_sylow;
        cert.chain.push_back(std::move(lvl));
        if (Nnext.members == Ni.members) break;  // stabilized (at S0 for p-groups)
        Ni = std::move(Nnext);
    }
    return cert;
}

struct WellPlacedSearchResult {
    Morphism morphism;  // element of Hom_D(Q0, S0); image is the well-placed conjugate
    WellPlacedCertificate certificate;
};

namespace detail {

// First stored D-morphism from Q0 onto the subgroup with index `target`.
inline Morphism d_morphism_onto(const FusionSystem& D, const Subgroup& Q0, int target) {
    int d = D.subgroup_index(Q0.members);
    for (const auto& img : D.homs[d])
        if (D.image_sub_of(img) == target) return Morphism{Q0, D.sub(target), img};
    throw std::logic_error("no morphism onto the requested conjugate");
}

}  // namespace detail

inline WellPlacedSearchResult find_well_placed(const ProductInstance& inst, const Subgroup& Q0) {
    const Subgroup& S0 = inst.S0();
    if (!S0.contains_all(Q0)) throw std::invalid_argument("subgroup not inside the subsystem carrier");
    const FusionSystem& D = inst.D();

    // Constructive recursion from the existence proof.
    std::function<Morphism(const Subgroup&)> find = [&](const Subgroup& B0) -> Morphism {
        if (B0.members == S0.members) return identity_morphism(S0);
        // move to a fully normalized member of the class (first in canonical order)
        int b = D.subgroup_index(B0.members);
        int fn = -1;
        for (int e : D.conjugacy_class_ids(b))
            if (is_fully_normalized(inst.F0, inst.F0.subgroup_index(D.sub(e).members))) {
                fn = e;
                break;
            }
        if (fn < 0) throw std::logic_error("class without a fully normalized member");
        Morphism phi_a = detail::d_morphism_onto(D, B0, fn);
        Subgroup Q = D.sub(fn);
        // recurse on the strictly larger normalizer, then push Q along
        Subgroup R = normalizer_in(S0, Q);
        Morphism phi_b = find(R);
        Subgroup R0 = phi_b.image_subgroup();
        Morphism phi_bQ = restrict_morphism(phi_b, Q);
        Subgroup Q1 = phi_bQ.image_subgroup();
        // Sylow-align the stabilizer of Q1 inside Aut_D(R0): choose psi with
        // Aut_T(R0) ∩ (N_{Aut_D(R0)}(Q1) psi*) Sylow-p in the transported stabilizer
        AutGroup autD = D.aut(D.subgroup_index(R0.members));
        AutGroup autT = aut_by_conjugation(inst.T, R0);
        AutGroup stab = aut_stabilizer(autD, Q1);
        int target = p_part(stab.order(), inst.p);
        for (const AutMap& psi : autD.elems) {
            Morphism mpsi = autD.as_morphism(psi);
            AutGroup moved = transport_automorphisms(mpsi, stab);
            if (aut_intersect(autT, moved).order() == target) {
                Morphism total = compose(compose(phi_a, phi_bQ), restrict_morphism(mpsi, Q1));
                total.codomain = S0;
                return total;
            }
        }
        throw std::logic_error("no Sylow-aligning automorphism found");
    };

    WellPlacedSearchResult res{identity_morphism(Q0), {}};
    bool ok = false;
    try {
        Morphism m = find(Q0);
        WellPlacedCertificate c = is_well_placed(inst, m.image_subgroup());
        if (c.valid) {
            res = WellPlacedSearchResult{std::move(m), std::move(c)};
            ok = true;
        }
    } catch (const std::logic_error&) {
        ok = false;
    }
    if (!ok) {
        // exhaustive fallback over the class, canonical order
        int q = D.subgroup_index(Q0.members);
        for (int e : D.conjugacy_class_ids(q)) {
            WellPlacedCertificate c = is_well_placed(inst, D.sub(e));
            if (c.valid) {
                Morphism m = detail::d_morphism_onto(D, Q0, e);
                m.codomain = S0;
                return WellPlacedSearchResult{std::move(m), std::move(c)};
            }
        }
        throw std::logic_error("no well-placed conjugate exists (contradicts existence lemma)");
    }
    return res;
}

// ---------------------------------------------------------------------------
// Hyperfocal subgroup and O^p subsystems

inline Subgroup hyperfocal_subgroup(const FusionSystem& F) {
    if (!is_saturated(F).saturated) throw std::invalid_argument("system not saturated");
    const auto& G = F.parent;
    std::vector<Elt> seed;
    for (int d = 0; d < F.num_subs(); ++d) {
        const Subgroup& P = F.subs[d];
        AutGroup res = aut_p_residual(F.aut(d), F.p);
        for (const AutMap& a : res.elems)
            for (size_t i = 0; i < P.members.size(); ++i)
                seed.push_back(G->mul(G->inverse(P.members[i]), a[i]));
    }
    return generate_subgroup(G, std::move(seed));
}

// O^p(F) when no carrier is given; F_T = <O^p(Aut_F(P)) : P <= T>_T otherwise.
inline FusionSystem op_residual_subsystem(const FusionSystem& F,
                                          const std::optional<Subgroup>& T = std::nullopt) {
    Subgroup hyp = hyperfocal_subgroup(F);
    Subgroup carrier = T ? *T : hyp;
    if (!carrier.contains_all(hyp) || !F.carrier.contains_all(carrier))
        throw std::invalid_argument("carrier must contain the hyperfocal subgroup");
    std::vector<Morphism> gens;
    for (int d = 0; d < F.num_subs(); ++d) {
        const Subgroup& P = F.subs[d];
        if (!carrier.contains_all(P)) continue;
        AutGroup res = aut_p_residual(F.aut(d), F.p);
        for (const AutMap& a : res.elems) gens.push_back(Morphism{P, carrier, a});
    }
    return generated_subsystem(carrier, F.p, gens, T ? "p-residual-product" : "p-residual");
}

// ---------------------------------------------------------------------------
// Main-theorem verification bundle

struct VerificationReport {
    bool saturated = false;
    bool op_identity = false;           // O^p(D) = O^p(F0)
    bool automizer_centric = false;     // A°(P) = O^p(Aut_D(P)) when P0 centric
    bool automizer_containment = false; // O^p(Aut_D(P)) <= A°(P) for all P
    bool candidates_ok = true;          // every qualifying candidate equals D
    int candidates_qualified = 0;
    std::vector<std::string> witnesses;
    double seconds = 0;

    bool pass() const {
        return saturated && op_identity && automizer_centric && automizer_containment &&
               candidates_ok;
    }
};

inline VerificationReport verify_main_theorem(
    const ProductInstance& inst, const std::vector<FusionSystem>& candidates = {}) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    const FusionSystem& D = inst.D();

    SaturationReport sat = is_saturated(D);
    rep.saturated = sat.saturated;
    if (!sat.saturated)
        rep.witnesses.push_back("product not saturated; failing class rep #" +
                                std::to_string(sat.failing_classes.front()));

    FusionSystem opD = op_residual_subsystem(D);
    FusionSystem opF0 = op_residual_subsystem(inst.F0);
    auto eq = systems_equal(opD, opF0);
    rep.op_identity = eq.equal;
    if (!eq.equal) rep.witnesses.push_back("p-residual subsystems differ: " + eq.witness);

    rep.automizer_centric = true;
    rep.automizer_containment = true;
    for (int d = 0; d < D.num_subs(); ++d) {
        const Subgroup& P = D.subs[d];
        AutGroup ac = a_circ(inst, P);
        AutGroup opAut = aut_p_residual(D.aut(d), inst.p);
        for (const AutMap& a : opAut.elems)
            if (!ac.contains(a)) {
                rep.automizer_containment = false;
                rep.witnesses.push_back("p-residual automizer escapes A° on subgroup #" +
                                        std::to_string(d));
                break;
            }
        Subgroup P0 = intersect(P, inst.S0());
        if (is_centric(inst.F0, inst.F0.subgroup_index(P0.members)) &&
            !(ac.elems == opAut.elems)) {
            rep.automizer_centric = false;
            rep.witnesses.push_back("A° differs from the p-residual automizer on subgroup #" +
                                    std::to_string(d));
        }
    }

    for (size_t i = 0; i < candidates.size(); ++i) {
        const FusionSystem& E = candidates[i];
        if (E.parent != D.parent || E.carrier.members != D.carrier.members) continue;
        if (!is_subsystem_of(E, inst.F)) continue;
        if (!is_saturated(E).saturated) continue;
        FusionSystem opE = op_residual_subsystem(E);
        if (!systems_equal(opE, opF0).equal) continue;
        ++rep.candidates_qualified;
        if (!systems_equal(E, D).equal) {
            rep.candidates_ok = false;
            rep.witnesses.push_back("qualifying candidate #" + std::to_string(i) +
                                    " differs from the product");
        }
    }

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace fusys
