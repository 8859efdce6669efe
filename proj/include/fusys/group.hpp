#pragma once

// Exact finite-group arithmetic on canonically indexed elements.
//
// A FiniteGroup is a closed element list with index 0 = identity and a
// total multiplication. Groups built from permutations keep the permutation
// realization; groups built abstractly (quotients) carry only the table.
// All products use the right-action convention: g*h means "g, then h".

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusys {

using Elt = int;
using Perm = std::vector<int>;  // images of 0..degree-1

struct SizeLimitError : std::runtime_error {
    explicit SizeLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

inline int default_order_cap() {
    if (const char* s = std::getenv("FF_MAX_GROUP_ORDER")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 10000;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {
    // a then b
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

inline Perm perm_identity(int degree) {
    Perm r(degree);
    std::iota(r.begin(), r.end(), 0);
    return r;
}

inline Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = (int)i;
    return r;
}

inline std::string perm_cycle_label(const Perm& a) {
    std::string out;
    std::vector<bool> seen(a.size(), false);
    for (size_t i = 0; i < a.size(); ++i) {
        if (seen[i] || a[i] == (int)i) continue;
        out += "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += " ";
            out += std::to_string(j + 1);  // 1-based points
            first = false;
            j = a[j];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

class FiniteGroup {
public:
    int order() const { return n_; }

    Elt mul(Elt a, Elt b) const {
        if (!table_.empty()) return table_[a][b];
        return index_of(perm_compose(perms_[a], perms_[b]));
    }
    Elt inverse(Elt a) const { return inv_[a]; }
    Elt conj(Elt x, Elt g) const { return mul(mul(inverse(g), x), g); }  // x^g

    int element_order(Elt a) const {
        int k = 1;
        Elt x = a;
        while (x != 0) { x = mul(x, a); ++k; }
        return k;
    }

    const std::string& label(Elt a) const { return labels_[a]; }
    int degree() const { return degree_; }
    bool has_perms() const { return !perms_.empty(); }
    const Perm& perm(Elt a) const { return perms_[a]; }

    Elt index_of(const Perm& q) const {
        auto it = perm_index_.find(q);
        if (it == perm_index_.end()) throw std::invalid_argument("permutation not in group");
        return it->second;
    }

    // Builds the closure of the generators. Canonical indexing is
    // lexicographic on permutation images, which puts the identity first.
    static std::shared_ptr<const FiniteGroup> from_permutations(int degree,
                                                                const std::vector<Perm>& gens,
                                                                int order_cap = -1);

    // Abstract group from a complete multiplication table (identity at 0).
    static std::shared_ptr<const FiniteGroup> from_table(std::vector<std::vector<Elt>> table,
                                                         std::vector<std::string> labels);

private:
    int n_ = 0;
    int degree_ = 0;
    std::vector<Perm> perms_;
    std::map<Perm, Elt> perm_index_;
    std::vector<std::vector<Elt>> table_;
    std::vector<Elt> inv_;
    std::vector<std::string> labels_;

    void finish() {
        inv_.assign(n_, 0);
        for (Elt a = 0; a < n_; ++a)
            for (Elt b = 0; b < n_; ++b)
                if (mul(a, b) == 0) { inv_[a] = b; break; }
    }

    friend std::shared_ptr<const FiniteGroup> detail_make();
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr FiniteGroup::from_permutations(int degree, const std::vector<Perm>& gens,
                                               int order_cap) {
    if (order_cap <= 0) order_cap = default_order_cap();
    for (const Perm& g : gens) {
        if ((int)g.size() != degree) throw std::invalid_argument("generator degree mismatch");
        std::vector<bool> hit(degree, false);
        for (int x : g) {
            if (x < 0 || x >= degree || hit[x]) throw std::invalid_argument("generator is not a bijection");
            hit[x] = true;
        }
    }
    std::map<Perm, Elt> seen;
    std::vector<Perm> elems;
    elems.push_back(perm_identity(degree));
    seen[elems[0]] = 0;
    for (size_t head = 0; head < elems.size(); ++head) {
        Perm cur = elems[head];  // copy: elems may reallocate
        for (const Perm& g : gens) {
            Perm nxt = perm_compose(cur, g);
            if (seen.emplace(nxt, (Elt)elems.size()).second) {
                elems.push_back(nxt);
                if ((int)elems.size() > order_cap)
                    throw SizeLimitError("group closure exceeds order cap " + std::to_string(order_cap));
            }
        }
    }
    std::sort(elems.begin(), elems.end());

    auto G = std::make_shared<FiniteGroup>();
    G->n_ = (int)elems.size();
    G->degree_ = degree;
    G->perms_ = std::move(elems);
    for (Elt i = 0; i < G->n_; ++i) G->perm_index_[G->perms_[i]] = i;
    if (G->n_ <= 4096) {
        G->table_.assign(G->n_, std::vector<Elt>(G->n_));
        for (Elt a = 0; a < G->n_; ++a)
            for (Elt b = 0; b < G->n_; ++b)
                G->table_[a][b] = G->perm_index_.at(perm_compose(G->perms_[a], G->perms_[b]));
    }
    G->labels_.resize(G->n_);
    for (Elt i = 0; i < G->n_; ++i) G->labels_[i] = perm_cycle_label(G->perms_[i]);
    G->finish();
    return G;
}

inline GroupPtr FiniteGroup::from_table(std::vector<std::vector<Elt>> table,
                                        std::vector<std::string> labels) {
    auto G = std::make_shared<FiniteGroup>();
    G->n_ = (int)table.size();
    G->table_ = std::move(table);
    if (labels.empty()) {
        labels.resize(G->n_);
        for (Elt i = 0; i < G->n_; ++i) labels[i] = "e" + std::to_string(i);
    }
    G->labels_ = std::move(labels);
    G->finish();
    return G;
}

// build_group_from_permutations with 1-based cycle-style input handled by the
// group-file parser; this overload takes 0-based image vectors.
inline GroupPtr build_group_from_permutations(int degree, const std::vector<Perm>& gens) {
    return FiniteGroup::from_permutations(degree, gens);
}

// ---------------------------------------------------------------------------
// Subgroups

struct Subgroup {
    GroupPtr parent;
    std::vector<Elt> members;  // sorted, contains 0

    int order() const { return (int)members.size(); }
    bool contains(Elt x) const {
        return std::binary_search(members.begin(), members.end(), x);
    }
    bool contains_all(const Subgroup& other) const {
        return std::includes(members.begin(), members.end(),
                             other.members.begin(), other.members.end());
    }
    bool operator==(const Subgroup& o) const {
        return parent == o.parent && members == o.members;
    }
};

inline Subgroup generate_subgroup(const GroupPtr& G, std::vector<Elt> seed) {
    std::vector<bool> in(G->order(), false);
    std::vector<Elt> work{0};
    in[0] = true;
    for (Elt s : seed)
        if (!in[s]) { in[s] = true; work.push_back(s); }
    // closure under products; inverses follow since the set is finite
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < work.size(); ++j) {
            Elt z = G->mul(work[i], work[j]);
            if (!in[z]) { in[z] = true; work.push_back(z); }
        }
    std::sort(work.begin(), work.end());
    return Subgroup{G, std::move(work)};
}

inline Subgroup trivial_subgroup(const GroupPtr& G) { return Subgroup{G, {0}}; }

inline Subgroup full_subgroup(const GroupPtr& G) {
    std::vector<Elt> all(G->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{G, std::move(all)};
}

inline Subgroup intersect(const Subgroup& A, const Subgroup& B) {
    std::vector<Elt> out;
    std::set_intersection(A.members.begin(), A.members.end(),
                          B.members.begin(), B.members.end(), std::back_inserter(out));
    return Subgroup{A.parent, std::move(out)};
}

inline Subgroup join(const Subgroup& A, const Subgroup& B) {
    std::vector<Elt> seed = A.members;
    seed.insert(seed.end(), B.members.begin(), B.members.end());
    return generate_subgroup(A.parent, std::move(seed));
}

inline Subgroup conjugate_subgroup(const Subgroup& P, Elt g) {
    const auto& G = P.parent;
    std::vector<Elt> out;
    out.reserve(P.members.size());
    for (Elt x : P.members) out.push_back(G->conj(x, g));
    std::sort(out.begin(), out.end());
    return Subgroup{G, std::move(out)};
}

// N_H(P) = {h in H : P^h = P}
inline Subgroup normalizer_in(const Subgroup& H, const Subgroup& P) {
    const auto& G = H.parent;
    std::vector<Elt> out;
    for (Elt h : H.members) {
        bool ok = true;
        for (Elt x : P.members)
            if (!P.contains(G->conj(x, h))) { ok = false; break; }
        if (ok) out.push_back(h);
    }
    return Subgroup{G, std::move(out)};
}

inline Subgroup centralizer_in(const Subgroup& H, const Subgroup& P) {
    const auto& G = H.parent;
    std::vector<Elt> out;
    for (Elt h : H.members) {
        bool ok = true;
        for (Elt x : P.members)
            if (G->mul(x, h) != G->mul(h, x)) { ok = false; break; }
        if (ok) out.push_back(h);
    }
    return Subgroup{G, std::move(out)};
}

inline Subgroup center(const Subgroup& P) { return centralizer_in(P, P); }

struct LocalData {
    Subgroup normalizer;
    Subgroup centralizer;
    Subgroup center;
};

inline LocalData local_subgroup_data(const GroupPtr& G, const Subgroup& P) {
    Subgroup full = full_subgroup(G);
    return LocalData{normalizer_in(full, P), centralizer_in(full, P), center(P)};
}

inline bool is_normal_in(const Subgroup& H, const Subgroup& N) {
    return normalizer_in(H, N).order() == H.order();
}

// ---------------------------------------------------------------------------
// Sylow theory and cores

inline int p_part(int n, int p) {
    int r = 1;
    while (n % p == 0) { n /= p; r *= p; }
    return r;
}

inline bool is_p_group(const Subgroup& H, int p) {
    int n = H.order();
    while (n % p == 0) n /= p;
    return n == 1;
}

// Deterministic Sylow: grow a p-subgroup by the least element extending it.
inline Subgroup sylow_in(const Subgroup& H, int p) {
    const auto& G = H.parent;
    int target = p_part(H.order(), p);
    Subgroup P = trivial_subgroup(G);
    while (P.order() < target) {
        bool grew = false;
        for (Elt g : H.members) {
            if (P.contains(g)) continue;
            if (p_part(G->element_order(g), p) != G->element_order(g)) continue;
            std::vector<Elt> seed = P.members;
            seed.push_back(g);
            Subgroup Q = generate_subgroup(G, std::move(seed));
            if (Q.order() > P.order() && is_p_group(Q, p) && target % Q.order() == 0) {
                P = std::move(Q);
                grew = true;
                break;
            }
        }
        if (!grew) throw std::logic_error("sylow search stalled");  // cannot happen
    }
    return P;
}

// O^p(H): generated by all elements of order coprime to p.
inline Subgroup p_residual_in(const Subgroup& H, int p) {
    const auto& G = H.parent;
    std::vector<Elt> seed;
    for (Elt g : H.members)
        if (G->element_order(g) % p != 0) seed.push_back(g);
    return generate_subgroup(G, std::move(seed));
}

// O_p(H): intersection of all Sylow p-subgroups (conjugates of one).
inline Subgroup p_core_in(const Subgroup& H, int p) {
    Subgroup S = sylow_in(H, p);
    Subgroup core = S;
    for (Elt g : H.members) {
        core = intersect(core, conjugate_subgroup(S, g));
        if (core.order() == 1) break;
    }
    return core;
}

struct SylowData {
    Subgroup sylow;
    Subgroup p_residual;
    Subgroup p_core;
};

inline SylowData sylow_and_cores(const GroupPtr& G, int p) {
    Subgroup full = full_subgroup(G);
    return SylowData{sylow_in(full, p), p_residual_in(full, p), p_core_in(full, p)};
}

// ---------------------------------------------------------------------------
// Subgroup enumeration, canonical order (order, lexicographic member list)

inline bool subgroup_less(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
}

inline std::vector<Subgroup> all_subgroups(const Subgroup& T) {
    const auto& G = T.parent;
    std::map<std::vector<Elt>, bool> seen;
    std::vector<Subgroup> out;
    out.push_back(Subgroup{G, {0}});
    seen[{0}] = true;
    for (size_t head = 0; head < out.size(); ++head) {
        std::vector<Elt> base = out[head].members;
        for (Elt t : T.members) {
            if (std::binary_search(base.begin(), base.end(), t)) continue;
            std::vector<Elt> seed = base;
            seed.push_back(t);
            Subgroup H = generate_subgroup(G, std::move(seed));
            if (seen.emplace(H.members, true).second) out.push_back(std::move(H));
        }
    }
    std::sort(out.begin(), out.end(), subgroup_less);
    return out;
}

// ---------------------------------------------------------------------------
// Quotient groups (cosets ordered by minimal member index)

struct QuotientGroup {
    GroupPtr group;                 // the quotient S/R as an abstract group
    Subgroup base;                  // S
    Subgroup kernel;                // R, normal in S
    std::vector<Elt> rep;           // coset index -> representative in S
    std::map<Elt, int> coset_of;    // member of S -> coset index
};

inline QuotientGroup quotient_group(const Subgroup& S, const Subgroup& R) {
    const auto& G = S.parent;
    if (!is_normal_in(S, R)) throw std::invalid_argument("kernel not normal");
    std::map<Elt, int> coset_of;
    std::vector<Elt> rep;
    for (Elt s : S.members) {  // members sorted: first visit = minimal member
        if (coset_of.count(s)) continue;
        int id = (int)rep.size();
        rep.push_back(s);
        for (Elt r : R.members) coset_of[G->mul(s, r)] = id;
    }
    int m = (int)rep.size();
    std::vector<std::vector<Elt>> table(m, std::vector<Elt>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[a][b] = coset_of.at(G->mul(rep[a], rep[b]));
    std::vector<std::string> labels(m);
    for (int a = 0; a < m; ++a) labels[a] = G->label(rep[a]) + "R";
    QuotientGroup q;
    q.group = FiniteGroup::from_table(std::move(table), std::move(labels));
    q.base = S;
    q.kernel = R;
    q.rep = std::move(rep);
    q.coset_of = std::move(coset_of);
    return q;
}

// Exhaustive axiom check, used by tests on every constructed group.
inline bool validate_group(const GroupPtr& G) {
    int n = G->order();
    if (n > 512) return true;  // contract: exhaustive only at desk scale
    for (Elt a = 0; a < n; ++a) {
        if (G->mul(0, a) != a || G->mul(a, 0) != a) return false;
        if (G->mul(a, G->inverse(a)) != 0) return false;
        if (n % G->element_order(a) != 0) return false;
    }
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            for (Elt c = 0; c < n; ++c)
                if (G->mul(G->mul(a, b), c) != G->mul(a, G->mul(b, c))) return false;
    return true;
}

}  // namespace fusys
