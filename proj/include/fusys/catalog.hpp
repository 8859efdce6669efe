#pragma once

// Fixed corpus of group-theoretic instances used for differential testing:
// classical small groups plus the vector-space semidirect constructions with
// two commuting diagonalizable automorphisms.

#include "fusys/product.hpp"

namespace fusys {

// ---------------------------------------------------------------------------
// GF(q), q = p^k. Elements are integer codes 0..q-1, base-p digits being
// polynomial coefficients modulo a brute-forced irreducible monic polynomial.

class GaloisField {
public:
    int p = 0, k = 0, q = 0;

    explicit GaloisField(int q_) : q(q_) {
        if (q < 2) throw std::invalid_argument("field size must be >= 2");
        int n = q;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                p = d;
                break;
            }
        if (p == 0) p = n;
        k = 0;
        while (n > 1) {
            if (n % p != 0) throw std::invalid_argument("field size is not a prime power");
            n /= p;
            ++k;
        }
        if (k > 1) irred_ = find_irreducible();
    }

    int add(int a, int b) const {
        int r = 0, m = 1;
        while (a || b) {
            r += ((a % p + b % p) % p) * m;
            a /= p;
            b /= p;
            m *= p;
        }
        return r;
    }
    int neg(int a) const {
        int r = 0, m = 1;
        while (a) {
            r += ((p - a % p) % p) * m;
            a /= p;
            m *= p;
        }
        return r;
    }
    int mul(int a, int b) const {
        if (k == 1) return (a * b) % p;
        std::vector<int> prod(2 * k - 1, 0);
        std::vector<int> da = digits(a), db = digits(b);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        // reduce modulo the irreducible polynomial (monic of degree k)
        for (int d = 2 * k - 2; d >= k; --d) {
            int c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (int i = 0; i < k; ++i)
                prod[d - k + i] = ((prod[d - k + i] - c * irred_[i]) % p + p) % p;
        }
        int r = 0, m = 1;
        for (int i = 0; i < k; ++i) {
            r += prod[i] * m;
            m *= p;
        }
        return r;
    }

private:
    std::vector<int> irred_;  // coefficients of x^0..x^{k-1}; leading term implicit

    std::vector<int> digits(int a) const {
        std::vector<int> d(k);
        for (int i = 0; i < k; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    }
    // value of the monic polynomial x^k + sum c_i x^i at x, over GF(p)
    static int eval(const std::vector<int>& c, int x, int k, int p) {
        long long v = 1;
        for (int i = 0; i < k; ++i) v = (v * x) % p;
        long long xp = 1;
        for (int i = 0; i < (int)c.size(); ++i) {
            v = (v + c[i] * xp) % p;
            xp = (xp * x) % p;
        }
        return (int)v;
    }
    std::vector<int> find_irreducible() const {
        // monic x^k + tail; tail coded base p. Irreducible iff no monic factor
        // of degree 1..k/2; at desk scale trial division over coded tails.
        int tails = 1;
        for (int i = 0; i < k; ++i) tails *= p;
        for (int t = 0; t < tails; ++t) {
            std::vector<int> c(k);
            int v = t;
            for (int i = 0; i < k; ++i) {
                c[i] = v % p;
                v /= p;
            }
            if (c[0] == 0) continue;  // divisible by x
            if (is_irreducible(c)) return c;
        }
        throw std::logic_error("no irreducible polynomial found");
    }
    bool is_irreducible(const std::vector<int>& c) const {
        // divide x^k + c by every monic polynomial of degree 1..k/2
        for (int d = 1; 2 * d <= k; ++d) {
            int tails = 1;
            for (int i = 0; i < d; ++i) tails *= p;
            for (int t = 0; t < tails; ++t) {
                std::vector<int> f(d + 1);
                f[d] = 1;
                int v = t;
                for (int i = 0; i < d; ++i) {
                    f[i] = v % p;
                    v /= p;
                }
                // long division of x^k + c by f over GF(p)
                std::vector<int> r(k + 1, 0);
                r[k] = 1;
                for (int i = 0; i < k; ++i) r[i] = c[i];
                for (int i = k; i >= d; --i) {
                    int co = r[i];
                    if (!co) continue;
                    for (int j = 0; j <= d; ++j)
                        r[i - d + j] = ((r[i - d + j] - co * f[j]) % p + p) % p;
                }
                bool zero = true;
                for (int i = 0; i < d; ++i)
                    if (r[i]) { zero = false; break; }
                if (zero) return false;
            }
        }
        return true;
    }
};

// ---------------------------------------------------------------------------
// Vector-space semidirect products: points are vectors of GF(q)^d, the group
// is generated by all translations plus the given linear maps.

struct VectorSpaceGroup {
    GaloisField field;
    int dim = 0;
    GroupPtr group;
    Subgroup translations;  // the elementary abelian p-group S

    int num_points() const {
        int n = 1;
        for (int i = 0; i < dim; ++i) n *= field.q;
        return n;
    }
    std::vector<int> coords(int pt) const {
        std::vector<int> v(dim);
        for (int i = 0; i < dim; ++i) {
            v[i] = pt % field.q;
            pt /= field.q;
        }
        return v;
    }
    int point(const std::vector<int>& v) const {
        int pt = 0;
        for (int i = dim - 1; i >= 0; --i) pt = pt * field.q + v[i];
        return pt;
    }

    Perm translation_perm(const std::vector<int>& v) const {
        Perm r(num_points());
        for (int pt = 0; pt < num_points(); ++pt) {
            std::vector<int> c = coords(pt);
            for (int i = 0; i < dim; ++i) c[i] = field.add(c[i], v[i]);
            r[pt] = point(c);
        }
        return r;
    }
    // matrix given column-wise: column j = image of basis vector e_j
    Perm linear_perm(const std::vector<std::vector<int>>& cols) const {
        Perm r(num_points());
        for (int pt = 0; pt < num_points(); ++pt) {
            std::vector<int> c = coords(pt), img(dim, 0);
            for (int j = 0; j < dim; ++j)
                for (int i = 0; i < dim; ++i)
                    img[i] = field.add(img[i], field.mul(cols[j][i], c[j]));
            r[pt] = point(img);
        }
        return r;
    }
    Elt translation(const std::vector<int>& v) const { return group->index_of(translation_perm(v)); }
    Elt linear(const std::vector<std::vector<int>>& cols) const {
        return group->index_of(linear_perm(cols));
    }
    // translations by all GF(q)-combinations of the given spanning vectors
    Subgroup translation_subgroup(const std::vector<std::vector<int>>& span) const {
        std::vector<Elt> seed;
        for (const auto& v : span) seed.push_back(translation(v));
        return generate_subgroup(group, std::move(seed));
    }
};

inline VectorSpaceGroup build_vector_space_semidirect(
    int q, int dim, const std::vector<std::vector<std::vector<int>>>& linear_maps) {
    VectorSpaceGroup vs{GaloisField(q), dim, nullptr, {}};
    std::vector<Perm> gens;
    for (int i = 0; i < dim; ++i) {
        std::vector<int> e(dim, 0);
        e[i] = 1;
        gens.push_back(vs.translation_perm(e));
    }
    for (const auto& m : linear_maps) gens.push_back(vs.linear_perm(m));
    vs.group = FiniteGroup::from_permutations(vs.num_points(), gens);
    std::vector<Elt> tseed;
    for (int i = 0; i < dim; ++i) {
        std::vector<int> e(dim, 0);
        e[i] = 1;
        tseed.push_back(vs.translation(e));
    }
    vs.translations = generate_subgroup(vs.group, std::move(tseed));
    return vs;
}

// a non-identity unit of GF(q); the scalar used by the fixture automorphisms
inline int fixture_scalar(const GaloisField& f) {
    if (f.q < 3) throw std::invalid_argument("fixture requires q >= 3");
    return 2;  // code 2 exists for q >= 3 and is never 0 or 1
}

// ---------------------------------------------------------------------------
// Classical small groups (permutation realizations)

inline GroupPtr make_s4() { return build_group_from_permutations(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}); }
inline GroupPtr make_a4() {
    return build_group_from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
}
inline GroupPtr make_s4_x_c2() {
    return build_group_from_permutations(6, {{1, 2, 3, 0, 4, 5}, {1, 0, 2, 3, 4, 5}, {0, 1, 2, 3, 5, 4}});
}
inline GroupPtr make_s3_x_s3() {
    return build_group_from_permutations(6, {{1, 2, 0, 3, 4, 5}, {1, 0, 2, 3, 4, 5},
                                             {0, 1, 2, 4, 5, 3}, {0, 1, 2, 4, 3, 5}});
}
// GL(2,3) acting on the 9 vectors of GF(3)^2 (point = x + 3y)
inline GroupPtr make_gl23() {
    GaloisField f(3);
    VectorSpaceGroup vs{f, 2, nullptr, {}};
    Perm a = vs.linear_perm({{1, 0}, {1, 1}});  // transvection
    Perm b = vs.linear_perm({{0, 1}, {1, 0}});  // swap, det -1
    auto G = FiniteGroup::from_permutations(9, {a, b});
    if (G->order() != 48) throw std::logic_error("unexpected GL(2,3) order");
    return G;
}
inline GroupPtr make_sl23() {
    GaloisField f(3);
    VectorSpaceGroup vs{f, 2, nullptr, {}};
    Perm a = vs.linear_perm({{1, 0}, {1, 1}});
    Perm b = vs.linear_perm({{0, 1}, {2, 0}});  // det 1
    auto G = FiniteGroup::from_permutations(9, {a, b});
    if (G->order() != 24) throw std::logic_error("unexpected SL(2,3) order");
    return G;
}

// ---------------------------------------------------------------------------
// Oracle: the product system of a group instance is the fusion system of NT.

inline FusionSystem oracle_product(const GroupPtr& G, const Subgroup& N, const Subgroup& T,
                                   int p) {
    if (!is_normal_in(full_subgroup(G), N)) throw std::invalid_argument("subgroup not normal");
    Subgroup NT = join(N, T);
    if (p_part(NT.order(), p) != T.order())
        throw std::invalid_argument("carrier is not Sylow-p in NT");
    FusionSystem F = fusion_system_of(NT, T, p);
    F.provenance = "oracle";
    return F;
}

// ---------------------------------------------------------------------------
// Catalog

struct CatalogCase {
    std::string name;
    GroupPtr G;
    Subgroup N;  // normal subgroup
    int p = 0;
    Subgroup S;  // chosen Sylow p-subgroup of G
    Subgroup T;  // carrier, S0 <= T <= S
    // expected flags
    bool oracle_equal = true;
    bool saturated = true;
    bool op_identity = true;
};

inline ProductInstance instance_of(const CatalogCase& c) {
    FusionSystem F = fusion_system_of_group(c.G, c.S, c.p);
    Subgroup S0 = intersect(c.S, c.N);
    FusionSystem F0 = fusion_system_of(c.N, S0, c.p);
    return ProductInstance(std::move(F), std::move(F0), c.T);
}

inline CatalogCase case_s4a4() {
    CatalogCase c;
    c.name = "s4a4";
    c.G = make_s4();
    Subgroup full = full_subgroup(c.G);
    c.N = p_residual_in(full, 2);  // A4
    c.p = 2;
    c.S = sylow_in(full, 2);
    c.T = c.S;
    return c;
}

// S4 x C2 with proper carrier T = V4 x C2 inside S = D8 x C2
inline CatalogCase case_s4a4_x_c2() {
    CatalogCase c;
    c.name = "s4a4xc2";
    c.G = make_s4_x_c2();
    Subgroup full = full_subgroup(c.G);
    c.p = 2;
    c.S = sylow_in(full, 2);
    // N = A4 x 1: p-residual of the S4 factor
    std::vector<Elt> seed;
    for (Elt g : full.members) {
        const Perm& q = c.G->perm(g);
        if (q[4] == 4 && q[5] == 5 && c.G->element_order(g) % 2 != 0) seed.push_back(g);
    }
    c.N = generate_subgroup(c.G, std::move(seed));
    if (c.N.order() != 12) throw std::logic_error("unexpected A4 factor order");
    // T = V4 x C2 = S0 joined with the C2 factor
    Subgroup S0 = intersect(c.S, c.N);
    Perm flip = perm_identity(6);
    std::swap(flip[4], flip[5]);
    std::vector<Elt> tseed = S0.members;
    tseed.push_back(c.G->index_of(flip));
    c.T = generate_subgroup(c.G, std::move(tseed));
    if (c.T.order() != 8 || c.S.order() != 16) throw std::logic_error("unexpected carrier orders");
    return c;
}

inline CatalogCase case_gl23sl23() {
    CatalogCase c;
    c.name = "gl23sl23";
    c.G = make_gl23();
    Subgroup full = full_subgroup(c.G);
    c.N = p_residual_in(full, 2);  // SL(2,3)
    if (c.N.order() != 24) throw std::logic_error("unexpected SL(2,3) order");
    c.p = 2;
    c.S = sylow_in(full, 2);  // semidihedral of order 16
    c.T = c.S;
    return c;
}

inline CatalogCase case_a4v4() {
    CatalogCase c;
    c.name = "a4v4";
    c.G = make_a4();
    Subgroup full = full_subgroup(c.G);
    c.N = p_core_in(full, 2);  // V4
    c.p = 2;
    c.S = sylow_in(full, 2);   // = V4
    c.T = c.S;
    return c;
}

inline CatalogCase case_sl23q8() {
    CatalogCase c;
    c.name = "sl23q8";
    c.G = make_sl23();
    Subgroup full = full_subgroup(c.G);
    c.N = p_core_in(full, 2);  // Q8
    c.p = 2;
    c.S = sylow_in(full, 2);   // = Q8
    c.T = c.S;
    return c;
}

// Two copies of the symmetric group on three letters, p = 3: the Sylow
// 3-subgroup T is normal and its inner system is a proper normal subsystem
// with trivial quotient; the product with T is the subsystem itself.
inline CatalogCase case_ex71() {
    CatalogCase c;
    c.name = "ex71";
    c.G = make_s3_x_s3();
    Subgroup full = full_subgroup(c.G);
    c.p = 3;
    c.S = sylow_in(full, 3);
    c.N = c.S;  // normal Sylow: N = T = S
    c.T = c.S;
    return c;
}

// ---------------------------------------------------------------------------
// Vector-space fixtures

struct Fixture74 {
    VectorSpaceGroup vs;   // ambient closure of S with both linear maps
    Subgroup S;            // the translation group, GF(q)^2
    Subgroup G1, G2;       // S with alpha_1 resp. alpha_2
    Subgroup U;            // the common scaled line
    FusionSystem F, Gsys;  // fusion systems of G1, G2 on S
    FusionSystem F0;       // O^p(F)
    Elt alpha1 = 0, alpha2 = 0;
};

inline Fixture74 fixture_example_7_4(int q) {
    GaloisField f(q);
    int lam = fixture_scalar(f);
    // alpha_1: lambda on U = <e1>, identity on W1 = <e2>
    std::vector<std::vector<int>> m1 = {{lam, 0}, {0, 1}};
    // alpha_2: lambda on U, identity on W2 = <e1 + e2>
    // e1 -> lam*e1; e1+e2 fixed => e2 -> (1-lam) e1 + e2
    std::vector<std::vector<int>> m2 = {{lam, 0}, {f.add(1, f.neg(lam)), 1}};
    Fixture74 fx{build_vector_space_semidirect(q, 2, {m1, m2}), {}, {}, {}, {}, {}, {}, 0, 0};
    fx.S = fx.vs.translations;
    fx.alpha1 = fx.vs.linear(m1);
    fx.alpha2 = fx.vs.linear(m2);
    std::vector<Elt> s1 = fx.S.members, s2 = fx.S.members;
    s1.push_back(fx.alpha1);
    s2.push_back(fx.alpha2);
    fx.G1 = generate_subgroup(fx.vs.group, std::move(s1));
    fx.G2 = generate_subgroup(fx.vs.group, std::move(s2));
    fx.U = fx.vs.translation_subgroup({{1, 0}});
    fx.F = fusion_system_of(fx.G1, fx.S, f.p);
    fx.Gsys = fusion_system_of(fx.G2, fx.S, f.p);
    fx.F0 = op_residual_subsystem(fx.F);
    return fx;
}

struct Fixture75 {
    VectorSpaceGroup vs;
    Subgroup S, S0, P, U;  // S = U+V+W, S0 = U+V, P = U+W
    Subgroup Gsub, N;      // G = S:<alpha,beta>, N = <S0, beta>
    FusionSystem F, F0;
    Elt alpha = 0, beta = 0;
};

inline Fixture75 fixture_example_7_5(int q) {
    GaloisField f(q);
    int lam = fixture_scalar(f);
    // alpha: lambda on U = <e1>, identity on V+W = <e2,e3>
    std::vector<std::vector<int>> ma = {{lam, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    // beta: lambda on S0 = <e1,e2>, identity on W' = <e2 + e3>
    // e3 = (e2+e3) - e2 -> (e2+e3) - lam e2 = (1-lam) e2 + e3
    std::vector<std::vector<int>> mb = {{lam, 0, 0}, {0, lam, 0}, {0, f.add(1, f.neg(lam)), 1}};
    Fixture75 fx{build_vector_space_semidirect(q, 3, {ma, mb}), {}, {}, {}, {}, {}, {}, {}, {}, 0, 0};
    fx.S = fx.vs.translations;
    fx.alpha = fx.vs.linear(ma);
    fx.beta = fx.vs.linear(mb);
    fx.Gsub = full_subgroup(fx.vs.group);
    fx.S0 = fx.vs.translation_subgroup({{1, 0, 0}, {0, 1, 0}});
    fx.U = fx.vs.translation_subgroup({{1, 0, 0}});
    fx.P = fx.vs.translation_subgroup({{1, 0, 0}, {0, 0, 1}});
    std::vector<Elt> nseed = fx.S0.members;
    nseed.push_back(fx.beta);
    fx.N = generate_subgroup(fx.vs.group, std::move(nseed));
    fx.F = fusion_system_of(fx.Gsub, fx.S, f.p);
    fx.F0 = fusion_system_of(fx.N, fx.S0, f.p);
    return fx;
}

// The 7.4 construction as a group instance: G = S:<alpha_1> with the normal
// subgroup N = U<alpha_1> carrying O^p(F_S(G)) on S0 = U.
inline CatalogCase case_ex74(int q = 3) {
    GaloisField f(q);
    int lam = fixture_scalar(f);
    std::vector<std::vector<int>> m1 = {{lam, 0}, {0, 1}};
    VectorSpaceGroup vs = build_vector_space_semidirect(q, 2, {m1});
    CatalogCase c;
    c.name = "ex74";
    c.G = vs.group;
    c.p = f.p;
    c.S = vs.translations;
    c.T = c.S;
    Subgroup U = vs.translation_subgroup({{1, 0}});
    std::vector<Elt> nseed = U.members;
    nseed.push_back(vs.linear(m1));
    c.N = generate_subgroup(c.G, std::move(nseed));
    return c;
}

inline CatalogCase case_ex75(int q = 3) {
    Fixture75 fx = fixture_example_7_5(q);
    CatalogCase c;
    c.name = "ex75";
    c.G = fx.vs.group;
    c.N = fx.N;
    c.p = fx.vs.field.p;
    c.S = fx.S;
    c.T = fx.S;
    return c;
}

inline std::vector<CatalogCase> standard_catalog() {
    return {case_s4a4(),  case_s4a4_x_c2(), case_gl23sl23(), case_a4v4(),
            case_sl23q8(), case_ex71(),      case_ex74(),     case_ex75()};
}

inline const CatalogCase* find_case(const std::vector<CatalogCase>& cat, const std::string& name) {
    for (const auto& c : cat) if (c.name == name) return &c;
    return nullptr;
}

}  // namespace fusys
