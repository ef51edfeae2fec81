#pragma once

// Finite subgroups G of SL3 over a field of characteristic 3, given in
// monomial normal form: G is generated by a diagonal abelian part H
// (exponent triples modulo r) together with the coordinate 3-cycle S and,
// for the full symmetric kind, the swap T:
//
//   S = [[0,0,1],[1,0,0],[0,1,0]],   T = [[0,0,-1],[0,-1,0],[-1,0,0]].
//
// Every element is a symbolic pair (exponent triple e mod s, permutation pi)
// standing for the matrix D(zeta^e) * P(pi), where s = r for the cyclic kind
// and s = lcm(2, r) otherwise, and zeta is a primitive s-th root of unity in
// GF(3^m).  All arithmetic on elements is exact integer arithmetic; matrices
// over GF(3^m) are used to cross-check it.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gf3.hpp"
#include "parallel.hpp"

namespace wmk {

enum class GroupKind { C3, S3 };

inline std::string kind_name(GroupKind k) { return k == GroupKind::C3 ? "c3" : "s3"; }

using Residue = std::array<int64_t, 3>;  // exponent triple modulo r

struct GroupSpec {
    GroupKind kind = GroupKind::C3;
    int64_t r = 1;
    std::vector<Residue> hgens;
};

// --- permutations of three letters --------------------------------------------

struct Perm3 {
    std::array<uint8_t, 3> img{0, 1, 2};  // img[j] = pi(j)

    static Perm3 identity() { return {}; }
    static Perm3 cycle() { return Perm3{{1, 2, 0}}; }    // 0 -> 1 -> 2 -> 0
    static Perm3 swap02() { return Perm3{{2, 1, 0}}; }   // 0 <-> 2

    Perm3 compose(const Perm3& rho) const {  // (this o rho)(j) = this(rho(j))
        Perm3 out;
        for (int j = 0; j < 3; ++j) out.img[size_t(j)] = img[rho.img[size_t(j)]];
        return out;
    }
    Perm3 inverse() const {
        Perm3 out;
        for (int j = 0; j < 3; ++j) out.img[img[size_t(j)]] = uint8_t(j);
        return out;
    }
    int sign() const {
        int s = 1;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (img[size_t(i)] > img[size_t(j)]) s = -s;
        return s;
    }
    bool is_identity() const { return img == std::array<uint8_t, 3>{0, 1, 2}; }
    bool is_three_cycle() const { return !is_identity() && sign() == 1; }

    friend bool operator==(const Perm3&, const Perm3&) = default;
};

// Deterministic rank of a permutation among all six, by lex order of images.
inline unsigned perm_rank(const Perm3& p) {
    unsigned r = unsigned(p.img[0]) * 2;
    // after fixing img[0], the two remaining images are ordered or swapped
    uint8_t rest[2];
    int k = 0;
    for (uint8_t v = 0; v < 3; ++v)
        if (v != p.img[0]) rest[k++] = v;
    r += (p.img[1] == rest[0]) ? 0 : 1;
    return r;
}

// --- group elements ------------------------------------------------------------

struct MonomialElement {
    Perm3 perm;
    std::array<int64_t, 3> exps{0, 0, 0};  // reduced modulo s

    friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
};

// Shared immutable context for element arithmetic.
struct GroupCtx {
    GroupSpec spec;
    int64_t r = 1;
    int64_t s = 1;                 // diagonal exponent modulus
    std::vector<Residue> h;        // sorted residues of H
    std::set<Residue> h_set;

    int64_t hsize() const { return int64_t(h.size()); }
};

inline int64_t mod_nonneg(int64_t v, int64_t m) { return ((v % m) + m) % m; }

inline uint64_t element_key(const MonomialElement& g, const GroupCtx& ctx) {
    uint64_t s = uint64_t(ctx.s);
    uint64_t k = perm_rank(g.perm);
    for (int i = 0; i < 3; ++i) k = k * s + uint64_t(g.exps[size_t(i)]);
    return k;
}

inline MonomialElement element_mul(const MonomialElement& a, const MonomialElement& b,
                                   const GroupCtx& ctx) {
    MonomialElement c;
    c.perm = a.perm.compose(b.perm);
    Perm3 ainv = a.perm.inverse();
    for (int i = 0; i < 3; ++i) {
        int64_t moved = b.exps[ainv.img[size_t(i)]];  // D(e)P(pi)D(f) = D(e + pi.f)P(pi)
        c.exps[size_t(i)] = mod_nonneg(a.exps[size_t(i)] + moved, ctx.s);
    }
    return c;
}

inline MonomialElement element_inv(const MonomialElement& a, const GroupCtx& ctx) {
    MonomialElement b;
    b.perm = a.perm.inverse();
    for (int i = 0; i < 3; ++i)
        b.exps[size_t(i)] = mod_nonneg(-a.exps[a.perm.img[size_t(i)]], ctx.s);
    return b;
}

inline MonomialElement element_identity() { return MonomialElement{}; }

inline MonomialElement element_S() { return MonomialElement{Perm3::cycle(), {0, 0, 0}}; }

inline MonomialElement element_T(const GroupCtx& ctx) {
    if (ctx.spec.kind != GroupKind::S3)
        throw RepresentationError("group: T exists only for the symmetric kind");
    int64_t h = ctx.s / 2;
    return MonomialElement{Perm3::swap02(), {h, h, h}};
}

inline MonomialElement element_diag(const Residue& res, const GroupCtx& ctx) {
    int64_t k = ctx.s / ctx.r;
    MonomialElement e;
    for (int i = 0; i < 3; ++i) e.exps[size_t(i)] = mod_nonneg(res[size_t(i)] * k, ctx.s);
    return e;
}

// --- abelian part ----------------------------------------------------------------

// Subgroup of { (a,b,c) in (Z/r)^3 : a+b+c = 0 } generated by the given
// residues (entries reduced modulo r; each generator must sum to 0 mod r).
inline std::set<Residue> build_H(const std::vector<Residue>& gens, int64_t r) {
    if (r <= 0) throw Error("group: r must be positive");
    std::set<Residue> H{{0, 0, 0}};
    for (Residue g : gens) {
        for (auto& v : g) v = mod_nonneg(v, r);
        if (mod_nonneg(g[0] + g[1] + g[2], r) != 0)
            throw DeterminantViolation("group: generator exponents do not sum to 0 mod r");
        std::set<Residue> next;
        Residue step{0, 0, 0};
        do {
            for (const Residue& h : H) {
                Residue sum;
                for (int i = 0; i < 3; ++i) sum[size_t(i)] = mod_nonneg(h[size_t(i)] + step[size_t(i)], r);
                next.insert(sum);
            }
            for (int i = 0; i < 3; ++i) step[size_t(i)] = mod_nonneg(step[size_t(i)] + g[size_t(i)], r);
        } while (step != Residue{0, 0, 0});
        H = std::move(next);
    }
    return H;
}

inline Residue rotate_residue(const Residue& a) { return Residue{a[2], a[0], a[1]}; }
inline Residue reverse_residue(const Residue& a) { return Residue{a[2], a[1], a[0]}; }

struct ValidationReportLine {
    std::string check;
    bool ok = true;
    std::string detail;
};

struct ValidationResult {
    bool ok = true;
    std::vector<ValidationReportLine> lines;

    void add(const std::string& check, bool pass, const std::string& detail = "") {
        lines.push_back({check, pass, detail});
        ok = ok && pass;
    }
};

// Structural normal-form validation: tameness, closure of H under the
// coordinate rotation (and reversal + fullness for the symmetric kind), and
// existence of a diagonal element of exact order r.
inline ValidationResult validate_normal_form(const GroupSpec& spec) {
    ValidationResult res;
    if (spec.r <= 0) {
        res.add("r_positive", false, "r must be >= 1");
        return res;
    }
    res.add("tame", std::gcd(spec.r, int64_t(3)) == 1, "gcd(r,3) = 1 required");
    if (!res.ok) return res;

    std::set<Residue> H;
    try {
        H = build_H(spec.hgens, spec.r);
    } catch (const Error& e) {
        res.add("generators_wellformed", false, e.what());
        return res;
    }
    res.add("generators_wellformed", true);

    bool shift_closed = true;
    for (const Residue& h : H)
        if (!H.count(rotate_residue(h))) {
            shift_closed = false;
            break;
        }
    res.add("rotation_closed", shift_closed, "H must be stable under cyclic coordinate shift");

    bool has_order_r = false;
    for (const Residue& h : H) {
        int64_t g = std::gcd(std::gcd(h[0], h[1]), std::gcd(h[2], spec.r));
        if (std::gcd(g, spec.r) == 1) {
            has_order_r = true;
            break;
        }
    }
    res.add("max_order_r", has_order_r, "H must contain an element of exact order r");

    if (spec.kind == GroupKind::S3) {
        bool rev = true;
        for (const Residue& h : H)
            if (!H.count(reverse_residue(h))) {
                rev = false;
                break;
            }
        res.add("reversal_closed", rev, "H must be stable under coordinate reversal");
        res.add("full_lattice", int64_t(H.size()) == spec.r * spec.r,
                "#H = r^2 required for the symmetric kind");
    }
    return res;
}

// --- the full group table ----------------------------------------------------------

struct GroupTable {
    GroupCtx ctx;
    std::vector<MonomialElement> elements;  // sorted by element_key

    int64_t order() const { return int64_t(elements.size()); }
};

inline GroupCtx make_ctx(const GroupSpec& spec) {
    GroupCtx ctx;
    ctx.spec = spec;
    ctx.r = spec.r;
    ctx.s = spec.kind == GroupKind::S3 ? std::lcm(int64_t(2), spec.r) : spec.r;
    auto H = build_H(spec.hgens, spec.r);
    ctx.h.assign(H.begin(), H.end());
    ctx.h_set = std::move(H);
    return ctx;
}

inline GroupTable enumerate_group(const GroupSpec& spec) {
    ValidationResult v = validate_normal_form(spec);
    if (!v.ok) {
        std::string what = "group: spec failed normal-form validation:";
        for (const auto& l : v.lines)
            if (!l.ok) what += " [" + l.check + "] " + l.detail;
        throw Error(what);
    }
    GroupTable table;
    table.ctx = make_ctx(spec);
    const GroupCtx& ctx = table.ctx;

    std::vector<MonomialElement> rots{element_identity(), element_S(),
                                      element_mul(element_S(), element_S(), ctx)};
    std::vector<MonomialElement> refl{element_identity()};
    if (spec.kind == GroupKind::S3) refl.push_back(element_T(ctx));

    std::map<uint64_t, MonomialElement> seen;
    for (const Residue& h : ctx.h) {
        MonomialElement d = element_diag(h, ctx);
        for (const auto& si : rots)
            for (const auto& tj : refl) {
                MonomialElement g = element_mul(element_mul(d, si, ctx), tj, ctx);
                seen.emplace(element_key(g, ctx), g);
            }
    }
    int64_t expect = ctx.hsize() * (spec.kind == GroupKind::S3 ? 6 : 3);
    if (int64_t(seen.size()) != expect)
        throw RepresentationError("group: enumeration produced duplicate elements");
    table.elements.reserve(seen.size());
    for (auto& [k, g] : seen) table.elements.push_back(g);
    return table;
}

// --- matrices over GF(3^m) ---------------------------------------------------------

struct FieldMat3 {
    std::array<FieldElement, 9> a;
    FieldElement& at(int i, int j) { return a[size_t(3 * i + j)]; }
    const FieldElement& at(int i, int j) const { return a[size_t(3 * i + j)]; }
    friend bool operator==(const FieldMat3&, const FieldMat3&) = default;
};

inline FieldMat3 mat_zero(const FieldCtx& F) {
    FieldMat3 m;
    m.a.fill(F.zero());
    return m;
}

inline FieldMat3 mat_identity(const FieldCtx& F) {
    FieldMat3 m = mat_zero(F);
    for (int i = 0; i < 3; ++i) m.at(i, i) = F.one();
    return m;
}

inline FieldMat3 mat_mul(const FieldCtx& F, const FieldMat3& x, const FieldMat3& y) {
    FieldMat3 z = mat_zero(F);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            FieldElement acc = F.zero();
            for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(x.at(i, k), y.at(k, j)));
            z.at(i, j) = acc;
        }
    return z;
}

inline FieldElement mat_det(const FieldCtx& F, const FieldMat3& m) {
    auto mulv = [&](const FieldElement& a, const FieldElement& b, const FieldElement& c) {
        return F.mul(F.mul(a, b), c);
    };
    FieldElement pos = F.add(F.add(mulv(m.at(0, 0), m.at(1, 1), m.at(2, 2)),
                                   mulv(m.at(0, 1), m.at(1, 2), m.at(2, 0))),
                             mulv(m.at(0, 2), m.at(1, 0), m.at(2, 1)));
    FieldElement neg = F.add(F.add(mulv(m.at(0, 2), m.at(1, 1), m.at(2, 0)),
                                   mulv(m.at(0, 0), m.at(1, 2), m.at(2, 1))),
                             mulv(m.at(0, 1), m.at(1, 0), m.at(2, 2)));
    return F.sub(pos, neg);
}

inline int mat_rank(const FieldCtx& F, FieldMat3 m) {
    int rank = 0;
    int row = 0;
    for (int col = 0; col < 3 && row < 3; ++col) {
        int pivot = -1;
        for (int i = row; i < 3; ++i)
            if (!F.is_zero(m.at(i, col))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < 3; ++j) std::swap(m.at(row, j), m.at(pivot, j));
        FieldElement inv = F.inv(m.at(row, col));
        for (int j = 0; j < 3; ++j) m.at(row, j) = F.mul(m.at(row, j), inv);
        for (int i = 0; i < 3; ++i) {
            if (i == row || F.is_zero(m.at(i, col))) continue;
            FieldElement f = m.at(i, col);
            for (int j = 0; j < 3; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(row, j)));
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Field context hosting the diagonal entries of the given group.
inline FieldCtx field_for_group(const GroupCtx& ctx) { return FieldCtx::for_order(uint64_t(ctx.s)); }

inline FieldMat3 to_matrix(const MonomialElement& g, const GroupCtx& ctx, const FieldCtx& F) {
    FieldElement zeta = F.root_of_unity(uint64_t(ctx.s));
    FieldMat3 m = mat_zero(F);
    for (int j = 0; j < 3; ++j) {
        int i = g.perm.img[size_t(j)];
        m.at(i, j) = F.pow(zeta, uint64_t(g.exps[size_t(i)]));
    }
    return m;
}

// Symbolic product, cross-checked against the matrix representation.
inline MonomialElement multiply_and_matrix_consistency(const MonomialElement& a,
                                                       const MonomialElement& b,
                                                       const GroupCtx& ctx, const FieldCtx& F) {
    MonomialElement c = element_mul(a, b, ctx);
    FieldMat3 lhs = mat_mul(F, to_matrix(a, ctx, F), to_matrix(b, ctx, F));
    if (!(lhs == to_matrix(c, ctx, F)))
        throw RepresentationError("group: symbolic product disagrees with matrix product");
    return c;
}

// Elements acting as pseudo-reflections (rank(M - I) = 1); a small group has none.
inline std::vector<MonomialElement> pseudo_reflections(const GroupTable& table, const FieldCtx& F) {
    std::vector<MonomialElement> bad;
    FieldMat3 eye = mat_identity(F);
    for (const auto& g : table.elements) {
        FieldMat3 m = to_matrix(g, table.ctx, F);
        for (int i = 0; i < 3; ++i) m.at(i, i) = F.sub(m.at(i, i), eye.at(i, i));
        if (mat_rank(F, m) == 1) bad.push_back(g);
    }
    return bad;
}

// Checks det = 1 for every element; returns offenders (empty = inside SL3).
inline std::vector<MonomialElement> determinant_offenders(const GroupTable& table, const FieldCtx& F) {
    std::vector<MonomialElement> bad;
    for (const auto& g : table.elements)
        if (!(mat_det(F, to_matrix(g, table.ctx, F)) == F.one())) bad.push_back(g);
    return bad;
}

// Non-identity elements mapping to scalar matrices (faithfulness of the
// induced action on the quotient requires none).
inline std::vector<MonomialElement> scalar_offenders(const GroupTable& table) {
    std::vector<MonomialElement> bad;
    for (const auto& g : table.elements) {
        if (g == element_identity()) continue;
        if (g.perm.is_identity() && g.exps[0] == g.exps[1] && g.exps[1] == g.exps[2])
            bad.push_back(g);
    }
    return bad;
}

// --- conjugacy classes ----------------------------------------------------------------

struct ConjugacyClasses {
    int64_t count = 0;
    std::vector<MonomialElement> reps;          // minimal element of each class
    std::vector<int64_t> sizes;                 // aligned with reps
    std::map<int64_t, int64_t> size_histogram;  // class size -> #classes
};

// Brute force: the canonical representative of each element's class is the
// key-minimal conjugate; classes are grouped by representative.
inline ConjugacyClasses conjugacy_classes_bruteforce(const GroupTable& table) {
    const GroupCtx& ctx = table.ctx;
    const auto& els = table.elements;
    std::vector<MonomialElement> invs(els.size());
    for (size_t i = 0; i < els.size(); ++i) invs[i] = element_inv(els[i], ctx);

    std::vector<uint64_t> rep_key(els.size());
    parallel_for(els.size(), [&](size_t i) {
        uint64_t best = UINT64_MAX;
        for (size_t j = 0; j < els.size(); ++j) {
            MonomialElement c = element_mul(element_mul(els[j], els[i], ctx), invs[j], ctx);
            best = std::min(best, element_key(c, ctx));
        }
        rep_key[i] = best;
    });

    std::map<uint64_t, int64_t> by_rep;
    for (uint64_t k : rep_key) ++by_rep[k];
    ConjugacyClasses out;
    out.count = int64_t(by_rep.size());
    std::map<uint64_t, MonomialElement> key_to_el;
    for (const auto& g : els) key_to_el.emplace(element_key(g, ctx), g);
    for (const auto& [k, n] : by_rep) {
        out.reps.push_back(key_to_el.at(k));
        out.sizes.push_back(n);
        ++out.size_histogram[n];
    }
    return out;
}

// Closed-form class count; hypotheses re-checked before use.
inline int64_t conjugacy_count_formula(const GroupCtx& ctx) {
    int64_t n = ctx.hsize();
    if (ctx.spec.kind == GroupKind::C3) {
        if ((n - 1) % 3 != 0)
            throw FormulaPreconditionViolation("group: #H - 1 not divisible by 3");
        return (n - 1) / 3 + 3;
    }
    int64_t r = ctx.r;
    if (n != r * r)
        throw FormulaPreconditionViolation("group: #H != r^2 for the symmetric kind");
    if (((r - 1) * (r - 2)) % 6 != 0)
        throw FormulaPreconditionViolation("group: (r-1)(r-2) not divisible by 6");
    return (r - 1) * (r - 2) / 6 + 2 * r + 1;
}

// Census of classes by coset type: diagonal part, 3-cycle part, swap part.
struct ClassCensus {
    int64_t diag_classes = 0;
    int64_t rot_classes = 0;
    int64_t refl_classes = 0;
    std::map<int64_t, int64_t> diag_size_histogram;
};

inline ClassCensus class_census(const GroupTable& table) {
    const GroupCtx& ctx = table.ctx;
    const auto& els = table.elements;
    std::vector<MonomialElement> invs(els.size());
    for (size_t i = 0; i < els.size(); ++i) invs[i] = element_inv(els[i], ctx);
    std::set<uint64_t> seen;
    ClassCensus census;
    for (const auto& g : els) {
        if (seen.count(element_key(g, ctx))) continue;
        std::set<uint64_t> orbit;
        for (size_t j = 0; j < els.size(); ++j) {
            MonomialElement c = element_mul(element_mul(els[j], g, ctx), invs[j], ctx);
            orbit.insert(element_key(c, ctx));
        }
        seen.insert(orbit.begin(), orbit.end());
        if (g.perm.is_identity()) {
            ++census.diag_classes;
            ++census.diag_size_histogram[int64_t(orbit.size())];
        } else if (g.perm.is_three_cycle()) {
            ++census.rot_classes;
        } else {
            ++census.refl_classes;
        }
    }
    return census;
}

}  // namespace wmk
