#pragma once

// Table-backed finite fields GF(3^m) for exhaustive point scans, plus a small
// compiler that turns sparse polynomials into fast evaluation programs.
//
// Element indices agree with FieldCtx::to_int, so GF(3) scalars embed as the
// indices 0, 1, 2 and results are directly comparable across modules.

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gf3.hpp"
#include "mpoly.hpp"
#include "parallel.hpp"

namespace wmk {

struct SmallField {
    unsigned degree = 1;
    uint32_t q = 3;
    std::string modulus;
    std::vector<uint16_t> add_t, mul_t, neg_t, inv_t;

    static SmallField make(unsigned m) {
        FieldCtx ctx = FieldCtx::of_degree(m);
        SmallField F;
        F.degree = m;
        F.q = 1;
        for (unsigned i = 0; i < m; ++i) F.q *= 3;
        F.modulus = poly_to_string(ctx.modulus());
        F.add_t.assign(size_t(F.q) * F.q, 0);
        F.mul_t.assign(size_t(F.q) * F.q, 0);
        F.neg_t.assign(F.q, 0);
        F.inv_t.assign(F.q, 0);
        std::vector<FieldElement> elems;
        elems.reserve(F.q);
        for (uint32_t i = 0; i < F.q; ++i) elems.push_back(ctx.from_int(i));
        for (uint32_t i = 0; i < F.q; ++i) {
            F.neg_t[i] = uint16_t(ctx.to_int(ctx.neg(elems[i])));
            if (i != 0) F.inv_t[i] = uint16_t(ctx.to_int(ctx.inv(elems[i])));
            for (uint32_t j = 0; j < F.q; ++j) {
                F.add_t[size_t(i) * F.q + j] = uint16_t(ctx.to_int(ctx.add(elems[i], elems[j])));
                F.mul_t[size_t(i) * F.q + j] = uint16_t(ctx.to_int(ctx.mul(elems[i], elems[j])));
            }
        }
        return F;
    }

    uint16_t add(uint16_t a, uint16_t b) const { return add_t[size_t(a) * q + b]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_t[size_t(a) * q + b]; }
    uint16_t neg(uint16_t a) const { return neg_t[a]; }
    uint16_t inv(uint16_t a) const {
        if (a == 0) throw DivisionByZero("scan field: inverse of zero");
        return inv_t[a];
    }
    uint16_t scalar(uint8_t c) const { return c; }  // GF(3) embeds as indices 0..2
    uint16_t pow(uint16_t a, uint32_t e) const {
        uint16_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

// Polynomial compiled to a flat term list for fast repeated evaluation.
struct CompiledPoly {
    struct Term {
        uint16_t coeff;
        std::vector<std::pair<uint16_t, uint16_t>> factors;  // (variable, exponent)
    };
    std::vector<Term> terms;

    static CompiledPoly compile(const MPoly& f, const SmallField& F) {
        CompiledPoly out;
        for (const auto& [e, c] : f.terms()) {
            Term t;
            t.coeff = F.scalar(c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t.factors.push_back({uint16_t(i), uint16_t(e[i])});
            out.terms.push_back(std::move(t));
        }
        return out;
    }

    uint16_t eval(const SmallField& F, const std::vector<uint16_t>& pt) const {
        uint16_t acc = 0;
        for (const Term& t : terms) {
            uint16_t v = t.coeff;
            for (auto [var, exp] : t.factors) v = F.mul(v, F.pow(pt[var], exp));
            acc = F.add(acc, v);
        }
        return acc;
    }
};

// Rank of a small matrix over the scan field (used on Jacobian evaluations).
inline size_t small_rank(const SmallField& F, std::vector<std::vector<uint16_t>> m) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[rank]);
        uint16_t inv = F.inv(m[rank][col]);
        for (size_t j = col; j < cols; ++j) m[rank][j] = F.mul(m[rank][j], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            uint16_t f = m[i][col];
            for (size_t j = col; j < cols; ++j)
                m[i][j] = F.add(m[i][j], F.neg(F.mul(f, m[rank][j])));
        }
        ++rank;
    }
    return rank;
}

// Exhaustive singular-locus computation for V(equations) in affine space over
// the scan field.  A point of the variety is singular when the Jacobian has
// rank below the number of equations (all systems here are complete
// intersections of that codimension).  The result is compared pointwise with
// the zero set of `claimed`; an empty claimed locus is encoded by the single
// constant polynomial 1.
struct ScanResult {
    std::string system;
    unsigned field_degree = 1;
    uint64_t points_scanned = 0;
    uint64_t variety_points = 0;
    uint64_t singular_points = 0;
    uint64_t claimed_points = 0;
    bool match = false;
    std::vector<uint16_t> first_mismatch;  // a witness point when match is false
};

inline ScanResult scan_singular_locus(std::string system, const std::vector<MPoly>& equations,
                                      const std::vector<MPoly>& claimed, const SmallField& F) {
    if (equations.empty()) throw Error("scan: no defining equations");
    size_t nvars = equations[0].ring().size();
    for (const MPoly& e : equations)
        if (e.ring().size() != nvars) throw Error("scan: equations in mixed rings");

    std::vector<CompiledPoly> eqs, jac, claim;
    for (const MPoly& e : equations) {
        eqs.push_back(CompiledPoly::compile(e, F));
        for (const MPoly& d : gradient(e)) jac.push_back(CompiledPoly::compile(d, F));
    }
    for (const MPoly& c : claimed) claim.push_back(CompiledPoly::compile(c, F));

    uint64_t total = 1;
    for (size_t i = 0; i < nvars; ++i) total *= F.q;

    struct Tally {
        uint64_t variety = 0, singular = 0, claimed = 0;
        bool mismatch = false;
        std::vector<uint16_t> witness;
    };
    size_t workers = worker_count();
    std::vector<Tally> tallies(workers);
    uint64_t chunk = (total + workers - 1) / workers;

    parallel_for(workers, [&](size_t w) {
        uint64_t lo = uint64_t(w) * chunk;
        uint64_t hi = std::min(total, lo + chunk);
        Tally& tally = tallies[w];
        std::vector<uint16_t> pt(nvars);
        std::vector<std::vector<uint16_t>> jrows(equations.size(),
                                                 std::vector<uint16_t>(nvars));
        for (uint64_t idx = lo; idx < hi; ++idx) {
            uint64_t rest = idx;
            for (size_t i = 0; i < nvars; ++i) {
                pt[i] = uint16_t(rest % F.q);
                rest /= F.q;
            }
            bool on_variety = true;
            for (const CompiledPoly& e : eqs)
                if (e.eval(F, pt) != 0) {
                    on_variety = false;
                    break;
                }
            bool singular = false;
            if (on_variety) {
                ++tally.variety;
                for (size_t r = 0; r < equations.size(); ++r)
                    for (size_t cidx = 0; cidx < nvars; ++cidx)
                        jrows[r][cidx] = jac[r * nvars + cidx].eval(F, pt);
                singular = small_rank(F, jrows) < equations.size();
            }
            bool in_claim = true;
            for (const CompiledPoly& c : claim)
                if (c.eval(F, pt) != 0) {
                    in_claim = false;
                    break;
                }
            if (singular) ++tally.singular;
            if (in_claim) ++tally.claimed;
            if (singular != in_claim && !tally.mismatch) {
                tally.mismatch = true;
                tally.witness = pt;
            }
        }
    });

    ScanResult out;
    out.system = std::move(system);
    out.field_degree = F.degree;
    out.points_scanned = total;
    out.match = true;
    for (const Tally& t : tallies) {
        out.variety_points += t.variety;
        out.singular_points += t.singular;
        out.claimed_points += t.claimed;
        if (t.mismatch && out.match) {
            out.match = false;
            out.first_mismatch = t.witness;
        }
    }
    return out;
}

}  // namespace wmk
