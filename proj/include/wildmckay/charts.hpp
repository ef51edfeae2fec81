#pragma once

// Chart-by-chart certification of the two-stage resolution of the degree-6
// hypersurface cut out by the generator relation.
//
// Stage 1 blows up the origin with weights (1,1,2,2); it is covered by two
// charts ("vertical" over y1, "horizontal" over y2), each carrying an exact
// factorization  f(substitution) = factor * strict_transform.
// Stage 2 blows up the singular curve of each stage-1 chart; every stage-2
// chart again carries an exact polynomial factorization identity, and three
// of the six charts admit unit witnesses showing they contribute nothing new.
//
// The involution that extends the rotation action to the full group descends
// through both stages; its quotient charts are presented by explicit invariant
// generators and relations, certified degreewise against kernel computations.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gf3_linalg.hpp"
#include "invariant_ring.hpp"
#include "mpoly.hpp"

namespace wmk {

// --- chart rings and equations ------------------------------------------------

inline const PolyRing& t_chart_ring() {  // vertical stage-1 chart
    static const PolyRing r{{"y1", "y3", "tu", "tv"}};
    return r;
}
inline const PolyRing& u_chart_ring() {  // horizontal stage-1 chart
    static const PolyRing r{{"y2", "y3", "ut", "uv"}};
    return r;
}

// strict transform in the vertical chart: tv^2 + tu^3 y1 + y1 y3 - tu tv y1
inline const MPoly& t_chart_equation() {
    static const MPoly g = [] {
        const PolyRing& R = t_chart_ring();
        MPoly y1 = MPoly::variable(R, 0), y3 = MPoly::variable(R, 1),
              tu = MPoly::variable(R, 2), tv = MPoly::variable(R, 3);
        return tv.pow(2) + tu.pow(3) * y1 + y1 * y3 - tu * tv * y1;
    }();
    return g;
}

// strict transform in the horizontal chart: uv^2 + y2 + ut^3 y2 y3 - ut uv y2
inline const MPoly& u_chart_equation() {
    static const MPoly g = [] {
        const PolyRing& R = u_chart_ring();
        MPoly y2 = MPoly::variable(R, 0), y3 = MPoly::variable(R, 1),
              ut = MPoly::variable(R, 2), uv = MPoly::variable(R, 3);
        return uv.pow(2) + y2 + ut.pow(3) * y2 * y3 - ut * uv * y2;
    }();
    return g;
}

// singular locus generators of each stage-1 chart (claims checked by scans)
inline std::vector<MPoly> t_chart_singular_locus() {
    const PolyRing& R = t_chart_ring();
    MPoly y1 = MPoly::variable(R, 0), y3 = MPoly::variable(R, 1),
          tu = MPoly::variable(R, 2), tv = MPoly::variable(R, 3);
    return {y1, tu.pow(3) + y3, tv};
}
inline std::vector<MPoly> u_chart_singular_locus() {
    const PolyRing& R = u_chart_ring();
    MPoly y2 = MPoly::variable(R, 0), y3 = MPoly::variable(R, 1),
          ut = MPoly::variable(R, 2), uv = MPoly::variable(R, 3);
    return {y2, MPoly::constant(R, 1) + ut.pow(3) * y3, uv};
}

// --- stage-1 identities ---------------------------------------------------------

struct ChartIdentity {
    std::string name;
    MPoly substituted;       // the base equation after the chart substitution
    MPoly factor;            // exceptional multiplier (y1^2 or y2^2)
    MPoly strict_transform;  // pinned chart equation
    bool identity_holds = false;
    bool action_preserves_equation = false;  // induced involution fixes it exactly
    bool action_is_involution = false;
};

inline ChartIdentity verify_t_chart() {
    ChartIdentity out;
    out.name = "vertical";
    const PolyRing& R = t_chart_ring();
    MPoly y1 = MPoly::variable(R, 0), y3 = MPoly::variable(R, 1),
          tu = MPoly::variable(R, 2), tv = MPoly::variable(R, 3);
    out.substituted = relation_polynomial().substitute({y1, tu * y1, y3, tv * y1});
    out.strict_transform = t_chart_equation();
    out.factor = y1.pow(2);
    out.identity_holds = (out.substituted == out.factor * out.strict_transform);

    // involution induced from (y1,y2,y3,y4) -> (-y1, y2, -y3, y4 - y1 y2)
    std::vector<MPoly> act = {-y1, -y3, -tu, tu * y1 - tv};
    out.action_preserves_equation = (out.strict_transform.substitute(act) == out.strict_transform);
    bool invol = true;
    for (size_t i = 0; i < 4; ++i)
        if (act[i].substitute(act) != MPoly::variable(R, i)) invol = false;
    out.action_is_involution = invol;
    return out;
}

inline ChartIdentity verify_u_chart() {
    ChartIdentity out;
    out.name = "horizontal";
    const PolyRing& R = u_chart_ring();
    MPoly y2 = MPoly::variable(R, 0), y3 = MPoly::variable(R, 1),
          ut = MPoly::variable(R, 2), uv = MPoly::variable(R, 3);
    out.substituted = relation_polynomial().substitute({ut * y2, y2, y3, uv * y2});
    out.strict_transform = u_chart_equation();
    out.factor = y2.pow(2);
    out.identity_holds = (out.substituted == out.factor * out.strict_transform);

    std::vector<MPoly> act = {y2, -y3, -ut, uv - ut * y2};
    out.action_preserves_equation = (out.strict_transform.substitute(act) == out.strict_transform);
    bool invol = true;
    for (size_t i = 0; i < 4; ++i)
        if (act[i].substitute(act) != MPoly::variable(R, i)) invol = false;
    out.action_is_involution = invol;
    return out;
}

// --- stage-2 charts --------------------------------------------------------------

// A stage-2 chart certificate: an exact identity
//     pullback == factor * strict_transform + side_multiplier * side_relation
// where side_relation (possibly zero) is the extra ambient equation kept when a
// center generator cannot be eliminated polynomially.
struct ChartFactorization {
    std::string name;
    PolyRing ring;
    MPoly pullback;
    MPoly factor;
    MPoly strict_transform;
    MPoly side_relation;    // zero when the chart is a hypersurface
    MPoly side_multiplier;  // zero when unused
    bool identity_holds = false;
};

// vertical chart, stage-2 piece over y1:  h = t13^2 + t12 - tu t13 in A^4
inline ChartFactorization vertical_piece_1() {
    ChartFactorization out;
    out.name = "vertical-piece-1";
    out.ring = PolyRing{{"y1", "tu", "t12", "t13"}};
    const PolyRing& R = out.ring;
    MPoly y1 = MPoly::variable(R, 0), tu = MPoly::variable(R, 1),
          t12 = MPoly::variable(R, 2), t13 = MPoly::variable(R, 3);
    out.pullback =
        t_chart_equation().substitute({y1, t12 * y1 - tu.pow(3), tu, t13 * y1});
    out.factor = y1.pow(2);
    out.strict_transform = t13.pow(2) + t12 - tu * t13;
    out.side_relation = MPoly(R);
    out.side_multiplier = MPoly(R);
    out.identity_holds = (out.pullback == out.factor * out.strict_transform);
    return out;
}

// vertical chart, stage-2 piece over the curve equation:  h = t23^2 + t21 - tu t21 t23
inline ChartFactorization vertical_piece_2() {
    ChartFactorization out;
    out.name = "vertical-piece-2";
    out.ring = PolyRing{{"y3", "tu", "t21", "t23"}};
    const PolyRing& R = out.ring;
    MPoly y3 = MPoly::variable(R, 0), tu = MPoly::variable(R, 1),
          t21 = MPoly::variable(R, 2), t23 = MPoly::variable(R, 3);
    MPoly c = tu.pow(3) + y3;
    out.pullback = t_chart_equation().substitute({t21 * c, y3, tu, t23 * c});
    out.factor = c.pow(2);
    out.strict_transform = t23.pow(2) + t21 - tu * t21 * t23;
    out.side_relation = MPoly(R);
    out.side_multiplier = MPoly(R);
    out.identity_holds = (out.pullback == out.factor * out.strict_transform);
    return out;
}

// vertical chart, stage-2 piece over tv:  h = 1 + t31 t32 - tu t31 (unit on t31 = 0)
inline ChartFactorization vertical_piece_3() {
    ChartFactorization out;
    out.name = "vertical-piece-3";
    out.ring = PolyRing{{"tu", "tv", "t31", "t32"}};
    const PolyRing& R = out.ring;
    MPoly tu = MPoly::variable(R, 0), tv = MPoly::variable(R, 1),
          t31 = MPoly::variable(R, 2), t32 = MPoly::variable(R, 3);
    out.pullback =
        t_chart_equation().substitute({t31 * tv, t32 * tv - tu.pow(3), tu, tv});
    out.factor = tv.pow(2);
    out.strict_transform = MPoly::constant(R, 1) + t31 * t32 - tu * t31;
    out.side_relation = MPoly(R);
    out.side_multiplier = MPoly(R);
    out.identity_holds = (out.pullback == out.factor * out.strict_transform);
    return out;
}

// horizontal chart, stage-2 piece over y2 (kept in A^5 with the side relation
// e = 1 + ut^3 y3 - u12 y2):  pullback = y2^2 h + y2 e,  h = u13^2 + u12 - ut u13
inline ChartFactorization horizontal_piece_1() {
    ChartFactorization out;
    out.name = "horizontal-piece-1";
    out.ring = PolyRing{{"y2", "y3", "ut", "u12", "u13"}};
    const PolyRing& R = out.ring;
    MPoly y2 = MPoly::variable(R, 0), y3 = MPoly::variable(R, 1),
          ut = MPoly::variable(R, 2), u12 = MPoly::variable(R, 3),
          u13 = MPoly::variable(R, 4);
    out.pullback = u_chart_equation().substitute({y2, y3, ut, u13 * y2});
    out.factor = y2.pow(2);
    out.strict_transform = u13.pow(2) + u12 - ut * u13;
    out.side_relation = MPoly::constant(R, 1) + ut.pow(3) * y3 - u12 * y2;
    out.side_multiplier = y2;
    out.identity_holds = (out.pullback == out.factor * out.strict_transform +
                                              out.side_multiplier * out.side_relation);
    return out;
}

// horizontal chart, stage-2 piece over the curve equation c = 1 + ut^3 y3:
//     h = u23^2 + u21 - ut u21 u23
inline ChartFactorization horizontal_piece_2() {
    ChartFactorization out;
    out.name = "horizontal-piece-2";
    out.ring = PolyRing{{"y3", "ut", "u21", "u23"}};
    const PolyRing& R = out.ring;
    MPoly y3 = MPoly::variable(R, 0), ut = MPoly::variable(R, 1),
          u21 = MPoly::variable(R, 2), u23 = MPoly::variable(R, 3);
    MPoly c = MPoly::constant(R, 1) + ut.pow(3) * y3;
    out.pullback = u_chart_equation().substitute({u21 * c, y3, ut, u23 * c});
    out.factor = c.pow(2);
    out.strict_transform = u23.pow(2) + u21 - ut * u21 * u23;
    out.side_relation = MPoly(R);
    out.side_multiplier = MPoly(R);
    out.identity_holds = (out.pullback == out.factor * out.strict_transform);
    return out;
}

// horizontal chart, stage-2 piece over uv (side relation e = 1 + ut^3 y3 - u32 uv):
//     pullback = uv^2 h + u31 uv e,  h = 1 + u31 u32 - ut u31 (unit on u31 = 0)
inline ChartFactorization horizontal_piece_3() {
    ChartFactorization out;
    out.name = "horizontal-piece-3";
    out.ring = PolyRing{{"y3", "ut", "uv", "u31", "u32"}};
    const PolyRing& R = out.ring;
    MPoly y3 = MPoly::variable(R, 0), ut = MPoly::variable(R, 1),
          uv = MPoly::variable(R, 2), u31 = MPoly::variable(R, 3),
          u32 = MPoly::variable(R, 4);
    out.pullback = u_chart_equation().substitute({u31 * uv, y3, ut, uv});
    out.factor = uv.pow(2);
    out.strict_transform = MPoly::constant(R, 1) + u31 * u32 - ut * u31;
    out.side_relation = MPoly::constant(R, 1) + ut.pow(3) * y3 - u32 * uv;
    out.side_multiplier = u31 * uv;
    out.identity_holds = (out.pullback == out.factor * out.strict_transform +
                                              out.side_multiplier * out.side_relation);
    return out;
}

// --- the full atlas --------------------------------------------------------------

struct ChartAtlas {
    ChartIdentity vertical, horizontal;
    std::vector<ChartFactorization> pieces;  // six stage-2 certificates
    bool t1_parametrization_annihilates = false;  // piece 1 solves to a free A^3
    MPoly t1_pullback;                            // must be exactly 0
    // unit witnesses: the strict transform (or side relation) restricted to the
    // locus a redundant chart would have to contribute evaluates to 1
    MPoly unit_vertical_3;         // vertical-piece-3 h at t31 = 0
    MPoly unit_horizontal_1;       // horizontal-piece-1 side relation at ut = u12 = 0
    MPoly unit_horizontal_3;       // horizontal-piece-3 h at u31 = 0
    bool units_ok = false;
    bool ok = false;
};

inline ChartAtlas build_chart_atlas() {
    ChartAtlas atlas;
    atlas.vertical = verify_t_chart();
    atlas.horizontal = verify_u_chart();
    atlas.pieces = {vertical_piece_1(),   vertical_piece_2(),   vertical_piece_3(),
                    horizontal_piece_1(), horizontal_piece_2(), horizontal_piece_3()};

    // piece 1 of the vertical chart solves t12 = tu t13 - t13^2 linearly, giving
    // the free parametrization (y1, tu, t13) on which the chart equation vanishes
    {
        PolyRing P{{"y1", "tu", "t13"}};
        MPoly y1 = MPoly::variable(P, 0), tu = MPoly::variable(P, 1),
              t13 = MPoly::variable(P, 2);
        atlas.t1_pullback = t_chart_equation().substitute(
            {y1, t13 * (tu - t13) * y1 - tu.pow(3), tu, t13 * y1});
        atlas.t1_parametrization_annihilates = atlas.t1_pullback.is_zero();
    }

    {
        const ChartFactorization& v3 = atlas.pieces[2];
        const PolyRing& R = v3.ring;
        std::vector<MPoly> sub = ring_variables(R);
        sub[2] = MPoly(R);  // t31 -> 0
        atlas.unit_vertical_3 = v3.strict_transform.substitute(sub);
    }
    {
        const ChartFactorization& h1 = atlas.pieces[3];
        const PolyRing& R = h1.ring;
        std::vector<MPoly> sub = ring_variables(R);
        sub[2] = MPoly(R);  // ut -> 0
        sub[3] = MPoly(R);  // u12 -> 0
        atlas.unit_horizontal_1 = h1.side_relation.substitute(sub);
    }
    {
        const ChartFactorization& h3 = atlas.pieces[5];
        const PolyRing& R = h3.ring;
        std::vector<MPoly> sub = ring_variables(R);
        sub[3] = MPoly(R);  // u31 -> 0
        atlas.unit_horizontal_3 = h3.strict_transform.substitute(sub);
    }
    auto is_one = [](const MPoly& p) {
        return p == MPoly::constant(p.ring(), 1);
    };
    atlas.units_ok = is_one(atlas.unit_vertical_3) && is_one(atlas.unit_horizontal_1) &&
                     is_one(atlas.unit_horizontal_3);

    bool pieces_ok = true;
    for (const ChartFactorization& p : atlas.pieces) pieces_ok &= p.identity_holds;
    atlas.ok = atlas.vertical.identity_holds && atlas.horizontal.identity_holds &&
               atlas.vertical.action_preserves_equation &&
               atlas.horizontal.action_preserves_equation &&
               atlas.vertical.action_is_involution && atlas.horizontal.action_is_involution &&
               pieces_ok && atlas.t1_parametrization_annihilates && atlas.units_ok;
    return atlas;
}

// --- multiplicity along a center ---------------------------------------------------

// Rewrites f so that the ideal of the center becomes the coordinate ideal
// (w1..wk), then reads off the order of vanishing.  Each center
// generator must be solvable for some variable x as  a*A*x + B  with a in
// {1,2}, A a monomial free of x, and B free of x; substituting requires every
// x^j coefficient of f to be divisible by A^j.
struct CenterRewrite {
    MPoly rewritten;        // f in the variables (unconsumed ∪ w1..wk)
    int64_t multiplicity;   // min total w-degree across terms
    int64_t codimension;    // number of center generators
    int64_t discrepancy;    // codimension - 1 - multiplicity
    std::vector<std::string> steps;
};

inline CenterRewrite multiplicity_along_center(const MPoly& f,
                                               const std::vector<MPoly>& center) {
    size_t n = f.ring().size();
    size_t k = center.size();
    PolyRing ext;
    ext.vars = f.ring().vars;
    for (size_t i = 1; i <= k; ++i) ext.vars.push_back("w" + std::to_string(i));

    auto lift = [&](const MPoly& p) {
        MPoly out(ext);
        for (const auto& [e, c] : p.terms()) {
            Exps ee = e;
            ee.resize(n + k, 0);
            out = out + MPoly::monomial(ext, ee, c);
        }
        return out;
    };

    CenterRewrite out;
    out.codimension = int64_t(k);
    MPoly F = lift(f);
    std::vector<bool> consumed(n, false);

    for (size_t gi = 0; gi < k; ++gi) {
        MPoly g = lift(center[gi]);
        for (size_t v = 0; v < n; ++v)
            if (consumed[v] && g.degree_in(v) > 0)
                throw UnsupportedCenter("center generator reuses an eliminated variable");

        bool solved = false;
        for (size_t x = 0; x < n && !solved; ++x) {
            if (consumed[x] || g.degree_in(x) != 1) continue;
            // split g = a*A*x + B
            Exps alpha;
            uint8_t a = 0;
            MPoly B(ext);
            bool shape_ok = true;
            for (const auto& [e, c] : g.terms()) {
                if (e[x] == 0) {
                    B = B + MPoly::monomial(ext, e, c);
                } else if (e[x] == 1) {
                    if (a != 0) {
                        shape_ok = false;  // two linear terms: not a monomial coefficient
                        break;
                    }
                    a = c;
                    alpha = e;
                    alpha[x] = 0;
                } else {
                    shape_ok = false;
                    break;
                }
            }
            if (!shape_ok || a == 0) continue;

            // group F by powers of x and check divisibility by A^j
            std::map<uint32_t, MPoly> coeffs;
            bool divisible = true;
            for (const auto& [e, c] : F.terms()) {
                uint32_t j = e[x];
                Exps ee = e;
                ee[x] = 0;
                for (size_t t = 0; t < ee.size() && divisible; ++t) {
                    uint64_t need = uint64_t(alpha[t]) * j;
                    if (ee[t] < need)
                        divisible = false;
                    else
                        ee[t] -= uint32_t(need);
                }
                if (!divisible) break;
                auto [it, ins] = coeffs.emplace(j, MPoly(ext));
                it->second = it->second + MPoly::monomial(ext, ee, c);
            }
            if (!divisible) continue;

            // x = a^{-1} A^{-1} (w - B); the A^{-j} part was folded into cj above
            MPoly w = MPoly::variable(ext, n + gi);
            MPoly replacement = w - B;
            MPoly Fnew(ext);
            uint8_t ainv = g3_inv(a);
            for (const auto& [j, cj] : coeffs) {
                uint8_t sc = 1;
                for (uint32_t t = 0; t < j; ++t) sc = g3_mul(sc, ainv);
                Fnew = Fnew + int64_t(sc) * (cj * replacement.pow(j));
            }
            F = Fnew;
            consumed[x] = true;
            out.steps.push_back("w" + std::to_string(gi + 1) + " := " +
                                center[gi].to_string() + "  (solved for " +
                                f.ring().vars[x] + ")");
            solved = true;
        }
        if (!solved)
            throw UnsupportedCenter("no center generator variable admits the monomial-solve shape: " +
                                    center[gi].to_string());
    }

    std::vector<int64_t> wblock(n + k, 0);
    for (size_t i = 0; i < k; ++i) wblock[n + i] = 1;
    out.rewritten = F;
    out.multiplicity = F.min_weighted_degree(wblock);
    if (out.multiplicity < 0) throw UnsupportedCenter("equation vanished entirely under the rewrite");
    out.discrepancy = out.codimension - 1 - out.multiplicity;
    return out;
}

// The three centers whose blow-ups build the resolution tower; each must have
// multiplicity 2 inside a codimension-3 center, i.e. discrepancy 0.
struct CrepancyRecord {
    std::string name;
    CenterRewrite rewrite;
};

inline std::vector<CrepancyRecord> exceptional_multiplicities() {
    std::vector<CrepancyRecord> out;
    {
        const PolyRing& Y = y_ring();
        out.push_back({"base-origin",
                       multiplicity_along_center(relation_polynomial(),
                                                 {MPoly::variable(Y, 0), MPoly::variable(Y, 1),
                                                  MPoly::variable(Y, 3)})});
    }
    out.push_back({"vertical-curve",
                   multiplicity_along_center(t_chart_equation(), t_chart_singular_locus())});
    out.push_back({"horizontal-curve",
                   multiplicity_along_center(u_chart_equation(), u_chart_singular_locus())});
    return out;
}

// --- quotient presentations ---------------------------------------------------------

struct QuotientPresentation {
    std::string name;
    PolyRing chart_ring;
    std::vector<MPoly> chart_relations;   // at most one, giving the square rewrite
    size_t rewrite_var = SIZE_MAX;        // chart variable with the x^2 -> rhs rule
    MPoly rewrite_rhs;
    std::vector<MPoly> action_images;     // order-2 action on chart coordinates
    std::vector<int64_t> chart_weights;   // filtration weights (action-compatible)
    PolyRing z_ring;
    std::vector<MPoly> z_generators;      // invariants, as chart polynomials
    std::vector<MPoly> z_relations;       // presentation ideal in z_ring
    std::vector<int64_t> z_weights;       // induced weights
    std::vector<size_t> z_squarefree;     // z variables with exponent <= 1 in normal form
};

// stage-2 vertical piece 1 after the linear solve: free A^3 with the induced action
inline QuotientPresentation first_piece_presentation() {
    QuotientPresentation q;
    q.name = "vertical-piece-1-quotient";
    q.chart_ring = PolyRing{{"y1", "tu", "t13"}};
    const PolyRing& R = q.chart_ring;
    MPoly y1 = MPoly::variable(R, 0), tu = MPoly::variable(R, 1), t13 = MPoly::variable(R, 2);
    q.action_images = {-y1, -tu, t13 - tu};
    q.chart_weights = {1, 1, 1};
    q.z_ring = PolyRing{{"z11", "z12", "z13", "z14"}};
    q.z_generators = {y1.pow(2), y1 * tu, tu.pow(2), t13 + tu};
    MPoly z11 = MPoly::variable(q.z_ring, 0), z12 = MPoly::variable(q.z_ring, 1),
          z13 = MPoly::variable(q.z_ring, 2);
    q.z_relations = {z12.pow(2) - z11 * z13};
    q.z_weights = {2, 2, 2, 1};
    q.z_squarefree = {1};
    return q;
}

// stage-2 vertical piece 2: hypersurface with rewrite t23^2 -> tu t21 t23 - t21
inline QuotientPresentation second_piece_presentation() {
    QuotientPresentation q;
    q.name = "vertical-piece-2-quotient";
    q.chart_ring = PolyRing{{"y3", "tu", "t21", "t23"}};
    const PolyRing& R = q.chart_ring;
    MPoly y3 = MPoly::variable(R, 0), tu = MPoly::variable(R, 1), t21 = MPoly::variable(R, 2),
          t23 = MPoly::variable(R, 3);
    q.chart_relations = {t23.pow(2) + t21 - tu * t21 * t23};
    q.rewrite_var = 3;
    q.rewrite_rhs = tu * t21 * t23 - t21;
    q.action_images = {-y3, -tu, t21, t23 - t21 * tu};
    q.chart_weights = {1, 1, 1, 2};
    q.z_ring = PolyRing{{"z21", "z22", "z23", "z24", "z25"}};
    q.z_generators = {y3.pow(2), y3 * tu, tu.pow(2), t21, t23 + t21 * tu};
    MPoly z21 = MPoly::variable(q.z_ring, 0), z22 = MPoly::variable(q.z_ring, 1),
          z23 = MPoly::variable(q.z_ring, 2), z24 = MPoly::variable(q.z_ring, 3),
          z25 = MPoly::variable(q.z_ring, 4);
    q.z_relations = {z22.pow(2) - z21 * z23, z25.pow(2) - z23 * z24.pow(2) + z24};
    q.z_weights = {2, 2, 2, 1, 2};
    q.z_squarefree = {1, 4};
    return q;
}

// stage-2 horizontal piece 2: the mirror of the previous one
inline QuotientPresentation mirror_piece_presentation() {
    QuotientPresentation q;
    q.name = "horizontal-piece-2-quotient";
    q.chart_ring = PolyRing{{"y3", "ut", "u21", "u23"}};
    const PolyRing& R = q.chart_ring;
    MPoly y3 = MPoly::variable(R, 0), ut = MPoly::variable(R, 1), u21 = MPoly::variable(R, 2),
          u23 = MPoly::variable(R, 3);
    q.chart_relations = {u23.pow(2) + u21 - ut * u21 * u23};
    q.rewrite_var = 3;
    q.rewrite_rhs = ut * u21 * u23 - u21;
    q.action_images = {-y3, -ut, u21, u23 - u21 * ut};
    q.chart_weights = {1, 1, 1, 2};
    q.z_ring = PolyRing{{"z31", "z32", "z33", "z34", "z35"}};
    q.z_generators = {y3.pow(2), y3 * ut, ut.pow(2), u21, u23 + u21 * ut};
    MPoly z31 = MPoly::variable(q.z_ring, 0), z32 = MPoly::variable(q.z_ring, 1),
          z33 = MPoly::variable(q.z_ring, 2), z34 = MPoly::variable(q.z_ring, 3),
          z35 = MPoly::variable(q.z_ring, 4);
    q.z_relations = {z32.pow(2) - z31 * z33, z35.pow(2) - z33 * z34.pow(2) + z34};
    q.z_weights = {2, 2, 2, 1, 2};
    q.z_squarefree = {1, 4};
    return q;
}

// normal form modulo the single square rewrite rule (identity if none)
inline MPoly chart_normal_form(const QuotientPresentation& q, MPoly p) {
    if (q.rewrite_var == SIZE_MAX) return p;
    size_t v = q.rewrite_var;
    for (int guard = 0; guard < 1000000; ++guard) {
        const auto& terms = p.terms();
        auto hit = terms.end();
        for (auto it = terms.begin(); it != terms.end(); ++it)
            if (it->first[v] >= 2) {
                hit = it;
                break;
            }
        if (hit == terms.end()) return p;
        Exps reduced = hit->first;
        reduced[v] -= 2;
        MPoly term = MPoly::monomial(p.ring(), hit->first, hit->second);
        MPoly replacement =
            MPoly::monomial(p.ring(), reduced, hit->second) * q.rewrite_rhs;
        p = p - term + replacement;
    }
    throw PresentationMismatch("normal-form reduction did not terminate");
}

namespace detail {
// monomials over `weights` with total weight <= maxW, optionally capping one
// exponent at 1; deterministic lexicographic enumeration
inline void enumerate_weighted(const std::vector<int64_t>& weights, int64_t maxW,
                               size_t cap_var, size_t pos, Exps& cur,
                               int64_t used, std::vector<Exps>& out) {
    if (pos == weights.size()) {
        out.push_back(cur);
        return;
    }
    int64_t limit = (weights[pos] > 0) ? (maxW - used) / weights[pos] : 0;
    if (pos == cap_var) limit = std::min<int64_t>(limit, 1);
    for (int64_t e = 0; e <= limit; ++e) {
        cur[pos] = uint32_t(e);
        enumerate_weighted(weights, maxW, cap_var, pos + 1, cur, used + e * weights[pos], out);
    }
    cur[pos] = 0;
}
inline std::vector<Exps> weighted_monomials(const std::vector<int64_t>& weights, int64_t maxW,
                                            size_t cap_var) {
    std::vector<Exps> out;
    Exps cur(weights.size(), 0);
    enumerate_weighted(weights, maxW, cap_var, 0, cur, 0, out);
    return out;
}
// monomials with several capped variables
inline std::vector<Exps> weighted_monomials_multi_cap(const std::vector<int64_t>& weights,
                                                      int64_t maxW,
                                                      const std::vector<size_t>& caps) {
    std::vector<Exps> all = weighted_monomials(weights, maxW, SIZE_MAX);
    std::vector<Exps> out;
    for (const Exps& e : all) {
        bool ok = true;
        for (size_t c : caps)
            if (e[c] > 1) ok = false;
        if (ok) out.push_back(e);
    }
    return out;
}
}  // namespace detail

struct PresentationCertificate {
    std::string name;
    bool relation_reduces = true;       // the chart relation is killed by its own rule
    bool action_is_involution = false;
    bool ideal_preserved = false;       // action fixes the chart relation mod the rule
    bool generators_invariant = false;
    bool relations_vanish = false;      // presentation ideal maps to 0 mod the rule
    bool weights_consistent = false;    // generator weights match the declared ones
    int64_t max_filtration = 0;
    std::vector<int64_t> fixed_dims;     // dim of action-fixed subspace, weight <= D
    std::vector<int64_t> presented_dims; // normal-form z-monomial count, weight <= D
    std::vector<int64_t> image_ranks;    // rank of z-monomial images in the chart
    bool dims_match = false;
    bool ok = false;
};

inline PresentationCertificate certify_presentation(const QuotientPresentation& q,
                                                    int64_t maxW) {
    PresentationCertificate cert;
    cert.name = q.name;
    cert.max_filtration = maxW;
    const PolyRing& R = q.chart_ring;
    size_t n = R.size();

    auto nf = [&](const MPoly& p) { return chart_normal_form(q, p); };

    for (const MPoly& rel : q.chart_relations)
        if (!nf(rel).is_zero()) cert.relation_reduces = false;

    // the rewrite rule must respect the filtration, as must the action
    if (q.rewrite_var != SIZE_MAX) {
        int64_t lhs_w = 2 * q.chart_weights[q.rewrite_var];
        if (q.rewrite_rhs.weighted_degree(q.chart_weights) > lhs_w)
            throw PresentationMismatch(q.name + ": rewrite rule violates the filtration");
    }
    for (size_t i = 0; i < n; ++i)
        if (q.action_images[i].weighted_degree(q.chart_weights) > q.chart_weights[i])
            throw PresentationMismatch(q.name + ": action violates the filtration");

    bool invol = true;
    for (size_t i = 0; i < n; ++i)
        if (nf(q.action_images[i].substitute(q.action_images)) != MPoly::variable(R, i))
            invol = false;
    cert.action_is_involution = invol;

    bool ideal_ok = true;
    for (const MPoly& rel : q.chart_relations)
        if (!nf(rel.substitute(q.action_images)).is_zero()) ideal_ok = false;
    cert.ideal_preserved = ideal_ok;

    bool gens_ok = true;
    for (const MPoly& g : q.z_generators)
        if (!nf(g.substitute(q.action_images) - g).is_zero()) gens_ok = false;
    cert.generators_invariant = gens_ok;

    bool rels_ok = true;
    for (const MPoly& zr : q.z_relations)
        if (!nf(zr.substitute(q.z_generators)).is_zero()) rels_ok = false;
    cert.relations_vanish = rels_ok;

    bool w_ok = (q.z_generators.size() == q.z_weights.size());
    for (size_t i = 0; w_ok && i < q.z_generators.size(); ++i)
        if (q.z_generators[i].weighted_degree(q.chart_weights) != q.z_weights[i]) w_ok = false;
    cert.weights_consistent = w_ok;

    for (int64_t D = 0; D <= maxW; ++D) {
        // basis of chart normal forms with weight <= D
        std::vector<Exps> basis =
            detail::weighted_monomials(q.chart_weights, D, q.rewrite_var);
        std::map<Exps, size_t> index;
        for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

        auto to_vec = [&](const MPoly& p) {
            std::vector<uint8_t> v(basis.size(), 0);
            for (const auto& [e, c] : p.terms()) {
                auto it = index.find(e);
                if (it == index.end())
                    throw PresentationMismatch(q.name + ": image escapes the filtration");
                v[it->second] = c;
            }
            return v;
        };

        // fixed subspace of the action on the filtered piece
        MatGF3 m(basis.size(), basis.size());
        for (size_t j = 0; j < basis.size(); ++j) {
            MPoly mono = MPoly::monomial(R, basis[j], 1);
            std::vector<uint8_t> img = to_vec(nf(mono.substitute(q.action_images)));
            for (size_t i = 0; i < basis.size(); ++i) m.at(i, j) = img[i];
            m.at(j, j) = g3_sub(m.at(j, j), 1);
        }
        cert.fixed_dims.push_back(int64_t(nullspace(std::move(m)).size()));

        // normal-form z-monomials of weight <= D and their chart images
        std::vector<Exps> zmons =
            detail::weighted_monomials_multi_cap(q.z_weights, D, q.z_squarefree);
        cert.presented_dims.push_back(int64_t(zmons.size()));
        MatGF3 img(zmons.size(), basis.size());
        for (size_t i = 0; i < zmons.size(); ++i) {
            MPoly p = MPoly::constant(R, 1);
            for (size_t g = 0; g < q.z_generators.size(); ++g)
                if (zmons[i][g] > 0) p = p * q.z_generators[g].pow(zmons[i][g]);
            std::vector<uint8_t> v = to_vec(nf(p));
            for (size_t j = 0; j < basis.size(); ++j) img.at(i, j) = v[j];
        }
        cert.image_ranks.push_back(int64_t(mat_rank(std::move(img))));
    }

    cert.dims_match = (cert.fixed_dims == cert.presented_dims) &&
                      (cert.fixed_dims == cert.image_ranks);
    cert.ok = cert.relation_reduces && cert.action_is_involution && cert.ideal_preserved &&
              cert.generators_invariant && cert.relations_vanish && cert.weights_consistent &&
              cert.dims_match;
    return cert;
}

// --- singular-locus scan registry ---------------------------------------------------

// Every variety in the resolution tower together with its claimed singular
// locus; `claimed == {1}` encodes the empty (smooth) claim.  The expected
// cardinality of the singular set over GF(q) is one of q, q-1 or 0.
struct ScanSystem {
    std::string name;
    std::vector<MPoly> equations;
    std::vector<MPoly> claimed;
    enum class Count { Q, QMinus1, Zero } expected = Count::Zero;

    int64_t expected_count(uint32_t q) const {
        switch (expected) {
            case Count::Q: return int64_t(q);
            case Count::QMinus1: return int64_t(q) - 1;
            case Count::Zero: return 0;
        }
        return 0;
    }
};

inline std::vector<ScanSystem> all_scan_systems() {
    std::vector<ScanSystem> out;
    {
        const PolyRing& Y = y_ring();
        out.push_back({"base-hypersurface",
                       {relation_polynomial()},
                       {MPoly::variable(Y, 0), MPoly::variable(Y, 1), MPoly::variable(Y, 3)},
                       ScanSystem::Count::Q});
    }
    out.push_back({"vertical-chart",
                   {t_chart_equation()},
                   t_chart_singular_locus(),
                   ScanSystem::Count::Q});
    out.push_back({"horizontal-chart",
                   {u_chart_equation()},
                   u_chart_singular_locus(),
                   ScanSystem::Count::QMinus1});

    auto smooth_hypersurface = [&](const ChartFactorization& p) {
        out.push_back({p.name,
                       {p.strict_transform},
                       {MPoly::constant(p.ring, 1)},
                       ScanSystem::Count::Zero});
    };
    auto smooth_pair = [&](const ChartFactorization& p) {
        out.push_back({p.name,
                       {p.side_relation, p.strict_transform},
                       {MPoly::constant(p.ring, 1)},
                       ScanSystem::Count::Zero});
    };
    smooth_hypersurface(vertical_piece_1());
    smooth_hypersurface(vertical_piece_2());
    smooth_hypersurface(vertical_piece_3());
    smooth_pair(horizontal_piece_1());
    smooth_hypersurface(horizontal_piece_2());
    smooth_pair(horizontal_piece_3());

    {
        QuotientPresentation q = first_piece_presentation();
        out.push_back({"first-quotient",
                       q.z_relations,
                       {MPoly::variable(q.z_ring, 0), MPoly::variable(q.z_ring, 1),
                        MPoly::variable(q.z_ring, 2)},
                       ScanSystem::Count::Q});
    }
    {
        QuotientPresentation q = second_piece_presentation();
        MPoly z24 = MPoly::variable(q.z_ring, 3), z25 = MPoly::variable(q.z_ring, 4);
        out.push_back({"second-quotient",
                       q.z_relations,
                       {MPoly::variable(q.z_ring, 0), MPoly::variable(q.z_ring, 1),
                        MPoly::variable(q.z_ring, 2), z25.pow(2) + z24},
                       ScanSystem::Count::Q});
    }
    {
        QuotientPresentation q = mirror_piece_presentation();
        MPoly z34 = MPoly::variable(q.z_ring, 3), z35 = MPoly::variable(q.z_ring, 4);
        out.push_back({"mirror-quotient",
                       q.z_relations,
                       {MPoly::variable(q.z_ring, 0), MPoly::variable(q.z_ring, 1),
                        MPoly::variable(q.z_ring, 2), z35.pow(2) + z34},
                       ScanSystem::Count::Q});
    }
    return out;
}

}  // namespace wmk
