#pragma once

// Invariant theory of the order-3 coordinate rotation acting on GF(3)[x1,x2,x3],
// together with the order-2 reflection that extends it to the full S3-type action.
//
// The fixed ring is generated by four fundamental invariants of degrees
// 1, 2, 3, 3 subject to a single relation in weighted degree 6.  Everything
// here is certified computationally:
//   * the relation is re-discovered as the one-dimensional kernel of an exact
//     linear system over GF(3), not assumed;
//   * dimensions of the fixed subspaces are computed three independent ways
//     (kernel of the averaged action, orbit counting, closed-form series) and
//     must agree degree by degree;
//   * the span of generator monomials must exhaust the fixed subspace in each
//     degree (generation), and the linear syzygies among them must match the
//     numerator of the closed-form series (single relation, weight 6).

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "errors.hpp"
#include "gf3_linalg.hpp"
#include "mpoly.hpp"

namespace wmk {

inline const PolyRing& x_ring() {
    static const PolyRing r{{"x1", "x2", "x3"}};
    return r;
}

inline const PolyRing& y_ring() {
    static const PolyRing r{{"y1", "y2", "y3", "y4"}};
    return r;
}

inline const std::vector<int64_t>& generator_weights() {
    static const std::vector<int64_t> w{1, 2, 3, 3};
    return w;
}

// f(x1,x2,x3) -> f(x2,x3,x1): the order-3 rotation.
inline MPoly rotate_vars(const MPoly& f) {
    const PolyRing& R = x_ring();
    return f.substitute({MPoly::variable(R, 1), MPoly::variable(R, 2), MPoly::variable(R, 0)});
}

// f(x1,x2,x3) -> f(-x3,-x2,-x1): the order-2 reflection.
inline MPoly reflect_vars(const MPoly& f) {
    const PolyRing& R = x_ring();
    return f.substitute({-MPoly::variable(R, 2), -MPoly::variable(R, 1), -MPoly::variable(R, 0)});
}

// Fundamental invariants of the rotation action:
//   Y1 = x1+x2+x3, Y2 = x1x2+x2x3+x3x1, Y3 = x1x2x3, Y4 = x1^2 x2 + x2^2 x3 + x3^2 x1.
inline const std::array<MPoly, 4>& fundamental_invariants() {
    static const std::array<MPoly, 4> gens = [] {
        const PolyRing& R = x_ring();
        MPoly x1 = MPoly::variable(R, 0), x2 = MPoly::variable(R, 1), x3 = MPoly::variable(R, 2);
        return std::array<MPoly, 4>{
            x1 + x2 + x3,
            x1 * x2 + x2 * x3 + x3 * x1,
            x1 * x2 * x3,
            x1.pow(2) * x2 + x2.pow(2) * x3 + x3.pow(2) * x1,
        };
    }();
    return gens;
}

// The single relation among the generators, in normalized form with unit
// coefficient on y4^2:   y4^2 + y2^3 + y1^3 y3 - y1 y2 y4  =  0.
inline const MPoly& relation_polynomial() {
    static const MPoly rel = [] {
        const PolyRing& R = y_ring();
        MPoly y1 = MPoly::variable(R, 0), y2 = MPoly::variable(R, 1),
              y3 = MPoly::variable(R, 2), y4 = MPoly::variable(R, 3);
        return y4.pow(2) + y2.pow(3) + y1.pow(3) * y3 - y1 * y2 * y4;
    }();
    return rel;
}

// A tempting but wrong variant with the y1-exponent lowered by one; it is not
// even weighted-homogeneous, and verification must reject it explicitly.
inline const MPoly& relation_variant_lowered() {
    static const MPoly rel = [] {
        const PolyRing& R = y_ring();
        MPoly y1 = MPoly::variable(R, 0), y2 = MPoly::variable(R, 1),
              y3 = MPoly::variable(R, 2), y4 = MPoly::variable(R, 3);
        return y4.pow(2) + y2.pow(3) + y1.pow(2) * y3 - y1 * y2 * y4;
    }();
    return rel;
}

// Degree-d monomial exponents in three variables, deterministic order.
inline std::vector<Exps> x_monomials_of_degree(int64_t d) {
    std::vector<Exps> out;
    if (d < 0) return out;
    for (int64_t a = d; a >= 0; --a)
        for (int64_t b = d - a; b >= 0; --b)
            out.push_back({uint32_t(a), uint32_t(b), uint32_t(d - a - b)});
    return out;
}

// Monomials y1^a y2^b y3^c y4^e of weighted degree d under weights (1,2,3,3).
inline std::vector<Exps> y_monomials_of_weight(int64_t d) {
    std::vector<Exps> out;
    if (d < 0) return out;
    for (int64_t a = 0; a <= d; ++a)
        for (int64_t b = 0; a + 2 * b <= d; ++b)
            for (int64_t c = 0; a + 2 * b + 3 * c <= d; ++c) {
                int64_t rest = d - a - 2 * b - 3 * c;
                if (rest % 3 != 0) continue;
                out.push_back({uint32_t(a), uint32_t(b), uint32_t(c), uint32_t(rest / 3)});
            }
    return out;
}

// Expansion of a y-monomial in the x-variables, memoized across calls.
inline const MPoly& expand_y_monomial(const Exps& e) {
    static std::map<Exps, MPoly> memo = {
        {Exps{0, 0, 0, 0}, MPoly::constant(x_ring(), 1)}};
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    size_t i = 0;
    while (e[i] == 0) ++i;
    Exps child = e;
    --child[i];
    MPoly value = expand_y_monomial(child) * fundamental_invariants()[i];
    return memo.emplace(e, std::move(value)).first->second;
}

inline MPoly expand_in_x(const MPoly& f_in_y) {
    MPoly out(x_ring());
    for (const auto& [e, c] : f_in_y.terms())
        out = out + int64_t(c) * expand_y_monomial(e);
    return out;
}

// --- closed-form series -----------------------------------------------------

namespace detail {
inline std::vector<int64_t> series_trunc_mul(const std::vector<int64_t>& a,
                                             const std::vector<int64_t>& b, size_t len) {
    std::vector<int64_t> out(len, 0);
    for (size_t i = 0; i < a.size() && i < len; ++i)
        for (size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
    return out;
}
}  // namespace detail

// Coefficients 0..maxD of 1 / ((1-t)(1-t^2)(1-t^3)^2): the free weighted
// polynomial algebra on generators of weights 1,2,3,3.
inline std::vector<int64_t> free_weighted_series(int64_t maxD) {
    size_t len = size_t(maxD) + 1;
    std::vector<int64_t> denom{1};
    for (int64_t w : generator_weights()) {
        std::vector<int64_t> factor(size_t(w) + 1, 0);
        factor[0] = 1;
        factor[size_t(w)] = -1;
        denom = detail::series_trunc_mul(denom, factor, len);
    }
    denom.resize(len, 0);
    std::vector<int64_t> inv(len, 0);
    inv[0] = 1;  // denom[0] == 1
    for (size_t k = 1; k < len; ++k) {
        int64_t acc = 0;
        for (size_t j = 1; j <= k; ++j)
            if (j < denom.size()) acc += denom[j] * inv[k - j];
        inv[k] = -acc;
    }
    return inv;
}

// Coefficients of (1 - t^6) / ((1-t)(1-t^2)(1-t^3)^2): the hypersurface quotient.
inline std::vector<int64_t> quotient_series(int64_t maxD) {
    std::vector<int64_t> free = free_weighted_series(maxD);
    std::vector<int64_t> out(free.size());
    for (size_t d = 0; d < free.size(); ++d)
        out[d] = free[d] - (d >= 6 ? free[d - 6] : 0);
    return out;
}

// --- per-degree dimension computations ---------------------------------------

// dim of the rotation-fixed subspace of degree-d forms, as the kernel of
// (rotation - identity) on the monomial basis.
inline int64_t invariant_dimension_kernel(int64_t d) {
    std::vector<Exps> mons = x_monomials_of_degree(d);
    std::map<Exps, size_t> index;
    for (size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
    size_t n = mons.size();
    MatGF3 m(n, n);
    for (size_t j = 0; j < n; ++j) {
        const Exps& e = mons[j];
        Exps rot{e[2], e[0], e[1]};  // image of x1^a x2^b x3^c under x_i -> x_{i+1}
        m.at(index.at(rot), j) = g3_add(m.at(index.at(rot), j), 1);
        m.at(j, j) = g3_sub(m.at(j, j), 1);
    }
    return int64_t(nullspace(std::move(m)).size());
}

// Number of rotation orbits of degree-d monomials (combinatorial count).
inline int64_t invariant_orbit_count(int64_t d) {
    int64_t count = 0;
    for (const Exps& e : x_monomials_of_degree(d)) {
        Exps r1{e[2], e[0], e[1]};
        Exps r2{e[1], e[2], e[0]};
        if (e <= r1 && e <= r2) ++count;
    }
    return count;
}

// --- relation discovery -------------------------------------------------------

struct RelationSearch {
    int64_t weight = 6;
    size_t candidate_monomials = 0;  // y-monomials of weight 6
    size_t kernel_dimension = 0;     // expected: exactly 1
    MPoly relation;                  // normalized kernel vector as a y-polynomial
    bool matches_pinned = false;     // equals relation_polynomial()
    bool expansion_vanishes = false; // substituting the generators gives 0
    MPoly rejected_variant;          // the lowered-exponent variant
    bool variant_homogeneous = false;  // expected false (weights 1,2,3,3)
    bool variant_vanishes = false;     // expected false
    MPoly variant_residual;            // its nonzero expansion in x
};

inline RelationSearch discover_relation() {
    RelationSearch out;
    std::vector<Exps> ymons = y_monomials_of_weight(6);
    out.candidate_monomials = ymons.size();

    std::vector<Exps> xmons = x_monomials_of_degree(6);
    std::map<Exps, size_t> xindex;
    for (size_t i = 0; i < xmons.size(); ++i) xindex[xmons[i]] = i;

    MatGF3 m(xmons.size(), ymons.size());
    for (size_t j = 0; j < ymons.size(); ++j)
        for (const auto& [e, c] : expand_y_monomial(ymons[j]).terms())
            m.at(xindex.at(e), j) = c;

    std::vector<std::vector<uint8_t>> kernel = nullspace(std::move(m));
    out.kernel_dimension = kernel.size();
    if (kernel.size() == 1) {
        // normalize so that the coefficient of y4^2 is 1
        size_t idx_y4sq = SIZE_MAX;
        for (size_t j = 0; j < ymons.size(); ++j)
            if (ymons[j] == Exps{0, 0, 0, 2}) idx_y4sq = j;
        if (idx_y4sq == SIZE_MAX || kernel[0][idx_y4sq] == 0)
            throw RelationAmbiguity("relation kernel lacks the expected leading monomial");
        uint8_t scale = g3_inv(kernel[0][idx_y4sq]);
        MPoly rel(y_ring());
        for (size_t j = 0; j < ymons.size(); ++j)
            rel = rel + MPoly::monomial(y_ring(), ymons[j], g3_mul(kernel[0][j], scale));
        out.relation = rel;
        out.matches_pinned = (rel == relation_polynomial());
        out.expansion_vanishes = expand_in_x(rel).is_zero();
    }

    out.rejected_variant = relation_variant_lowered();
    int64_t lo = out.rejected_variant.min_weighted_degree(generator_weights());
    int64_t hi = out.rejected_variant.weighted_degree(generator_weights());
    out.variant_homogeneous = (lo == hi);
    out.variant_residual = expand_in_x(out.rejected_variant);
    out.variant_vanishes = out.variant_residual.is_zero();
    return out;
}

// --- series audit -------------------------------------------------------------

struct SeriesAudit {
    int64_t max_degree = 0;
    std::vector<int64_t> fixed_space_dims;     // kernel of (rotation - id)
    std::vector<int64_t> orbit_counts;         // monomial orbit count
    std::vector<int64_t> quotient_coeffs;      // (1-t^6)/((1-t)(1-t^2)(1-t^3)^2)
    std::vector<int64_t> span_dims;            // rank of generator-monomial expansions
    std::vector<int64_t> syzygy_dims;          // #y-monomials - span rank
    std::vector<int64_t> syzygy_coeffs;        // t^6/((1-t)(1-t^2)(1-t^3)^2)
    int64_t first_syzygy_degree = -1;          // expected 6
    bool dims_agree = false;       // kernel == orbits == closed form, all degrees
    bool generation_ok = false;    // span == fixed-space dimension, all degrees
    bool syzygies_match = false;   // syzygy dims == closed-form numerator series
    bool ok = false;
};

inline SeriesAudit audit_invariant_series(int64_t maxD) {
    SeriesAudit out;
    out.max_degree = maxD;
    out.quotient_coeffs = quotient_series(maxD);
    std::vector<int64_t> free = free_weighted_series(maxD);
    for (int64_t d = 0; d <= maxD; ++d)
        out.syzygy_coeffs.push_back(d >= 6 ? free[size_t(d - 6)] : 0);

    for (int64_t d = 0; d <= maxD; ++d) {
        out.fixed_space_dims.push_back(invariant_dimension_kernel(d));
        out.orbit_counts.push_back(invariant_orbit_count(d));

        std::vector<Exps> ymons = y_monomials_of_weight(d);
        std::vector<Exps> xmons = x_monomials_of_degree(d);
        std::map<Exps, size_t> xindex;
        for (size_t i = 0; i < xmons.size(); ++i) xindex[xmons[i]] = i;
        MatGF3 m(ymons.size(), xmons.size());
        for (size_t i = 0; i < ymons.size(); ++i)
            for (const auto& [e, c] : expand_y_monomial(ymons[i]).terms())
                m.at(i, xindex.at(e)) = c;
        int64_t rank = int64_t(mat_rank(std::move(m)));
        out.span_dims.push_back(rank);
        out.syzygy_dims.push_back(int64_t(ymons.size()) - rank);
        if (out.first_syzygy_degree < 0 && d > 0 && out.syzygy_dims.back() > 0)
            out.first_syzygy_degree = d;
    }

    out.dims_agree = (out.fixed_space_dims == out.orbit_counts) &&
                     (out.fixed_space_dims == out.quotient_coeffs);
    out.generation_ok = (out.span_dims == out.fixed_space_dims);
    out.syzygies_match = (out.syzygy_dims == out.syzygy_coeffs);
    out.ok = out.dims_agree && out.generation_ok && out.syzygies_match &&
             (maxD < 6 || out.first_syzygy_degree == 6);
    return out;
}

// --- reflection action on the generators ---------------------------------------

struct ReflectionAction {
    std::array<MPoly, 4> images_in_x;  // reflect_vars applied to each generator
    std::array<MPoly, 4> images_in_y;  // pinned: (-y1, y2, -y3, y4 - y1 y2)
    bool images_match = false;         // expanding images_in_y reproduces images_in_x
    bool involution = false;           // applying images_in_y twice is the identity
    bool relation_preserved = false;   // relation(images) == relation exactly
};

inline ReflectionAction reflection_action_on_generators() {
    ReflectionAction out;
    const PolyRing& Y = y_ring();
    MPoly y1 = MPoly::variable(Y, 0), y2 = MPoly::variable(Y, 1), y3 = MPoly::variable(Y, 2),
          y4 = MPoly::variable(Y, 3);
    out.images_in_y = {-y1, y2, -y3, y4 - y1 * y2};
    bool match = true;
    for (size_t i = 0; i < 4; ++i) {
        out.images_in_x[i] = reflect_vars(fundamental_invariants()[i]);
        if (expand_in_x(out.images_in_y[i]) != out.images_in_x[i]) match = false;
    }
    out.images_match = match;

    std::vector<MPoly> imgs(out.images_in_y.begin(), out.images_in_y.end());
    bool invol = true;
    for (size_t i = 0; i < 4; ++i)
        if (out.images_in_y[i].substitute(imgs) != MPoly::variable(Y, i)) invol = false;
    out.involution = invol;

    out.relation_preserved = (relation_polynomial().substitute(imgs) == relation_polynomial());
    return out;
}

}  // namespace wmk
