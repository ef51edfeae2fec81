#pragma once

// The overlattice Gamma = Z^3 + (1/r)H and the junior simplex combinatorics.
// Points of the junior simplex are stored by their integer numerators
// (w0,w1,w2) with w0+w1+w2 = r, i.e. the actual lattice point is w/r.
// All geometry is exact 64-bit integer arithmetic.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "errors.hpp"
#include "group.hpp"

namespace wmk {

using Point3 = std::array<int64_t, 3>;

struct LatticeGamma {
    int64_t r = 1;
    std::set<Residue> residues;  // subgroup of the sum-zero residues mod r

    // index of Z^3 in Gamma
    int64_t index() const { return int64_t(residues.size()); }

    bool contains(const Point3& w) const {
        Residue m{mod_nonneg(w[0], r), mod_nonneg(w[1], r), mod_nonneg(w[2], r)};
        return residues.count(m) != 0;
    }
};

inline LatticeGamma lattice_for(const GroupCtx& ctx) {
    if (ctx.spec.kind == GroupKind::S3) {
        // the abelian part is the full sum-zero lattice (validated upstream)
        LatticeGamma g;
        g.r = ctx.r;
        for (int64_t a = 0; a < ctx.r; ++a)
            for (int64_t b = 0; b < ctx.r; ++b)
                g.residues.insert({a, b, mod_nonneg(-a - b, ctx.r)});
        return g;
    }
    return LatticeGamma{ctx.r, ctx.h_set};
}

// All Gamma-points of the junior simplex {w >= 0, sum w = r}, in lex order.
inline std::vector<Point3> junior_points(const LatticeGamma& gamma) {
    std::vector<Point3> pts;
    for (int64_t a = 0; a <= gamma.r; ++a)
        for (int64_t b = 0; a + b <= gamma.r; ++b) {
            Point3 w{a, b, gamma.r - a - b};
            if (gamma.contains(w)) pts.push_back(w);
        }
    return pts;
}

inline bool is_simplex_vertex(const Point3& w, int64_t r) {
    return (w[0] == r && w[1] == 0 && w[2] == 0) || (w[0] == 0 && w[1] == r && w[2] == 0) ||
           (w[0] == 0 && w[1] == 0 && w[2] == r);
}

// Squared distance to the barycenter, up to the positive factor 1/(3r^2):
// |w/r - (1/3,1/3,1/3)|^2 = (3*sum w_i^2 - r^2) / (3 r^2).
inline int64_t center_distance_key(const Point3& w, int64_t r) {
    int64_t sq = w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
    return 3 * sq - r * r;
}

// The junior point closest to the barycenter; ties broken by lex order.
// A simplex vertex wins only when the simplex contains nothing else.
inline Point3 select_center_point(const std::vector<Point3>& pts, int64_t r) {
    if (pts.empty()) throw ConstructionFailure("lattice: empty junior point set");
    const Point3* best = nullptr;
    for (const Point3& p : pts) {
        if (!best || center_distance_key(p, r) < center_distance_key(*best, r) ||
            (center_distance_key(p, r) == center_distance_key(*best, r) && p < *best))
            best = &p;
    }
    return *best;
}

// Coordinate rotation matching the 3-cycle generator's action on Gamma.
inline Point3 rotate_point(const Point3& w) { return Point3{w[2], w[0], w[1]}; }
// Coordinate reversal matching the swap generator's action on Gamma.
inline Point3 reverse_point(const Point3& w) { return Point3{w[2], w[1], w[0]}; }

}  // namespace wmk
