#pragma once

// Equivariant unimodular triangulations of the junior simplex.
//
// The cyclic kind starts from the rotation-fixed central triangle on the
// orbit of the point closest to the barycenter, seeds each of the three
// rotated sectors with the quadrilateral between the central triangle and
// the simplex boundary, and fills it by exact placing insertion of the
// remaining junior points.  The symmetric kind is the standard grid of side
// r.  Every build is audited afterwards: triangle count, covered area,
// vertex set, lattice emptiness, unimodularity, edge consistency and group
// equivariance are all re-checked from scratch.
//
// All predicates work on the (w0,w1) chart of the simplex; the projection
// is affine, so signs of 2x2 determinants decide orientation exactly.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace wmk {

struct Triangulation {
    int64_t r = 1;
    GroupKind kind = GroupKind::C3;
    std::vector<Point3> points;                 // lex-sorted junior points
    std::vector<std::array<int, 3>> triangles;  // vertex indices, ccw, canonical order
};

// --- exact 2D predicates on the (w0,w1) chart -----------------------------------

inline int64_t cross2(const Point3& o, const Point3& a, const Point3& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

using PointTri = std::array<Point3, 3>;

inline int64_t doubled_area(const PointTri& t) { return cross2(t[0], t[1], t[2]); }

// 3x3 integer determinant of the numerator matrix: r^2 times the Gamma-volume.
inline int64_t vertex_det(const PointTri& t) {
    const Point3 &a = t[0], &b = t[1], &c = t[2];
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Location of p relative to a ccw triangle.
enum class TriLocation { Outside, Interior, OnEdge, OnVertex };

struct TriHit {
    TriLocation loc = TriLocation::Outside;
    int edge = -1;  // for OnEdge: p lies strictly between t[edge] and t[(edge+1)%3]
};

inline TriHit locate_point(const PointTri& t, const Point3& p) {
    int64_t d[3];
    for (int e = 0; e < 3; ++e) d[e] = cross2(t[size_t(e)], t[size_t((e + 1) % 3)], p);
    int zeros = 0, zero_edge = -1;
    for (int e = 0; e < 3; ++e) {
        if (d[e] < 0) return {TriLocation::Outside, -1};
        if (d[e] == 0) {
            ++zeros;
            zero_edge = e;
        }
    }
    if (zeros == 0) return {TriLocation::Interior, -1};
    if (zeros == 1) return {TriLocation::OnEdge, zero_edge};
    return {TriLocation::OnVertex, -1};
}

// Split every triangle containing p; no-op if p is outside all triangles or
// already a vertex.  Returns true if p now appears as a vertex.
inline bool placing_insert(std::vector<PointTri>& tris, const Point3& p) {
    struct Split {
        size_t idx;
        TriHit hit;
    };
    std::vector<Split> splits;
    for (size_t i = 0; i < tris.size(); ++i) {
        TriHit h = locate_point(tris[i], p);
        if (h.loc == TriLocation::OnVertex) return true;
        if (h.loc == TriLocation::Interior || h.loc == TriLocation::OnEdge)
            splits.push_back({i, h});
    }
    if (splits.empty()) return false;
    std::vector<PointTri> fresh;
    for (const Split& s : splits) {
        const PointTri& t = tris[s.idx];
        if (s.hit.loc == TriLocation::Interior) {
            fresh.push_back({t[0], t[1], p});
            fresh.push_back({t[1], t[2], p});
            fresh.push_back({t[2], t[0], p});
        } else {
            int e = s.hit.edge;
            const Point3 &A = t[size_t(e)], &B = t[size_t((e + 1) % 3)],
                         &C = t[size_t((e + 2) % 3)];
            fresh.push_back({A, p, C});
            fresh.push_back({p, B, C});
        }
    }
    for (auto it = splits.rbegin(); it != splits.rend(); ++it)
        tris.erase(tris.begin() + ptrdiff_t(it->idx));
    for (const PointTri& t : fresh) {
        if (doubled_area(t) <= 0)
            throw ConstructionFailure("triangulate: degenerate split triangle");
        tris.push_back(t);
    }
    return true;
}

// --- cyclic-kind sector construction ----------------------------------------------

// Drops middle vertices of collinear consecutive triples (straight-through
// points are re-inserted later by placing; spur points belong to the
// neighboring sector).
inline std::vector<Point3> simplify_polygon(std::vector<Point3> poly) {
    bool changed = true;
    while (changed && poly.size() > 3) {
        changed = false;
        for (size_t i = 0; i < poly.size(); ++i) {
            const Point3& prev = poly[(i + poly.size() - 1) % poly.size()];
            const Point3& next = poly[(i + 1) % poly.size()];
            if (prev == poly[i] || next == poly[i] || cross2(prev, poly[i], next) == 0) {
                poly.erase(poly.begin() + ptrdiff_t(i));
                changed = true;
                break;
            }
        }
    }
    return poly;
}

inline int64_t polygon_doubled_area(const std::vector<Point3>& poly) {
    int64_t s = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const Point3& a = poly[i];
        const Point3& b = poly[(i + 1) % poly.size()];
        s += a[0] * b[1] - b[0] * a[1];
    }
    return s;
}

inline PointTri make_ccw(PointTri t) {
    int64_t ar = doubled_area(t);
    if (ar == 0) throw ConstructionFailure("triangulate: degenerate triangle");
    if (ar < 0) std::swap(t[1], t[2]);
    return t;
}

// Seed triangles for one sector: the (possibly degenerate) quadrilateral
// [a, a*S, e_x, e_z] reduced to a simple polygon and cut along a diagonal
// compatible with its orientation.
inline std::vector<PointTri> seed_sector(const Point3& a, int64_t r) {
    Point3 as = rotate_point(a);
    Point3 ex{r, 0, 0}, ez{0, 0, r};
    std::vector<Point3> poly = simplify_polygon({a, as, ex, ez});
    if (poly.size() < 3 || polygon_doubled_area(poly) == 0)
        throw ConstructionFailure("triangulate: sector polygon degenerated");
    std::vector<PointTri> tris;
    if (poly.size() == 3) {
        tris.push_back(make_ccw({poly[0], poly[1], poly[2]}));
        return tris;
    }
    int64_t orient = polygon_doubled_area(poly) > 0 ? 1 : -1;
    auto sign = [](int64_t v) { return v > 0 ? 1 : v < 0 ? -1 : 0; };
    for (int diag = 0; diag < 2; ++diag) {
        const Point3 &p0 = poly[size_t(diag)], &p1 = poly[size_t(diag + 1)],
                     &p2 = poly[size_t(diag + 2)], &p3 = poly[(size_t(diag) + 3) % 4];
        if (sign(cross2(p0, p1, p2)) == orient && sign(cross2(p0, p2, p3)) == orient) {
            tris.push_back(make_ccw({p0, p1, p2}));
            tris.push_back(make_ccw({p0, p2, p3}));
            return tris;
        }
    }
    throw ConstructionFailure("triangulate: no admissible diagonal in sector");
}

// --- assembling full triangulations -------------------------------------------------

inline Triangulation finalize(std::vector<PointTri> tris, const LatticeGamma& gamma,
                              GroupKind kind) {
    Triangulation out;
    out.r = gamma.r;
    out.kind = kind;
    out.points = junior_points(gamma);
    std::map<Point3, int> index;
    for (size_t i = 0; i < out.points.size(); ++i) index[out.points[i]] = int(i);
    for (const PointTri& t : tris) {
        PointTri c = make_ccw(t);
        std::array<int, 3> idx{};
        for (int k = 0; k < 3; ++k) {
            auto it = index.find(c[size_t(k)]);
            if (it == index.end())
                throw ConstructionFailure("triangulate: triangle vertex is not a junior point");
            idx[size_t(k)] = it->second;
        }
        // rotate so the smallest index comes first (cyclic order = orientation kept)
        int lo = int(std::min_element(idx.begin(), idx.end()) - idx.begin());
        std::rotate(idx.begin(), idx.begin() + lo, idx.end());
        out.triangles.push_back(idx);
    }
    std::sort(out.triangles.begin(), out.triangles.end());
    if (std::adjacent_find(out.triangles.begin(), out.triangles.end()) != out.triangles.end())
        throw ConstructionFailure("triangulate: duplicate triangle");
    return out;
}

inline PointTri tri_points(const Triangulation& t, size_t i) {
    return {t.points[size_t(t.triangles[i][0])], t.points[size_t(t.triangles[i][1])],
            t.points[size_t(t.triangles[i][2])]};
}

// Fallback for degenerate sector geometry: placing triangulation of the
// junior points of the closed fundamental sector {w0 <= w1, w0 <= w2},
// rotated three times.  The audit decides whether the result is usable.
inline std::vector<PointTri> fundamental_sector_triangles(const LatticeGamma& gamma) {
    std::vector<Point3> pts;
    for (const Point3& p : junior_points(gamma))
        if (p[0] <= p[1] && p[0] <= p[2]) pts.push_back(p);
    if (pts.size() < 3) throw ConstructionFailure("triangulate: fundamental sector too small");
    // strict convex hull (monotone chain)
    std::vector<Point3> sorted = pts;
    std::sort(sorted.begin(), sorted.end(),
              [](const Point3& a, const Point3& b) { return std::pair(a[0], a[1]) < std::pair(b[0], b[1]); });
    auto build_chain = [&](bool upper) {
        std::vector<Point3> chain;
        for (const Point3& p : sorted) {
            while (chain.size() >= 2) {
                int64_t c = cross2(chain[chain.size() - 2], chain.back(), p);
                if ((upper && c >= 0) || (!upper && c <= 0))
                    chain.pop_back();
                else
                    break;
            }
            chain.push_back(p);
        }
        return chain;
    };
    std::vector<Point3> lower = build_chain(false), upper = build_chain(true);
    std::vector<Point3> hull(lower.begin(), lower.end() - 1);
    hull.insert(hull.end(), upper.rbegin(), upper.rend() - 1);
    if (hull.size() < 3) throw ConstructionFailure("triangulate: fundamental sector is flat");
    std::vector<PointTri> tris;
    for (size_t i = 1; i + 1 < hull.size(); ++i)
        tris.push_back(make_ccw({hull[0], hull[i], hull[i + 1]}));
    for (const Point3& p : pts) placing_insert(tris, p);
    std::vector<PointTri> result;
    for (int k = 0; k < 3; ++k) {
        for (PointTri t : tris) {
            for (int s = 0; s < k; ++s)
                for (auto& v : t) v = rotate_point(v);
            result.push_back(make_ccw(t));
        }
    }
    return result;
}

inline Triangulation triangulate_c3_impl(const LatticeGamma& gamma) {
    std::vector<Point3> pts = junior_points(gamma);
    if (pts.size() < 3) throw ConstructionFailure("triangulate: fewer than three junior points");
    int64_t r = gamma.r;
    if (pts.size() == 3) {
        // only the simplex vertices: the simplex itself is the triangulation
        for (const Point3& p : pts)
            if (!is_simplex_vertex(p, r))
                throw ConstructionFailure("triangulate: three junior points but not the vertices");
        return finalize({{pts[0], pts[1], pts[2]}}, gamma, GroupKind::C3);
    }
    Point3 a = select_center_point(pts, r);
    if (is_simplex_vertex(a, r))
        throw ConstructionFailure("triangulate: center selection landed on a vertex");
    PointTri central = make_ccw({a, rotate_point(a), rotate_point(rotate_point(a))});
    std::vector<PointTri> sector = seed_sector(a, r);
    for (const Point3& p : pts) placing_insert(sector, p);
    std::vector<PointTri> all{central};
    for (int k = 0; k < 3; ++k)
        for (PointTri t : sector) {
            for (int s = 0; s < k; ++s)
                for (auto& v : t) v = rotate_point(v);
            all.push_back(make_ccw(t));
        }
    return finalize(all, gamma, GroupKind::C3);
}

inline Triangulation triangulate_s3_impl(int64_t r) {
    LatticeGamma gamma;
    gamma.r = r;
    for (int64_t a = 0; a < r; ++a)
        for (int64_t b = 0; b < r; ++b) gamma.residues.insert({a, b, mod_nonneg(-a - b, r)});
    std::vector<PointTri> tris;
    for (int64_t i = 0; i >= 0 && i <= r - 1; ++i)
        for (int64_t j = 0; i + j <= r - 1; ++j) {
            int64_t k = r - 1 - i - j;
            tris.push_back(make_ccw({Point3{i + 1, j, k}, Point3{i, j + 1, k}, Point3{i, j, k + 1}}));
            if (i + j <= r - 2) {
                int64_t k2 = r - 2 - i - j;
                tris.push_back(make_ccw({Point3{i + 1, j + 1, k2}, Point3{i, j + 1, k2 + 1},
                                         Point3{i + 1, j, k2 + 1}}));
            }
        }
    return finalize(tris, gamma, GroupKind::S3);
}

// --- audit ---------------------------------------------------------------------------

struct AuditLine {
    std::string check;
    bool ok = true;
    std::string detail;
};

struct TriangulationAudit {
    bool ok = true;
    std::vector<AuditLine> lines;
    void add(const std::string& check, bool pass, const std::string& detail = "") {
        lines.push_back({check, pass, detail});
        ok = ok && pass;
    }
};

inline int group_map_count(GroupKind kind) { return kind == GroupKind::C3 ? 3 : 6; }

// The coordinate permutations through which the group acts on Gamma:
// indices 0..2 are the rotations, 3..5 the three swaps (symmetric kind only).

inline Point3 apply_group_map(const Point3& p, int which) {
    switch (which) {
        case 1: return rotate_point(p);
        case 2: return rotate_point(rotate_point(p));
        case 3: return reverse_point(p);
        case 4: return reverse_point(rotate_point(p));
        case 5: return reverse_point(rotate_point(rotate_point(p)));
        default: return p;
    }
}

inline std::array<Point3, 3> canonical_tri(PointTri t) {
    std::sort(t.begin(), t.end());
    return t;
}

inline TriangulationAudit audit_triangulation(const Triangulation& tri, const LatticeGamma& gamma) {
    TriangulationAudit audit;
    int64_t r = gamma.r;
    const auto& pts = tri.points;

    audit.add("points_are_junior", pts == junior_points(gamma));

    int64_t expected_count = gamma.index();
    audit.add("triangle_count", int64_t(tri.triangles.size()) == expected_count,
              "got " + std::to_string(tri.triangles.size()) + ", expected " +
                  std::to_string(expected_count));

    // every junior point is used; all indices valid
    std::set<int> used;
    bool idx_ok = true;
    for (const auto& t : tri.triangles)
        for (int v : t) {
            if (v < 0 || size_t(v) >= pts.size()) idx_ok = false;
            used.insert(v);
        }
    audit.add("vertex_indices", idx_ok);
    audit.add("all_points_used", int64_t(used.size()) == int64_t(pts.size()));

    // orientation + covered area
    bool ccw = true;
    int64_t area2 = 0;
    for (size_t i = 0; i < tri.triangles.size(); ++i) {
        int64_t a2 = doubled_area(tri_points(tri, i));
        if (a2 <= 0) ccw = false;
        area2 += a2;
    }
    audit.add("ccw_orientation", ccw);
    audit.add("area_covers_simplex", area2 == r * r,
              "doubled area " + std::to_string(area2) + " vs " + std::to_string(r * r));

    // emptiness and unimodularity, checked independently, then compared
    if (r * r * r % gamma.index() != 0) {
        audit.add("volume_divisibility", false);
        return audit;
    }
    int64_t expected_det = r * r * r / gamma.index();
    bool all_empty = true, all_unimodular = true, equivalence = true;
    for (size_t i = 0; i < tri.triangles.size(); ++i) {
        PointTri t = tri_points(tri, i);
        bool empty = true;
        for (const Point3& p : pts) {
            if (p == t[0] || p == t[1] || p == t[2]) continue;
            if (locate_point(t, p).loc != TriLocation::Outside) {
                empty = false;
                break;
            }
        }
        bool unimod = std::abs(vertex_det(t)) == expected_det;
        all_empty = all_empty && empty;
        all_unimodular = all_unimodular && unimod;
        equivalence = equivalence && (empty == unimod);
    }
    audit.add("lattice_empty", all_empty);
    audit.add("unimodular", all_unimodular,
              "each |det| must equal " + std::to_string(expected_det));
    audit.add("empty_iff_unimodular", equivalence);

    // edge consistency: interior edges shared by exactly two triangles,
    // boundary edges (on a facet of the simplex) by exactly one
    std::map<std::pair<int, int>, int> edge_count;
    for (const auto& t : tri.triangles)
        for (int e = 0; e < 3; ++e) {
            int u = t[size_t(e)], v = t[size_t((e + 1) % 3)];
            edge_count[{std::min(u, v), std::max(u, v)}]++;
        }
    bool edges_ok = true;
    for (const auto& [edge, count] : edge_count) {
        const Point3 &A = pts[size_t(edge.first)], &B = pts[size_t(edge.second)];
        bool boundary = (A[0] == 0 && B[0] == 0) || (A[1] == 0 && B[1] == 0) ||
                        (A[2] == 0 && B[2] == 0);
        if (count != (boundary ? 1 : 2)) edges_ok = false;
    }
    audit.add("edge_consistency", edges_ok);

    // equivariance: the group's coordinate permutations permute the triangles
    std::set<std::array<Point3, 3>> keys;
    for (size_t i = 0; i < tri.triangles.size(); ++i) keys.insert(canonical_tri(tri_points(tri, i)));
    bool equivariant = true;
    for (int w = 0; w < group_map_count(tri.kind); ++w)
        for (const auto& key : keys) {
            PointTri image{apply_group_map(key[0], w), apply_group_map(key[1], w),
                           apply_group_map(key[2], w)};
            if (!keys.count(canonical_tri(image))) equivariant = false;
        }
    audit.add("equivariant", equivariant);

    return audit;
}

inline Triangulation triangulate_c3(const LatticeGamma& gamma) {
    try {
        Triangulation t = triangulate_c3_impl(gamma);
        if (audit_triangulation(t, gamma).ok) return t;
    } catch (const ConstructionFailure&) {
        // fall through to the fundamental-sector fallback
    }
    Triangulation t = finalize(fundamental_sector_triangles(gamma), gamma, GroupKind::C3);
    TriangulationAudit audit = audit_triangulation(t, gamma);
    if (!audit.ok) {
        std::string what = "triangulate: audit failed:";
        for (const auto& l : audit.lines)
            if (!l.ok) what += " [" + l.check + "]";
        throw ConstructionFailure(what);
    }
    return t;
}

inline Triangulation triangulate_s3(int64_t r) {
    if (r <= 0 || r % 3 == 0)
        throw TameViolation("triangulate: r must be positive and coprime to 3");
    Triangulation t = triangulate_s3_impl(r);
    LatticeGamma gamma;
    gamma.r = r;
    for (int64_t a = 0; a < r; ++a)
        for (int64_t b = 0; b < r; ++b) gamma.residues.insert({a, b, mod_nonneg(-a - b, r)});
    TriangulationAudit audit = audit_triangulation(t, gamma);
    if (!audit.ok) throw ConstructionFailure("triangulate: grid audit failed");
    return t;
}

// --- orbits, Euler characteristic, face counts ------------------------------------------

enum class Stabilizer { Free, Tau, Transposition };

inline std::string stabilizer_name(Stabilizer s) {
    switch (s) {
        case Stabilizer::Free: return "free";
        case Stabilizer::Tau: return "tau";
        default: return "transposition";
    }
}

struct TriangleOrbit {
    Stabilizer stabilizer = Stabilizer::Free;
    std::vector<int> triangles;  // indices into Triangulation::triangles
};

struct OrbitClassification {
    std::vector<TriangleOrbit> orbits;
    int64_t free_orbits = 0;
    int64_t tau_orbits = 0;
    int64_t transposition_orbits = 0;
};

inline OrbitClassification orbit_classify(const Triangulation& tri) {
    std::map<std::array<Point3, 3>, int> key_to_index;
    for (size_t i = 0; i < tri.triangles.size(); ++i)
        key_to_index[canonical_tri(tri_points(tri, i))] = int(i);

    OrbitClassification out;
    std::set<int> visited;
    int maps = group_map_count(tri.kind);
    for (size_t i = 0; i < tri.triangles.size(); ++i) {
        if (visited.count(int(i))) continue;
        PointTri t = tri_points(tri, i);
        std::set<int> orbit;
        for (int w = 0; w < maps; ++w) {
            PointTri image{apply_group_map(t[0], w), apply_group_map(t[1], w),
                           apply_group_map(t[2], w)};
            auto it = key_to_index.find(canonical_tri(image));
            if (it == key_to_index.end())
                throw EquivarianceViolation("orbits: group map leaves the triangulation");
            orbit.insert(it->second);
        }
        for (int x : orbit) visited.insert(x);
        TriangleOrbit rec;
        rec.triangles.assign(orbit.begin(), orbit.end());
        size_t n = orbit.size();
        if (tri.kind == GroupKind::C3) {
            if (n == 1)
                rec.stabilizer = Stabilizer::Tau;
            else if (n == 3)
                rec.stabilizer = Stabilizer::Free;
            else
                throw EquivarianceViolation("orbits: impossible orbit size for cyclic kind");
        } else {
            if (n == 1)
                rec.stabilizer = Stabilizer::Tau;
            else if (n == 3)
                rec.stabilizer = Stabilizer::Transposition;
            else if (n == 6)
                rec.stabilizer = Stabilizer::Free;
            else
                throw EquivarianceViolation("orbits: impossible orbit size for symmetric kind");
        }
        out.orbits.push_back(std::move(rec));
    }
    for (const auto& o : out.orbits) {
        if (o.stabilizer == Stabilizer::Free) ++out.free_orbits;
        if (o.stabilizer == Stabilizer::Tau) ++out.tau_orbits;
        if (o.stabilizer == Stabilizer::Transposition) ++out.transposition_orbits;
    }
    return out;
}

// Euler characteristic of the crepant resolution assembled from the orbit
// census: free orbits contribute 1; a transposition-fixed orbit contributes 2;
// the central fixed triangle contributes 3 for the cyclic kind and 6 for the
// symmetric kind.
inline int64_t euler_characteristic(const OrbitClassification& cls, GroupKind kind) {
    if (cls.tau_orbits != 1)
        throw FormulaPreconditionViolation("euler: expected exactly one fixed triangle");
    if (kind == GroupKind::C3) {
        if (cls.transposition_orbits != 0)
            throw FormulaPreconditionViolation("euler: cyclic kind cannot have swap-fixed orbits");
        return cls.free_orbits + 3;
    }
    return cls.free_orbits + 2 * cls.transposition_orbits + 6;
}

struct FaceCounts {
    int64_t vertices = 0;
    int64_t edges = 0;
    int64_t triangles = 0;
};

inline FaceCounts face_counts(const Triangulation& tri) {
    std::set<int> verts;
    std::set<std::pair<int, int>> edges;
    for (const auto& t : tri.triangles) {
        for (int v : t) verts.insert(v);
        for (int e = 0; e < 3; ++e) {
            int u = t[size_t(e)], v = t[size_t((e + 1) % 3)];
            edges.insert({std::min(u, v), std::max(u, v)});
        }
    }
    return {int64_t(verts.size()), int64_t(edges.size()), int64_t(tri.triangles.size())};
}

// Number of F_q-points of the toric variety of the subdivided octant:
// one cone per face, each contributing (q-1)^codim torus points.
inline int64_t count_polynomial_value(const FaceCounts& f, int64_t q) {
    int64_t t = q - 1;
    return t * t * t + f.vertices * t * t + f.edges * t + f.triangles;
}

}  // namespace wmk
