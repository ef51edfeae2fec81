#pragma once

// Export of the triangulated junior simplex: machine-readable JSON and a
// human-readable SVG picture (triangles colored by orbit stabilizer).

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "group.hpp"
#include "json.hpp"
#include "triangulate.hpp"

namespace wmk {

inline nlohmann::ordered_json fan_to_json(const Triangulation& tri,
                                          const OrbitClassification& cls, int64_t chi) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["tool"] = "wildmckay";
    j["mode"] = "fan";
    j["kind"] = kind_name(tri.kind);
    j["r"] = tri.r;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const Point3& p : tri.points) pts.push_back({p[0], p[1], p[2]});
    j["points"] = std::move(pts);
    nlohmann::ordered_json tris = nlohmann::ordered_json::array();
    for (const auto& t : tri.triangles) tris.push_back({t[0], t[1], t[2]});
    j["triangles"] = std::move(tris);
    nlohmann::ordered_json orbits = nlohmann::ordered_json::array();
    for (const TriangleOrbit& o : cls.orbits) {
        nlohmann::ordered_json jo;
        jo["stabilizer"] = stabilizer_name(o.stabilizer);
        jo["triangles"] = o.triangles;
        orbits.push_back(std::move(jo));
    }
    j["orbits"] = std::move(orbits);
    j["free_orbits"] = cls.free_orbits;
    j["central_orbits"] = cls.tau_orbits;
    j["swap_orbits"] = cls.transposition_orbits;
    j["chi"] = chi;
    return j;
}

namespace detail {
inline std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}
}  // namespace detail

// 600x520 picture; the simplex corners map to fixed screen positions and each
// lattice point is placed barycentrically.  Fill encodes the orbit stabilizer.
inline std::string fan_to_svg(const Triangulation& tri, const OrbitClassification& cls) {
    const double ax = 300, ay = 40;   // corner (r,0,0)
    const double bx = 60, by = 470;   // corner (0,r,0)
    const double cx = 540, cy = 470;  // corner (0,0,r)
    auto proj = [&](const Point3& p, double& x, double& y) {
        double r = double(tri.r);
        x = (double(p[0]) * ax + double(p[1]) * bx + double(p[2]) * cx) / r;
        y = (double(p[0]) * ay + double(p[1]) * by + double(p[2]) * cy) / r;
    };
    auto fill_for = [](Stabilizer s) {
        switch (s) {
            case Stabilizer::Free: return "#8dd3c7";
            case Stabilizer::Tau: return "#fb8072";
            default: return "#80b1d3";
        }
    };
    std::vector<Stabilizer> tri_stab(tri.triangles.size(), Stabilizer::Free);
    for (const TriangleOrbit& o : cls.orbits)
        for (int t : o.triangles) tri_stab[size_t(t)] = o.stabilizer;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"520\" "
          "viewBox=\"0 0 600 520\">\n"
       << "<rect width=\"600\" height=\"520\" fill=\"white\"/>\n";
    for (size_t i = 0; i < tri.triangles.size(); ++i) {
        os << "<polygon points=\"";
        for (int k = 0; k < 3; ++k) {
            double x = 0, y = 0;
            proj(tri.points[size_t(tri.triangles[i][size_t(k)])], x, y);
            if (k) os << " ";
            os << detail::fmt2(x) << "," << detail::fmt2(y);
        }
        os << "\" fill=\"" << fill_for(tri_stab[i])
           << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    for (const Point3& p : tri.points) {
        double x = 0, y = 0;
        proj(p, x, y);
        os << "<circle cx=\"" << detail::fmt2(x) << "\" cy=\"" << detail::fmt2(y)
           << "\" r=\"2.5\" fill=\"#000000\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace wmk
