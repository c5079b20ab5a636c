#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "mereon/vec3.hpp"

namespace mereon {

struct HullResult {
    std::vector<std::array<int, 3>> facets;  // outward-oriented triangles
    std::vector<int> hull_vertices;          // sorted input indices on the hull
    std::vector<int> interior_vertices;      // sorted, strictly inside every facet plane
};

namespace hull_detail {

// Sign of the volume of the tetrahedron (a, b, c, p): positive when p is on
// the positive side of the oriented plane through a, b, c.
inline int orient(const GVec3& a, const GVec3& b, const GVec3& c, const GVec3& p) {
    return (b - a).cross(c - a).dot(p - a).sign();
}

}  // namespace hull_detail

// Exact incremental convex hull with strict-visibility insertion.
inline HullResult convex_hull(const std::vector<GVec3>& pts) {
    using hull_detail::orient;
    const int n = static_cast<int>(pts.size());
    if (n < 4) throw std::invalid_argument("convex_hull: need at least 4 points");

    // Initial simplex: four affinely independent points.
    int i0 = 0, i1 = -1, i2 = -1, i3 = -1;
    for (int i = 1; i < n && i1 < 0; ++i)
        if (pts[i] != pts[i0]) i1 = i;
    for (int i = 1; i < n && i2 < 0; ++i)
        if (i1 >= 0 && !(pts[i1] - pts[i0]).cross(pts[i] - pts[i0]).is_zero()) i2 = i;
    for (int i = 1; i < n && i3 < 0; ++i)
        if (i2 >= 0 && orient(pts[i0], pts[i1], pts[i2], pts[i]) != 0) i3 = i;
    if (i3 < 0) throw std::invalid_argument("convex_hull: degenerate (coplanar) input");
    if (orient(pts[i0], pts[i1], pts[i2], pts[i3]) > 0) std::swap(i1, i2);

    std::set<std::array<int, 3>> faces{{i0, i1, i2}, {i0, i2, i3}, {i0, i3, i1}, {i1, i3, i2}};

    for (int p = 0; p < n; ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;
        std::vector<std::array<int, 3>> visible;
        for (const auto& f : faces)
            if (orient(pts[f[0]], pts[f[1]], pts[f[2]], pts[p]) > 0) visible.push_back(f);
        if (visible.empty()) continue;  // inside or on the current hull
        // Horizon = boundary edges of the visible region.
        std::map<std::array<int, 2>, int> edge_use;
        for (const auto& f : visible) {
            faces.erase(f);
            for (int k = 0; k < 3; ++k) {
                int a = f[k], b = f[(k + 1) % 3];
                auto rev = edge_use.find({b, a});
                if (rev != edge_use.end())
                    edge_use.erase(rev);
                else
                    ++edge_use[{a, b}];
            }
        }
        for (const auto& [e, cnt] : edge_use) {
            if ((pts[e[1]] - pts[e[0]]).cross(pts[p] - pts[e[0]]).is_zero())
                throw std::invalid_argument("convex_hull: collinear horizon edge");
            faces.insert({e[0], e[1], p});
        }
    }

    HullResult r;
    r.facets.assign(faces.begin(), faces.end());
    std::set<int> on_hull;
    for (const auto& f : r.facets)
        for (int v : f) on_hull.insert(v);
    r.hull_vertices.assign(on_hull.begin(), on_hull.end());
    for (int p = 0; p < n; ++p) {
        if (on_hull.count(p)) continue;
        bool strict = true;
        for (const auto& f : r.facets) {
            if (orient(pts[f[0]], pts[f[1]], pts[f[2]], pts[p]) >= 0) {
                strict = false;
                break;
            }
        }
        if (!strict)
            throw std::logic_error("convex_hull: point on hull boundary is not a vertex");
        r.interior_vertices.push_back(p);
    }
    // Validate: no input point lies strictly outside any facet.
    for (const auto& f : r.facets)
        for (int p = 0; p < n; ++p)
            if (orient(pts[f[0]], pts[f[1]], pts[f[2]], pts[p]) > 0)
                throw std::logic_error("convex_hull: facet not supporting");
    return r;
}

}  // namespace mereon
