#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mereon/appendix_a.hpp"
#include "mereon/polyhedron.hpp"

namespace mereon {

namespace detail {

// Orient every face so its plane normal points away from the origin.
inline void orient_outward(Polyhedron& p) {
    for (auto& f : p.faces) {
        const GVec3& a = p.vertices[f[0]];
        const GVec3& b = p.vertices[f[1]];
        const GVec3& c = p.vertices[f[2]];
        int s = a.dot((b - a).cross(c - a)).sign();
        if (s == 0) throw std::logic_error("orient_outward: face plane through origin");
        if (s < 0) std::swap(f[1], f[2]);
    }
}

// All distinct sign/cyclic images of a seed triple (zeros keep a single sign).
inline std::vector<GVec3> signed_cyclic(const GVec3& seed) {
    std::set<GVec3> out;
    Golden c[3] = {seed.x, seed.y, seed.z};
    for (int rot = 0; rot < 3; ++rot) {
        for (int m = 0; m < 8; ++m) {
            Golden v[3];
            for (int i = 0; i < 3; ++i) {
                v[i] = c[(i + rot) % 3];
                if ((m >> i) & 1) v[i] = -v[i];
            }
            out.insert(GVec3{v[0], v[1], v[2]});
        }
    }
    return {out.begin(), out.end()};
}

inline std::vector<GVec3> signed_triple(const GVec3& seed) {
    std::set<GVec3> out;
    for (int m = 0; m < 8; ++m) {
        Golden v[3] = {seed.x, seed.y, seed.z};
        for (int i = 0; i < 3; ++i)
            if ((m >> i) & 1) v[i] = -v[i];
        out.insert(GVec3{v[0], v[1], v[2]});
    }
    return {out.begin(), out.end()};
}

// Dodecahedral directions: (+-1,+-1,+-1) and the signed cyclic class of
// (0, phi, 1/phi).  20 rays.
inline std::vector<GVec3> dodeca_directions() {
    std::vector<GVec3> dirs = signed_triple({Golden(1), Golden(1), Golden(1)});
    Golden phi = Golden::phi();
    for (const auto& v : signed_cyclic({Golden(0), phi, phi.inverse()})) dirs.push_back(v);
    std::sort(dirs.begin(), dirs.end());
    return dirs;
}

// Icosahedral directions: signed cyclic class of (0, 1, phi).  12 rays.
inline std::vector<GVec3> icosa_directions() {
    auto dirs = signed_cyclic({Golden(0), Golden(1), Golden::phi()});
    std::sort(dirs.begin(), dirs.end());
    return dirs;
}

// Icosidodecahedral directions: signed cyclic classes of (0, 0, 2phi^2) and
// (phi^3, phi^2, phi), scaled so every member has squared norm 4 phi^4.
// 30 rays at radius 2 phi^2.
inline std::vector<GVec3> icosidodeca_vertices_2phi2() {
    Golden phi = Golden::phi();
    Golden p2 = phi * phi, p3 = p2 * phi;
    std::vector<GVec3> dirs = signed_cyclic({Golden(0), Golden(0), 2 * p2});
    for (const auto& v : signed_cyclic({p3, p2, phi})) dirs.push_back(v);
    std::sort(dirs.begin(), dirs.end());
    return dirs;
}

struct RhombusFan {
    int b;                   // index of the 2-fold (B) vertex
    std::array<int, 2> as;   // the A pair whose sum is parallel to b
    std::array<int, 2> cs;   // the C pair whose sum is parallel to b
};

// For each B vertex find the nearest A pair and C pair with pair-sum parallel
// to B.  (Parallelism alone admits two candidate pairs; the geometric rhombus
// is the one at minimal pair distance.)
inline std::vector<RhombusFan> rhombus_fans(const std::vector<GVec3>& verts,
                                            const std::vector<int>& a_idx,
                                            const std::vector<int>& c_idx,
                                            const std::vector<int>& b_idx) {
    auto best_pair = [&](int b, const std::vector<int>& idx) -> std::array<int, 2> {
        std::array<int, 2> best{-1, -1};
        Golden best_d2;
        for (size_t i = 0; i < idx.size(); ++i) {
            for (size_t j = i + 1; j < idx.size(); ++j) {
                GVec3 s = verts[idx[i]] + verts[idx[j]];
                if (!s.cross(verts[b]).is_zero() || s.dot(verts[b]).sign() <= 0) continue;
                Golden d2 = (verts[idx[i]] - verts[idx[j]]).norm2();
                if (best[0] < 0 || d2 < best_d2) {
                    best = {idx[i], idx[j]};
                    best_d2 = d2;
                }
            }
        }
        if (best[0] < 0) throw std::logic_error("rhombus_fans: no parallel pair");
        return best;
    };
    std::vector<RhombusFan> fans;
    fans.reserve(b_idx.size());
    for (int b : b_idx) fans.push_back({b, best_pair(b, a_idx), best_pair(b, c_idx)});
    return fans;
}

// Shared M120p/Disdyakis combinatorics: every 2-fold vertex caps its rhombus
// (2 A + 2 C) with four triangles, each using one A and one C.
inline void add_fan_faces(Polyhedron& p, const std::vector<RhombusFan>& fans) {
    for (const auto& fan : fans)
        for (int a : fan.as)
            for (int c : fan.cs) p.faces.push_back({fan.b, a, c});
}

}  // namespace detail

// The 144-face crystallographic core, built per octant of the FCC
// 6-frequency octahedron: a 12-triangle fan around the face-centre node plus
// 6 notch triangles capping the hexagon nodes.
inline Polyhedron m144p_construct() {
    // Positive-octant node cycle around the centre (2,2,2): hexagon nodes
    // (sum 6) interleaved with the surviving 4-frequency octahedron nodes
    // (corners r^2=16 and edge midpoints r^2=8).
    static constexpr std::array<std::array<int, 3>, 12> kCycle = {{
        {3, 2, 1}, {2, 2, 0}, {2, 3, 1}, {0, 4, 0}, {1, 3, 2}, {0, 2, 2},
        {1, 2, 3}, {0, 0, 4}, {2, 1, 3}, {2, 0, 2}, {3, 1, 2}, {4, 0, 0},
    }};
    Polyhedron p;
    p.name = "m144p";
    std::map<std::array<int, 3>, int> index;
    auto vid = [&](std::array<int, 3> v) {
        auto it = index.find(v);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(p.vertices.size());
        index.emplace(v, id);
        p.vertices.push_back({Golden(v[0]), Golden(v[1]), Golden(v[2])});
        return id;
    };
    for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
            for (int sz : {1, -1}) {
                auto ap = [&](const std::array<int, 3>& v) {
                    return vid({v[0] * sx, v[1] * sy, v[2] * sz});
                };
                int centre = ap({2, 2, 2});
                std::array<int, 12> cyc;
                for (int i = 0; i < 12; ++i) cyc[i] = ap(kCycle[i]);
                for (int i = 0; i < 12; ++i)
                    p.faces.push_back({centre, cyc[i], cyc[(i + 1) % 12]});
                // Notch triangles sit over the hexagon nodes (even positions).
                for (int i = 0; i < 12; i += 2)
                    p.faces.push_back({cyc[(i + 11) % 12], cyc[i], cyc[(i + 1) % 12]});
            }
        }
    }
    detail::orient_outward(p);
    if (p.vertices.size() != 74 || p.faces.size() != 144)
        throw std::logic_error("m144p_construct: wrong counts");
    return p;
}

// The 120-face boundary polyhedron: 20 A at radius phi^2 sqrt3, 12 C at
// phi^2 sqrt(1+phi^2), 30 B at 2 phi^2; four (B, A, C) triangles per rhombus.
inline Polyhedron m120p_construct() {
    Golden phi = Golden::phi();
    Golden p2 = phi * phi;
    Polyhedron p;
    p.name = "m120p";
    std::vector<int> a_idx, c_idx, b_idx;
    for (const auto& d : detail::dodeca_directions()) {
        a_idx.push_back(static_cast<int>(p.vertices.size()));
        p.vertices.push_back(d * p2);
        p.types.push_back(VertexType::A);
    }
    for (const auto& d : detail::icosa_directions()) {
        c_idx.push_back(static_cast<int>(p.vertices.size()));
        p.vertices.push_back(d * p2);
        p.types.push_back(VertexType::C);
    }
    for (const auto& v : detail::icosidodeca_vertices_2phi2()) {
        b_idx.push_back(static_cast<int>(p.vertices.size()));
        p.vertices.push_back(v);
        p.types.push_back(VertexType::B);
    }
    auto fans = detail::rhombus_fans(p.vertices, a_idx, c_idx, b_idx);
    detail::add_fan_faces(p, fans);
    detail::orient_outward(p);

    Golden p4 = p2 * p2;
    p.exact_radius2[VertexType::A] = 3 * p4;
    p.exact_radius2[VertexType::C] = p4 * (Golden(1) + p2);
    p.exact_radius2[VertexType::B] = 4 * p4;
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        if (p.vertices[i].norm2() != p.exact_radius2[*p.types[i]])
            throw std::logic_error("m120p_construct: shell radius mismatch");
    }
    if (p.vertices.size() != 62 || p.faces.size() != 120)
        throw std::logic_error("m120p_construct: wrong counts");
    return p;
}

// The Disdyakis Triacontahedron on the same 62 axis directions, with the
// squared radii 3, 1+phi^4 = 3phi^2, phi^2(1+phi^2) = 4phi+3 on the 3-, 5-
// and 2-fold axes.  The radial scale factors are not squares in Q(phi), so
// coordinates are rational approximations (256-bit) of the exact radii; the
// squared radii themselves are carried exactly in exact_radius2.
inline Polyhedron disdyakis_construct() {
    Golden phi = Golden::phi();
    Polyhedron p;
    p.name = "disdyakis";
    Golden r2_a = Golden(3);
    Golden r2_c = 3 * phi * phi;                     // 1 + phi^4
    Golden r2_b = Golden(Rat(3), Rat(4));            // 4phi + 3 = phi^2 (1 + phi^2)

    auto scale_factor = [](const Golden& target_r2, const Golden& dir_n2) {
        // rational approximation of sqrt(target_r2 / dir_n2)
        mpf_class t(0, 256);
        mpf_class num(target_r2.to_double(), 256), den(dir_n2.to_double(), 256);
        // rebuild the quotient in high precision from exact rationals
        auto to_mpf = [](const Golden& g) {
            mpf_class five(5, 256);
            mpf_class s5(0, 256);
            mpf_sqrt(s5.get_mpf_t(), five.get_mpf_t());
            mpf_class a(0, 256), b(0, 256);
            mpf_set_q(a.get_mpf_t(), g.a.get_mpq_t());
            mpf_set_q(b.get_mpf_t(), g.b.get_mpq_t());
            return mpf_class(a + b * (1 + s5) / 2);
        };
        mpf_class q = to_mpf(target_r2) / to_mpf(dir_n2);
        mpf_sqrt(t.get_mpf_t(), q.get_mpf_t());
        Rat r;
        mpq_set_f(r.get_mpq_t(), t.get_mpf_t());
        return r;
    };

    std::vector<int> a_idx, c_idx, b_idx;
    auto add = [&](const std::vector<GVec3>& dirs, const Golden& r2, VertexType t,
                   std::vector<int>& idx) {
        for (const auto& d : dirs) {
            Rat s = scale_factor(r2, d.norm2());
            idx.push_back(static_cast<int>(p.vertices.size()));
            p.vertices.push_back(d * Golden(s));
            p.types.push_back(t);
        }
    };
    add(detail::dodeca_directions(), r2_a, VertexType::A, a_idx);
    add(detail::icosa_directions(), r2_c, VertexType::C, c_idx);
    add(detail::icosidodeca_vertices_2phi2(), r2_b, VertexType::B, b_idx);

    auto fans = detail::rhombus_fans(p.vertices, a_idx, c_idx, b_idx);
    detail::add_fan_faces(p, fans);
    detail::orient_outward(p);
    p.exact_radius2[VertexType::A] = r2_a;
    p.exact_radius2[VertexType::C] = r2_c;
    p.exact_radius2[VertexType::B] = r2_b;
    if (p.vertices.size() != 62 || p.faces.size() != 120)
        throw std::logic_error("disdyakis_construct: wrong counts");
    return p;
}

struct RadiusRatioReport {
    double r1 = 1.0, r2 = 1.0, r3 = 1.0;  // normalised, ascending
};

// (1, r_mid/r_min, r_max/r_min) from exact squared radii.
inline RadiusRatioReport radius_ratio_report(const Polyhedron& p) {
    std::vector<Golden> r2s;
    if (!p.exact_radius2.empty()) {
        for (const auto& [t, r2] : p.exact_radius2) r2s.push_back(r2);
    } else {
        std::set<Golden> distinct;
        for (const auto& v : p.vertices) distinct.insert(v.norm2());
        r2s.assign(distinct.begin(), distinct.end());
    }
    std::sort(r2s.begin(), r2s.end());
    r2s.erase(std::unique(r2s.begin(), r2s.end()), r2s.end());
    RadiusRatioReport rep;
    if (r2s.empty()) return rep;
    Golden lo = r2s.front();
    rep.r1 = 1.0;
    rep.r2 = std::sqrt((r2s[r2s.size() / 2] / lo).to_double());
    rep.r3 = std::sqrt((r2s.back() / lo).to_double());
    if (r2s.size() == 1) rep.r2 = 1.0;
    return rep;
}

}  // namespace mereon
