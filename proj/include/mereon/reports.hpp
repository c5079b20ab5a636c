#pragma once

#include <map>

#include "mereon/export.hpp"
#include "mereon/mckay.hpp"
#include "mereon/polytopes.hpp"
#include "mereon/shadow.hpp"

namespace mereon {

// Shell census of the 144-face core: count per squared radius.
inline Table report_m144p_shells() {
    Polyhedron p = m144p_construct();
    std::map<Golden, int> census;
    for (const auto& v : p.vertices) ++census[v.norm2()];
    Table t;
    t.header = {"r^2", "r", "count"};
    for (const auto& [r2, n] : census)
        t.rows.push_back({r2.to_exact_string(), fmt_fixed(std::sqrt(r2.to_double())),
                          std::to_string(n)});
    return t;
}

// Vertex types of the 120-face boundary: radius and role per type.
inline Table report_m120p_types() {
    Polyhedron p = m120p_construct();
    Table t;
    t.header = {"type", "fold", "role", "count", "r^2 exact", "r"};
    for (VertexType ty : {VertexType::A, VertexType::B, VertexType::C}) {
        int n = 0;
        for (const auto& o : p.types)
            if (o && *o == ty) ++n;
        Golden r2 = p.exact_radius2.at(ty);
        t.rows.push_back({name_of(ty), std::to_string(fold_of(ty)), role_of(ty),
                          std::to_string(n), r2.to_exact_string(),
                          fmt_fixed(std::sqrt(r2.to_double()), 3)});
    }
    return t;
}

// 2I membership census: the three construction families and the w-multiplicities.
inline Table report_group_families() {
    BinaryGroup g = build_2I();
    int axes = 0, halves = 0, golden = 0;
    std::map<Golden, int> by_abs_w;
    for (const auto& q : g.elements) {
        int nz = !q.w.is_zero() + !q.x.is_zero() + !q.y.is_zero() + !q.z.is_zero();
        bool rational = q.w.b == 0 && q.x.b == 0 && q.y.b == 0 && q.z.b == 0;
        if (rational && nz == 1)
            ++axes;
        else if (rational)
            ++halves;
        else
            ++golden;
        Golden aw = q.w.sign() < 0 ? -q.w : q.w;
        ++by_abs_w[aw];
    }
    Table t;
    t.header = {"census", "value", "count"};
    t.rows.push_back({"family", "axis units", std::to_string(axes)});
    t.rows.push_back({"family", "half units", std::to_string(halves)});
    t.rows.push_back({"family", "golden", std::to_string(golden)});
    for (auto it = by_abs_w.rbegin(); it != by_abs_w.rend(); ++it)
        t.rows.push_back({"|w|", it->first.to_exact_string(), std::to_string(it->second)});
    return t;
}

// Shell table of the projected 600-cell: radius, type, count per stratum.
inline Table report_shells() {
    auto shells = shell_decompose(build_2I());
    Table t;
    t.header = {"shell", "w", "r^2 exact", "r", "type", "count"};
    for (const auto& s : shells) {
        std::string r2 = s.at_infinity ? "inf" : s.radius_sq.to_exact_string();
        std::string r = s.at_infinity ? "inf" : fmt_fixed(std::sqrt(s.radius_sq.to_double()));
        std::string ty = s.type ? name_of(*s.type) : "-";
        t.rows.push_back({std::to_string(s.index), s.w.to_exact_string(), r2, r, ty,
                          std::to_string(s.members.size())});
    }
    return t;
}

// Projected 24-cell strata.
inline Table report_cell24() {
    auto rep = cell24_shell_check(build_2T());
    Table t;
    t.header = {"stratum", "r^2", "count"};
    const char* r2[5] = {"0", "1/3", "1", "3", "inf"};
    for (int i = 0; i < 5; ++i)
        t.rows.push_back({std::to_string(i), r2[i], std::to_string(rep.counts[i])});
    return t;
}

// Normalized radius ratios of the boundary polyhedron vs. the Catalan-shaped
// reference at the stated radii.
inline Table report_ratios() {
    Table t;
    t.header = {"solid", "r_A/r_A", "r_C/r_A", "r_B/r_A"};
    for (const auto* name : {"m120p", "disdyakis"}) {
        auto r = radius_ratio_report(std::string(name) == "m120p" ? m120p_construct()
                                                                  : disdyakis_construct());
        t.rows.push_back({name, fmt_fixed(r.r1, 3), fmt_fixed(r.r2, 3), fmt_fixed(r.r3, 3)});
    }
    return t;
}

// 62-row correspondence: each boundary vertex, its lifted quaternion and shell.
inline Table report_correspondence() {
    Polyhedron p = m120p_construct();
    BinaryGroup g = build_2I();
    auto rep = verify_62_match(p, g);
    Table t;
    t.header = {"vertex", "type", "x", "y", "z", "w", "qx", "qy", "qz"};
    for (const auto& lv : rep.lifts) {
        const GVec3& v = p.vertices[lv.source];
        t.rows.push_back({std::to_string(lv.source), name_of(lv.type),
                          fmt_fixed(v.x.to_double()), fmt_fixed(v.y.to_double()),
                          fmt_fixed(v.z.to_double()), lv.quaternion.w.to_exact_string(),
                          lv.quaternion.x.to_exact_string(),
                          lv.quaternion.y.to_exact_string(),
                          lv.quaternion.z.to_exact_string()});
    }
    return t;
}

// Irreducible-representation dimensions per binary group, with the ADE label.
inline Table report_mckay(unsigned seed = 42) {
    Table t;
    t.header = {"group", "classes", "dims", "graph"};
    auto row = [&](const std::string& name, auto&& g) {
        auto m = mckay_for_group(g, seed);
        std::string dims;
        for (size_t i = 0; i < m.dims.size(); ++i)
            dims += (i ? " " : "") + std::to_string(m.dims[i]);
        t.rows.push_back({name, std::to_string(m.dims.size()), dims, m.ade_label});
    };
    row("2T", build_2T());
    row("2O", build_2O());
    row("2I", build_2I());
    return t;
}

// Knot residual sweep for one conformation.
inline Table report_knot_residuals(const TorusKnotSpec& k, int samples) {
    Table t;
    t.header = {"i", "t", "torus_residual"};
    const double two_pi = 2.0 * M_PI;
    for (int i = 0; i < samples; ++i) {
        double tt = two_pi * i / samples;
        StereoPoint p = stereo_north(torus_knot_point(k, tt));
        t.rows.push_back(
            {std::to_string(i), fmt_float(tt), fmt_float(ring_torus_residual(p.v), 6)});
    }
    return t;
}

}  // namespace mereon
