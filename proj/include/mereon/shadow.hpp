#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mereon/binary_group.hpp"
#include "mereon/polytopes.hpp"

namespace mereon {

// ---------------------------------------------------------------------------
// Scaling and the drop-w lift (unit coordinates = Gray's divided by 2 phi^2).

inline Golden unit_scale_factor() {
    Golden phi = Golden::phi();
    return (2 * phi * phi).inverse();
}

inline GVec3 scale_to_unit(const GVec3& v) {
    Golden s = unit_scale_factor();
    return v * s;
}

struct LiftedVertex {
    int source = -1;       // M120p vertex index
    GVec3 scaled;          // v / (2 phi^2)
    Golden w;              // + sqrt(1 - r'^2)
    GQuat quaternion;      // (w, scaled)
    int matched = -1;      // index into the canonical 2I element list
    VertexType type = VertexType::A;
};

inline VertexType type_from_w(const Golden& w) {
    Rat half(1, 2);
    if (w == Golden(half)) return VertexType::A;
    if (w == Golden(0)) return VertexType::B;
    if (w == Golden(Rat(-1, 2), half)) return VertexType::C;  // 1/(2phi) = (phi-1)/2
    throw std::domain_error("type_from_w: latitude is not an M120p latitude");
}

inline LiftedVertex lift(const GVec3& v, int source, const BinaryGroup& g2i) {
    LiftedVertex lv;
    lv.source = source;
    lv.scaled = scale_to_unit(v);
    Golden r2 = lv.scaled.norm2();
    auto w = gf_sqrt_in_field(Golden(1) - r2);
    if (!w) throw std::domain_error("lift: 1 - r'^2 has no square root in the field");
    lv.w = *w;
    lv.quaternion = {lv.w, lv.scaled.x, lv.scaled.y, lv.scaled.z};
    lv.matched = g2i.index_of(lv.quaternion);
    if (lv.matched < 0) throw std::domain_error("lift: lifted point is not in 2I");
    lv.type = type_from_w(lv.w);
    return lv;
}

struct MatchReport {
    std::vector<LiftedVertex> lifts;  // one per M120p vertex, in vertex order
    int matched_total = 0;
    int count_a = 0, count_b = 0, count_c = 0;
    // Census of the 58 unmatched 2I elements.
    int remainder_poles = 0;       // +-1
    int remainder_missing12 = 0;   // |w| = phi/2
    int remainder_mirror = 0;      // lower-hemisphere mirrors
    bool type_labels_agree = true; // lift type equals the M120p vertex label
};

inline MatchReport verify_62_match(const Polyhedron& m120p, const BinaryGroup& g2i) {
    MatchReport r;
    std::set<int> matched;
    for (size_t i = 0; i < m120p.vertices.size(); ++i) {
        LiftedVertex lv = lift(m120p.vertices[i], static_cast<int>(i), g2i);
        if (lv.type != *m120p.types[i]) r.type_labels_agree = false;
        switch (lv.type) {
            case VertexType::A: ++r.count_a; break;
            case VertexType::B: ++r.count_b; break;
            case VertexType::C: ++r.count_c; break;
        }
        matched.insert(lv.matched);
        r.lifts.push_back(std::move(lv));
    }
    r.matched_total = static_cast<int>(matched.size());
    Golden half_phi = Rat(1, 2) * Golden::phi();
    for (size_t i = 0; i < g2i.size(); ++i) {
        if (matched.count(static_cast<int>(i))) continue;
        const GQuat& q = g2i.elements[i];
        Golden aw = q.w.sign() < 0 ? -q.w : q.w;
        if (aw == Golden(1))
            ++r.remainder_poles;
        else if (aw == half_phi)
            ++r.remainder_missing12;
        else
            ++r.remainder_mirror;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Stereographic projection from (-1, 0, 0, 0).

struct ProjPoint {
    bool infinite = false;
    GVec3 v;  // undefined when infinite
};

inline ProjPoint stereo_project(const GQuat& q) {
    Golden denom = Golden(1) + q.w;
    if (denom.is_zero()) return {true, {}};
    Golden inv = denom.inverse();
    return {false, GVec3{q.x * inv, q.y * inv, q.z * inv}};
}

// ---------------------------------------------------------------------------
// Shell decomposition of the projected 600-cell.

struct Shell {
    int index = 0;        // 0..7; the point at infinity carries index 8
    bool at_infinity = false;
    Golden w;             // signed latitude
    Golden radius_sq;     // exact (1 - w)/(1 + w); unused when at_infinity
    std::optional<VertexType> type;
    std::vector<int> members;  // element indices into the canonical 2I order
};

inline std::vector<Shell> shell_decompose(const BinaryGroup& g2i) {
    // Strata keyed by w, descending (w = +1 is shell 0, the origin).
    std::map<Golden, std::vector<int>> strata;
    for (size_t i = 0; i < g2i.size(); ++i)
        strata[g2i.elements[i].w].push_back(static_cast<int>(i));
    std::vector<Shell> shells;
    for (auto it = strata.rbegin(); it != strata.rend(); ++it) {
        Shell s;
        s.w = it->first;
        s.members = it->second;
        s.at_infinity = s.w == Golden(-1);
        s.index = static_cast<int>(shells.size());
        if (!s.at_infinity) s.radius_sq = (Golden(1) - s.w) / (Golden(1) + s.w);
        if (s.w != Golden(1) && !s.at_infinity) {
            Golden aw = s.w.sign() < 0 ? -s.w : s.w;
            s.type = type_from_w(aw == Rat(1, 2) * Golden::phi()
                                     ? Golden(Rat(-1, 2), Rat(1, 2))  // C shells
                                     : aw);
        }
        shells.push_back(std::move(s));
    }
    if (shells.size() != 9) throw std::logic_error("shell_decompose: expected 9 strata");
    // Consistency: every member's projection radius equals the shell radius.
    for (const auto& s : shells) {
        for (int i : s.members) {
            ProjPoint p = stereo_project(g2i.elements[i]);
            if (s.at_infinity) {
                if (!p.infinite) throw std::logic_error("shell_decompose: expected pole");
            } else if (p.infinite || p.v.norm2() != s.radius_sq) {
                throw std::logic_error("shell_decompose: radius mismatch");
            }
        }
    }
    return shells;
}

// r^2(q) * r^2(-q) = 1 for every non-pole element.
inline bool reciprocal_pair_check(const BinaryGroup& g2i) {
    for (const auto& q : g2i.elements) {
        if (q.w == Golden(1) || q.w == Golden(-1)) continue;
        ProjPoint a = stereo_project(q);
        ProjPoint b = stereo_project(-q);
        if (a.infinite || b.infinite) return false;
        if (a.v.norm2() * b.v.norm2() != Golden(1)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Angular alignment of all 118 non-pole projections with the 62 directions.

struct AlignmentReport {
    int aligned = 0;                   // elements exactly parallel to a vertex ray
    int total = 0;                     // non-pole elements
    std::map<int, int> per_vertex;     // M120p vertex index -> element count
    bool multiplicities_ok = false;    // B:1, A:2, C:4
};

inline AlignmentReport angular_alignment_check(const Polyhedron& m120p,
                                               const BinaryGroup& g2i) {
    AlignmentReport r;
    for (const auto& q : g2i.elements) {
        ProjPoint p = stereo_project(q);
        if (p.infinite || p.v.is_zero()) continue;  // the two poles
        ++r.total;
        for (size_t v = 0; v < m120p.vertices.size(); ++v) {
            if (same_ray(p.v, m120p.vertices[v])) {
                ++r.aligned;
                ++r.per_vertex[static_cast<int>(v)];
                break;
            }
        }
    }
    r.multiplicities_ok = r.per_vertex.size() == m120p.vertices.size();
    for (const auto& [v, count] : r.per_vertex) {
        int want = 0;
        switch (*m120p.types[v]) {
            case VertexType::A: want = 2; break;
            case VertexType::B: want = 1; break;
            case VertexType::C: want = 4; break;
        }
        if (count != want) r.multiplicities_ok = false;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Inner icosahedron (shell 1, w = phi/2).

struct InnerIcosaReport {
    int pairs_aligned = 0;            // of 12
    Golden drop_w_ratio_sq;           // |Im q|^2 / |C scaled|^2 = 1/phi^2 exactly
    Golden stereo_ratio_sq;           // shell1 r^2 / shell3 r^2 = 1/5 exactly
    bool directions_are_phi_cyclic = false;  // rays of (0, +-phi, +-phi^2)
};

inline InnerIcosaReport inner_icosahedron_check(const Polyhedron& m120p,
                                                const BinaryGroup& g2i) {
    InnerIcosaReport rep;
    Golden phi = Golden::phi();
    Golden half_phi = Rat(1, 2) * phi;
    std::vector<GVec3> inner;
    for (const auto& q : g2i.elements)
        if (q.w == half_phi) inner.push_back({q.x, q.y, q.z});
    if (inner.size() != 12)
        throw std::logic_error("inner_icosahedron_check: expected 12 elements");

    std::vector<GVec3> c_dirs;
    for (size_t i = 0; i < m120p.vertices.size(); ++i)
        if (*m120p.types[i] == VertexType::C) c_dirs.push_back(m120p.vertices[i]);

    for (const auto& v : inner)
        for (const auto& c : c_dirs)
            if (same_ray(v, c)) {
                ++rep.pairs_aligned;
                break;
            }

    // Latitude radii at unit scale: |Im|^2 = 1 - w^2.
    Golden r_inner_sq = Golden(1) - half_phi * half_phi;          // (3 - phi)/4
    Golden w_c = Golden(Rat(-1, 2), Rat(1, 2));                   // 1/(2phi)
    Golden r_c_sq = Golden(1) - w_c * w_c;                        // (2 + phi)/4
    rep.drop_w_ratio_sq = r_inner_sq / r_c_sq;

    // Stereographic shell radii: shell 1 over shell 3.
    Golden s1 = (Golden(1) - half_phi) / (Golden(1) + half_phi);
    Golden s3 = (Golden(1) - w_c) / (Golden(1) + w_c);
    rep.stereo_ratio_sq = s1 / s3;

    // Shell-1 projected directions are the cyclic permutations of
    // (0, +-phi, +-phi^2) up to positive scale.
    auto targets = detail::signed_cyclic({Golden(0), phi, phi * phi});
    rep.directions_are_phi_cyclic = true;
    for (const auto& v : inner) {
        bool found = false;
        for (const auto& t : targets)
            if (same_ray(v, t)) found = true;
        if (!found) rep.directions_are_phi_cyclic = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// phi-ladder of latitudes.

inline bool phi_ladder_check() {
    Golden phi = Golden::phi();
    Golden inv_phi = phi.inverse();
    Rat half(1, 2);
    bool step1 = (half * phi) * inv_phi == Golden(half);                  // phi/2 -> 1/2
    bool step2 = Golden(half) * inv_phi == Golden(Rat(-1, 2), half);      // 1/2 -> 1/(2phi)
    return step1 && step2;
}

// ---------------------------------------------------------------------------
// Face-orbit bijection under I_h.

struct FaceOrbitReport {
    bool single_orbit = false;       // seed-face centroid orbit has size 120
    bool stabilizer_trivial = false;
    bool common_radius = false;      // all face centroids share one exact radius^2
    Golden centroid_radius_sq9;      // 9 * radius^2 (centroid scaled by 3)
    std::vector<int> face_of_symmetry;  // symmetry index -> face index (size 120)
};

// The 120 symmetries of I_h as exact 3x3 matrices: R_q for q in 2I modulo
// +-1, each optionally composed with central inversion.
inline std::vector<std::array<GVec3, 3>> icosahedral_symmetries(const BinaryGroup& g2i) {
    std::vector<std::array<GVec3, 3>> mats;
    GVec3 e1{Golden(1), Golden(0), Golden(0)};
    GVec3 e2{Golden(0), Golden(1), Golden(0)};
    GVec3 e3{Golden(0), Golden(0), Golden(1)};
    std::set<std::array<GVec3, 3>> seen;
    for (const auto& q : g2i.elements) {
        std::array<GVec3, 3> m{q_rotate(q, e1), q_rotate(q, e2), q_rotate(q, e3)};
        if (!seen.insert(m).second) continue;  // q and -q give the same rotation
        mats.push_back(m);
        std::array<GVec3, 3> neg{-m[0], -m[1], -m[2]};
        seen.insert(neg);
        mats.push_back(neg);
    }
    if (mats.size() != 120)
        throw std::logic_error("icosahedral_symmetries: expected 120 matrices");
    return mats;
}

inline GVec3 apply_columns(const std::array<GVec3, 3>& m, const GVec3& v) {
    // m holds the images of e1, e2, e3 (columns).
    return m[0] * v.x + m[1] * v.y + m[2] * v.z;
}

inline FaceOrbitReport face_orbit_bijection(const Polyhedron& m120p,
                                            const BinaryGroup& g2i) {
    FaceOrbitReport rep;
    // Face centroids scaled by 3 to stay in the ring of coordinates.
    std::map<GVec3, int> centroid_to_face;
    std::set<Golden> radii;
    for (size_t f = 0; f < m120p.faces.size(); ++f) {
        GVec3 c = m120p.vertices[m120p.faces[f][0]] + m120p.vertices[m120p.faces[f][1]] +
                  m120p.vertices[m120p.faces[f][2]];
        centroid_to_face[c] = static_cast<int>(f);
        radii.insert(c.norm2());
    }
    rep.common_radius = radii.size() == 1;
    rep.centroid_radius_sq9 = *radii.begin();

    auto mats = icosahedral_symmetries(g2i);
    GVec3 seed = centroid_to_face.begin()->first;
    std::set<int> orbit;
    for (const auto& m : mats) {
        GVec3 img = apply_columns(m, seed);
        auto it = centroid_to_face.find(img);
        if (it == centroid_to_face.end())
            throw std::logic_error("face_orbit_bijection: image is not a face centroid");
        rep.face_of_symmetry.push_back(it->second);
        orbit.insert(it->second);
    }
    rep.single_orbit = orbit.size() == 120;
    rep.stabilizer_trivial = rep.single_orbit;  // |orbit| * |stab| = |group| = 120
    return rep;
}

// ---------------------------------------------------------------------------
// 24-cell three-shell projection.

struct Cell24Report {
    std::array<int, 5> counts{};     // origin, r^2=1/3, r^2=1, r^2=3, infinity
    bool radii_ok = false;
    bool middle_is_axes = false;     // the six w=0 elements are +-i, +-j, +-k
    bool cube_directions_a_type = false;
    bool reciprocity = false;        // (1/3) * 3 = 1
};

inline Cell24Report cell24_shell_check(const BinaryGroup& g2t) {
    Cell24Report rep;
    Rat half(1, 2);
    Golden third(Rat(1, 3));
    rep.radii_ok = true;
    std::vector<GVec3> axes = {{Golden(1), Golden(0), Golden(0)},
                               {Golden(0), Golden(1), Golden(0)},
                               {Golden(0), Golden(0), Golden(1)}};
    rep.middle_is_axes = true;
    rep.cube_directions_a_type = true;
    for (const auto& q : g2t.elements) {
        ProjPoint p = stereo_project(q);
        if (p.infinite) {
            ++rep.counts[4];
            continue;
        }
        if (p.v.is_zero()) {
            ++rep.counts[0];
            continue;
        }
        Golden r2 = p.v.norm2();
        if (r2 == third) {
            ++rep.counts[1];
            // cube-vertex (A-type) directions: |x| = |y| = |z|
            GVec3 v = p.v;
            Golden ax = v.x.sign() < 0 ? -v.x : v.x;
            Golden ay = v.y.sign() < 0 ? -v.y : v.y;
            Golden az = v.z.sign() < 0 ? -v.z : v.z;
            if (!(ax == ay && ay == az)) rep.cube_directions_a_type = false;
        } else if (r2 == Golden(1)) {
            ++rep.counts[2];
            bool on_axis = false;
            for (const auto& a : axes)
                if (parallel(p.v, a)) on_axis = true;
            if (!on_axis) rep.middle_is_axes = false;
        } else if (r2 == Golden(3)) {
            ++rep.counts[3];
        } else {
            rep.radii_ok = false;
        }
    }
    rep.reciprocity = third * Golden(3) == Golden(1);
    return rep;
}

}  // namespace mereon
