#pragma once

#include <functional>

#include "mereon/convex_hull.hpp"
#include "mereon/mckay.hpp"
#include "mereon/reports.hpp"

namespace mereon {

struct CheckResult {
    int criterion = 0;          // 1..16
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
    bool exact = false;         // true when verified in exact arithmetic
};

namespace check_detail {

inline std::string ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

}  // namespace check_detail

// All checks behind the verify command, one entry per acceptance criterion
// except determinism (criterion 16), which compares two runs of the CLI and
// lives in the test harness.  Two checks fail by design: the published
// centroid-sphere radius 4.6950 does not match the exact value, and the
// reference solid is not convex at the published radii (see README).
inline std::vector<CheckResult> run_all_checks(unsigned seed = 42, int samples = 1024) {
    using check_detail::ints;
    std::vector<CheckResult> out;
    auto add = [&](int crit, const std::string& name, bool pass, const std::string& want,
                   const std::string& got, bool exact) {
        out.push_back({crit, name, pass, want, got, exact});
    };

    BinaryGroup g2t = build_2T();
    BinaryGroup2O g2o = build_2O();
    BinaryGroup g2i = build_2I();
    Polyhedron m144 = m144p_construct();
    Polyhedron m120 = m120p_construct();
    Polyhedron dt = disdyakis_construct();

    // 1. group orders by closure
    {
        auto c2t = closure(std::vector<GQuat>{{Golden(0), Golden(1), Golden(0), Golden(0)},
                                              GQuat{Golden(Rat(1, 2)), Golden(Rat(1, 2)),
                                                    Golden(Rat(1, 2)), Golden(Rat(1, 2))}},
                           256);
        Rat half(1, 2);
        GQuat gold{half * Golden::phi(), half * Golden::phi().inverse(), Golden(half),
                   Golden(0)};
        auto c2i = closure(std::vector<GQuat>{gold,
                                              GQuat{Golden(half), Golden(half), Golden(half),
                                                    Golden(half)}},
                           1024);
        std::vector<int> got{static_cast<int>(c2t.size()), static_cast<int>(g2o.size()),
                             static_cast<int>(c2i.size())};
        bool ok = got == std::vector<int>{24, 48, 120} && is_closed(g2o) &&
                  g2t.size() == 24 && g2i.size() == 120;
        add(1, "group orders 24/48/120 by closure", ok, "24 48 120", ints(got), true);
    }

    // 2. 2I family and |w| census
    {
        int axes = 0, halves = 0, golden = 0;
        std::map<Golden, int> by_w;
        for (const auto& q : g2i.elements) {
            int nz = !q.w.is_zero() + !q.x.is_zero() + !q.y.is_zero() + !q.z.is_zero();
            bool rational = q.w.b == 0 && q.x.b == 0 && q.y.b == 0 && q.z.b == 0;
            if (rational && nz == 1)
                ++axes;
            else if (rational)
                ++halves;
            else
                ++golden;
            ++by_w[q.w.sign() < 0 ? -q.w : q.w];
        }
        std::vector<int> wcounts;
        for (auto it = by_w.rbegin(); it != by_w.rend(); ++it) wcounts.push_back(it->second);
        bool ok = axes == 8 && halves == 16 && golden == 96 &&
                  wcounts == std::vector<int>{2, 24, 40, 24, 30};
        add(2, "2I families 8/16/96 and |w| census 2/24/40/24/30", ok,
            "8 16 96 ; 2 24 40 24 30",
            ints({axes, halves, golden}) + " ; " + ints(wcounts), true);
    }

    // 3. M144p mesh and shell census, vertex-table equality
    {
        auto rep = mesh_integrity(m144);
        std::map<Golden, int> census;
        for (const auto& v : m144.vertices) ++census[v.norm2()];
        std::set<GVec3> actual(m144.vertices.begin(), m144.vertices.end());
        std::set<GVec3> expected;
        for (const auto& t : kM144pVertices)
            expected.insert({Golden(t[0]), Golden(t[1]), Golden(t[2])});
        bool ok = rep.v == 74 && rep.e == 216 && rep.f == 144 && rep.euler == 2 &&
                  rep.ok() && actual == expected && census[Golden(8)] == 12 &&
                  census[Golden(14)] == 48 && census[Golden(12)] == 8 &&
                  census[Golden(16)] == 6;
        add(3, "M144p 74/216/144, table equality, shells 12/48/8/6", ok,
            "74 216 144 chi=2",
            ints({static_cast<int>(rep.v), static_cast<int>(rep.e),
                  static_cast<int>(rep.f), static_cast<int>(rep.euler)}),
            true);
    }

    // 4. M120p mesh, trinity, radii
    {
        auto rep = mesh_integrity(m120);
        bool trinity = true;
        for (const auto& f : m120.faces) {
            std::set<VertexType> ts;
            for (int v : f) ts.insert(*m120.types[v]);
            if (ts.size() != 3) trinity = false;
        }
        Golden phi = Golden::phi();
        Golden p4 = gf_pow(phi, 4);
        bool radii = m120.exact_radius2.at(VertexType::A) == 3 * p4 &&
                     m120.exact_radius2.at(VertexType::C) == p4 * (Golden(1) + phi * phi) &&
                     m120.exact_radius2.at(VertexType::B) == 4 * p4;
        double ra = std::sqrt(m120.exact_radius2.at(VertexType::A).to_double());
        double rc = std::sqrt(m120.exact_radius2.at(VertexType::C).to_double());
        double rb = std::sqrt(m120.exact_radius2.at(VertexType::B).to_double());
        bool floats = std::abs(ra - 4.535) < 5e-4 && std::abs(rc - 4.980) < 5e-4 &&
                      std::abs(rb - 5.236) < 5e-4;
        bool ok = rep.v == 62 && rep.e == 180 && rep.f == 120 && rep.euler == 2 &&
                  rep.ok() && trinity && radii && floats;
        add(4, "M120p 62/180/120, trinity, radii 4.535/4.980/5.236", ok,
            "62 180 120 chi=2 trinity",
            ints({static_cast<int>(rep.v), static_cast<int>(rep.e),
                  static_cast<int>(rep.f), static_cast<int>(rep.euler)}) +
                (trinity ? " trinity" : " broken"),
            true);
    }

    // 5. 62/62 lift match with remainder census
    {
        auto rep = verify_62_match(m120, g2i);
        bool ok = rep.matched_total == 62 && rep.count_a == 20 && rep.count_b == 30 &&
                  rep.count_c == 12 && rep.type_labels_agree && rep.remainder_poles == 2 &&
                  rep.remainder_missing12 == 24 && rep.remainder_mirror == 32;
        add(5, "62/62 lift into 2I, remainder 2+24+32", ok, "62 ; 2 24 32",
            std::to_string(rep.matched_total) + " ; " +
                ints({rep.remainder_poles, rep.remainder_missing12, rep.remainder_mirror}),
            true);
    }

    // 6. shell decomposition with exact radii and reciprocal products
    {
        auto shells = shell_decompose(g2i);
        std::vector<int> counts;
        for (const auto& s : shells) counts.push_back(static_cast<int>(s.members.size()));
        bool radii = shells[1].radius_sq == Golden(Rat(3), Rat(4)).inverse() &&
                     shells[2].radius_sq == Golden(Rat(1, 3)) &&
                     shells[3].radius_sq == Golden(7, -4) &&
                     shells[4].radius_sq == Golden(1) &&
                     shells[5].radius_sq == Golden(7, -4).inverse() &&
                     shells[6].radius_sq == Golden(3) &&
                     shells[7].radius_sq == Golden(3, 4);
        const double want[8] = {0.0, 0.3249, 0.5774, 0.7265, 1.0, 1.3764, 1.7321, 3.0777};
        bool floats = true;
        for (int i = 1; i <= 7; ++i)
            if (std::abs(std::sqrt(shells[i].radius_sq.to_double()) - want[i]) > 5e-4)
                floats = false;
        bool purity = !shells[0].type && !shells[8].type;
        const VertexType seq[7] = {VertexType::C, VertexType::A, VertexType::C,
                                   VertexType::B, VertexType::C, VertexType::A,
                                   VertexType::C};
        for (int i = 1; i <= 7; ++i)
            if (!shells[i].type || *shells[i].type != seq[i - 1]) purity = false;
        bool ok = counts == std::vector<int>{1, 12, 20, 12, 30, 12, 20, 12, 1} && radii &&
                  floats && purity && reciprocal_pair_check(g2i);
        add(6, "shells (1,12,20,12,30,12,20,12,1), exact radii, reciprocity", ok,
            "1 12 20 12 30 12 20 12 1", ints(counts), true);
    }

    // 7. angular alignment with multiplicities
    {
        auto rep = angular_alignment_check(m120, g2i);
        bool ok = rep.total == 118 && rep.aligned == 118 && rep.multiplicities_ok;
        add(7, "118/118 aligned, multiplicities B:1 A:2 C:4", ok, "118/118",
            std::to_string(rep.aligned) + "/" + std::to_string(rep.total), true);
    }

    // 8. inner icosahedron ratio
    {
        auto rep = inner_icosahedron_check(m120, g2i);
        bool ok = rep.pairs_aligned == 12 && rep.directions_are_phi_cyclic &&
                  rep.drop_w_ratio_sq == Golden(2, -1);
        add(8, "inner icosahedron 12/12, squared ratio 1/phi^2", ok, "12, 2-phi",
            std::to_string(rep.pairs_aligned) + ", " + rep.drop_w_ratio_sq.to_exact_string(),
            true);
    }

    // 9. phi ladder
    add(9, "phi-ladder identities", phi_ladder_check(), "exact", "exact", true);

    // 10. face orbit -- the published float radius is recorded as-is;
    // the exact value sqrt((88 phi + 55)/9) = 4.68315... misses 4.6950.
    {
        auto rep = face_orbit_bijection(m120, g2i);
        double r = std::sqrt(rep.centroid_radius_sq9.to_double()) / 3.0;
        bool ok = rep.single_orbit && rep.stabilizer_trivial && rep.common_radius &&
                  rep.face_of_symmetry.size() == 120 && std::abs(r - 4.6950) < 1e-4;
        add(10, "face orbit 120, centroid radius 4.6950", ok, "single orbit, 4.6950",
            std::string(rep.single_orbit ? "single orbit, " : "multiple orbits, ") +
                fmt_fixed(r),
            false);
    }

    // 11. 24-cell strata
    {
        auto rep = cell24_shell_check(g2t);
        bool ok = rep.counts == std::array<int, 5>{1, 8, 6, 8, 1} && rep.radii_ok &&
                  rep.middle_is_axes;
        add(11, "24-cell strata (1,8,6,8,1), middle = axes", ok, "1 8 6 8 1",
            ints({rep.counts[0], rep.counts[1], rep.counts[2], rep.counts[3],
                  rep.counts[4]}),
            true);
    }

    // 12. non-inclusion of 2O in 2I
    {
        auto rep = subgroup_obstruction_2O_in_2I();
        bool ok = !rep.divides && rep.order8_in_2O && !rep.order8_in_2I;
        add(12, "2O not a subgroup of 2I (Lagrange + order 8)", ok,
            "120 mod 48 != 0, order-8 only in 2O",
            std::string(rep.divides ? "divides" : "no divide") +
                (rep.order8_in_2O ? ", 2O has order 8" : "") +
                (rep.order8_in_2I ? ", 2I has order 8" : ", 2I has none"),
            true);
    }

    // 13. McKay correspondence
    {
        auto m6 = mckay_for_group(g2t, seed);
        auto m7 = mckay_for_group(g2o, seed);
        auto m8 = mckay_for_group(g2i, seed);
        bool kernel = true;
        for (const auto* m : {&m6, &m7, &m8}) {
            int n = static_cast<int>(m->adjacency.size());
            for (int i = 0; i < n; ++i) {
                int s = 0;
                for (int j = 0; j < n; ++j) s += m->adjacency[i][j] * m->dims[j];
                if (s != 2 * m->dims[i]) kernel = false;
            }
        }
        bool ok = m6.adjacency.size() == 7 && m7.adjacency.size() == 8 &&
                  m8.adjacency.size() == 9 && m6.ade_label == "E6~" &&
                  m7.ade_label == "E7~" && m8.ade_label == "E8~" && kernel &&
                  m6.max_integrality_residual < 1e-6 &&
                  m7.max_integrality_residual < 1e-6 && m8.max_integrality_residual < 1e-6;
        add(13, "McKay graphs E6~/E7~/E8~, dims in ker(2I - A)", ok, "E6~ E7~ E8~",
            m6.ade_label + " " + m7.ade_label + " " + m8.ade_label, false);
    }

    // 14. knot congruence, torus residuals, windings
    {
        auto cong = congruence_check({3, 2}, {2, 3}, samples);
        auto res_mer = projected_torus_residual({3, 2}, samples);
        auto res_std = projected_torus_residual({2, 3}, samples);
        auto w_mer = winding_numbers({3, 2}, samples);
        auto w_std = winding_numbers({2, 3}, samples);
        bool ok = cong.congruent && res_mer.on_torus && res_std.on_torus &&
                  w_mer.toroidal == 3 && w_mer.poloidal == 2 && w_std.toroidal == 2 &&
                  w_std.poloidal == 3 && w_mer.well_sampled && w_std.well_sampled;
        add(14, "trefoil congruence <= 1e-12, windings (3,2)/(2,3)", ok,
            "congruent, (3,2) (2,3)",
            fmt_float(cong.max_deviation, 3) + ", (" + std::to_string(w_mer.toroidal) +
                "," + std::to_string(w_mer.poloidal) + ") (" +
                std::to_string(w_std.toroidal) + "," + std::to_string(w_std.poloidal) + ")",
            false);
    }

    // 15. ratio triples and hull-interior sets; the reference solid keeps its
    // 20 three-fold vertices strictly inside the hull at the stated radii.
    {
        auto rm = radius_ratio_report(m120);
        auto rd = radius_ratio_report(dt);
        bool ratios = std::abs(rm.r2 - 1.098) < 1e-3 && std::abs(rm.r3 - 1.155) < 1e-3 &&
                      std::abs(rd.r2 - 1.618) < 1e-3 && std::abs(rd.r3 - 1.777) < 1e-3;
        auto hm = convex_hull(m120.vertices);
        bool m_interior = hm.interior_vertices.size() == 20;
        for (int i : hm.interior_vertices)
            if (*m120.types[i] != VertexType::A) m_interior = false;
        auto hd = convex_hull(dt.vertices);
        bool d_interior = hd.interior_vertices.empty();
        bool ok = ratios && m_interior && d_interior;
        add(15, "ratio triples, hull interiors (M120p: 20 A, reference: empty)", ok,
            "1.098 1.155 / 1.618 1.777, 20 / 0",
            fmt_fixed(rm.r2, 3) + " " + fmt_fixed(rm.r3, 3) + " / " + fmt_fixed(rd.r2, 3) +
                " " + fmt_fixed(rd.r3, 3) + ", " +
                std::to_string(hm.interior_vertices.size()) + " / " +
                std::to_string(hd.interior_vertices.size()),
            false);
    }

    return out;
}

}  // namespace mereon
