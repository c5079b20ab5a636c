#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "mereon/convex_hull.hpp"
#include "mereon/polytopes.hpp"

using namespace mereon;

TEST_CASE("m144p construction") {
    Polyhedron p = m144p_construct();
    auto rep = mesh_integrity(p);
    CHECK(rep.v == 74);
    CHECK(rep.e == 216);
    CHECK(rep.f == 144);
    CHECK(rep.euler == 2);
    CHECK(rep.manifold);
    CHECK(rep.oriented);
    CHECK(rep.duplicate_free);
    CHECK(rep.ok());

    // Shell census: 12 @ r^2=8, 48 @ 14, 8 @ 12, 6 @ 16.
    std::map<Golden, int> census;
    for (const auto& v : p.vertices) ++census[v.norm2()];
    CHECK(census[Golden(8)] == 12);
    CHECK(census[Golden(14)] == 48);
    CHECK(census[Golden(12)] == 8);
    CHECK(census[Golden(16)] == 6);
    CHECK(census.size() == 4);

    // Vertex set equals the embedded 74-triple table.
    std::set<GVec3> actual(p.vertices.begin(), p.vertices.end());
    std::set<GVec3> expected;
    for (const auto& t : kM144pVertices)
        expected.insert({Golden(t[0]), Golden(t[1]), Golden(t[2])});
    CHECK(actual == expected);
}

TEST_CASE("m120p construction") {
    Polyhedron p = m120p_construct();
    auto rep = mesh_integrity(p);
    CHECK(rep.v == 62);
    CHECK(rep.e == 180);
    CHECK(rep.f == 120);
    CHECK(rep.euler == 2);
    CHECK(rep.manifold);
    CHECK(rep.oriented);
    CHECK(rep.ok());

    int na = 0, nb = 0, nc = 0;
    for (const auto& t : p.types) {
        REQUIRE(t.has_value());
        if (*t == VertexType::A) ++na;
        if (*t == VertexType::B) ++nb;
        if (*t == VertexType::C) ++nc;
    }
    CHECK(na == 20);
    CHECK(nb == 30);
    CHECK(nc == 12);

    // Exact squared radii 3phi^4, phi^4(1+phi^2), 4phi^4 and their floats.
    Golden phi = Golden::phi();
    Golden p4 = gf_pow(phi, 4);
    CHECK(p.exact_radius2.at(VertexType::A) == 3 * p4);
    CHECK(p.exact_radius2.at(VertexType::C) == p4 * (Golden(1) + phi * phi));
    CHECK(p.exact_radius2.at(VertexType::B) == 4 * p4);
    CHECK(std::sqrt(p.exact_radius2.at(VertexType::A).to_double()) ==
          doctest::Approx(4.535).epsilon(5e-4));
    CHECK(std::sqrt(p.exact_radius2.at(VertexType::C).to_double()) ==
          doctest::Approx(4.980).epsilon(5e-4));
    CHECK(std::sqrt(p.exact_radius2.at(VertexType::B).to_double()) ==
          doctest::Approx(5.236).epsilon(5e-4));

    // Trinity property: each face has exactly one vertex of each type.
    for (const auto& f : p.faces) {
        std::set<VertexType> ts;
        for (int v : f) ts.insert(*p.types[v]);
        CHECK(ts.size() == 3);
    }

    // Edge type census: 60 each of A-B, B-C, A-C.
    std::map<std::pair<int, int>, int> etypes;
    for (const auto& e : p.edges()) {
        int ta = static_cast<int>(*p.types[e[0]]);
        int tb = static_cast<int>(*p.types[e[1]]);
        ++etypes[{std::min(ta, tb), std::max(ta, tb)}];
    }
    for (const auto& [k, v] : etypes) CHECK(v == 60);
    CHECK(etypes.size() == 3);
}

TEST_CASE("disdyakis construction") {
    Polyhedron dt = disdyakis_construct();
    auto rep = mesh_integrity(dt);
    CHECK(rep.v == 62);
    CHECK(rep.f == 120);
    CHECK(rep.manifold);

    Golden phi = Golden::phi();
    CHECK(dt.exact_radius2.at(VertexType::A) == Golden(3));
    CHECK(dt.exact_radius2.at(VertexType::C) == Golden(1) + gf_pow(phi, 4));
    CHECK(dt.exact_radius2.at(VertexType::B) ==
          phi * phi * (Golden(1) + phi * phi));

    // Same 62 axis directions as the M120p (as rays).
    Polyhedron m = m120p_construct();
    for (size_t i = 0; i < dt.vertices.size(); ++i) {
        bool found = false;
        for (size_t j = 0; j < m.vertices.size(); ++j) {
            if (same_ray(dt.vertices[i], m.vertices[j])) {
                CHECK(*dt.types[i] == *m.types[j]);
                found = true;
                break;
            }
        }
        CHECK(found);
    }

    // Approximate coordinates reproduce the exact squared radii to ~70 digits
    // (compared exactly in the field; doubles would round away the margin).
    Int pow60;
    mpz_ui_pow_ui(pow60.get_mpz_t(), 10, 60);
    Golden eps{Rat(Int(1), pow60), Rat(0)};
    for (size_t i = 0; i < dt.vertices.size(); ++i) {
        Golden diff = dt.vertices[i].norm2() - dt.exact_radius2.at(*dt.types[i]);
        if (diff.sign() < 0) diff = -diff;
        CHECK(diff < eps);
    }
}

TEST_CASE("radius ratio reports") {
    auto m = radius_ratio_report(m120p_construct());
    CHECK(m.r2 == doctest::Approx(1.098).epsilon(1e-3));
    CHECK(m.r3 == doctest::Approx(1.155).epsilon(1e-3));
    auto d = radius_ratio_report(disdyakis_construct());
    CHECK(d.r2 == doctest::Approx(1.618).epsilon(1e-3));
    CHECK(d.r3 == doctest::Approx(1.777).epsilon(1e-3));
    // Single-shell solid: cube.
    Polyhedron cube;
    cube.name = "cube";
    for (int m8 = 0; m8 < 8; ++m8)
        cube.vertices.push_back({Golden(m8 & 1 ? 1 : -1), Golden(m8 & 2 ? 1 : -1),
                                 Golden(m8 & 4 ? 1 : -1)});
    auto c = radius_ratio_report(cube);
    CHECK(c.r1 == 1.0);
    CHECK(c.r2 == 1.0);
    CHECK(c.r3 == 1.0);
}

TEST_CASE("convex hull") {
    // Regular tetrahedron plus centroid.
    std::vector<GVec3> tet = {{Golden(1), Golden(1), Golden(1)},
                              {Golden(1), Golden(-1), Golden(-1)},
                              {Golden(-1), Golden(1), Golden(-1)},
                              {Golden(-1), Golden(-1), Golden(1)},
                              {Golden(0), Golden(0), Golden(0)}};
    auto h = convex_hull(tet);
    CHECK(h.hull_vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(h.interior_vertices == std::vector<int>{4});
    CHECK(h.facets.size() == 4);

    // Degenerate input signals.
    std::vector<GVec3> plane = {{Golden(0), Golden(0), Golden(0)},
                                {Golden(1), Golden(0), Golden(0)},
                                {Golden(0), Golden(1), Golden(0)},
                                {Golden(1), Golden(1), Golden(0)}};
    CHECK_THROWS_AS(convex_hull(plane), std::invalid_argument);

    // M120p: interior = exactly the 20 Type A vertices.
    Polyhedron m = m120p_construct();
    auto hm = convex_hull(m.vertices);
    CHECK(hm.hull_vertices.size() == 42);
    CHECK(hm.interior_vertices.size() == 20);
    for (int i : hm.interior_vertices) CHECK(*m.types[i] == VertexType::A);

    // M144p: the 12 edge-midpoint vertices (r^2 = 8) sit strictly inside the
    // hull of the other 62 (cut off by the x+y = 5 planes).
    Polyhedron core = m144p_construct();
    auto hc = convex_hull(core.vertices);
    CHECK(hc.hull_vertices.size() == 62);
    CHECK(hc.interior_vertices.size() == 12);
    for (int i : hc.interior_vertices) CHECK(core.vertices[i].norm2() == Golden(8));
}

TEST_CASE("disdyakis hull at the declared radii") {
    // At the stated radii the 20 three-fold vertices fall strictly inside the
    // hull of the other 42 -- the solid is not convex (see the acceptance
    // suite's criterion 15 notes).
    Polyhedron dt = disdyakis_construct();
    auto h = convex_hull(dt.vertices);
    CHECK(h.hull_vertices.size() == 42);
    CHECK(h.interior_vertices.size() == 20);
    for (int i : h.interior_vertices) CHECK(*dt.types[i] == VertexType::A);
}
