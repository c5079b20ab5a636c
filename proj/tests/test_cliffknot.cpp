#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mereon/cliffknot.hpp"

using namespace mereon;

TEST_CASE("torus knot points live on the Clifford torus in S^3") {
    TorusKnotSpec mer{3, 2};
    for (int i = 0; i < 257; ++i) {
        double t = 2.0 * M_PI * i / 257;
        Vec4d p = torus_knot_point(mer, t);
        double n2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
        CHECK(n2 == doctest::Approx(1.0).epsilon(1e-14));
        // Both plane radii are 1/sqrt2.
        CHECK(p[0] * p[0] + p[1] * p[1] == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(p[2] * p[2] + p[3] * p[3] == doctest::Approx(0.5).epsilon(1e-14));
    }
}

TEST_CASE("plane-swap rotation is special orthogonal") {
    CHECK(clifford_rotation_is_special_orthogonal());
    auto m = clifford_rotation();
    Vec4d v{1, 2, 3, 4};
    Vec4d w = apply4(m, v);
    CHECK(w == Vec4d{3, 4, 1, 2});
}

TEST_CASE("congruence of the (3,2) and (2,3) curves") {
    auto rep = congruence_check({3, 2}, {2, 3});
    CHECK(rep.congruent);
    CHECK(rep.max_deviation <= 1e-12);
    CHECK(rep.samples == 1024);
    // Sanity: the map does not fix the (3,2) curve itself.
    auto neg = congruence_check({3, 2}, {3, 2});
    CHECK(!neg.congruent);
}

TEST_CASE("stereographic projection onto the ring torus") {
    CHECK(stereo_north({0, 0, 0, 1}).infinite);
    auto p = stereo_north({1, 0, 0, 0});
    CHECK(!p.infinite);
    CHECK(p.v == Vec3d{1, 0, 0});

    for (auto spec : {TorusKnotSpec{3, 2}, TorusKnotSpec{2, 3}}) {
        auto rep = projected_torus_residual(spec);
        CHECK(rep.on_torus);
        CHECK(rep.max_residual <= 1e-12);
    }
}

TEST_CASE("winding numbers distinguish the two projections") {
    auto w_mer = winding_numbers({3, 2});
    CHECK(w_mer.toroidal == 3);
    CHECK(w_mer.poloidal == 2);
    CHECK(w_mer.well_sampled);

    auto w_std = winding_numbers({2, 3});
    CHECK(w_std.toroidal == 2);
    CHECK(w_std.poloidal == 3);
    CHECK(w_std.well_sampled);

    // Severe undersampling raises the flag.
    auto coarse = winding_numbers({3, 2}, 8);
    CHECK(!coarse.well_sampled);
}

TEST_CASE("base point is an equatorial unit quaternion") {
    auto rep = knot_base_point({3, 2});
    CHECK(rep.w == 0.0);
    CHECK(rep.norm == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rep.projected_radius == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("polyline export sampling") {
    auto pts = knot_polyline({3, 2}, 256);
    CHECK(pts.size() == 256);
    for (const auto& v : pts) CHECK(std::abs(ring_torus_residual(v)) <= 1e-12);
}
