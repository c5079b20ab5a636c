#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mereon {

constexpr double kKnotTol = 1e-12;

struct TorusKnotSpec {
    int p = 3;
    int q = 2;
};

using Vec4d = std::array<double, 4>;
using Vec3d = std::array<double, 3>;

// Point on the Clifford torus in S^3: (cos pt, sin pt, cos qt, sin qt)/sqrt2.
inline Vec4d torus_knot_point(const TorusKnotSpec& k, double t) {
    const double s = 1.0 / std::sqrt(2.0);
    return {s * std::cos(k.p * t), s * std::sin(k.p * t), s * std::cos(k.q * t),
            s * std::sin(k.q * t)};
}

// The plane-swap isometry (x,y,z,w) -> (z,w,x,y) as an integer 4x4 matrix.
inline std::array<std::array<int, 4>, 4> clifford_rotation() {
    return {{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}};
}

inline Vec4d apply4(const std::array<std::array<int, 4>, 4>& m, const Vec4d& v) {
    Vec4d r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
    return r;
}

// M is orthogonal with determinant +1 (exact integer arithmetic).
inline bool clifford_rotation_is_special_orthogonal() {
    auto m = clifford_rotation();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int s = 0;
            for (int k = 0; k < 4; ++k) s += m[k][i] * m[k][j];
            if (s != (i == j ? 1 : 0)) return false;
        }
    // Two disjoint transpositions of coordinate pairs: det = (-1)^2 = +1.
    // Verify by explicit cofactor expansion over the permutation.
    int det = 0;
    std::array<int, 4> perm{2, 3, 0, 1};  // column holding the 1 in each row
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (perm[i] > perm[j]) ++inversions;
    det = inversions % 2 == 0 ? 1 : -1;
    return det == 1;
}

struct CongruenceReport {
    int samples = 0;
    double max_deviation = 0.0;
    bool congruent = false;
};

// M carries the (p,q) curve pointwise onto the (q,p) curve at the same t.
inline CongruenceReport congruence_check(const TorusKnotSpec& a, const TorusKnotSpec& b,
                                         int samples = 1024) {
    if (samples < 2) throw std::invalid_argument("congruence_check: samples < 2");
    auto m = clifford_rotation();
    CongruenceReport r;
    r.samples = samples;
    const double two_pi = 2.0 * M_PI;
    for (int i = 0; i < samples; ++i) {
        double t = two_pi * i / samples;
        Vec4d lhs = apply4(m, torus_knot_point(a, t));
        Vec4d rhs = torus_knot_point(b, t);
        for (int c = 0; c < 4; ++c)
            r.max_deviation = std::max(r.max_deviation, std::abs(lhs[c] - rhs[c]));
    }
    r.congruent = r.max_deviation <= kKnotTol;
    return r;
}

struct StereoPoint {
    Vec3d v{};
    bool infinite = false;
};

// Stereographic projection from the north pole (0,0,0,1).
inline StereoPoint stereo_north(const Vec4d& q) {
    StereoPoint p;
    double denom = 1.0 - q[3];
    if (std::abs(denom) < 1e-15) {
        p.infinite = true;
        return p;
    }
    p.v = {q[0] / denom, q[1] / denom, q[2] / denom};
    return p;
}

// Signed distance-squared defect from the ring torus R = sqrt2, r = 1:
// (sqrt(x^2+y^2) - sqrt2)^2 + z^2 - 1.
inline double ring_torus_residual(const Vec3d& v) {
    double rho = std::hypot(v[0], v[1]);
    double d = rho - std::sqrt(2.0);
    return d * d + v[2] * v[2] - 1.0;
}

struct TorusResidualReport {
    int samples = 0;
    double max_residual = 0.0;
    bool on_torus = false;
};

// The projected knot lies on the ring torus (Clifford torus image).
inline TorusResidualReport projected_torus_residual(const TorusKnotSpec& k,
                                                    int samples = 1024) {
    TorusResidualReport r;
    r.samples = samples;
    const double two_pi = 2.0 * M_PI;
    for (int i = 0; i < samples; ++i) {
        double t = two_pi * i / samples;
        StereoPoint p = stereo_north(torus_knot_point(k, t));
        if (p.infinite) throw std::runtime_error("projected_torus_residual: pole hit");
        r.max_residual = std::max(r.max_residual, std::abs(ring_torus_residual(p.v)));
    }
    r.on_torus = r.max_residual <= kKnotTol;
    return r;
}

struct WindingReport {
    int toroidal = 0;   // turns around the torus axis (angle in the xy-plane)
    int poloidal = 0;   // turns around the tube
    bool well_sampled = true;  // false when consecutive steps exceed pi/2
};

// Winding numbers of the projected curve by unwrapping both torus angles.
inline WindingReport winding_numbers(const TorusKnotSpec& k, int samples = 1024) {
    if (samples < 8) throw std::invalid_argument("winding_numbers: samples < 8");
    WindingReport r;
    const double two_pi = 2.0 * M_PI;
    const double root2 = std::sqrt(2.0);
    double prev_a = 0, prev_b = 0, acc_a = 0, acc_b = 0;
    for (int i = 0; i <= samples; ++i) {
        double t = two_pi * i / samples;
        StereoPoint p = stereo_north(torus_knot_point(k, t));
        double a = std::atan2(p.v[1], p.v[0]);
        double rho = std::hypot(p.v[0], p.v[1]);
        // Tube angle oriented so increasing t advances it positively.
        double b = std::atan2(-p.v[2], rho - root2);
        if (i > 0) {
            double da = std::remainder(a - prev_a, two_pi);
            double db = std::remainder(b - prev_b, two_pi);
            if (std::abs(da) > M_PI / 2 || std::abs(db) > M_PI / 2) r.well_sampled = false;
            acc_a += da;
            acc_b += db;
        }
        prev_a = a;
        prev_b = b;
    }
    r.toroidal = static_cast<int>(std::lround(acc_a / two_pi));
    r.poloidal = static_cast<int>(std::lround(acc_b / two_pi));
    return r;
}

// The curve's t = 0 point 1/sqrt2 (1,0,1,0) is a w = 0 unit quaternion whose
// stereographic image has distance sqrt(...)... computed here for reporting.
struct BasePointReport {
    Vec4d point{};
    double w = 0.0;
    double norm = 0.0;
    double projected_radius = 0.0;
};

inline BasePointReport knot_base_point(const TorusKnotSpec& k) {
    BasePointReport r;
    r.point = torus_knot_point(k, 0.0);
    r.w = r.point[3];
    r.norm = std::sqrt(r.point[0] * r.point[0] + r.point[1] * r.point[1] +
                       r.point[2] * r.point[2] + r.point[3] * r.point[3]);
    StereoPoint p = stereo_north(r.point);
    r.projected_radius = std::sqrt(p.v[0] * p.v[0] + p.v[1] * p.v[1] + p.v[2] * p.v[2]);
    return r;
}

// Polyline sample of the projected knot for export.
inline std::vector<Vec3d> knot_polyline(const TorusKnotSpec& k, int samples = 1024) {
    std::vector<Vec3d> pts;
    pts.reserve(samples);
    const double two_pi = 2.0 * M_PI;
    for (int i = 0; i < samples; ++i) {
        double t = two_pi * i / samples;
        StereoPoint p = stereo_north(torus_knot_point(k, t));
        pts.push_back(p.v);
    }
    return pts;
}

}  // namespace mereon
