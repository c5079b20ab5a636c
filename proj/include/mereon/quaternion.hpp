#pragma once

#include "mereon/golden.hpp"
#include "mereon/quad2.hpp"
#include "mereon/vec3.hpp"

namespace mereon {

template <typename T>
struct QuatT {
    T w, x, y, z;

    QuatT() : w(0), x(0), y(0), z(0) {}
    QuatT(T wv, T xv, T yv, T zv)
        : w(std::move(wv)), x(std::move(xv)), y(std::move(yv)), z(std::move(zv)) {}

    static QuatT one() { return {T(1), T(0), T(0), T(0)}; }

    QuatT operator*(const QuatT& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }
    QuatT operator-() const { return {-w, -x, -y, -z}; }
    QuatT conj() const { return {w, -x, -y, -z}; }
    T norm2() const { return w * w + x * x + y * y + z * z; }

    bool operator==(const QuatT& o) const {
        return w == o.w && x == o.x && y == o.y && z == o.z;
    }
    bool operator!=(const QuatT& o) const { return !(*this == o); }
    // Canonical order: lexicographic on (w, x, y, z) in the real embedding.
    bool operator<(const QuatT& o) const {
        if (w != o.w) return w < o.w;
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        return z < o.z;
    }
};

using GQuat = QuatT<Golden>;
using Q2Quat = QuatT<Quad2>;

template <typename T>
QuatT<T> q_mul(const QuatT<T>& p, const QuatT<T>& q) {
    return p * q;
}

// Image of v under the SO(3) rotation R_q(v) = q v q^-1 (q unit: q^-1 = conj).
inline GVec3 q_rotate(const GQuat& q, const GVec3& v) {
    GQuat p{Golden(0), v.x, v.y, v.z};
    GQuat r = q * p * q.conj();
    return {r.x, r.y, r.z};
}

}  // namespace mereon
