#pragma once

#include <array>
#include <string>

#include "mereon/golden.hpp"

namespace mereon {

template <typename T>
struct Vec3T {
    T x, y, z;

    Vec3T() : x(0), y(0), z(0) {}
    Vec3T(T xv, T yv, T zv) : x(std::move(xv)), y(std::move(yv)), z(std::move(zv)) {}

    Vec3T operator+(const Vec3T& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3T operator-(const Vec3T& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3T operator-() const { return {-x, -y, -z}; }
    Vec3T operator*(const T& s) const { return {x * s, y * s, z * s}; }

    T dot(const Vec3T& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3T cross(const Vec3T& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    T norm2() const { return dot(*this); }
    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

    bool operator==(const Vec3T& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const Vec3T& o) const { return !(*this == o); }
    bool operator<(const Vec3T& o) const {
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        return z < o.z;
    }
};

using GVec3 = Vec3T<Golden>;

// True when a and b point along the same ray (cross = 0, dot > 0).
inline bool same_ray(const GVec3& a, const GVec3& b) {
    return a.cross(b).is_zero() && a.dot(b).sign() > 0;
}

// True when a and b span the same line.
inline bool parallel(const GVec3& a, const GVec3& b) {
    return a.cross(b).is_zero();
}

}  // namespace mereon
