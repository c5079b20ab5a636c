#pragma once

#include <cmath>
#include <stdexcept>

#include "mereon/golden.hpp"

namespace mereon {

// Element a + b*sqrt(2) of Q(sqrt(2)); carries the 2O quaternion coordinates.
struct Quad2 {
    Rat a;
    Rat b;

    Quad2() : a(0), b(0) {}
    Quad2(long v) : a(v), b(0) {}        // NOLINT: implicit by design
    Quad2(const Rat& v) : a(v), b(0) {}  // NOLINT
    Quad2(Rat av, Rat bv) : a(std::move(av)), b(std::move(bv)) {}

    static Quad2 sqrt2() { return Quad2(Rat(0), Rat(1)); }
    static Quad2 inv_sqrt2() { return Quad2(Rat(0), Rat(1, 2)); }  // 1/sqrt2 = sqrt2/2

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

    Quad2 operator+(const Quad2& o) const { return Quad2(a + o.a, b + o.b); }
    Quad2 operator-(const Quad2& o) const { return Quad2(a - o.a, b - o.b); }
    Quad2 operator-() const { return Quad2(-a, -b); }
    Quad2 operator*(const Quad2& o) const {
        return Quad2(a * o.a + 2 * b * o.b, a * o.b + b * o.a);
    }
    Quad2& operator*=(const Quad2& o) { *this = *this * o; return *this; }
    Quad2& operator+=(const Quad2& o) { a += o.a; b += o.b; return *this; }

    Quad2 conj() const { return Quad2(a, -b); }  // sqrt2 -> -sqrt2
    Rat norm() const { return a * a - 2 * b * b; }
    Quad2 inverse() const {
        if (is_zero()) throw std::domain_error("Quad2::inverse: division by zero");
        Rat n = norm();
        return Quad2(a / n, -b / n);
    }

    int sign() const {
        int sa = sgn(a), sb = sgn(b);
        if (sa == 0 && sb == 0) return 0;
        if (sa >= 0 && sb >= 0) return 1;
        if (sa <= 0 && sb <= 0) return -1;
        int c = cmp(a * a, 2 * b * b);
        if (sa > 0) return c > 0 ? 1 : -1;
        return c > 0 ? -1 : 1;
    }

    bool operator==(const Quad2& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Quad2& o) const { return !(*this == o); }
    bool operator<(const Quad2& o) const { return (*this - o).sign() < 0; }

    double to_double() const {
        static const double kSqrt2 = std::sqrt(2.0);
        return a.get_d() + b.get_d() * kSqrt2;
    }

    std::string to_string() const {
        if (sgn(b) == 0) return a.get_str();
        if (sgn(a) == 0) return "(" + b.get_str() + ")*sqrt2";
        return a.get_str() + " + (" + b.get_str() + ")*sqrt2";
    }
    std::string to_exact_string() const { return to_string(); }
};

}  // namespace mereon
