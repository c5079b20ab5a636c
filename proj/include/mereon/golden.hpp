#pragma once

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace mereon {

using Rat = mpq_class;
using Int = mpz_class;

// Exact square root of a nonnegative rational, if one exists.
inline std::optional<Rat> rat_sqrt(const Rat& x) {
    if (sgn(x) < 0) return std::nullopt;
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(rn, rd);
}

// Element a + b*phi of Q(sqrt(5)) in the basis {1, phi}, phi^2 = phi + 1.
struct Golden {
    Rat a;
    Rat b;

    Golden() : a(0), b(0) {}
    Golden(long v) : a(v), b(0) {}          // NOLINT: implicit by design
    Golden(const Rat& v) : a(v), b(0) {}    // NOLINT
    Golden(Rat av, Rat bv) : a(std::move(av)), b(std::move(bv)) {
        a.canonicalize();
        b.canonicalize();
    }

    static Golden phi() { return Golden(Rat(0), Rat(1)); }

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return sgn(b) == 0; }

    Golden operator+(const Golden& o) const { return Golden(a + o.a, b + o.b); }
    Golden operator-(const Golden& o) const { return Golden(a - o.a, b - o.b); }
    Golden operator-() const { return Golden(-a, -b); }
    Golden operator*(const Golden& o) const {
        // (a1 + b1 phi)(a2 + b2 phi) = a1 a2 + b1 b2 + (a1 b2 + a2 b1 + b1 b2) phi
        return Golden(a * o.a + b * o.b, a * o.b + o.a * b + b * o.b);
    }
    Golden& operator+=(const Golden& o) { a += o.a; b += o.b; return *this; }
    Golden& operator-=(const Golden& o) { a -= o.a; b -= o.b; return *this; }
    Golden& operator*=(const Golden& o) { *this = *this * o; return *this; }

    // Galois conjugate: phi -> 1 - phi.
    Golden conj() const { return Golden(a + b, -b); }

    // Field norm x * conj(x), always rational.
    Rat norm() const { return a * a + a * b - b * b; }

    Golden inverse() const {
        if (is_zero()) throw std::domain_error("Golden::inverse: division by zero");
        Golden c = conj();
        Rat n = norm();
        return Golden(c.a / n, c.b / n);
    }
    Golden operator/(const Golden& o) const { return *this * o.inverse(); }

    // Exact sign of the real embedding a + b(1+sqrt5)/2.
    // Write the value as (u + v*sqrt5)/2 with u = 2a + b, v = b.
    int sign() const {
        Rat u = 2 * a + b;
        const Rat& v = b;
        int su = sgn(u), sv = sgn(v);
        if (su == 0 && sv == 0) return 0;
        if (su >= 0 && sv >= 0) return 1;
        if (su <= 0 && sv <= 0) return -1;
        // Mixed signs: compare u^2 with 5 v^2 (equality impossible for v != 0).
        int c = cmp(u * u, 5 * v * v);
        if (su > 0) return c > 0 ? 1 : -1;  // sv < 0
        return c > 0 ? -1 : 1;              // su < 0, sv > 0
    }

    bool operator==(const Golden& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Golden& o) const { return !(*this == o); }
    bool operator<(const Golden& o) const { return (*this - o).sign() < 0; }
    bool operator>(const Golden& o) const { return o < *this; }
    bool operator<=(const Golden& o) const { return !(o < *this); }
    bool operator>=(const Golden& o) const { return !(*this < o); }

    double to_double() const {
        static const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
        return a.get_d() + b.get_d() * kPhi;
    }

    // "p/q + (r/s)*phi"
    std::string to_exact_string() const {
        return a.get_str() + " + (" + b.get_str() + ")*phi";
    }

    std::string to_string() const {
        if (sgn(b) == 0) return a.get_str();
        if (sgn(a) == 0) return "(" + b.get_str() + ")*phi";
        return to_exact_string();
    }
};

inline Golden operator*(const Rat& r, const Golden& g) { return Golden(r * g.a, r * g.b); }
inline Golden operator*(long r, const Golden& g) { return Golden(r * g.a, r * g.b); }

inline int gf_sign(const Golden& x) { return x.sign(); }
inline Golden gf_mul(const Golden& x, const Golden& y) { return x * y; }
inline Golden gf_inverse(const Golden& x) { return x.inverse(); }
inline double gf_to_float(const Golden& x) { return x.to_double(); }

inline Golden gf_pow(Golden base, long e) {
    if (e < 0) return gf_pow(base.inverse(), -e);
    Golden r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Nonnegative c + d*phi with (c + d*phi)^2 == x, if one exists in the field.
// (c + d phi)^2 = (c^2 + d^2) + (2cd + d^2) phi, so with u = d^2:
//   5u^2 - (4a + 2b)u + b^2 = 0,  c = (b - u) / (2d)  for d != 0.
inline std::optional<Golden> gf_sqrt_in_field(const Golden& x) {
    if (x.sign() < 0) throw std::domain_error("gf_sqrt_in_field: negative input");
    if (x.is_zero()) return Golden(0);

    auto check = [&x](const Golden& r) -> std::optional<Golden> {
        Golden cand = r.sign() >= 0 ? r : -r;
        if (cand * cand == x) return cand;
        return std::nullopt;
    };

    if (x.is_rational()) {
        if (auto r = rat_sqrt(x.a)) return check(Golden(*r));
        // d != 0 branch with b = 0: u = 4a/5, c = -d/2.
        if (auto d = rat_sqrt(Rat(4) * x.a / 5)) {
            if (auto r = check(Golden(-*d / 2, *d))) return r;
            if (auto r = check(Golden(*d / 2, -*d))) return r;
        }
        return std::nullopt;
    }

    Rat p = 4 * x.a + 2 * x.b;  // sum coefficient, quadratic 5u^2 - p u + b^2
    Rat disc = p * p - 20 * x.b * x.b;
    auto sd = rat_sqrt(disc);
    if (!sd) return std::nullopt;
    for (int pm : {+1, -1}) {
        Rat u = (p + pm * *sd) / 10;
        auto d = rat_sqrt(u);
        if (!d || sgn(*d) == 0) continue;
        Rat c = (x.b - u) / (2 * *d);
        if (auto r = check(Golden(c, *d))) return r;
    }
    return std::nullopt;
}

}  // namespace mereon
