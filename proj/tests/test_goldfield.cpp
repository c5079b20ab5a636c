#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mereon/golden.hpp"
#include "mereon/quad2.hpp"

using namespace mereon;

namespace {

Golden g(long a, long b) { return Golden(Rat(a), Rat(b)); }
const Golden phi = Golden::phi();

std::mt19937 rng(12345);

Golden random_golden() {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    return Golden(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("gf_mul basics and paper identities") {
    CHECK(phi * phi == g(1, 1));                       // phi^2 = phi + 1
    CHECK(g(-1, 2) * g(-1, 2) == Golden(5));           // (2phi-1)^2 = 5
    CHECK(random_golden() * Golden(0) == Golden(0));
    CHECK(gf_pow(phi, 3) == g(1, 2));                  // phi^3 = 2phi + 1
    CHECK(g(3, 4) == gf_pow(phi, 2) * (gf_pow(phi, 2) + Golden(1)));  // 4phi+3
    CHECK(gf_pow(phi, 6) == g(5, 8));
}

TEST_CASE("gf_inverse") {
    CHECK(phi.inverse() == g(-1, 1));  // 1/phi = phi - 1
    CHECK(Golden(1).inverse() == Golden(1));
    // 1/(2phi - 1) = (-1 + 2phi)/5 since (2phi-1)^2 = 5
    CHECK(g(-1, 2).inverse() == Golden(Rat(-1, 5), Rat(2, 5)));
    // 1/(2phi + 1) = 2phi - 3
    CHECK(g(1, 2).inverse() == g(-3, 2));
    CHECK(g(1, 2) * g(1, 2).inverse() == Golden(1));
    CHECK_THROWS_AS(Golden(0).inverse(), std::domain_error);
    for (int i = 0; i < 200; ++i) {
        Golden x = random_golden();
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == Golden(1));
    }
}

TEST_CASE("gf_sign") {
    CHECK(g(2, -1).sign() == 1);   // 2 - phi > 0
    CHECK(Golden(0).sign() == 0);
    CHECK(g(1, -1).sign() == -1);  // 1 - phi < 0
    CHECK(phi.sign() == 1);
    CHECK((-phi).sign() == -1);
    for (int i = 0; i < 100000; ++i) {
        Golden x = random_golden();
        double v = x.to_double();
        if (std::abs(v) < 1e-9) continue;
        CHECK(x.sign() == (v > 0 ? 1 : -1));
    }
}

TEST_CASE("gf_sqrt_in_field") {
    auto r = gf_sqrt_in_field(g(2, -1));
    REQUIRE(r.has_value());
    CHECK(*r == g(-1, 1));  // (phi-1)^2 = 2 - phi
    r = gf_sqrt_in_field(Golden(Rat(1, 4)));
    REQUIRE(r.has_value());
    CHECK(*r == Golden(Rat(1, 2)));
    CHECK(!gf_sqrt_in_field(Golden(3)).has_value());
    CHECK(!gf_sqrt_in_field(Golden(2)).has_value());
    r = gf_sqrt_in_field(Golden(5));
    REQUIRE(r.has_value());
    CHECK(*r == g(-1, 2));  // sqrt5 = 2phi - 1
    CHECK(!gf_sqrt_in_field(g(3, 4)).has_value());  // 4phi+3 is not a square
    CHECK_THROWS_AS(gf_sqrt_in_field(g(1, -1)), std::domain_error);
    // shell-3 radius^2: (2phi-1)/(2phi+1) = 7 - 4phi has no root in the field
    CHECK(g(7, -4) == g(-1, 2) * g(1, 2).inverse());
    CHECK(!gf_sqrt_in_field(g(7, -4)).has_value());
    // property: whenever a root exists it squares back exactly and is nonnegative
    for (int i = 0; i < 300; ++i) {
        Golden x = random_golden();
        Golden sq = x * x;
        auto root = gf_sqrt_in_field(sq);
        REQUIRE(root.has_value());
        CHECK(*root * *root == sq);
        CHECK(root->sign() >= 0);
    }
}

TEST_CASE("gf_to_float") {
    CHECK(phi.to_double() == doctest::Approx(1.6180339887).epsilon(1e-10));
    CHECK((2 * phi * phi).to_double() == doctest::Approx(5.2360679).epsilon(1e-7));
    CHECK(Golden(0).to_double() == 0.0);
}

TEST_CASE("ring properties and Galois conjugation") {
    for (int i = 0; i < 200; ++i) {
        Golden x = random_golden(), y = random_golden(), z = random_golden();
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK((x * x.conj()).is_rational());
    }
    CHECK(phi.conj() == g(1, -1));
}

TEST_CASE("canonical order is the real-embedding order") {
    for (int i = 0; i < 2000; ++i) {
        Golden x = random_golden(), y = random_golden();
        if (x == y) continue;
        CHECK((x < y) == (x.to_double() < y.to_double()));
    }
}

TEST_CASE("Quad2 arithmetic") {
    Quad2 s2 = Quad2::sqrt2();
    CHECK(s2 * s2 == Quad2(2));
    CHECK(Quad2::inv_sqrt2() * s2 == Quad2(1));
    CHECK(s2.inverse() == Quad2::inv_sqrt2());
    CHECK(Quad2(Rat(1), Rat(1)).norm() == Rat(-1));
    CHECK(Quad2(Rat(1), Rat(1)).sign() == 1);
    CHECK(Quad2(Rat(1), Rat(-1)).sign() == -1);  // 1 - sqrt2 < 0
    CHECK(Quad2(Rat(3), Rat(-2)).sign() == 1);   // 3 - 2sqrt2 > 0
    CHECK(s2.to_double() == doctest::Approx(std::sqrt(2.0)));
}
