#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "mereon/binary_group.hpp"

using namespace mereon;

namespace {
Golden g(long a, long b) { return Golden(Rat(a), Rat(b)); }
const Rat half(1, 2);
GQuat qi() { return {Golden(0), Golden(1), Golden(0), Golden(0)}; }
GQuat qj() { return {Golden(0), Golden(0), Golden(1), Golden(0)}; }
GQuat qk() { return {Golden(0), Golden(0), Golden(0), Golden(1)}; }
GQuat half1111() {
    Golden h(half);
    return {h, h, h, h};
}
}  // namespace

TEST_CASE("q_mul") {
    CHECK(qi() * qj() == qk());
    GQuat q{g(1, 1), g(0, -2), g(3, 0), Golden(Rat(1, 2))};
    CHECK(q * GQuat::one() == q);
    Golden h(half);
    GQuat hq = half1111();
    CHECK(hq * hq == GQuat{-h, h, h, h});
}

TEST_CASE("q_rotate") {
    GVec3 e1{Golden(1), Golden(0), Golden(0)};
    GVec3 e2{Golden(0), Golden(1), Golden(0)};
    CHECK(q_rotate(GQuat::one(), e1) == e1);
    CHECK(q_rotate(qi(), e2) == GVec3{Golden(0), Golden(-1), Golden(0)});
    CHECK(q_rotate(half1111(), e1) == e2);  // 120 degrees about (1,1,1)
    // R_q = R_{-q}
    BinaryGroup gi = build_2I();
    GVec3 v{g(1, 2), g(-3, 1), g(0, 5)};
    for (int i = 0; i < 120; i += 7) {
        const GQuat& q = gi.elements[i];
        CHECK(q_rotate(q, v) == q_rotate(-q, v));
    }
}

TEST_CASE("build_2I census and closure") {
    BinaryGroup gi = build_2I();
    CHECK(gi.size() == 120);
    int fam_a = 0, fam_b = 0, fam_c = 0;
    std::map<Golden, int> wcount;
    for (const auto& q : gi.elements) {
        CHECK(q.norm2() == Golden(1));
        CHECK(gi.contains(-q));
        bool rational = q.w.is_rational() && q.x.is_rational() && q.y.is_rational() &&
                        q.z.is_rational();
        if (rational) {
            int nonzero = !q.w.is_zero() + !q.x.is_zero() + !q.y.is_zero() + !q.z.is_zero();
            if (nonzero == 1) ++fam_a; else ++fam_b;
        } else {
            ++fam_c;
        }
        Golden aw = q.w.sign() < 0 ? -q.w : q.w;
        ++wcount[aw];
    }
    CHECK(fam_a == 8);
    CHECK(fam_b == 16);
    CHECK(fam_c == 96);
    CHECK(is_closed(gi));
    // |w| multiplicities 0:30, 1/(2phi):24, 1/2:40, phi/2:24, 1:2
    CHECK(wcount[Golden(0)] == 30);
    CHECK(wcount[Golden(Rat(-1, 2), Rat(1, 2))] == 24);
    CHECK(wcount[Golden(half)] == 40);
    CHECK(wcount[half * Golden::phi()] == 24);
    CHECK(wcount[Golden(1)] == 2);
}

TEST_CASE("build_2T and build_2O") {
    BinaryGroup gt = build_2T();
    CHECK(gt.size() == 24);
    CHECK(is_closed(gt));
    BinaryGroup2O go = build_2O();
    CHECK(go.size() == 48);
    CHECK(is_closed(go));
    for (const auto& q : go.elements) CHECK(q.norm2() == Quad2(1));
    // 2T subset of 2I
    BinaryGroup gi = build_2I();
    for (const auto& q : gt.elements) CHECK(gi.contains(q));
}

TEST_CASE("closure oracle") {
    auto c4 = closure<Golden>({qi()}, 16);
    CHECK(c4.size() == 4);
    auto t = closure<Golden>({half1111(), qi()}, 64);
    CHECK(t.size() == 24);
    BinaryGroup gt = build_2T();
    CHECK(std::equal(t.begin(), t.end(), gt.elements.begin(), gt.elements.end()));
    // An order-10 golden element plus a 2T generator generate all of 2I.
    Golden h(half);
    GQuat gold{h * Golden::phi(), h * Golden::phi().inverse(), h, Golden(0)};
    auto i120 = closure<Golden>({gold, half1111()}, 200);
    CHECK(i120.size() == 120);
    BinaryGroup gi = build_2I();
    CHECK(std::equal(i120.begin(), i120.end(), gi.elements.begin(), gi.elements.end()));
}

TEST_CASE("conjugacy classes") {
    BinaryGroup gi = build_2I();
    auto ci = conjugacy_classes(gi);
    CHECK(ci.size() == 9);
    BinaryGroup gt = build_2T();
    auto ct = conjugacy_classes(gt);
    CHECK(ct.size() == 7);
    BinaryGroup2O go = build_2O();
    auto co = conjugacy_classes(go);
    CHECK(co.size() == 8);
    // class of +1 is a singleton; sizes sum to |G| and divide |G|
    for (const auto* pr : {&ci, &ct}) {
        size_t total = 0;
        for (const auto& c : *pr) total += c.size();
        CHECK(total == (pr == &ci ? 120 : 24));
    }
    int one_idx = gi.index_of(GQuat::one());
    bool found = false;
    for (const auto& c : ci)
        if (c.size() == 1 && c.front() == one_idx) found = true;
    CHECK(found);
    for (const auto& c : ci) CHECK(120 % c.size() == 0);
}

TEST_CASE("element orders and the 2O-in-2I obstruction") {
    CHECK(element_order(GQuat{Golden(-1), Golden(0), Golden(0), Golden(0)}) == 2);
    Quad2 r = Quad2::inv_sqrt2();
    CHECK(element_order(Q2Quat{r, r, Quad2(0), Quad2(0)}) == 8);
    Golden h(half);
    GQuat w72{h * Golden::phi(), h * Golden::phi().inverse(), h, Golden(0)};
    CHECK(element_order(w72) == 10);

    auto rep = subgroup_obstruction_2O_in_2I();
    CHECK(rep.order_2I == 120);
    CHECK(rep.order_2O == 48);
    CHECK(!rep.divides);  // 120/48 = 2.5
    CHECK(rep.order8_in_2O);
    CHECK(!rep.order8_in_2I);
    CHECK(rep.max_order_2I == 10);
}
