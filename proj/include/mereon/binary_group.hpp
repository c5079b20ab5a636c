#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mereon/quaternion.hpp"

namespace mereon {

template <typename T>
struct BinaryGroupT {
    std::vector<QuatT<T>> elements;  // canonical order
    std::string label;

    int index_of(const QuatT<T>& q) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), q);
        if (it == elements.end() || !(*it == q)) return -1;
        return static_cast<int>(it - elements.begin());
    }
    bool contains(const QuatT<T>& q) const { return index_of(q) >= 0; }
    size_t size() const { return elements.size(); }
};

using BinaryGroup = BinaryGroupT<Golden>;
using BinaryGroup2O = BinaryGroupT<Quad2>;

namespace detail {

template <typename T>
void add_signed_axes(std::vector<QuatT<T>>& out) {
    // family (a): +-1, +-i, +-j, +-k
    for (int axis = 0; axis < 4; ++axis) {
        for (int s : {+1, -1}) {
            QuatT<T> q;
            T v(s);
            (axis == 0 ? q.w : axis == 1 ? q.x : axis == 2 ? q.y : q.z) = v;
            out.push_back(q);
        }
    }
}

template <typename T>
void add_half_units(std::vector<QuatT<T>>& out) {
    // family (b): (+-1 +-i +-j +-k)/2
    T half(Rat(1, 2));
    for (int m = 0; m < 16; ++m) {
        auto sg = [&](int bit) { return (m >> bit) & 1 ? -half : half; };
        out.push_back({sg(0), sg(1), sg(2), sg(3)});
    }
}

inline bool perm_even(const std::array<int, 4>& p) {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0;
}

}  // namespace detail

// The binary tetrahedral group: families (a) and (b), 24 elements.
inline BinaryGroup build_2T() {
    BinaryGroup g;
    g.label = "2T";
    detail::add_signed_axes<Golden>(g.elements);
    detail::add_half_units<Golden>(g.elements);
    std::sort(g.elements.begin(), g.elements.end());
    if (g.elements.size() != 24) throw std::logic_error("build_2T: count != 24");
    return g;
}

// The binary icosahedral group: families (a), (b) and the 96 golden
// elements 1/2(0, +-1, +-1/phi, +-phi) under even permutations of the
// four slots.  Validated by closure (see tests).
inline BinaryGroup build_2I() {
    BinaryGroup g;
    g.label = "2I";
    detail::add_signed_axes<Golden>(g.elements);
    detail::add_half_units<Golden>(g.elements);

    Rat half(1, 2);
    Golden base[4] = {Golden(0), half * Golden(1), half * Golden::phi().inverse(),
                      half * Golden::phi()};
    std::array<int, 4> p{0, 1, 2, 3};
    std::set<GQuat> fam_c;
    do {
        std::array<int, 4> pi{p[0], p[1], p[2], p[3]};
        if (!detail::perm_even(pi)) continue;
        for (int m = 0; m < 8; ++m) {
            Golden v[4];
            int bit = 0;
            for (int i = 0; i < 4; ++i) {
                v[i] = base[p[i]];
                if (!v[i].is_zero()) {
                    if ((m >> bit) & 1) v[i] = -v[i];
                    ++bit;
                }
            }
            fam_c.insert(GQuat{v[0], v[1], v[2], v[3]});
        }
    } while (std::next_permutation(p.begin(), p.end()));
    if (fam_c.size() != 96) throw std::logic_error("build_2I: family (c) count != 96");
    g.elements.insert(g.elements.end(), fam_c.begin(), fam_c.end());

    std::sort(g.elements.begin(), g.elements.end());
    g.elements.erase(std::unique(g.elements.begin(), g.elements.end()), g.elements.end());
    if (g.elements.size() != 120) throw std::logic_error("build_2I: count != 120");
    return g;
}

// The binary octahedral group over Q(sqrt2): the 24 Hurwitz units plus the
// 24 elements (+-e_i +- e_j)/sqrt2.
inline BinaryGroup2O build_2O() {
    BinaryGroup2O g;
    g.label = "2O";
    detail::add_signed_axes<Quad2>(g.elements);
    detail::add_half_units<Quad2>(g.elements);
    Quad2 r = Quad2::inv_sqrt2();
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            for (int si : {+1, -1}) {
                for (int sj : {+1, -1}) {
                    Quad2 v[4] = {Quad2(0), Quad2(0), Quad2(0), Quad2(0)};
                    v[i] = si > 0 ? r : -r;
                    v[j] = sj > 0 ? r : -r;
                    g.elements.push_back({v[0], v[1], v[2], v[3]});
                }
            }
        }
    }
    std::sort(g.elements.begin(), g.elements.end());
    if (g.elements.size() != 48) throw std::logic_error("build_2O: count != 48");
    return g;
}

// Smallest multiplicatively closed set containing the generators and their
// inverses; throws if it exceeds cap.
template <typename T>
std::vector<QuatT<T>> closure(const std::vector<QuatT<T>>& generators, size_t cap) {
    std::set<QuatT<T>> seen;
    std::vector<QuatT<T>> frontier;
    seen.insert(QuatT<T>::one());
    frontier.push_back(QuatT<T>::one());
    for (const auto& q : generators) {
        for (const auto& e : {q, q.conj()}) {  // unit quaternion inverse = conjugate
            if (seen.insert(e).second) frontier.push_back(e);
        }
    }
    std::vector<QuatT<T>> gens(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<QuatT<T>> next;
        for (const auto& f : frontier) {
            for (const auto& g : gens) {
                for (const auto& p : {f * g, g * f}) {
                    if (seen.insert(p).second) {
                        next.push_back(p);
                        if (seen.size() > cap)
                            throw std::runtime_error("closure: cap exceeded");
                    }
                }
            }
        }
        // Newly found elements must also multiply against everything seen so far.
        gens.assign(seen.begin(), seen.end());
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

template <typename T>
bool is_closed(const BinaryGroupT<T>& g) {
    for (const auto& p : g.elements)
        for (const auto& q : g.elements)
            if (!g.contains(p * q)) return false;
    return true;
}

template <typename T>
int element_order(const QuatT<T>& q) {
    QuatT<T> one = QuatT<T>::one();
    QuatT<T> p = q;
    for (int n = 1; n <= 1024; ++n) {
        if (p == one) return n;
        p = p * q;
    }
    throw std::runtime_error("element_order: did not reach identity");
}

// Conjugacy classes sorted by (size, canonical representative).
template <typename T>
std::vector<std::vector<int>> conjugacy_classes(const BinaryGroupT<T>& g) {
    int n = static_cast<int>(g.size());
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        std::set<int> orbit;
        for (int h = 0; h < n; ++h) {
            QuatT<T> c = g.elements[h] * g.elements[i] * g.elements[h].conj();
            int j = g.index_of(c);
            if (j < 0) throw std::logic_error("conjugacy_classes: group not closed");
            orbit.insert(j);
        }
        for (int j : orbit) cls[j] = static_cast<int>(classes.size());
        classes.emplace_back(orbit.begin(), orbit.end());
    }
    std::sort(classes.begin(), classes.end(), [&](const auto& A, const auto& B) {
        if (A.size() != B.size()) return A.size() < B.size();
        return g.elements[A.front()] < g.elements[B.front()];
    });
    return classes;
}

struct ObstructionReport {
    int order_2I = 0;
    int order_2O = 0;
    bool divides = false;          // |2O| divides |2I|?
    int max_order_2I = 0;
    bool order8_in_2O = false;
    bool order8_in_2I = false;
};

// Why 2O cannot embed in 2I (Lagrange plus element orders).
inline ObstructionReport subgroup_obstruction_2O_in_2I() {
    ObstructionReport r;
    BinaryGroup gi = build_2I();
    BinaryGroup2O go = build_2O();
    r.order_2I = static_cast<int>(gi.size());
    r.order_2O = static_cast<int>(go.size());
    r.divides = r.order_2I % r.order_2O == 0;
    for (const auto& q : gi.elements) {
        int o = element_order(q);
        r.max_order_2I = std::max(r.max_order_2I, o);
        if (o == 8) r.order8_in_2I = true;
    }
    for (const auto& q : go.elements)
        if (element_order(q) == 8) r.order8_in_2O = true;
    return r;
}

}  // namespace mereon
