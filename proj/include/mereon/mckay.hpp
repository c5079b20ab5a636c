#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mereon/binary_group.hpp"

namespace mereon {

// Field-agnostic view of a finite group: multiplication table, inverses and
// the defining SU(2) character chi_V(g) = 2 w(g).
struct FiniteGroupTable {
    int n = 0;
    std::vector<std::vector<int>> mul;  // mul[i][j] = index of g_i g_j
    std::vector<int> inv;
    std::vector<double> chi_v;          // 2 * w per element
    std::string label;
};

template <typename T>
FiniteGroupTable group_table(const BinaryGroupT<T>& g) {
    FiniteGroupTable t;
    t.n = static_cast<int>(g.size());
    t.label = g.label;
    t.mul.assign(t.n, std::vector<int>(t.n, -1));
    t.inv.assign(t.n, -1);
    t.chi_v.resize(t.n);
    for (int i = 0; i < t.n; ++i) {
        t.chi_v[i] = 2.0 * g.elements[i].w.to_double();
        t.inv[i] = g.index_of(g.elements[i].conj());
        for (int j = 0; j < t.n; ++j) {
            t.mul[i][j] = g.index_of(g.elements[i] * g.elements[j]);
            if (t.mul[i][j] < 0) throw std::logic_error("group_table: not closed");
        }
    }
    return t;
}

struct ClassData {
    std::vector<std::vector<int>> classes;    // member indices, sorted
    std::vector<int> class_of;                // element -> class
    std::vector<int> reps;                    // first member of each class
    // c[i][j][k] = #{ b in C_j : a b = g } for any fixed g in C_k, a ranging
    // over C_i -- the class-algebra structure constants.
    std::vector<std::vector<std::vector<long>>> coeff;
};

inline ClassData class_algebra(const FiniteGroupTable& g) {
    ClassData d;
    d.class_of.assign(g.n, -1);
    for (int i = 0; i < g.n; ++i) {
        if (d.class_of[i] >= 0) continue;
        std::set<int> orbit;
        for (int h = 0; h < g.n; ++h) orbit.insert(g.mul[g.mul[h][i]][g.inv[h]]);
        for (int j : orbit) d.class_of[j] = static_cast<int>(d.classes.size());
        d.classes.emplace_back(orbit.begin(), orbit.end());
    }
    // Deterministic class order: by (size, smallest member index).
    std::sort(d.classes.begin(), d.classes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    for (size_t c = 0; c < d.classes.size(); ++c)
        for (int j : d.classes[c]) d.class_of[j] = static_cast<int>(c);
    int k = static_cast<int>(d.classes.size());
    for (const auto& c : d.classes) d.reps.push_back(c.front());
    d.coeff.assign(k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::vector<long> count(k, 0);
            for (int a : d.classes[i])
                for (int b : d.classes[j]) ++count[d.class_of[g.mul[a][b]]];
            for (int kk = 0; kk < k; ++kk) {
                if (count[kk] % static_cast<long>(d.classes[kk].size()) != 0)
                    throw std::logic_error("class_algebra: non-integral coefficient");
                d.coeff[i][j][kk] = count[kk] / static_cast<long>(d.classes[kk].size());
            }
        }
    return d;
}

struct CharacterTable {
    std::vector<int> dims;                                  // per irrep
    std::vector<std::vector<std::complex<double>>> chi;     // [irrep][class]
    std::vector<int> class_sizes;
    double max_orthogonality_residual = 0.0;
};

// Burnside/Dixon: the characters are read off simultaneous eigenvectors of
// the commuting class-sum matrices, obtained from a random real combination.
inline CharacterTable character_table(const FiniteGroupTable& g, const ClassData& d,
                                      unsigned seed = 42) {
    using Mat = Eigen::MatrixXcd;
    int k = static_cast<int>(d.classes.size());
    std::vector<Eigen::MatrixXd> class_mats(k, Eigen::MatrixXd::Zero(k, k));
    // (N_i)_{kk,j} = c_{ij}^{kk}; the right-eigenvectors shared by all N_i^T
    // carry the eigenvalue pattern omega_i = |C_i| chi(C_i)/chi(1).
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int kk = 0; kk < k; ++kk)
                class_mats[i](j, kk) = static_cast<double>(d.coeff[i][j][kk]);

    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(k, k);
        for (int i = 0; i < k; ++i) {
            double r = gauss(rng);
            combo += r * class_mats[i].transpose();
        }
        Eigen::EigenSolver<Eigen::MatrixXd> es(combo);
        // Reject draws whose eigenvalues cluster (unsplit degeneracies).
        bool distinct = true;
        for (int a = 0; a < k && distinct; ++a)
            for (int b = a + 1; b < k; ++b)
                if (std::abs(es.eigenvalues()(a) - es.eigenvalues()(b)) < 1e-6) {
                    distinct = false;
                    break;
                }
        if (!distinct) continue;

        CharacterTable t;
        for (const auto& c : d.classes) t.class_sizes.push_back(static_cast<int>(c.size()));
        for (int vcol = 0; vcol < k; ++vcol) {
            Eigen::VectorXcd v = es.eigenvectors().col(vcol);
            int m = 0;
            for (int i = 1; i < k; ++i)
                if (std::abs(v(i)) > std::abs(v(m))) m = i;
            std::vector<std::complex<double>> omega(k);
            for (int i = 0; i < k; ++i) {
                Eigen::VectorXcd w = class_mats[i].transpose() * v;
                omega[i] = w(m) / v(m);
            }
            double inv_d2 = 0.0;
            for (int i = 0; i < k; ++i)
                inv_d2 += std::norm(omega[i]) / t.class_sizes[i];
            double dim = std::sqrt(g.n / inv_d2);
            std::vector<std::complex<double>> row(k);
            for (int i = 0; i < k; ++i) row[i] = dim * omega[i] / double(t.class_sizes[i]);
            int dim_int = static_cast<int>(std::lround(dim));
            if (std::abs(dim - dim_int) > 1e-6)
                throw std::runtime_error("character_table: non-integral dimension");
            t.dims.push_back(dim_int);
            t.chi.push_back(std::move(row));
        }
        // Deterministic irrep order: by (dim, lexicographic real parts).
        std::vector<int> order(k);
        for (int i = 0; i < k; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (t.dims[a] != t.dims[b]) return t.dims[a] < t.dims[b];
            for (int c = 0; c < k; ++c) {
                double ra = t.chi[a][c].real(), rb = t.chi[b][c].real();
                if (std::abs(ra - rb) > 1e-8) return ra < rb;
            }
            return false;
        });
        CharacterTable sorted;
        sorted.class_sizes = t.class_sizes;
        for (int i : order) {
            sorted.dims.push_back(t.dims[i]);
            sorted.chi.push_back(t.chi[i]);
        }
        // Row orthogonality residual.
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                std::complex<double> s = 0;
                for (int c = 0; c < k; ++c)
                    s += double(sorted.class_sizes[c]) * sorted.chi[a][c] *
                         std::conj(sorted.chi[b][c]);
                double want = a == b ? g.n : 0.0;
                sorted.max_orthogonality_residual =
                    std::max(sorted.max_orthogonality_residual, std::abs(s - want));
            }
        if (sorted.max_orthogonality_residual > 1e-9)
            throw std::runtime_error("character_table: orthogonality residual too large");
        long sum2 = 0;
        for (int dd : sorted.dims) sum2 += long(dd) * dd;
        if (sum2 != g.n) throw std::runtime_error("character_table: dimension sum check");
        return sorted;
    }
    throw std::runtime_error("character_table: eigen-degeneracy unresolved after retries");
}

struct McKayGraph {
    std::vector<std::vector<int>> adjacency;
    std::vector<int> dims;
    std::string ade_label;  // "E6~", "E7~", "E8~", or "other"
    double max_integrality_residual = 0.0;
};

inline McKayGraph mckay_graph(const FiniteGroupTable& g, const ClassData& d,
                              const CharacterTable& t) {
    int k = static_cast<int>(d.classes.size());
    McKayGraph m;
    m.dims = t.dims;
    m.adjacency.assign(k, std::vector<int>(k, 0));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            std::complex<double> s = 0;
            for (int c = 0; c < k; ++c)
                s += double(t.class_sizes[c]) * g.chi_v[d.reps[c]] * t.chi[a][c] *
                     std::conj(t.chi[b][c]);
            double val = (s / double(g.n)).real();
            double imag = std::abs((s / double(g.n)).imag());
            int entry = static_cast<int>(std::lround(val));
            m.max_integrality_residual =
                std::max({m.max_integrality_residual, std::abs(val - entry), imag});
            if (entry < 0 || m.max_integrality_residual > 1e-6)
                throw std::runtime_error("mckay_graph: non-integral adjacency entry");
            m.adjacency[a][b] = entry;
        }
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (m.adjacency[a][b] != m.adjacency[b][a])
                throw std::runtime_error("mckay_graph: asymmetric adjacency");
    return m;
}

// ---------------------------------------------------------------------------
// ADE template graphs and classification by explicit isomorphism search.

// Star with three legs of the given lengths (number of edges per leg).
inline std::vector<std::vector<int>> star_graph(int l1, int l2, int l3) {
    int n = 1 + l1 + l2 + l3;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    int next = 1;
    for (int len : {l1, l2, l3}) {
        int prev = 0;
        for (int s = 0; s < len; ++s) {
            a[prev][next] = a[next][prev] = 1;
            prev = next++;
        }
    }
    return a;
}

inline std::vector<std::vector<int>> affine_E6() { return star_graph(2, 2, 2); }
inline std::vector<std::vector<int>> affine_E7() { return star_graph(3, 3, 1); }
inline std::vector<std::vector<int>> affine_E8() { return star_graph(5, 2, 1); }

inline std::vector<std::vector<int>> cycle_graph(int n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        a[i][(i + 1) % n] = 1;
        a[(i + 1) % n][i] = 1;
    }
    return a;
}

// Affine D_n diagram on n+1 nodes: a path with a fork at both ends.
inline std::vector<std::vector<int>> affine_D(int n) {
    int nodes = n + 1;
    std::vector<std::vector<int>> a(nodes, std::vector<int>(nodes, 0));
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = 1; };
    // path 2..n-2 with forks {0,1} and {n-1,n}
    for (int i = 2; i < n - 2; ++i) link(i, i + 1);
    link(0, 2);
    link(1, 2);
    link(n - 2, n - 1);
    link(n - 2, n);
    return a;
}

inline bool graphs_isomorphic(const std::vector<std::vector<int>>& a,
                              const std::vector<std::vector<int>>& b) {
    int n = static_cast<int>(a.size());
    if (b.size() != a.size()) return false;
    auto degrees = [](const std::vector<std::vector<int>>& g) {
        std::vector<int> d;
        for (const auto& row : g) {
            int s = 0;
            for (int v : row) s += v;
            d.push_back(s);
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(a) != degrees(b)) return false;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool match = true;
        for (int i = 0; i < n && match; ++i)
            for (int j = 0; j < n; ++j)
                if (a[i][j] != b[perm[i]][perm[j]]) {
                    match = false;
                    break;
                }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::string ade_classify(const std::vector<std::vector<int>>& adjacency) {
    int n = static_cast<int>(adjacency.size());
    if (n == 7 && graphs_isomorphic(adjacency, affine_E6())) return "E6~";
    if (n == 8 && graphs_isomorphic(adjacency, affine_E7())) return "E7~";
    if (n == 9 && graphs_isomorphic(adjacency, affine_E8())) return "E8~";
    if (n >= 3 && graphs_isomorphic(adjacency, cycle_graph(n)))
        return "A" + std::to_string(n - 1) + "~";
    if (n >= 5 && graphs_isomorphic(adjacency, affine_D(n - 1)))
        return "D" + std::to_string(n - 1) + "~";
    return "other";
}

// Full pipeline for one binary polyhedral group.
template <typename T>
McKayGraph mckay_for_group(const BinaryGroupT<T>& g, unsigned seed = 42) {
    FiniteGroupTable t = group_table(g);
    ClassData d = class_algebra(t);
    CharacterTable ct = character_table(t, d, seed);
    McKayGraph m = mckay_graph(t, d, ct);
    m.ade_label = ade_classify(m.adjacency);
    return m;
}

}  // namespace mereon
