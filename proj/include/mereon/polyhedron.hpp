#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mereon/vec3.hpp"

namespace mereon {

// A = Input (3-fold), B = Thruput (2-fold), C = Output (5-fold).
enum class VertexType { A, B, C };

inline int fold_of(VertexType t) {
    switch (t) {
        case VertexType::A: return 3;
        case VertexType::B: return 2;
        case VertexType::C: return 5;
    }
    return 0;
}

inline const char* role_of(VertexType t) {
    switch (t) {
        case VertexType::A: return "Input";
        case VertexType::B: return "Thruput";
        case VertexType::C: return "Output";
    }
    return "";
}

inline const char* name_of(VertexType t) {
    switch (t) {
        case VertexType::A: return "A";
        case VertexType::B: return "B";
        case VertexType::C: return "C";
    }
    return "";
}

struct Polyhedron {
    std::string name;
    std::vector<GVec3> vertices;
    std::vector<std::optional<VertexType>> types;  // parallel to vertices (may be empty)
    std::vector<std::array<int, 3>> faces;         // outward-oriented triangles
    // Exact squared shell radius per type, when coordinates themselves are
    // approximate (Disdyakis) or a declared exact value exists.
    std::map<VertexType, Golden> exact_radius2;

    std::vector<std::array<int, 2>> edges() const {
        std::set<std::array<int, 2>> e;
        for (const auto& f : faces) {
            for (int k = 0; k < 3; ++k) {
                int a = f[k], b = f[(k + 1) % 3];
                e.insert({std::min(a, b), std::max(a, b)});
            }
        }
        return {e.begin(), e.end()};
    }

    std::optional<VertexType> type_of(int i) const {
        if (i < 0 || static_cast<size_t>(i) >= types.size()) return std::nullopt;
        return types[i];
    }
};

struct IntegrityReport {
    size_t v = 0, e = 0, f = 0;
    long long euler = 0;
    bool manifold = false;             // every edge borders exactly 2 faces
    bool oriented = false;             // directed edges used exactly once
    bool duplicate_free = false;       // no repeated vertex coordinates
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline IntegrityReport mesh_integrity(const Polyhedron& p) {
    IntegrityReport r;
    r.v = p.vertices.size();
    r.f = p.faces.size();
    std::map<std::array<int, 2>, int> undirected;
    std::set<std::array<int, 2>> directed;
    bool dir_dup = false;
    for (const auto& f : p.faces) {
        for (int k = 0; k < 3; ++k) {
            int a = f[k], b = f[(k + 1) % 3];
            ++undirected[{std::min(a, b), std::max(a, b)}];
            if (!directed.insert({a, b}).second) dir_dup = true;
        }
    }
    r.e = undirected.size();
    r.euler = static_cast<long long>(r.v) - static_cast<long long>(r.e) +
              static_cast<long long>(r.f);
    r.manifold = true;
    for (const auto& [edge, count] : undirected) {
        if (count != 2) {
            r.manifold = false;
            r.violations.push_back("edge (" + std::to_string(edge[0]) + "," +
                                   std::to_string(edge[1]) + ") borders " +
                                   std::to_string(count) + " faces");
        }
    }
    r.oriented = r.manifold && !dir_dup;
    if (r.manifold && dir_dup) r.violations.push_back("inconsistent face orientation");
    std::set<GVec3> unique_pts(p.vertices.begin(), p.vertices.end());
    r.duplicate_free = unique_pts.size() == p.vertices.size();
    if (!r.duplicate_free) r.violations.push_back("duplicate vertex coordinates");
    if (r.manifold && r.euler != 2)
        r.violations.push_back("Euler characteristic " + std::to_string(r.euler));
    return r;
}

}  // namespace mereon
