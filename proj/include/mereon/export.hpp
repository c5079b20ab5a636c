#pragma once

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mereon/cliffknot.hpp"
#include "mereon/polyhedron.hpp"

namespace mereon {

// All float output is printf-formatted for byte-stable, locale-free results.
inline std::string fmt_float(double x, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x == 0.0 ? 0.0 : x);
    return buf;
}

inline std::string fmt_fixed(double x, int decimals = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, x == 0.0 ? 0.0 : x);
    return buf;
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string obj_from_mesh(const Polyhedron& p) {
    std::ostringstream s;
    s << "# " << p.name << "\n";
    for (const auto& v : p.vertices)
        s << "v " << fmt_float(v.x.to_double()) << ' ' << fmt_float(v.y.to_double())
          << ' ' << fmt_float(v.z.to_double()) << "\n";
    for (const auto& f : p.faces)
        s << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << "\n";
    return s.str();
}

inline std::string ply_from_mesh(const Polyhedron& p) {
    std::ostringstream s;
    s << "ply\nformat ascii 1.0\ncomment " << p.name << "\n"
      << "element vertex " << p.vertices.size() << "\n"
      << "property double x\nproperty double y\nproperty double z\n"
      << "element face " << p.faces.size() << "\n"
      << "property list uchar int vertex_indices\nend_header\n";
    for (const auto& v : p.vertices)
        s << fmt_float(v.x.to_double()) << ' ' << fmt_float(v.y.to_double()) << ' '
          << fmt_float(v.z.to_double()) << "\n";
    for (const auto& f : p.faces) s << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << "\n";
    return s.str();
}

inline std::string obj_from_polyline(const std::vector<Vec3d>& pts, const std::string& name) {
    std::ostringstream s;
    s << "# " << name << "\n";
    for (const auto& v : pts)
        s << "v " << fmt_float(v[0]) << ' ' << fmt_float(v[1]) << ' ' << fmt_float(v[2])
          << "\n";
    s << "l";
    for (size_t i = 1; i <= pts.size(); ++i) s << ' ' << i;
    s << " 1\n";  // closed curve
    return s.str();
}

inline std::string csv_from_polyline(const std::vector<Vec3d>& pts) {
    std::ostringstream s;
    s << "i,x,y,z\n";
    for (size_t i = 0; i < pts.size(); ++i)
        s << i << ',' << fmt_float(pts[i][0]) << ',' << fmt_float(pts[i][1]) << ','
          << fmt_float(pts[i][2]) << "\n";
    return s.str();
}

// Simple table: header row + string cells, rendered as CSV or Markdown.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string csv() const {
        std::ostringstream s;
        for (size_t i = 0; i < header.size(); ++i) s << (i ? "," : "") << header[i];
        s << "\n";
        for (const auto& r : rows) {
            for (size_t i = 0; i < r.size(); ++i) s << (i ? "," : "") << r[i];
            s << "\n";
        }
        return s.str();
    }
    std::string markdown() const {
        std::ostringstream s;
        s << "|";
        for (const auto& h : header) s << ' ' << h << " |";
        s << "\n|";
        for (size_t i = 0; i < header.size(); ++i) s << " --- |";
        s << "\n";
        for (const auto& r : rows) {
            s << "|";
            for (const auto& c : r) s << ' ' << c << " |";
            s << "\n";
        }
        return s.str();
    }
};

inline std::string dot_from_graph(const std::vector<std::vector<int>>& adjacency,
                                  const std::vector<int>& labels,
                                  const std::string& name) {
    std::ostringstream s;
    s << "graph \"" << name << "\" {\n  node [shape=circle];\n";
    for (size_t i = 0; i < adjacency.size(); ++i)
        s << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
    for (size_t i = 0; i < adjacency.size(); ++i)
        for (size_t j = i + 1; j < adjacency.size(); ++j)
            for (int e = 0; e < adjacency[i][j]; ++e)
                s << "  n" << i << " -- n" << j << ";\n";
    s << "}\n";
    return s.str();
}

}  // namespace mereon
