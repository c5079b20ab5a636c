#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>

#include "mereon/checks.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace mereon;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string out = ".";
    std::string format = "csv";
    int samples = 1024;
    unsigned seed = 42;
};

// Resolve and validate the output directory; MEREON_OUT overrides the flag.
int resolve_out(RunConfig& cfg) {
    if (const char* env = std::getenv("MEREON_OUT")) cfg.out = env;
    if (!fs::is_directory(cfg.out)) {
        std::cerr << "error: output directory does not exist: " << cfg.out << "\n";
        return kExitUsage;
    }
    return kExitPass;
}

std::string out_path(const RunConfig& cfg, const std::string& file) {
    return (fs::path(cfg.out) / file).string();
}

int cmd_verify(RunConfig cfg) {
    if (int rc = resolve_out(cfg)) return rc;
    auto checks = run_all_checks(cfg.seed, cfg.samples);
    bool all_pass = true;
    std::ostringstream md;
    json j = json::array();
    md << "| # | check | result | expected | actual | arithmetic |\n";
    md << "| --- | --- | --- | --- | --- | --- |\n";
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        md << "| " << c.criterion << " | " << c.name << " | "
           << (c.pass ? "pass" : "FAIL") << " | " << c.expected << " | " << c.actual
           << " | " << (c.exact ? "exact" : "float") << " |\n";
        j.push_back({{"criterion", c.criterion},
                     {"name", c.name},
                     {"pass", c.pass},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"exact", c.exact}});
    }
    write_file(out_path(cfg, "verify.md"), md.str());
    write_file(out_path(cfg, "verify.json"), j.dump(2) + "\n");
    for (const auto& c : checks)
        std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.criterion << ": " << c.name
                  << "\n";
    return all_pass ? kExitPass : kExitFail;
}

int cmd_report(RunConfig cfg, const std::string& table) {
    if (int rc = resolve_out(cfg)) return rc;
    Table t;
    if (table == "m144p-shells")
        t = report_m144p_shells();
    else if (table == "m120p-types")
        t = report_m120p_types();
    else if (table == "group-families")
        t = report_group_families();
    else if (table == "shells")
        t = report_shells();
    else if (table == "cell24")
        t = report_cell24();
    else if (table == "ratios")
        t = report_ratios();
    else if (table == "correspondence")
        t = report_correspondence();
    else if (table == "mckay")
        t = report_mckay(cfg.seed);
    else {
        std::cerr << "error: unknown table: " << table << "\n";
        return kExitUsage;
    }
    std::string ext = cfg.format == "md" ? ".md" : ".csv";
    std::string body = cfg.format == "md" ? t.markdown() : t.csv();
    write_file(out_path(cfg, table + ext), body);
    return kExitPass;
}

int cmd_mesh(RunConfig cfg, const std::string& name) {
    if (int rc = resolve_out(cfg)) return rc;
    Polyhedron p;
    if (name == "m144p")
        p = m144p_construct();
    else if (name == "m120p")
        p = m120p_construct();
    else if (name == "disdyakis")
        p = disdyakis_construct();
    else if (name == "cell600-projection" || name == "cell24-projection" ||
             name == "inner-icosahedron") {
        // Point sets (projections have no canonical face data): emit vertices only.
        BinaryGroup g = name == "cell24-projection" ? build_2T() : build_2I();
        p.name = name;
        for (const auto& q : g.elements) {
            ProjPoint pr = stereo_project(q);
            if (pr.infinite) continue;
            if (name == "inner-icosahedron" && q.w != Golden(Rat(1, 2)) * Golden::phi())
                continue;
            p.vertices.push_back(pr.v);
        }
        std::sort(p.vertices.begin(), p.vertices.end());
    } else if (name == "knot") {
        auto pts = knot_polyline({3, 2}, cfg.samples);
        write_file(out_path(cfg, "knot.obj"), obj_from_polyline(pts, "knot-3-2"));
        return kExitPass;
    } else {
        std::cerr << "error: unknown mesh: " << name << "\n";
        return kExitUsage;
    }
    if (cfg.format == "ply")
        write_file(out_path(cfg, name + ".ply"), ply_from_mesh(p));
    else
        write_file(out_path(cfg, name + ".obj"), obj_from_mesh(p));
    return kExitPass;
}

int cmd_mckay(RunConfig cfg, const std::string& group) {
    if (int rc = resolve_out(cfg)) return rc;
    McKayGraph m;
    if (group == "2T")
        m = mckay_for_group(build_2T(), cfg.seed);
    else if (group == "2O")
        m = mckay_for_group(build_2O(), cfg.seed);
    else if (group == "2I")
        m = mckay_for_group(build_2I(), cfg.seed);
    else {
        std::cerr << "error: unknown group: " << group << "\n";
        return kExitUsage;
    }
    write_file(out_path(cfg, "mckay-" + group + ".dot"),
               dot_from_graph(m.adjacency, m.dims, group + " -> " + m.ade_label));
    std::cout << group << ": " << m.ade_label << "\n";
    return kExitPass;
}

int cmd_knot(RunConfig cfg, int p, int q) {
    if (int rc = resolve_out(cfg)) return rc;
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) {
        std::cerr << "error: p, q must be coprime positive integers\n";
        return kExitUsage;
    }
    TorusKnotSpec spec{p, q};
    std::string stem = "knot-" + std::to_string(p) + "-" + std::to_string(q);
    if (cfg.format == "csv")
        write_file(out_path(cfg, stem + ".csv"), csv_from_polyline(knot_polyline(spec, cfg.samples)));
    else
        write_file(out_path(cfg, stem + ".obj"),
                   obj_from_polyline(knot_polyline(spec, cfg.samples), stem));
    write_file(out_path(cfg, stem + "-residuals.csv"),
               report_knot_residuals(spec, cfg.samples).csv());
    auto w = winding_numbers(spec, cfg.samples);
    std::cout << stem << ": windings (" << w.toroidal << "," << w.poloidal << ")\n";
    return w.well_sampled ? kExitPass : kExitFail;
}

int cmd_group(RunConfig cfg, const std::string& name) {
    if (int rc = resolve_out(cfg)) return rc;
    json j;
    auto dump = [&](const auto& g) {
        j["label"] = g.label;
        j["order"] = g.size();
        json els = json::array();
        for (const auto& q : g.elements)
            els.push_back({q.w.to_exact_string(), q.x.to_exact_string(),
                           q.y.to_exact_string(), q.z.to_exact_string()});
        j["elements"] = els;
        j["conjugacy_class_sizes"] = json::array();
        for (const auto& c : conjugacy_classes(g))
            j["conjugacy_class_sizes"].push_back(c.size());
    };
    if (name == "2T")
        dump(build_2T());
    else if (name == "2O")
        dump(build_2O());
    else if (name == "2I")
        dump(build_2I());
    else {
        std::cerr << "error: unknown group: " << name << "\n";
        return kExitUsage;
    }
    write_file(out_path(cfg, "group-" + name + ".json"), j.dump(2) + "\n");
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for the Mereon polyhedra, the binary "
                 "polyhedral groups, and their 600-cell correspondence"};
    app.require_subcommand(1);
    app.fallthrough();  // shared flags may follow the subcommand name
    RunConfig cfg;
    app.add_option("--out", cfg.out, "output directory (must exist)");
    app.add_option("--format", cfg.format, "csv|json|md|obj|ply|dot");
    app.add_option("--samples", cfg.samples, "sample count for knot sweeps")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for the eigen-splitting RNG");

    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    std::string table, mesh_name, group_name;
    int knot_p = 3, knot_q = 2;
    auto* report = app.add_subcommand("report", "regenerate a published table");
    report->add_option("--table", table,
                       "m144p-shells|m120p-types|group-families|shells|cell24|ratios|"
                       "correspondence|mckay")
        ->required();
    auto* mesh = app.add_subcommand("mesh", "export a mesh or point set");
    mesh->add_option("--name", mesh_name,
                     "m144p|m120p|disdyakis|cell600-projection|cell24-projection|"
                     "inner-icosahedron|knot")
        ->required();
    auto* mckay = app.add_subcommand("mckay", "emit a McKay graph as DOT");
    mckay->add_option("--group", group_name, "2T|2O|2I")->required();
    auto* knot = app.add_subcommand("knot", "sample a torus knot");
    knot->add_option("--p", knot_p, "longitudinal winding");
    knot->add_option("--q", knot_q, "meridional winding");
    auto* group = app.add_subcommand("group", "dump a binary group as JSON");
    group->add_option("--name", group_name, "2T|2O|2I")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(cfg);
        if (report->parsed()) return cmd_report(cfg, table);
        if (mesh->parsed()) return cmd_mesh(cfg, mesh_name);
        if (mckay->parsed()) return cmd_mckay(cfg, group_name);
        if (knot->parsed()) return cmd_knot(cfg, knot_p, knot_q);
        if (group->parsed()) return cmd_group(cfg, group_name);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
