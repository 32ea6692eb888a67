// Command-line front end: analyze, scheme, ranks, scan, catalog.
// Exit codes: 0 success, 1 input/validation error, 2 internal invariant failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "tdesign/catalog.hpp"
#include "tdesign/io.hpp"

namespace {

void emit(const tdesign::Json& report, const std::string& format, const std::string& output) {
    std::string body =
        format == "json" ? report.dump(2) + "\n" : tdesign::render_text(report);
    if (output.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(output);
        if (!out) throw tdesign::Error(tdesign::ErrorKind::BadInput, "cannot write '" + output + "'");
        out << body;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of spherical and projective designs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::string output;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("-o,--output", output, "write output to a file instead of stdout");

    std::string analyze_file;
    auto* analyze = app.add_subcommand("analyze", "angle set, strength, annihilator, tightness");
    analyze->add_option("file", analyze_file, "design JSON file")->required();

    std::string scheme_file;
    auto* scheme = app.add_subcommand(
        "scheme", "adjacency classes, idempotent basis, ranks, rationality verdict");
    scheme->add_option("file", scheme_file, "design JSON file (must analyze as tight)")->required();

    int rank = 0, degree = 0, s = 1, eps = 0;
    auto* ranks = app.add_subcommand("ranks", "closed-form rank profile for one parameter cell");
    ranks->add_option("--rank", rank, "geometry rank (>= 2)")->required();
    ranks->add_option("--degree", degree, "geometry degree")->required();
    ranks->add_option("--s", s, "number of angles (>= 1)")->required();
    ranks->add_option("--eps", eps, "1 if 0 is an angle, else 0")->required();

    std::vector<int> degrees{1, 2, 4};
    int max_rank = 50, max_s = 50;
    auto* scan = app.add_subcommand("scan", "rank-collision scan over a parameter range");
    scan->add_option("--degrees", degrees, "degree set (default 1,2,4)")->delimiter(',');
    scan->add_option("--max-rank", max_rank, "largest rank to scan (default 50)");
    scan->add_option("--max-s", max_s, "largest s to scan (default 50)");

    std::string catalog_name;
    auto* catalog = app.add_subcommand("catalog", "emit a built-in design as a JSON file");
    catalog->add_option("name", catalog_name,
                        "polygon-N, simplex-N, cross-polytope-N, icosahedron, e8, "
                        "jordan-frame-RANK-DEGREE, sic-RANK")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            const tdesign::DesignInstance design = tdesign::read_design_file(analyze_file);
            const tdesign::DesignAnalysis analysis = tdesign::analyze_design(design);
            emit(tdesign::analysis_report(design, analysis), format, output);
        } else if (scheme->parsed()) {
            const tdesign::DesignInstance design = tdesign::read_design_file(scheme_file);
            const tdesign::DesignAnalysis analysis = tdesign::analyze_design(design);
            const tdesign::SchemeAnalysis sa = tdesign::scheme_analyze(design, analysis);
            emit(tdesign::scheme_report(design, analysis, sa), format, output);
        } else if (ranks->parsed()) {
            const tdesign::RankProfile profile =
                tdesign::rank_profile(tdesign::GeometryParams{rank, degree}, s, eps);
            emit(tdesign::rank_profile_report(profile), format, output);
        } else if (scan->parsed()) {
            const tdesign::ScanResult result = tdesign::scan_collisions(degrees, max_rank, max_s);
            emit(tdesign::scan_report(result), format, output);
        } else if (catalog->parsed()) {
            const tdesign::CatalogEntry entry = tdesign::catalog_by_name(catalog_name);
            if (output.empty())
                std::cout << tdesign::design_to_json(entry.design).dump(2) << "\n";
            else
                tdesign::write_design_file(entry.design, output);
        }
    } catch (const tdesign::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.internal() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
