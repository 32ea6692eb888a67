#include "tdesign/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace tdesign {

namespace {

Rational rational_from_json(const nlohmann::json& j, const char* what) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw Error(ErrorKind::BadInput, std::string(what) + " must be a \"p/q\" string or an integer");
}

std::vector<std::vector<QuadraticNumber>> entry_rows(const nlohmann::json& rows, long radicand,
                                                     const char* what) {
    if (!rows.is_array() || rows.empty())
        throw Error(ErrorKind::BadInput, std::string(what) + " must be a non-empty array of rows");
    std::vector<std::vector<QuadraticNumber>> out;
    for (const auto& row : rows) {
        if (!row.is_array())
            throw Error(ErrorKind::BadInput, std::string(what) + " rows must be arrays");
        std::vector<QuadraticNumber> r;
        for (const auto& e : row) r.push_back(entry_from_json(e, radicand));
        if (!out.empty() && r.size() != out.front().size())
            throw Error(ErrorKind::DimensionMismatch,
                        std::string(what) + " rows have inconsistent lengths");
        out.push_back(std::move(r));
    }
    return out;
}

Json quad_polynomial_json(const QuadPolynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(entry_to_json(c));
    return arr;
}

Json rational_polynomial_json(const RationalPolynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.str());
    return arr;
}

Json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
    Json arr = Json::array();
    for (const auto& [i, j] : pairs) arr.push_back(Json::array({i, j}));
    return arr;
}

Json geometry_json(const GeometryParams& geom) {
    Json g;
    g["rank"] = geom.rank;
    g["degree"] = geom.degree;
    g["space"] = geom.description();
    return g;
}

// ---- text rendering -------------------------------------------------------

std::string entry_display(const Json& e, long radicand) {
    if (e.is_string()) return e.get<std::string>();
    if (e.is_number_integer()) return std::to_string(e.get<long>());
    const Rational a = Rational::parse(e.at("a").get<std::string>());
    const Rational b = Rational::parse(e.at("b").get<std::string>());
    return QuadraticNumber(a, b, radicand).str();
}

bool entry_is_zero(const Json& e) {
    return e.is_string() && e.get<std::string>() == "0";
}

// Descending-degree polynomial display, e.g. "60x^3 - 60x^2 + 12x".
std::string polynomial_display(const Json& coeffs, long radicand) {
    if (coeffs.empty()) return "0";
    std::string out;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        const Json& c = coeffs[static_cast<std::size_t>(i)];
        if (entry_is_zero(c)) continue;
        std::string text = entry_display(c, radicand);

        bool negative = false;
        if (c.is_string() && !text.empty() && text[0] == '-') {
            negative = true;
            text = text.substr(1);
        }
        const bool compound = text.find(' ') != std::string::npos;
        if (compound) text = "(" + text + ")";

        std::string power;
        if (i > 0) {
            if (text == "1") text.clear();
            power = (i == 1) ? "x" : "x^" + std::to_string(i);
        }

        if (out.empty())
            out = (negative ? "-" : "") + text + power;
        else
            out += (negative ? " - " : " + ") + text + power;
    }
    return out.empty() ? "0" : out;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

std::string render_analysis_text(const Json& r) {
    std::ostringstream out;
    const long radicand = r["radicand"].is_null() ? 0 : r["radicand"].get<long>();

    out << "geometry:         rank " << r["geometry"]["rank"] << ", degree "
        << r["geometry"]["degree"] << " (" << r["geometry"]["space"].get<std::string>() << ")\n";
    out << "radicand:         " << (radicand == 0 ? "none" : std::to_string(radicand)) << "\n";
    out << "cardinality:      " << r["cardinality"] << "\n";

    out << "angles:           ";
    for (std::size_t i = 0; i < r["angles"].size(); ++i) {
        if (i) out << ", ";
        out << entry_display(r["angles"][i], radicand) << " (x"
            << r["angle_multiplicities"][i].get<std::size_t>() << ")";
    }
    out << "\n";
    out << "s / eps / t:      " << r["s"] << " / " << r["eps"] << " / " << r["t"] << "\n";
    out << "tight:            " << yes_no(r["tight"].get<bool>()) << "\n";
    out << "ann(x):           " << polynomial_display(r["annihilator"], radicand) << "\n";
    out << "target:           " << polynomial_display(r["tightness"]["target"], radicand);
    if (r["tight"].get<bool>())
        out << "   [t = 2s - eps: " << yes_no(r["tightness"]["strength_matches"].get<bool>())
            << ", |X| matches: " << yes_no(r["tightness"]["cardinality_matches"].get<bool>())
            << "]";
    out << "\n";
    out << "indicator:        ";
    for (std::size_t i = 0; i < r["indicator"].size(); ++i) {
        if (i) out << ", ";
        out << entry_display(r["indicator"][i], radicand);
    }
    out << "\n";

    if (r.contains("scheme")) {
        const Json& s = r["scheme"];
        out << "scheme:\n";
        out << "  classes close:  " << yes_no(s["closes"].get<bool>()) << "\n";
        out << "  edge counts:    ";
        for (std::size_t i = 0; i < s["class_edge_counts"].size(); ++i) {
            if (i) out << ", ";
            out << s["class_edge_counts"][i];
        }
        out << "\n";
        out << "  construction:   " << s["construction"].get<std::string>() << "\n";
        out << "  idempotent:     " << yes_no(s["idempotency_verified"].get<bool>())
            << " (products and sum verified exactly)\n";
        out << "  ranks:          ";
        for (std::size_t i = 0; i < s["rank_triples"].size(); ++i) {
            if (i) out << ", ";
            out << s["rank_triples"][i][0].get<std::string>();
        }
        out << "  (closed form = trace = elimination)\n";
        const Json& v = s["verdict"];
        out << "  verdict:        certified_rational=" << yes_no(v["certified_rational"].get<bool>())
            << " observed_rational=" << yes_no(v["observed_rational"].get<bool>())
            << " consistent=" << yes_no(v["consistent"].get<bool>());
        if (!v["collision_pairs"].empty()) {
            out << "  collisions:";
            for (const auto& p : v["collision_pairs"])
                out << " (" << p[0] << "," << p[1] << ")";
        }
        out << "\n";
    }
    return out.str();
}

std::string render_rank_profile_text(const Json& r) {
    std::ostringstream out;
    out << "geometry:   rank " << r["geometry"]["rank"] << ", degree " << r["geometry"]["degree"]
        << " (" << r["geometry"]["space"].get<std::string>() << ")\n";
    out << "s / eps:    " << r["s"] << " / " << r["eps"] << "\n";
    out << "ranks:      ";
    for (std::size_t i = 0; i < r["ranks"].size(); ++i) {
        if (i) out << ", ";
        out << r["ranks"][i].get<std::string>();
    }
    out << "\n";
    out << "collisions: ";
    if (r["collisions"].empty())
        out << "none (ranks distinct; rational angle set certified)";
    else
        for (const auto& p : r["collisions"]) out << "(" << p[0] << "," << p[1] << ") ";
    out << "\n";
    return out.str();
}

std::string render_scan_text(const Json& r) {
    std::ostringstream out;
    out << "scanned " << r["cells_scanned"] << " cells (degrees";
    for (const auto& d : r["degrees"]) out << " " << d;
    out << ", rank <= " << r["rank_max"] << ", s <= " << r["s_max"] << ")\n";
    out << "cells with rank collisions: " << r["cells_with_collisions"] << "\n";
    out << "rationality exceptions:     " << r["rationality_exceptions"] << "\n";
    for (const auto& g : r["summary"])
        out << "  rank " << g["rank"] << ", degree " << g["degree"] << ": " << g["cells"]
            << " exception cell(s)\n";
    return out.str();
}

} // namespace

Json entry_to_json(const QuadraticNumber& value) {
    if (value.is_rational()) return value.rational_part().str();
    Json obj;
    obj["a"] = value.rational_part().str();
    obj["b"] = value.radical_part().str();
    return obj;
}

QuadraticNumber entry_from_json(const nlohmann::json& j, long radicand) {
    if (j.is_string() || j.is_number_integer())
        return QuadraticNumber(rational_from_json(j, "entry"));
    if (j.is_object()) {
        if (!j.contains("a") || !j.contains("b"))
            throw Error(ErrorKind::BadInput, "entry objects need both \"a\" and \"b\"");
        const Rational a = rational_from_json(j.at("a"), "entry field a");
        const Rational b = rational_from_json(j.at("b"), "entry field b");
        if (b.is_zero()) return QuadraticNumber(a);
        if (radicand == 0)
            throw Error(ErrorKind::BadInput,
                        "entry has a radical part but the design declares no radicand");
        return QuadraticNumber(a, b, radicand);
    }
    throw Error(ErrorKind::BadInput, "entry must be a string, integer, or {a, b} object");
}

DesignInstance parse_design_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorKind::BadInput, "design file must be a JSON object");
    if (!j.contains("geometry") || !j["geometry"].is_object())
        throw Error(ErrorKind::BadInput, "design file needs a \"geometry\" object");
    const auto& g = j["geometry"];
    if (!g.contains("rank") || !g.contains("degree") || !g["rank"].is_number_integer() ||
        !g["degree"].is_number_integer())
        throw Error(ErrorKind::BadInput, "geometry needs integer \"rank\" and \"degree\"");
    GeometryParams geom{g["rank"].get<int>(), g["degree"].get<int>()};
    geom.validate();

    long radicand = 0;
    if (j.contains("radicand") && !j["radicand"].is_null()) {
        if (!j["radicand"].is_number_integer())
            throw Error(ErrorKind::BadInput, "radicand must be an integer");
        radicand = j["radicand"].get<long>();
    }

    const bool has_points = j.contains("points");
    const bool has_gram = j.contains("gram");
    if (has_points == has_gram)
        throw Error(ErrorKind::BadInput, "design file needs exactly one of \"points\" or \"gram\"");

    if (has_points)
        return gram_from_sphere_points(entry_rows(j["points"], radicand, "points"), geom, radicand);

    auto rows = entry_rows(j["gram"], radicand, "gram");
    if (rows.size() != rows.front().size())
        throw Error(ErrorKind::DimensionMismatch, "gram matrix must be square");
    QuadMatrix gram(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows.size(); ++k) gram.at(i, k) = rows[i][k];
    return validate_gram(gram, geom, radicand);
}

DesignInstance read_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::BadInput, "cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadInput, "JSON parse failure in '" + path + "': " + e.what());
    }
    return parse_design_json(j);
}

Json design_to_json(const DesignInstance& design) {
    Json out;
    out["geometry"] = Json{{"rank", design.geom.rank}, {"degree", design.geom.degree}};
    if (design.radicand != 0) out["radicand"] = design.radicand;
    if (design.source == DesignSource::SpherePoints) {
        Json rows = Json::array();
        for (const auto& p : design.points) {
            Json row = Json::array();
            for (const auto& c : p) row.push_back(entry_to_json(c));
            rows.push_back(row);
        }
        out["points"] = rows;
    } else {
        Json rows = Json::array();
        for (std::size_t i = 0; i < design.size(); ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < design.size(); ++k)
                row.push_back(entry_to_json(design.gram.at(i, k)));
            rows.push_back(row);
        }
        out["gram"] = rows;
    }
    return out;
}

void write_design_file(const DesignInstance& design, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::BadInput, "cannot write '" + path + "'");
    out << design_to_json(design).dump(2) << "\n";
}

Json analysis_report(const DesignInstance& design, const DesignAnalysis& analysis) {
    Json r;
    r["geometry"] = geometry_json(design.geom);
    if (design.radicand != 0)
        r["radicand"] = design.radicand;
    else
        r["radicand"] = nullptr;
    r["cardinality"] = design.size();

    Json angles = Json::array();
    Json mults = Json::array();
    for (std::size_t i = 0; i < analysis.profile.angles.size(); ++i) {
        angles.push_back(entry_to_json(analysis.profile.angles[i]));
        mults.push_back(analysis.profile.multiplicities[i]);
    }
    r["angles"] = angles;
    r["angle_multiplicities"] = mults;
    r["all_angles_rational"] = analysis.profile.all_rational;
    r["s"] = analysis.profile.s;
    r["eps"] = analysis.profile.eps;
    r["t"] = analysis.profile.strength;
    r["tight"] = analysis.tightness.tight;
    r["annihilator"] = quad_polynomial_json(analysis.annihilator.ann);
    Json indicator = Json::array();
    for (const auto& a : analysis.annihilator.indicator) indicator.push_back(entry_to_json(a));
    r["indicator"] = indicator;

    Json tightness;
    tightness["target"] = rational_polynomial_json(analysis.annihilator.target);
    tightness["expected_cardinality"] = analysis.tightness.expected_cardinality.str();
    tightness["strength_matches"] = analysis.tightness.strength_matches;
    tightness["cardinality_matches"] = analysis.tightness.cardinality_matches;
    r["tightness"] = tightness;
    return r;
}

Json scheme_report(const DesignInstance& design, const DesignAnalysis& analysis,
                   const SchemeAnalysis& scheme) {
    Json r = analysis_report(design, analysis);

    Json s;
    Json edges = Json::array();
    for (std::size_t c = 0; c < scheme.decomposition.classes.size(); ++c)
        edges.push_back(scheme.decomposition.edge_count(c));
    s["class_edge_counts"] = edges;
    s["closes"] = scheme.closes;
    s["construction"] =
        scheme.basis.construction == IdempotentConstruction::RepairedLs ? "RepairedLs" : "AllE";
    s["idempotency_verified"] = scheme.idempotency_verified;

    Json triples = Json::array();
    for (const auto& t : scheme.rank_triples)
        triples.push_back(Json::array(
            {t.closed_form.str(), t.trace.str(), static_cast<std::uint64_t>(t.elimination)}));
    s["rank_triples"] = triples;

    Json v;
    v["ranks_distinct"] = scheme.verdict.ranks_distinct;
    v["collision_pairs"] = pairs_json(scheme.verdict.collision_pairs);
    v["certified_rational"] = scheme.verdict.certified_rational;
    v["observed_rational"] = scheme.verdict.observed_rational;
    v["consistent"] = scheme.verdict.consistent;
    s["verdict"] = v;

    r["scheme"] = s;
    return r;
}

Json rank_profile_report(const RankProfile& profile) {
    Json r;
    r["geometry"] = geometry_json(profile.geom);
    r["s"] = profile.s;
    r["eps"] = profile.eps;
    Json ranks = Json::array();
    for (const auto& value : profile.ranks) ranks.push_back(value.str());
    r["ranks"] = ranks;
    r["top_rank_integral"] = profile.top_integral;
    r["collisions"] = pairs_json(profile.collisions);
    return r;
}

Json scan_report(const ScanResult& result) {
    Json r;
    r["degrees"] = result.degrees;
    r["rank_max"] = result.rank_max;
    r["s_max"] = result.s_max;
    r["cells_scanned"] = result.cells.size();
    r["cells_with_collisions"] = result.collision_cells.size();
    r["rationality_exceptions"] = result.exceptions.size();

    Json cells = Json::array();
    std::map<std::pair<int, int>, std::size_t> by_geometry;
    for (const auto& cell : result.collision_cells) {
        Json c;
        c["rank"] = cell.rank;
        c["degree"] = cell.degree;
        c["s"] = cell.s;
        c["eps"] = cell.eps;
        c["collisions"] = pairs_json(cell.collisions);
        c["rationality_exception"] = cell.rationality_exception;
        cells.push_back(c);
        if (cell.rationality_exception) ++by_geometry[{cell.rank, cell.degree}];
    }
    r["collision_cells"] = cells;

    Json summary = Json::array();
    for (const auto& [geom, count] : by_geometry)
        summary.push_back(Json{{"rank", geom.first}, {"degree", geom.second}, {"cells", count}});
    r["summary"] = summary;
    return r;
}

std::string render_text(const Json& report) {
    if (report.contains("cells_scanned")) return render_scan_text(report);
    if (report.contains("ranks")) return render_rank_profile_text(report);
    if (report.contains("cardinality")) return render_analysis_text(report);
    return report.dump(2) + "\n";
}

} // namespace tdesign
