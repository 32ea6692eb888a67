#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "tdesign/catalog.hpp"
#include "tdesign/io.hpp"
#include "tdesign/scheme.hpp"

using namespace tdesign;

namespace {

QuadraticNumber q(long num, long den = 1) { return QuadraticNumber(Rational(num, den)); }

// Full pipeline against the expected record; scheme checks are skipped for
// the large fixtures exercised by the long-running suite.
void check_entry(const CatalogEntry& entry, bool run_scheme) {
    INFO(entry.name);
    CHECK(entry.design.size() == entry.expected.cardinality);

    const DesignAnalysis analysis = analyze_design(entry.design);
    CHECK(analysis.profile.s == entry.expected.s);
    CHECK(analysis.profile.eps == entry.expected.eps);
    CHECK(analysis.profile.strength == entry.expected.t);
    CHECK(analysis.profile.all_rational == entry.expected.observed_rational);
    CHECK(analysis.tightness.tight == entry.expected.tight);

    if (run_scheme) {
        const SchemeAnalysis scheme = scheme_analyze(entry.design, analysis);
        CHECK(scheme.closes);
        CHECK(scheme.idempotency_verified);
        CHECK(scheme.verdict.certified_rational == entry.expected.certified_rational);
        CHECK(scheme.verdict.observed_rational == entry.expected.observed_rational);
        CHECK(scheme.verdict.consistent);
    }
}

} // namespace

TEST_CASE("every catalog entry matches its expected record") {
    for (const std::string& name : catalog_names()) {
        const CatalogEntry entry = catalog_by_name(name);
        check_entry(entry, entry.design.size() <= 30);
    }
}

TEST_CASE("polygon strength is n - 1") {
    for (int n : {3, 4, 5, 6, 8, 10, 12}) {
        const CatalogEntry entry = polygon(n);
        const DesignAnalysis analysis = analyze_design(entry.design);
        CHECK(analysis.profile.strength == n - 1);
    }
}

TEST_CASE("unsupported polygon orders") {
    for (int n : {7, 9, 11, 13}) {
        try {
            polygon(n);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::UnsupportedPolygon);
        }
    }
}

TEST_CASE("polygon angle sets") {
    CHECK(analyze_design(polygon(6).design).profile.angles ==
          std::vector<QuadraticNumber>{q(0), q(1, 4), q(3, 4)});

    const auto octagon = analyze_design(polygon(8).design).profile.angles;
    REQUIRE(octagon.size() == 4);
    CHECK(octagon[0] == q(0));
    CHECK(octagon[1] == QuadraticNumber(Rational(1, 2), Rational(-1, 4), 2)); // (2 - sqrt2)/4
    CHECK(octagon[2] == q(1, 2));
    CHECK(octagon[3] == QuadraticNumber(Rational(1, 2), Rational(1, 4), 2));  // (2 + sqrt2)/4
}

TEST_CASE("icosahedron fixture") {
    const CatalogEntry entry = icosahedron();
    CHECK(entry.design.radicand == 5);
    CHECK(entry.design.size() == 12);

    const auto angles = analyze_design(entry.design).profile.angles;
    REQUIRE(angles.size() == 3);
    CHECK(angles[0] == q(0));
    CHECK(angles[1] == QuadraticNumber(Rational(1, 2), Rational(-1, 10), 5));
    CHECK(angles[2] == QuadraticNumber(Rational(1, 2), Rational(1, 10), 5));
}

TEST_CASE("e8 fixture stays rational") {
    const CatalogEntry entry = e8_roots();
    CHECK(entry.design.size() == 240);
    CHECK(entry.design.radicand == 0);
    CHECK(entry.design.source == DesignSource::GramDirect);

    const AngleProfile profile = angle_set(entry.design);
    CHECK(profile.angles == std::vector<QuadraticNumber>{q(0), q(1, 4), q(1, 2), q(3, 4)});
    CHECK(profile.all_rational);
}

TEST_CASE("simplex and triangle coincide") {
    const CatalogEntry tri = polygon(3);
    const CatalogEntry sim = simplex(2);
    CHECK(tri.design.gram == sim.design.gram);
    CHECK(analyze_design(sim.design).profile.angles == std::vector<QuadraticNumber>{q(1, 4)});
}

TEST_CASE("square and 2-dimensional cross-polytope coincide up to ordering") {
    const DesignAnalysis square = analyze_design(polygon(4).design);
    const DesignAnalysis cross = analyze_design(cross_polytope(2).design);
    CHECK(square.profile.angles == cross.profile.angles);
    CHECK(square.profile.strength == cross.profile.strength);
}

TEST_CASE("simplex cardinality meets the tight bound") {
    for (int n = 2; n <= 10; ++n) {
        const CatalogEntry entry = simplex(n);
        CHECK(Rational(static_cast<long>(entry.design.size())) ==
              r_at_one(1, 0, entry.design.geom));
    }
}

TEST_CASE("jordan frame annihilator is rho * x") {
    for (const char* name : {"jordan-frame-3-8", "jordan-frame-5-2", "jordan-frame-2-1"}) {
        const CatalogEntry entry = catalog_by_name(name);
        const DesignAnalysis analysis = analyze_design(entry.design);
        const QuadPolynomial expected(
            std::vector<QuadraticNumber>{q(0), q(entry.design.geom.rank)});
        CHECK(analysis.annihilator.ann == expected);
    }
}

TEST_CASE("sic gram values") {
    const CatalogEntry entry = sic_gram(3);
    CHECK(entry.design.size() == 9);
    CHECK(entry.design.gram.at(0, 1) == q(1, 4));
    const DesignAnalysis analysis = analyze_design(entry.design);
    CHECK(analysis.profile.strength == 2);
    for (const auto& a : analysis.annihilator.indicator) CHECK(a == q(1));
}

TEST_CASE("catalog name dispatch") {
    CHECK(catalog_by_name("polygon-12").design.size() == 12);
    CHECK(catalog_by_name("cross-polytope-4").design.size() == 8);
    CHECK(catalog_by_name("jordan-frame-4-4").design.geom.degree == 4);
    CHECK_THROWS_AS(catalog_by_name("dodecahedron"), Error);
    CHECK_THROWS_AS(catalog_by_name("polygon-"), Error);
    CHECK_THROWS_AS(catalog_by_name("jordan-frame-3"), Error);
}

TEST_CASE("serialization round trip preserves the analysis") {
    for (const std::string& name : catalog_names()) {
        INFO(name);
        const CatalogEntry entry = catalog_by_name(name);
        const Json j = design_to_json(entry.design);
        const DesignInstance reread = parse_design_json(j);

        CHECK(reread.gram == entry.design.gram);
        CHECK(reread.geom == entry.design.geom);
        CHECK(reread.radicand == entry.design.radicand);

        const Json before = analysis_report(entry.design, analyze_design(entry.design));
        const Json after = analysis_report(reread, analyze_design(reread));
        CHECK(before == after);
    }
}
