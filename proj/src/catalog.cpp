#include "tdesign/catalog.hpp"

#include <algorithm>
#include <cstdlib>

namespace tdesign {

namespace {

// Exact cos(2*pi*k/n) for the supported polygon orders.
QuadraticNumber polygon_cosine(int n, int k) {
    k = ((k % n) + n) % n;
    if (k > n / 2) k = n - k; // cosine is even around the half turn
    const Rational half(1, 2);
    switch (n) {
        case 3:
            return QuadraticNumber(Rational(-1, 2));
        case 4:
            return k == 1 ? QuadraticNumber(Rational(0)) : QuadraticNumber(Rational(-1));
        case 5:
            // cos 72 = (sqrt(5)-1)/4, cos 144 = -(sqrt(5)+1)/4
            return k == 1 ? QuadraticNumber(Rational(-1, 4), Rational(1, 4), 5)
                          : QuadraticNumber(Rational(-1, 4), Rational(-1, 4), 5);
        case 6:
            if (k == 1) return QuadraticNumber(half);
            if (k == 2) return QuadraticNumber(-half);
            return QuadraticNumber(Rational(-1));
        case 8:
            if (k == 1) return QuadraticNumber(Rational(0), half, 2);
            if (k == 2) return QuadraticNumber(Rational(0));
            if (k == 3) return QuadraticNumber(Rational(0), -half, 2);
            return QuadraticNumber(Rational(-1));
        case 10:
            if (k == 1) return QuadraticNumber(Rational(1, 4), Rational(1, 4), 5);
            if (k == 2) return QuadraticNumber(Rational(-1, 4), Rational(1, 4), 5);
            if (k == 3) return QuadraticNumber(Rational(1, 4), Rational(-1, 4), 5);
            if (k == 4) return QuadraticNumber(Rational(-1, 4), Rational(-1, 4), 5);
            return QuadraticNumber(Rational(-1));
        case 12:
            if (k == 1) return QuadraticNumber(Rational(0), half, 3);
            if (k == 2) return QuadraticNumber(half);
            if (k == 3) return QuadraticNumber(Rational(0));
            if (k == 4) return QuadraticNumber(-half);
            if (k == 5) return QuadraticNumber(Rational(0), -half, 3);
            return QuadraticNumber(Rational(-1));
        default:
            throw Error(ErrorKind::UnsupportedPolygon,
                        "polygon order " + std::to_string(n) +
                            " needs angle values of degree > 2 over Q (supported: 3, 4, 5, 6, 8, 10, 12)");
    }
}

long polygon_radicand(int n) {
    switch (n) {
        case 5:
        case 10: return 5;
        case 8: return 2;
        case 12: return 3;
        default: return 0;
    }
}

QuadMatrix gram_from_cosines(int n, long /*radicand*/) {
    const QuadraticNumber one(Rational(1));
    const QuadraticNumber half(Rational(1, 2));
    QuadMatrix gram(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        gram.at(i, i) = one;
        for (int j = i + 1; j < n; ++j) {
            QuadraticNumber value = (one + polygon_cosine(n, j - i)) * half;
            gram.at(i, j) = value;
            gram.at(j, i) = value;
        }
    }
    return gram;
}

} // namespace

CatalogEntry polygon(int n) {
    static const int supported[] = {3, 4, 5, 6, 8, 10, 12};
    if (std::find(std::begin(supported), std::end(supported), n) == std::end(supported))
        throw Error(ErrorKind::UnsupportedPolygon,
                    "polygon order " + std::to_string(n) +
                        " needs angle values of degree > 2 over Q (supported: 3, 4, 5, 6, 8, 10, 12)");

    const long radicand = polygon_radicand(n);
    CatalogEntry entry;
    entry.name = "polygon-" + std::to_string(n);
    entry.design = validate_gram(gram_from_cosines(n, radicand), GeometryParams{2, 1}, radicand);

    const bool even_order = (n % 2 == 0);
    entry.expected.t = n - 1;
    entry.expected.s = even_order ? n / 2 : (n - 1) / 2;
    entry.expected.eps = even_order ? 1 : 0;
    entry.expected.cardinality = static_cast<std::size_t>(n);
    entry.expected.observed_rational = (radicand == 0);
    entry.expected.certified_rational = (n == 3); // ranks [1, 2]; all larger n collide
    return entry;
}

CatalogEntry simplex(int n) {
    if (n < 2) throw Error(ErrorKind::BadInput, "simplex needs dimension >= 2");

    const std::size_t count = static_cast<std::size_t>(n) + 1;
    const QuadraticNumber one(Rational(1));
    const QuadraticNumber off(Rational(n - 1, 2L * n)); // (1 - 1/n) / 2
    QuadMatrix gram(count, count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) gram.at(i, j) = (i == j) ? one : off;

    CatalogEntry entry;
    entry.name = "simplex-" + std::to_string(n);
    entry.design = validate_gram(gram, GeometryParams{2, n - 1}, 0);
    entry.expected = {2, 1, 0, count, true, true, true};
    return entry;
}

CatalogEntry cross_polytope(int n) {
    if (n < 2) throw Error(ErrorKind::BadInput, "cross-polytope needs dimension >= 2");

    std::vector<std::vector<QuadraticNumber>> pts;
    for (int axis = 0; axis < n; ++axis)
        for (int sign = 0; sign < 2; ++sign) {
            std::vector<QuadraticNumber> p(static_cast<std::size_t>(n));
            p[static_cast<std::size_t>(axis)] = QuadraticNumber(Rational(sign == 0 ? 1 : -1));
            pts.push_back(std::move(p));
        }

    CatalogEntry entry;
    entry.name = "cross-polytope-" + std::to_string(n);
    entry.design = gram_from_sphere_points(pts, GeometryParams{2, n - 1}, 0);
    entry.expected = {3, 2, 1, static_cast<std::size_t>(2 * n), true, n >= 3, true};
    return entry;
}

CatalogEntry icosahedron() {
    // Vertices are the cyclic permutations of (0, +-1, +-phi); every vertex
    // has squared norm (5 + sqrt(5))/2, which divides out of the Gram.
    const QuadraticNumber zero;
    const QuadraticNumber one(Rational(1));
    const QuadraticNumber phi(Rational(1, 2), Rational(1, 2), 5);

    std::vector<std::vector<QuadraticNumber>> pts;
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2) {
            QuadraticNumber u = s1 ? -one : one;
            QuadraticNumber v = s2 ? -phi : phi;
            pts.push_back({zero, u, v});
            pts.push_back({u, v, zero});
            pts.push_back({v, zero, u});
        }

    CatalogEntry entry;
    entry.name = "icosahedron";
    entry.design = gram_from_equal_norm_points(pts, GeometryParams{2, 2}, 5);
    entry.expected = {5, 3, 1, 12, true, false, false};
    return entry;
}

CatalogEntry e8_roots() {
    // 112 roots (+-1, +-1, 0^6) and 128 roots (+-1/2)^8 with an even number
    // of minus signs; every root has squared norm 2.
    const Rational one(1), minus_one(-1), half(1, 2), minus_half(-1, 2);
    std::vector<std::vector<QuadraticNumber>> pts;

    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si = 0; si < 2; ++si)
                for (int sj = 0; sj < 2; ++sj) {
                    std::vector<QuadraticNumber> p(8);
                    p[static_cast<std::size_t>(i)] = QuadraticNumber(si ? minus_one : one);
                    p[static_cast<std::size_t>(j)] = QuadraticNumber(sj ? minus_one : one);
                    pts.push_back(std::move(p));
                }

    for (unsigned mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        std::vector<QuadraticNumber> p(8);
        for (int c = 0; c < 8; ++c)
            p[static_cast<std::size_t>(c)] =
                QuadraticNumber((mask >> c) & 1u ? minus_half : half);
        pts.push_back(std::move(p));
    }

    CatalogEntry entry;
    entry.name = "e8";
    entry.design = gram_from_equal_norm_points(pts, GeometryParams{2, 7}, 0);
    entry.expected = {7, 4, 1, 240, true, true, true};
    return entry;
}

CatalogEntry jordan_frame(const GeometryParams& geom) {
    geom.validate();
    const std::size_t n = static_cast<std::size_t>(geom.rank);
    CatalogEntry entry;
    entry.name = "jordan-frame-" + std::to_string(geom.rank) + "-" + std::to_string(geom.degree);
    entry.design = validate_gram(QuadMatrix::identity(n), geom, 0);
    entry.expected = {1, 1, 1, n, true, geom.rank > 2, true};
    return entry;
}

CatalogEntry sic_gram(int rank) {
    if (rank < 2) throw Error(ErrorKind::BadInput, "sic gram needs rank >= 2");
    const std::size_t count = static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank);
    const QuadraticNumber one(Rational(1));
    const QuadraticNumber off(Rational(1, rank + 1));
    QuadMatrix gram(count, count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) gram.at(i, j) = (i == j) ? one : off;

    CatalogEntry entry;
    entry.name = "sic-" + std::to_string(rank);
    entry.design = validate_gram(gram, GeometryParams{rank, 2}, 0);
    entry.expected = {2, 1, 0, count, true, true, true};
    return entry;
}

CatalogEntry catalog_by_name(const std::string& name) {
    auto suffix_int = [&](const std::string& prefix) -> long {
        const std::string tail = name.substr(prefix.size());
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorKind::BadInput, "malformed catalog name '" + name + "'");
        return std::strtol(tail.c_str(), nullptr, 10);
    };

    if (name == "icosahedron") return icosahedron();
    if (name == "e8") return e8_roots();
    if (name.rfind("polygon-", 0) == 0) return polygon(static_cast<int>(suffix_int("polygon-")));
    if (name.rfind("simplex-", 0) == 0) return simplex(static_cast<int>(suffix_int("simplex-")));
    if (name.rfind("cross-polytope-", 0) == 0)
        return cross_polytope(static_cast<int>(suffix_int("cross-polytope-")));
    if (name.rfind("sic-", 0) == 0) return sic_gram(static_cast<int>(suffix_int("sic-")));
    if (name.rfind("jordan-frame-", 0) == 0) {
        const std::string tail = name.substr(std::string("jordan-frame-").size());
        const std::size_t dash = tail.find('-');
        if (dash == std::string::npos)
            throw Error(ErrorKind::BadInput,
                        "jordan frame name must look like jordan-frame-RANK-DEGREE");
        const std::string rank_s = tail.substr(0, dash);
        const std::string degree_s = tail.substr(dash + 1);
        if (rank_s.empty() || degree_s.empty() ||
            rank_s.find_first_not_of("0123456789") != std::string::npos ||
            degree_s.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorKind::BadInput,
                        "jordan frame name must look like jordan-frame-RANK-DEGREE");
        return jordan_frame(GeometryParams{std::atoi(rank_s.c_str()), std::atoi(degree_s.c_str())});
    }
    throw Error(ErrorKind::BadInput, "unknown catalog design '" + name + "'");
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (int n : {3, 4, 5, 6, 8, 10, 12}) names.push_back("polygon-" + std::to_string(n));
    for (int n = 2; n <= 10; ++n) names.push_back("simplex-" + std::to_string(n));
    for (int n = 2; n <= 10; ++n) names.push_back("cross-polytope-" + std::to_string(n));
    names.push_back("icosahedron");
    names.push_back("e8");
    for (const char* frame : {"2-1", "3-1", "3-2", "3-4", "3-8", "5-2", "4-4"})
        names.push_back(std::string("jordan-frame-") + frame);
    for (int r : {2, 3, 4}) names.push_back("sic-" + std::to_string(r));
    return names;
}

} // namespace tdesign
