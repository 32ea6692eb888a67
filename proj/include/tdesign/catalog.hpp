#pragma once

/**
 * @file catalog.hpp
 * @brief Exact constructors for known tight designs used as golden fixtures:
 *        regular polygons, simplices, cross-polytopes, the icosahedron, the
 *        E8 root configuration, Jordan frames, and SIC Gram matrices.
 */

#include <string>
#include <vector>

#include "tdesign/design.hpp"

namespace tdesign {

struct ExpectedAnalysis {
    int t = 0;
    int s = 0;
    int eps = 0;
    std::size_t cardinality = 0;
    bool tight = true;
    bool certified_rational = false;
    bool observed_rational = true;
};

struct CatalogEntry {
    std::string name;
    DesignInstance design;
    ExpectedAnalysis expected;
};

// Regular n-gon on the circle, for the n whose Gram entries live in a field
// of degree at most 2 over Q: n in {3, 4, 5, 6, 8, 10, 12}.
CatalogEntry polygon(int n);

// n+1 equiangular points in S^(n-1) with pairwise inner product -1/n.
CatalogEntry simplex(int n);

// The 2n points +-e_i in S^(n-1), built from exact unit coordinates.
CatalogEntry cross_polytope(int n);

// 12 icosahedron vertices over Q(sqrt(5)), from the golden-ratio coordinate
// model (0, +-1, +-phi) normalized by the shared squared norm.
CatalogEntry icosahedron();

// The 240 E8 roots, unit-normalized on S^7; all Gram entries are rational.
CatalogEntry e8_roots();

// rho orthogonal points (identity Gram pattern) in the given geometry.
CatalogEntry jordan_frame(const GeometryParams& geom);

// rho^2 equiangular points with squared overlap 1/(rho+1) in degree-2
// geometry of the given rank.
CatalogEntry sic_gram(int rank);

// Lookup by CLI name: polygon-N, simplex-N, cross-polytope-N, icosahedron,
// e8, jordan-frame-RHO-D, sic-RHO.
CatalogEntry catalog_by_name(const std::string& name);

// The fixture set used by the verification suites.
std::vector<std::string> catalog_names();

} // namespace tdesign
