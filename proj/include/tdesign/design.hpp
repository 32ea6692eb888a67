#pragma once

/**
 * @file design.hpp
 * @brief Design ingestion and analysis: Gram matrices of pairwise inner
 *        products, angle sets, strength, the annihilator polynomial with its
 *        indicator coefficients, and the tightness verdict.
 *
 * Projective designs (rank >= 3) are accepted only as Gram matrices; sphere
 * designs may also be given as exact unit vectors. Whether a Gram matrix is
 * realizable by actual primitive idempotents is deliberately not checked --
 * the analysis is combinatorial in the Gram entries.
 */

#include <cstddef>
#include <vector>

#include "tdesign/geometry.hpp"
#include "tdesign/jacobi.hpp"
#include "tdesign/matrix.hpp"
#include "tdesign/polynomial.hpp"

namespace tdesign {

enum class DesignSource { SpherePoints, GramDirect };

struct DesignInstance {
    GeometryParams geom;
    long radicand = 0; // 0 = pure rational design
    QuadMatrix gram;
    DesignSource source = DesignSource::GramDirect;
    std::vector<std::vector<QuadraticNumber>> points; // retained for SpherePoints

    std::size_t size() const { return gram.rows(); }
};

struct AngleProfile {
    std::vector<QuadraticNumber> angles;     // distinct, ascending
    std::vector<std::size_t> multiplicities; // ordered-pair counts, aligned with angles
    int s = 0;
    int eps = 0;
    int strength = -1; // filled by compute_strength
    bool all_rational = true;
};

struct AnnihilatorResult {
    QuadPolynomial ann;
    std::vector<QuadraticNumber> indicator; // a_0 .. a_s
    RationalPolynomial target;              // x^eps * R_{s-eps}^eps(x)
    bool tight = false;
};

struct TightnessReport {
    bool tight = false;
    QuadPolynomial ann;
    RationalPolynomial target;
    bool strength_matches = false;    // t == 2s - eps (only meaningful when tight)
    bool cardinality_matches = false; // |X| == R_{s-eps}^eps(1)
    Rational expected_cardinality;
};

// Bundle produced by the standard pipeline.
struct DesignAnalysis {
    AngleProfile profile;
    AnnihilatorResult annihilator;
    TightnessReport tightness;
};

// Unit vectors on the sphere S^degree (rank must be 2, vectors of length
// degree+1 with exact squared norm 1). Gram entry: (1 + <u,v>) / 2.
DesignInstance gram_from_sphere_points(const std::vector<std::vector<QuadraticNumber>>& pts,
                                       const GeometryParams& geom, long radicand);

// Same construction for vectors sharing one exact squared norm; the common
// norm divides out of every pairwise product, so the Gram stays in Q(sqrt(m))
// even when the unit coordinates themselves would not.
DesignInstance gram_from_equal_norm_points(const std::vector<std::vector<QuadraticNumber>>& pts,
                                           const GeometryParams& geom, long radicand);

// Validate a directly supplied Gram matrix (symmetry, unit diagonal,
// off-diagonal range [0,1), single radicand) and wrap it as a design.
DesignInstance validate_gram(const QuadMatrix& gram, const GeometryParams& geom, long radicand);

// Distinct off-diagonal Gram values with multiplicities; strength left at -1.
AngleProfile angle_set(const DesignInstance& design);

// Largest consecutive k >= 1 prefix for which the pairwise Q_k^0 sums vanish,
// searched up to k = 2s. A prefix exceeding the absolute bound 2s - eps is a
// BoundViolation (no genuine design with s angles can reach it).
int compute_strength(const DesignInstance& design, const AngleProfile& profile);

// The sum-vanishing prefix from raw angle data; exposed for tests.
int strength_from_angle_data(const GeometryParams& geom, std::size_t cardinality,
                             const std::vector<QuadraticNumber>& angles,
                             const std::vector<std::size_t>& multiplicities, int s, int eps);

// Guard applied to the vanishing prefix; throws BoundViolation when the
// prefix exceeds 2s - eps.
int checked_strength(int prefix, int s, int eps);

// Annihilator polynomial, indicator coefficients (triangular solve against
// the Q_i^0 basis), and the tight-design comparison target.
AnnihilatorResult annihilator(const DesignInstance& design, const AngleProfile& profile);

// Exact polynomial equality ann == x^eps R_{s-eps}^eps, with confirmations.
TightnessReport tightness_check(const DesignInstance& design, const AngleProfile& profile,
                                const AnnihilatorResult& ann);

// angle_set + compute_strength + annihilator + tightness_check.
DesignAnalysis analyze_design(const DesignInstance& design);

} // namespace tdesign
