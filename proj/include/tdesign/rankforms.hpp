#pragma once

/**
 * @file rankforms.hpp
 * @brief Closed-form rank profiles of the idempotent basis, independent of
 *        any concrete design, and the exhaustive parameter-space scan for
 *        rank collisions.
 */

#include <utility>
#include <vector>

#include "tdesign/geometry.hpp"
#include "tdesign/jacobi.hpp"

namespace tdesign {

struct RankProfile {
    GeometryParams geom;
    int s = 1;
    int eps = 0;
    std::vector<Rational> ranks;
    std::vector<std::pair<int, int>> collisions;
    // The values below the top are dimensions and must be integers; the top
    // entry can be fractional on parameter cells that admit no tight design
    // (e.g. rank 3, degree 8, s 2, eps 1), which proves the non-existence.
    bool top_integral = true;
};

// Closed-form ranks [rank L_0, ..., rank L_s] with all equal-rank index pairs.
// A non-integral value below the top indicates a transcription bug
// (NonIntegralRank).
RankProfile rank_profile(const GeometryParams& geom, int s, int eps);

// Verifies Q_0^0(1) < Q_1^0(1) < ... < Q_{s_max}^0(1) exactly, and again via
// the three-factor ratio recurrence. Not defined for (rank, degree) = (2, 1),
// where the middle values are all equal.
bool ascending_check(const GeometryParams& geom, int s_max);

// Discriminant rho^2 d^2 - 2 rho d^2 - 2d - 4; positive values certify a rank
// gap between the top and first idempotents in strictly projective geometries.
Rational f_poly(int degree, int rank);

// The rank-gap margin (3/(N+5)) Q_3^0(1) - Q_1^0(1) for the rank-3, degree-1
// geometry; evaluates to exactly 1.
Rational real_projective_rank_margin();

struct ScanCell {
    int rank = 0;
    int degree = 0;
    int s = 0;
    int eps = 0;
    std::vector<std::pair<int, int>> collisions; // all equal-rank pairs
    // Collisions that obstruct the rank-based rationality argument: any
    // collision on the circle (rank 2, degree 1), or the top rank meeting
    // rank L_1 elsewhere. A top rank colliding with L_0 (tight 1-designs) or
    // with a middle L_j, j >= 2, leaves L_1 pinned and certifies nothing
    // irrational, so it is recorded but not an exception.
    bool rationality_exception = false;
};

struct ScanResult {
    std::vector<int> degrees; // the degree set requested, sorted and deduplicated
    int rank_max = 0;
    int s_max = 0;
    std::vector<ScanCell> cells;           // every scanned cell, in (rank, degree, s, eps) order
    std::vector<ScanCell> collision_cells; // cells with at least one equal-rank pair
    std::vector<ScanCell> exceptions;      // cells flagged rationality_exception
};

// Enumerates every admissible (rank, degree) cell for the requested degrees
// (degree 8 admits only rank 3) and records rank collisions for all
// s <= s_max, eps in {0, 1}.
ScanResult scan_collisions(const std::vector<int>& degrees, int rank_max, int s_max);

} // namespace tdesign
