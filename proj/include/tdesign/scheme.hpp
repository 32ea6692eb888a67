#pragma once

/**
 * @file scheme.hpp
 * @brief Adjacency decomposition of a design's Gram matrix, the orthogonal
 *        idempotent basis of its Bose-Mesner algebra, exact ranks, and the
 *        rank-based rationality verdict.
 *
 * The idempotent basis is only constructed for tight designs. When 0 is an
 * angle, the naive top matrix built from Q_s^0 is not idempotent; the basis
 * uses the corrected expression (ann(g) - R_{s-1}^0(g)) / |X| instead.
 */

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tdesign/design.hpp"
#include "tdesign/matrix.hpp"

namespace tdesign {

struct AdjacencyDecomposition {
    std::vector<QuadraticNumber> angles;      // ascending, aligned with classes
    std::vector<std::vector<std::uint8_t>> classes; // n*n row-major 0/1 masks
    std::size_t n = 0;

    std::size_t edge_count(std::size_t cls) const; // number of ones
    QuadMatrix class_matrix(std::size_t cls) const;
    // I + sum(angle * D_angle); must reproduce the Gram matrix exactly.
    QuadMatrix reconstruct_gram(long radicand) const;
};

AdjacencyDecomposition adjacency_matrices(const DesignInstance& design);

// True iff every product D_a * D_b is an integer combination of {I, D_c}:
// coefficients are read off representative positions, then checked globally.
bool scheme_axioms_check(const AdjacencyDecomposition& dec);

enum class IdempotentConstruction { AllE, RepairedLs };

struct IdempotentBasis {
    std::vector<QuadMatrix> mats; // L_0 .. L_s
    std::vector<std::size_t> ranks; // filled by rank_report
    IdempotentConstruction construction = IdempotentConstruction::AllE;
};

// The matrix with entries Q_i^0(<x,y>) / |X| (no repair); for eps = 1 and
// i = s this is the construction that fails idempotency.
QuadMatrix naive_e_matrix(const DesignInstance& design, unsigned i);

// Build L_0 .. L_s for a tight design; throws NotTight otherwise.
IdempotentBasis build_idempotents(const DesignInstance& design, const AngleProfile& profile,
                                  const AnnihilatorResult& ann);

// Exact verification of L_i L_j = delta_ij L_i and sum L_i = I.
bool verify_idempotent_basis(const IdempotentBasis& basis);

struct RankTriple {
    Rational closed_form;
    Rational trace;
    std::size_t elimination = 0;

    bool consistent() const {
        return closed_form == trace && trace == Rational(static_cast<long>(elimination));
    }
};

// Closed form / trace / elimination rank for each idempotent; the three
// routes must agree (RankMismatch otherwise). Fills basis.ranks.
std::vector<RankTriple> rank_report(IdempotentBasis& basis, const GeometryParams& geom, int s,
                                    int eps);

struct RationalityVerdict {
    bool ranks_distinct = false;
    std::vector<std::pair<int, int>> collision_pairs;
    bool certified_rational = false;
    bool observed_rational = false;
    bool consistent = true;
};

// Distinct ranks certify a rational angle set; the verdict records both the
// certificate and the observed field, which may disagree in one direction
// only (certified but observed-irrational would falsify the criterion).
RationalityVerdict rationality_verdict(const IdempotentBasis& basis,
                                       const AngleProfile& profile);

// Everything the scheme report needs, computed in dependency order.
struct SchemeAnalysis {
    AdjacencyDecomposition decomposition;
    bool closes = false;
    IdempotentBasis basis;
    bool idempotency_verified = false;
    std::vector<RankTriple> rank_triples;
    RationalityVerdict verdict;
};

SchemeAnalysis scheme_analyze(const DesignInstance& design, const DesignAnalysis& analysis);

} // namespace tdesign
