#include "tdesign/scheme.hpp"

#include <map>
#include <string>

namespace tdesign {

namespace {

// Class index per matrix position: -1 on the diagonal, else the angle index.
std::vector<int> class_index_table(const DesignInstance& design,
                                   const std::vector<QuadraticNumber>& angles) {
    const std::size_t n = design.size();
    std::map<QuadraticNumber, int> index;
    for (std::size_t a = 0; a < angles.size(); ++a)
        index[angles[a]] = static_cast<int>(a);

    std::vector<int> table(n * n, -1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            table[i * n + j] = index.at(design.gram.at(i, j));
        }
    return table;
}

// Fill an n x n matrix whose entry depends only on the class of the position.
QuadMatrix matrix_from_class_values(const std::vector<int>& table, std::size_t n,
                                    const QuadraticNumber& diagonal,
                                    const std::vector<QuadraticNumber>& per_class) {
    QuadMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int cls = table[i * n + j];
            m.at(i, j) = (cls < 0) ? diagonal : per_class[static_cast<std::size_t>(cls)];
        }
    return m;
}

} // namespace

std::size_t AdjacencyDecomposition::edge_count(std::size_t cls) const {
    std::size_t count = 0;
    for (std::uint8_t v : classes[cls]) count += v;
    return count;
}

QuadMatrix AdjacencyDecomposition::class_matrix(std::size_t cls) const {
    QuadMatrix m(n, n);
    const QuadraticNumber one(Rational(1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (classes[cls][i * n + j]) m.at(i, j) = one;
    return m;
}

QuadMatrix AdjacencyDecomposition::reconstruct_gram(long radicand) const {
    (void)radicand;
    QuadMatrix g = QuadMatrix::identity(n);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (classes[c][i * n + j]) g.at(i, j) = angles[c];
    return g;
}

AdjacencyDecomposition adjacency_matrices(const DesignInstance& design) {
    AngleProfile profile = angle_set(design);
    const std::size_t n = design.size();

    AdjacencyDecomposition dec;
    dec.n = n;
    dec.angles = profile.angles;
    dec.classes.assign(profile.angles.size(), std::vector<std::uint8_t>(n * n, 0));

    const std::vector<int> table = class_index_table(design, profile.angles);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int cls = table[i * n + j];
            if (cls >= 0) dec.classes[static_cast<std::size_t>(cls)][i * n + j] = 1;
        }
    return dec;
}

bool scheme_axioms_check(const AdjacencyDecomposition& dec) {
    const std::size_t n = dec.n;
    const std::size_t s = dec.classes.size();

    // Integer products of the 0/1 masks; entries are bounded by n.
    std::vector<std::vector<std::uint32_t>> products(s * s,
                                                     std::vector<std::uint32_t>(n * n, 0));
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) {
            auto& out = products[a * s + b];
            const auto& x = dec.classes[a];
            const auto& y = dec.classes[b];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) {
                    if (!x[i * n + k]) continue;
                    const std::size_t row = k * n;
                    for (std::size_t j = 0; j < n; ++j) out[i * n + j] += y[row + j];
                }
        }

    // Read candidate structure constants off one representative position per
    // class (plus the diagonal), then verify the whole matrix.
    std::vector<std::size_t> representative(s);
    for (std::size_t c = 0; c < s; ++c) {
        std::size_t pos = 0;
        while (pos < n * n && !dec.classes[c][pos]) ++pos;
        if (pos == n * n) return false; // empty class cannot occur
        representative[c] = pos;
    }

    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) {
            const auto& prod = products[a * s + b];
            const std::uint32_t diag_coeff = prod[0]; // position (0,0)
            std::vector<std::uint32_t> coeff(s);
            for (std::size_t c = 0; c < s; ++c) coeff[c] = prod[representative[c]];

            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::uint32_t expected = 0;
                    if (i == j) {
                        expected = diag_coeff;
                    } else {
                        for (std::size_t c = 0; c < s; ++c)
                            if (dec.classes[c][i * n + j]) {
                                expected = coeff[c];
                                break;
                            }
                    }
                    if (prod[i * n + j] != expected) return false;
                }
        }
    return true;
}

QuadMatrix naive_e_matrix(const DesignInstance& design, unsigned i) {
    const AngleProfile profile = angle_set(design);
    const std::size_t n = design.size();
    const QuadraticNumber inv_n(Rational(1, static_cast<long>(n)));

    const RationalPolynomial q = renorm_q(i, 0, design.geom);
    std::vector<QuadraticNumber> per_class;
    per_class.reserve(profile.angles.size());
    for (const auto& angle : profile.angles) per_class.push_back(q.evaluate(angle) * inv_n);
    const QuadraticNumber diagonal = QuadraticNumber(q.evaluate(Rational(1))) * inv_n;

    const std::vector<int> table = class_index_table(design, profile.angles);
    return matrix_from_class_values(table, n, diagonal, per_class);
}

IdempotentBasis build_idempotents(const DesignInstance& design, const AngleProfile& profile,
                                  const AnnihilatorResult& ann) {
    if (!ann.tight)
        throw Error(ErrorKind::NotTight,
                    "the idempotent basis construction is only valid for tight designs");

    const std::size_t n = design.size();
    const int s = profile.s;
    const QuadraticNumber inv_n(Rational(1, static_cast<long>(n)));
    const std::vector<int> table = class_index_table(design, profile.angles);

    IdempotentBasis basis;
    basis.construction =
        profile.eps == 1 ? IdempotentConstruction::RepairedLs : IdempotentConstruction::AllE;

    for (int i = 0; i < s; ++i)
        basis.mats.push_back(naive_e_matrix(design, static_cast<unsigned>(i)));

    if (profile.eps == 0) {
        basis.mats.push_back(naive_e_matrix(design, static_cast<unsigned>(s)));
    } else {
        // (L_s)_{x,y} = (ann(g) - R_{s-1}^0(g)) / |X|; off the diagonal the
        // annihilator vanishes on every angle.
        const QuadPolynomial repaired =
            ann.ann - lift_to_quad(r_sum(static_cast<unsigned>(s - 1), 0, design.geom));
        std::vector<QuadraticNumber> per_class;
        per_class.reserve(profile.angles.size());
        for (const auto& angle : profile.angles)
            per_class.push_back(repaired.evaluate(angle) * inv_n);
        const QuadraticNumber diagonal =
            repaired.evaluate(QuadraticNumber(Rational(1))) * inv_n;
        basis.mats.push_back(matrix_from_class_values(table, n, diagonal, per_class));
    }
    return basis;
}

bool verify_idempotent_basis(const IdempotentBasis& basis) {
    if (basis.mats.empty()) return false;
    const std::size_t n = basis.mats.front().rows();

    QuadMatrix sum(n, n);
    for (const auto& m : basis.mats) sum = sum + m;
    if (sum != QuadMatrix::identity(n)) return false;

    const QuadMatrix zero(n, n);
    for (std::size_t i = 0; i < basis.mats.size(); ++i)
        for (std::size_t j = i; j < basis.mats.size(); ++j) {
            const QuadMatrix product = basis.mats[i] * basis.mats[j];
            if (i == j) {
                if (product != basis.mats[i]) return false;
            } else if (product != zero) {
                return false;
            }
        }
    return true;
}

std::vector<RankTriple> rank_report(IdempotentBasis& basis, const GeometryParams& geom, int s,
                                    int eps) {
    std::vector<RankTriple> triples;
    basis.ranks.clear();

    for (std::size_t i = 0; i < basis.mats.size(); ++i) {
        RankTriple triple;
        if (static_cast<int>(i) < s) {
            triple.closed_form = q_at_one(static_cast<unsigned>(i), geom);
        } else {
            // rank L_s = R_{s-eps}^eps(1) - R_{s-1}^0(1)
            const Rational whole = r_at_one(static_cast<unsigned>(s), eps, geom);
            const Rational below =
                s >= 2 ? r_at_one(static_cast<unsigned>(s - 1), 0, geom) : Rational(1);
            triple.closed_form = whole - below;
        }

        const QuadraticNumber tr = basis.mats[i].trace();
        if (!tr.is_rational())
            throw Error(ErrorKind::RankMismatch,
                        "trace of idempotent " + std::to_string(i) + " is irrational: " + tr.str());
        triple.trace = tr.rational_part();
        triple.elimination = basis.mats[i].rank();

        if (!triple.consistent())
            throw Error(ErrorKind::RankMismatch,
                        "rank routes disagree for idempotent " + std::to_string(i) + ": closed " +
                            triple.closed_form.str() + ", trace " + triple.trace.str() +
                            ", elimination " + std::to_string(triple.elimination));
        basis.ranks.push_back(triple.elimination);
        triples.push_back(triple);
    }
    return triples;
}

RationalityVerdict rationality_verdict(const IdempotentBasis& basis,
                                       const AngleProfile& profile) {
    RationalityVerdict verdict;
    for (std::size_t i = 0; i < basis.ranks.size(); ++i)
        for (std::size_t j = i + 1; j < basis.ranks.size(); ++j)
            if (basis.ranks[i] == basis.ranks[j])
                verdict.collision_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));

    verdict.ranks_distinct = verdict.collision_pairs.empty();
    verdict.certified_rational = verdict.ranks_distinct;
    verdict.observed_rational = profile.all_rational;
    verdict.consistent = !(verdict.certified_rational && !verdict.observed_rational);
    return verdict;
}

SchemeAnalysis scheme_analyze(const DesignInstance& design, const DesignAnalysis& analysis) {
    SchemeAnalysis result;
    result.decomposition = adjacency_matrices(design);
    result.closes = scheme_axioms_check(result.decomposition);
    result.basis = build_idempotents(design, analysis.profile, analysis.annihilator);
    result.idempotency_verified = verify_idempotent_basis(result.basis);
    if (!result.idempotency_verified)
        throw Error(ErrorKind::RankMismatch, "constructed idempotent basis failed verification");
    result.rank_triples =
        rank_report(result.basis, design.geom, analysis.profile.s, analysis.profile.eps);
    result.verdict = rationality_verdict(result.basis, analysis.profile);
    return result;
}

} // namespace tdesign
