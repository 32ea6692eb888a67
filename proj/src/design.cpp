#include "tdesign/design.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace tdesign {

namespace {

QuadraticNumber dot(const std::vector<QuadraticNumber>& u, const std::vector<QuadraticNumber>& v) {
    QuadraticNumber acc;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

void check_entry_radicand(const QuadraticNumber& e, long radicand, std::size_t i, std::size_t j) {
    if (e.radicand() != 0 && e.radicand() != radicand)
        throw Error(ErrorKind::MixedRadicands,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") uses sqrt(" +
                        std::to_string(e.radicand()) + ") but the design radicand is " +
                        std::to_string(radicand));
}

DesignInstance points_to_design(const std::vector<std::vector<QuadraticNumber>>& pts,
                                const GeometryParams& geom, long radicand,
                                bool require_unit_norm) {
    geom.validate();
    if (geom.rank != 2)
        throw Error(ErrorKind::InvalidGeometry, "coordinate input is only defined for rank 2");
    if (pts.size() < 2)
        throw Error(ErrorKind::BadInput, "a design needs at least 2 points");

    const std::size_t dim = static_cast<std::size_t>(geom.degree) + 1;
    const QuadraticNumber one(Rational(1));
    std::vector<QuadraticNumber> norms;
    norms.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].size() != dim)
            throw Error(ErrorKind::DimensionMismatch,
                        "point " + std::to_string(i) + " has " + std::to_string(pts[i].size()) +
                            " coordinates, expected " + std::to_string(dim));
        norms.push_back(dot(pts[i], pts[i]));
        if (require_unit_norm && norms.back() != one)
            throw Error(ErrorKind::NotUnitVector,
                        "point " + std::to_string(i) + " has squared norm " + norms.back().str());
        if (!require_unit_norm && norms.back() != norms.front())
            throw Error(ErrorKind::NotUnitVector,
                        "point " + std::to_string(i) + " squared norm " + norms.back().str() +
                            " differs from the common value " + norms.front().str());
    }

    const QuadraticNumber norm = norms.front();
    const QuadraticNumber half(Rational(1, 2));
    QuadMatrix gram(pts.size(), pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        gram.at(i, i) = one;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            QuadraticNumber cosine = dot(pts[i], pts[j]) / norm;
            QuadraticNumber value = (one + cosine) * half;
            gram.at(i, j) = value;
            gram.at(j, i) = value;
        }
    }

    DesignInstance design = validate_gram(gram, geom, radicand);
    if (require_unit_norm) {
        design.source = DesignSource::SpherePoints;
        design.points = pts;
    }
    return design;
}

} // namespace

DesignInstance gram_from_sphere_points(const std::vector<std::vector<QuadraticNumber>>& pts,
                                       const GeometryParams& geom, long radicand) {
    return points_to_design(pts, geom, radicand, /*require_unit_norm=*/true);
}

DesignInstance gram_from_equal_norm_points(const std::vector<std::vector<QuadraticNumber>>& pts,
                                           const GeometryParams& geom, long radicand) {
    return points_to_design(pts, geom, radicand, /*require_unit_norm=*/false);
}

DesignInstance validate_gram(const QuadMatrix& gram, const GeometryParams& geom, long radicand) {
    geom.validate();
    if (radicand != 0 && (radicand < 2 || !is_square_free(radicand)))
        throw Error(ErrorKind::BadInput,
                    "radicand " + std::to_string(radicand) + " must be square-free and >= 2");
    const std::size_t n = gram.rows();
    if (n != gram.cols())
        throw Error(ErrorKind::DimensionMismatch, "gram matrix must be square");
    if (n < 2)
        throw Error(ErrorKind::BadInput, "a design needs at least 2 points");

    const QuadraticNumber one(Rational(1));
    const QuadraticNumber zero;
    for (std::size_t i = 0; i < n; ++i) {
        check_entry_radicand(gram.at(i, i), radicand, i, i);
        if (gram.at(i, i) != one)
            throw Error(ErrorKind::BadDiagonal,
                        "diagonal entry (" + std::to_string(i) + "," + std::to_string(i) +
                            ") is " + gram.at(i, i).str() + ", expected 1");
        for (std::size_t j = i + 1; j < n; ++j) {
            const QuadraticNumber& e = gram.at(i, j);
            check_entry_radicand(e, radicand, i, j);
            if (e != gram.at(j, i))
                throw Error(ErrorKind::NotSymmetric,
                            "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                                std::to_string(j) + "," + std::to_string(i) + ") differ: " +
                                e.str() + " vs " + gram.at(j, i).str());
            if (e == one)
                throw Error(ErrorKind::DuplicatePoint,
                            "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") equals 1: points " + std::to_string(i) + " and " +
                                std::to_string(j) + " coincide");
            if (e < zero || e >= one)
                throw Error(ErrorKind::EntryOutOfRange,
                            "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                e.str() + " lies outside [0, 1)");
        }
    }

    DesignInstance design;
    design.geom = geom;
    design.radicand = radicand;
    design.gram = gram;
    design.source = DesignSource::GramDirect;
    return design;
}

AngleProfile angle_set(const DesignInstance& design) {
    const std::size_t n = design.size();
    std::map<QuadraticNumber, std::size_t> counts; // exact ascending order
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            counts[design.gram.at(i, j)] += 2; // ordered pairs

    AngleProfile profile;
    const QuadraticNumber zero;
    for (const auto& [angle, count] : counts) {
        profile.angles.push_back(angle);
        profile.multiplicities.push_back(count);
        if (!angle.is_rational()) profile.all_rational = false;
        if (angle == zero) profile.eps = 1;
    }
    profile.s = static_cast<int>(profile.angles.size());
    return profile;
}

int checked_strength(int prefix, int s, int eps) {
    if (prefix > 2 * s - eps)
        throw Error(ErrorKind::BoundViolation,
                    "moment sums vanish through k = " + std::to_string(prefix) +
                        ", beyond the absolute bound " + std::to_string(2 * s - eps) +
                        "; the input cannot be a design with " + std::to_string(s) + " angles");
    return prefix;
}

int strength_from_angle_data(const GeometryParams& geom, std::size_t cardinality,
                             const std::vector<QuadraticNumber>& angles,
                             const std::vector<std::size_t>& multiplicities, int s, int eps) {
    if (s < 1) throw Error(ErrorKind::BadInput, "strength requires at least one angle");
    const QuadraticNumber n_points(Rational(static_cast<long>(cardinality)));

    int prefix = 0;
    for (int k = 1; k <= 2 * s; ++k) {
        const RationalPolynomial q = renorm_q(static_cast<unsigned>(k), 0, geom);
        QuadraticNumber total = n_points * QuadraticNumber(q.evaluate(Rational(1)));
        for (std::size_t a = 0; a < angles.size(); ++a) {
            QuadraticNumber value = q.evaluate(angles[a]);
            total += QuadraticNumber(Rational(static_cast<long>(multiplicities[a]))) * value;
        }
        if (!total.is_zero()) break;
        prefix = k;
    }
    return checked_strength(prefix, s, eps);
}

int compute_strength(const DesignInstance& design, const AngleProfile& profile) {
    return strength_from_angle_data(design.geom, design.size(), profile.angles,
                                    profile.multiplicities, profile.s, profile.eps);
}

AnnihilatorResult annihilator(const DesignInstance& design, const AngleProfile& profile) {
    const std::size_t n = design.size();
    const QuadraticNumber one(Rational(1));

    QuadPolynomial product = QuadPolynomial::constant(one);
    QuadraticNumber denom = one;
    for (const auto& angle : profile.angles) {
        product = product * QuadPolynomial(std::vector<QuadraticNumber>{-angle, one});
        denom *= one - angle;
    }
    const QuadraticNumber scale = QuadraticNumber(Rational(static_cast<long>(n))) / denom;

    AnnihilatorResult result;
    result.ann = product * scale;

    // ann(1) = |X| and ann(angle) = 0 hold by construction; re-check exactly.
    if (result.ann.evaluate(one) != QuadraticNumber(Rational(static_cast<long>(n))))
        throw std::logic_error("annihilator failed ann(1) = |X|");
    for (const auto& angle : profile.angles)
        if (!result.ann.evaluate(angle).is_zero())
            throw std::logic_error("annihilator failed ann(angle) = 0");

    // Indicator coefficients: back-substitution against the Q_i^0 basis, which
    // is triangular because deg Q_i^0 = i.
    const int s = profile.s;
    std::vector<QuadPolynomial> basis(static_cast<std::size_t>(s) + 1);
    for (int i = 0; i <= s; ++i)
        basis[static_cast<std::size_t>(i)] = lift_to_quad(renorm_q(static_cast<unsigned>(i), 0, design.geom));

    result.indicator.assign(static_cast<std::size_t>(s) + 1, QuadraticNumber());
    QuadPolynomial residual = result.ann;
    for (int i = s; i >= 0; --i) {
        const QuadPolynomial& q = basis[static_cast<std::size_t>(i)];
        QuadraticNumber coeff = residual.coeff(static_cast<std::size_t>(i)) / q.leading();
        result.indicator[static_cast<std::size_t>(i)] = coeff;
        residual -= q * coeff;
    }
    if (!residual.is_zero())
        throw std::logic_error("indicator solve left a nonzero residual");

    const unsigned top = static_cast<unsigned>(s - profile.eps);
    result.target = r_sum(top, profile.eps, design.geom)
                        .shifted_up(static_cast<std::size_t>(profile.eps));
    result.tight = (result.ann == lift_to_quad(result.target));
    return result;
}

TightnessReport tightness_check(const DesignInstance& design, const AngleProfile& profile,
                                const AnnihilatorResult& ann) {
    TightnessReport report;
    report.tight = ann.tight;
    report.ann = ann.ann;
    report.target = ann.target;
    report.expected_cardinality =
        r_at_one(static_cast<unsigned>(profile.s), profile.eps, design.geom);
    if (report.tight) {
        report.strength_matches = (profile.strength == 2 * profile.s - profile.eps);
        report.cardinality_matches =
            (Rational(static_cast<long>(design.size())) == report.expected_cardinality);
    }
    return report;
}

DesignAnalysis analyze_design(const DesignInstance& design) {
    DesignAnalysis analysis;
    analysis.profile = angle_set(design);
    analysis.profile.strength = compute_strength(design, analysis.profile);
    analysis.annihilator = annihilator(design, analysis.profile);
    analysis.tightness = tightness_check(design, analysis.profile, analysis.annihilator);
    return analysis;
}

} // namespace tdesign
