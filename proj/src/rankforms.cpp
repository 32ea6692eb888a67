#include "tdesign/rankforms.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tdesign {

RankProfile rank_profile(const GeometryParams& geom, int s, int eps) {
    geom.validate();
    if (s < 1) throw Error(ErrorKind::BadInput, "rank profile requires s >= 1");
    if (eps != 0 && eps != 1) throw Error(ErrorKind::BadInput, "eps must be 0 or 1");

    RankProfile profile;
    profile.geom = geom;
    profile.s = s;
    profile.eps = eps;

    for (int i = 0; i < s; ++i)
        profile.ranks.push_back(q_at_one(static_cast<unsigned>(i), geom));
    const Rational whole = r_at_one(static_cast<unsigned>(s), eps, geom);
    const Rational below = s >= 2 ? r_at_one(static_cast<unsigned>(s - 1), 0, geom) : Rational(1);
    profile.ranks.push_back(whole - below);
    profile.top_integral = profile.ranks.back().is_integer();

    for (std::size_t i = 0; i < profile.ranks.size(); ++i) {
        const Rational& r = profile.ranks[i];
        const bool is_top = (i + 1 == profile.ranks.size());
        if (r.sign() <= 0 || (!is_top && !r.is_integer()))
            throw Error(ErrorKind::NonIntegralRank,
                        "closed-form rank " + r.str() + " is not a positive integer at rank " +
                            std::to_string(geom.rank) + ", degree " + std::to_string(geom.degree) +
                            ", s " + std::to_string(s) + ", eps " + std::to_string(eps));
    }

    for (std::size_t i = 0; i < profile.ranks.size(); ++i)
        for (std::size_t j = i + 1; j < profile.ranks.size(); ++j)
            if (profile.ranks[i] == profile.ranks[j])
                profile.collisions.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return profile;
}

bool ascending_check(const GeometryParams& geom, int s_max) {
    geom.validate();
    if (geom.rank == 2 && geom.degree == 1)
        throw Error(ErrorKind::InvalidGeometry,
                    "ascending ranks do not hold at rank 2, degree 1 (all middle values are 2)");
    if (s_max < 1) throw Error(ErrorKind::BadInput, "s_max must be >= 1");

    Rational previous = q_at_one(0, geom);
    for (int i = 1; i <= s_max; ++i) {
        const Rational direct = q_at_one(static_cast<unsigned>(i), geom);
        if (!(previous < direct)) return false;
        // Independent route: grow the previous value by the ratio recurrence.
        const Rational via_ratio = previous * q_one_ratio(static_cast<unsigned>(i - 1), geom);
        if (via_ratio != direct) return false;
        previous = direct;
    }
    return true;
}

Rational f_poly(int degree, int rank) {
    const Rational d(degree), r(rank);
    return r * r * d * d - Rational(2) * r * d * d - Rational(2) * d - Rational(4);
}

Rational real_projective_rank_margin() {
    const GeometryParams geom{3, 1};
    const Rational coefficient =
        Rational(3) / (geom.half_dim() + Rational(5));
    return coefficient * q_at_one(3, geom) - q_at_one(1, geom);
}

ScanResult scan_collisions(const std::vector<int>& degrees, int rank_max, int s_max) {
    if (rank_max < 2 || s_max < 1)
        throw Error(ErrorKind::BadInput, "scan needs rank_max >= 2 and s_max >= 1");

    std::vector<int> sorted_degrees(degrees);
    std::sort(sorted_degrees.begin(), sorted_degrees.end());
    sorted_degrees.erase(std::unique(sorted_degrees.begin(), sorted_degrees.end()),
                         sorted_degrees.end());

    std::vector<GeometryParams> cells;
    for (int rank = 2; rank <= rank_max; ++rank)
        for (int degree : sorted_degrees)
            if (GeometryParams::is_admissible(rank, degree))
                cells.push_back(GeometryParams{rank, degree});

    ScanResult result;
    result.degrees = sorted_degrees;
    result.rank_max = rank_max;
    result.s_max = s_max;
    for (const auto& geom : cells)
        for (int s = 1; s <= s_max; ++s)
            for (int eps = 0; eps <= 1; ++eps) {
                const RankProfile profile = rank_profile(geom, s, eps);
                ScanCell cell;
                cell.rank = geom.rank;
                cell.degree = geom.degree;
                cell.s = s;
                cell.eps = eps;
                cell.collisions = profile.collisions;

                const bool circle = (geom.rank == 2 && geom.degree == 1);
                const bool top_meets_l1 =
                    s >= 2 && profile.ranks.back() == profile.ranks[1];
                cell.rationality_exception =
                    !cell.collisions.empty() && (circle || top_meets_l1);

                if (!cell.collisions.empty()) result.collision_cells.push_back(cell);
                if (cell.rationality_exception) result.exceptions.push_back(cell);
                result.cells.push_back(std::move(cell));
            }
    return result;
}

} // namespace tdesign
