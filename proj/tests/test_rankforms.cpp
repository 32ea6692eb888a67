#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "tdesign/rankforms.hpp"

using namespace tdesign;

namespace {

std::vector<Rational> ints(std::initializer_list<long> values) {
    std::vector<Rational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

Rational binom(long a, long b) { return generalized_binomial(Rational(a), static_cast<unsigned long>(b)); }

} // namespace

TEST_CASE("rank profiles of the known exceptional cells") {
    const RankProfile ico = rank_profile(GeometryParams{2, 2}, 3, 1);
    CHECK(ico.ranks == ints({1, 3, 5, 3}));
    CHECK(ico.collisions == std::vector<std::pair<int, int>>{{1, 3}});

    const RankProfile circle = rank_profile(GeometryParams{2, 1}, 3, 1);
    CHECK(circle.ranks == ints({1, 2, 2, 1}));
    CHECK(circle.collisions == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});

    const RankProfile octonion = rank_profile(GeometryParams{3, 8}, 2, 1);
    CHECK(octonion.collisions.empty());
}

TEST_CASE("rank profile of the E8 parameter cell") {
    const RankProfile profile = rank_profile(GeometryParams{2, 7}, 4, 1);
    CHECK(profile.ranks == ints({1, 8, 35, 112, 84}));
    CHECK(profile.collisions.empty());

    Rational total(0);
    for (const auto& r : profile.ranks) total += r;
    CHECK(total == Rational(240));
}

TEST_CASE("sphere top rank equals binom(d + s - 2, s - 1)") {
    for (int d = 1; d <= 12; ++d)
        for (int s = 1; s <= 12; ++s) {
            const RankProfile profile = rank_profile(GeometryParams{2, d}, s, 1);
            CHECK(profile.ranks.back() == binom(d + s - 2, s - 1));
        }
}

TEST_CASE("sphere rank gap sign pattern") {
    for (int d = 1; d <= 12; ++d)
        for (int s = 2; s <= 12; ++s) {
            const Rational gap = binom(d + s - 2, s - 1) - Rational(d + 1);
            if (s == 2) {
                CHECK(gap == Rational(-1));
            } else if (d == 2 && s == 3) {
                CHECK(gap == Rational(0));
            } else if (d == 1) {
                CHECK(gap < Rational(0)); // circle: top rank collapses to 1
            } else {
                CHECK(gap > Rational(0));
            }
        }
}

TEST_CASE("ascending values at 1") {
    CHECK(ascending_check(GeometryParams{2, 7}, 6));
    CHECK(ascending_check(GeometryParams{3, 8}, 10));
    CHECK_THROWS_AS(ascending_check(GeometryParams{2, 1}, 5), Error);
}

TEST_CASE("rank-3 degree-1 ratio simplifies to (2i + 5/2)/(2i + 1/2)") {
    const GeometryParams geom{3, 1};
    CHECK(ascending_check(geom, 10));
    for (unsigned i = 0; i <= 10; ++i) {
        const Rational expected = (Rational(2L * i) + Rational(5, 2)) /
                                  (Rational(2L * i) + Rational(1, 2));
        CHECK(q_one_ratio(i, geom) == expected);
    }
}

TEST_CASE("discriminant values") {
    CHECK(f_poly(1, 3) == Rational(-3));
    CHECK(f_poly(2, 3) == Rational(4));
    CHECK(f_poly(4, 3) == Rational(36));
    CHECK(f_poly(8, 3) == Rational(172));
    for (int rank = 4; rank <= 50; ++rank) {
        CHECK(f_poly(1, rank) > Rational(0));
        CHECK(f_poly(2, rank) > Rational(0));
        CHECK(f_poly(4, rank) > Rational(0));
    }
    CHECK(f_poly(2, 3) == Rational(4 * 9 - 8 * 3 - 8)); // 4 rho^2 - 8 rho - 8 at rho = 3
}

TEST_CASE("real projective rank margin is exactly 1") {
    CHECK(real_projective_rank_margin() == Rational(1));
}

TEST_CASE("non-integral closed forms are impossible on admissible cells") {
    for (int s = 1; s <= 20; ++s)
        for (int eps = 0; eps <= 1; ++eps) {
            CHECK_NOTHROW(rank_profile(GeometryParams{3, 8}, s, eps));
            CHECK_NOTHROW(rank_profile(GeometryParams{7, 4}, s, eps));
        }
}

TEST_CASE("small scan matches the expected collision pattern") {
    const ScanResult result = scan_collisions({1, 2}, 6, 8);
    CHECK(result.cells.size() == 2u * 8u * ((6 - 1) + (6 - 1))); // two degrees, ranks 2..6

    for (const auto& cell : result.exceptions) {
        const bool circle = (cell.rank == 2 && cell.degree == 1);
        const bool sphere_exception =
            (cell.rank == 2 && cell.degree == 2 && cell.s == 3 && cell.eps == 1);
        CHECK((circle || sphere_exception));
        if (circle) CHECK((cell.eps == 1 || cell.s >= 2));
    }

    // the circle cell with one non-zero angle and no zero angle has ranks {1, 2}
    bool found_clean_circle_cell = true;
    for (const auto& cell : result.exceptions)
        if (cell.rank == 2 && cell.degree == 1 && cell.s == 1 && cell.eps == 0)
            found_clean_circle_cell = false;
    CHECK(found_clean_circle_cell);
}

TEST_CASE("collisions that leave L_1 pinned are not exceptions") {
    const ScanResult result = scan_collisions({1, 2}, 6, 8);

    auto find_cell = [&](int rank, int degree, int s, int eps) -> const ScanCell* {
        for (const auto& cell : result.collision_cells)
            if (cell.rank == rank && cell.degree == degree && cell.s == s && cell.eps == eps)
                return &cell;
        return nullptr;
    };

    // tight 1-designs on spheres: top rank 1 meets rank L_0
    const ScanCell* frame = find_cell(2, 2, 1, 1);
    REQUIRE(frame != nullptr);
    CHECK(frame->collisions == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK_FALSE(frame->rationality_exception);

    // top rank meets a middle rank beyond L_1: ranks are 1,3,5,7,9 then 5
    const ScanCell* middle = find_cell(2, 2, 5, 1);
    REQUIRE(middle != nullptr);
    CHECK(middle->collisions == std::vector<std::pair<int, int>>{{2, 5}});
    CHECK_FALSE(middle->rationality_exception);

    // ranks 1, 15, 84, 300 then 300: the top meets L_3
    const ScanCell* cp3 = find_cell(4, 2, 4, 1);
    REQUIRE(cp3 != nullptr);
    CHECK(cp3->collisions == std::vector<std::pair<int, int>>{{3, 4}});
    CHECK_FALSE(cp3->rationality_exception);

    // the icosahedron cell is a genuine exception: top meets L_1
    const ScanCell* ico = find_cell(2, 2, 3, 1);
    REQUIRE(ico != nullptr);
    CHECK(ico->rationality_exception);
}

TEST_CASE("octonion cell with no tight design has a fractional top rank") {
    const RankProfile profile = rank_profile(GeometryParams{3, 8}, 2, 1);
    CHECK_FALSE(profile.top_integral);
    CHECK(profile.ranks == std::vector<Rational>{Rational(1), Rational(26), Rational(216, 5)});
    CHECK(profile.collisions.empty());
}

TEST_CASE("scan rejects nonsense bounds") {
    CHECK_THROWS_AS(scan_collisions({1}, 1, 5), Error);
    CHECK_THROWS_AS(scan_collisions({1}, 5, 0), Error);
}

TEST_CASE("projective degree 8 exists only at rank 3") {
    const ScanResult result = scan_collisions({8}, 10, 3);
    // two geometries survive: the sphere S^8 and the octonion plane
    CHECK(result.cells.size() == 2u * 3u * 2u);
    for (const auto& cell : result.cells) CHECK((cell.rank == 2 || cell.rank == 3));
    CHECK(result.exceptions.empty());

    // the only equal-rank pair is the sphere tight-1-design cell (top meets L_0)
    REQUIRE(result.collision_cells.size() == 1);
    CHECK(result.collision_cells[0].rank == 2);
    CHECK(result.collision_cells[0].s == 1);
    CHECK(result.collision_cells[0].eps == 1);
    CHECK_FALSE(result.collision_cells[0].rationality_exception);
}
