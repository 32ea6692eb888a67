#pragma once

// Geometry parameters (rank, degree) identifying which sphere or projective
// space a design lives in, restricted to the admissible classification:
// rank 2 with any degree d >= 1 (the sphere S^d), degree 1/2/4 with rank >= 3
// (real/complex/quaternionic projective space), and the exceptional (3, 8)
// octonion projective plane.

#include <string>

#include "tdesign/error.hpp"
#include "tdesign/rational.hpp"

namespace tdesign {

struct GeometryParams {
    int rank = 2;
    int degree = 1;

    static bool is_admissible(int rank, int degree) {
        if (rank == 2) return degree >= 1;
        if (rank >= 3 && (degree == 1 || degree == 2 || degree == 4)) return true;
        return rank == 3 && degree == 8;
    }

    void validate() const {
        if (!is_admissible(rank, degree))
            throw Error(ErrorKind::InvalidGeometry,
                        "no geometry has rank " + std::to_string(rank) + " and degree " +
                            std::to_string(degree));
    }

    // Half the dimension parameter rank*degree/2 (often written N).
    Rational half_dim() const { return Rational(static_cast<long>(rank) * degree, 2); }
    // Half the degree (often written m).
    Rational half_degree() const { return Rational(degree, 2); }

    bool operator==(const GeometryParams& o) const {
        return rank == o.rank && degree == o.degree;
    }
    bool operator!=(const GeometryParams& o) const { return !(*this == o); }

    std::string description() const {
        if (rank == 2) return "sphere S^" + std::to_string(degree);
        std::string space;
        switch (degree) {
            case 1: space = "RP^"; break;
            case 2: space = "CP^"; break;
            case 4: space = "HP^"; break;
            case 8: space = "OP^"; break;
            default: space = "?P^"; break;
        }
        return space + std::to_string(rank - 1);
    }
};

} // namespace tdesign
