#pragma once

// Dense square/rectangular matrices over Q(sqrt(m)). Multiplication clears
// denominators first and runs on integer arrays, which keeps the large
// rational fixtures fast; rank uses straight Gaussian elimination with the
// first-nonzero pivot rule so elimination traces are reproducible.

#include <cstddef>
#include <vector>

#include "tdesign/quadratic.hpp"

namespace tdesign {

class QuadMatrix {
public:
    QuadMatrix() : rows_(0), cols_(0) {}
    QuadMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), d_(rows * cols) {}

    static QuadMatrix identity(std::size_t n) {
        QuadMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = QuadraticNumber(Rational(1));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    QuadraticNumber& at(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const QuadraticNumber& at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    QuadMatrix operator+(const QuadMatrix& o) const;
    QuadMatrix operator-(const QuadMatrix& o) const;
    QuadMatrix operator*(const QuadMatrix& o) const;
    QuadMatrix operator*(const QuadraticNumber& s) const;

    bool operator==(const QuadMatrix& o) const;
    bool operator!=(const QuadMatrix& o) const { return !(*this == o); }

    QuadraticNumber trace() const;

    // Exact rank via Gaussian elimination (first nonzero pivot in column order).
    std::size_t rank() const;

    // Radicand shared by the entries (0 if all entries are rational).
    long radicand() const;

private:
    std::size_t rows_, cols_;
    std::vector<QuadraticNumber> d_;
};

} // namespace tdesign
