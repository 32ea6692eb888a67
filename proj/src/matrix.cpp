#include "tdesign/matrix.hpp"

#include <gmpxx.h>

#include <string>

namespace tdesign {

namespace {

// A matrix split as (A + B*sqrt(rad)) / den with integer A, B.
struct ScaledParts {
    mpz_class den = 1;
    std::vector<mpz_class> a;
    std::vector<mpz_class> b;
    bool has_radical = false;
};

ScaledParts scale_to_integers(const QuadMatrix& m) {
    ScaledParts parts;
    const std::size_t n = m.rows() * m.cols();
    parts.a.resize(n);
    parts.b.resize(n);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const QuadraticNumber& e = m.at(i, j);
            mpz_lcm(parts.den.get_mpz_t(), parts.den.get_mpz_t(),
                    e.rational_part().denominator().get_mpz_t());
            mpz_lcm(parts.den.get_mpz_t(), parts.den.get_mpz_t(),
                    e.radical_part().denominator().get_mpz_t());
            if (!e.radical_part().is_zero()) parts.has_radical = true;
        }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j, ++idx) {
            const QuadraticNumber& e = m.at(i, j);
            parts.a[idx] = e.rational_part().numerator() *
                           (parts.den / e.rational_part().denominator());
            parts.b[idx] = e.radical_part().numerator() *
                           (parts.den / e.radical_part().denominator());
        }
    return parts;
}

// acc += X * Y for integer row-major arrays, skipping zero entries.
void accumulate_product(std::vector<mpz_class>& acc, const std::vector<mpz_class>& x,
                        const std::vector<mpz_class>& y, std::size_t n, std::size_t k,
                        std::size_t m, const mpz_class* scale = nullptr) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < k; ++p) {
            const mpz_class& xv = x[i * k + p];
            if (sgn(xv) == 0) continue;
            mpz_class factor = scale ? mpz_class(xv * *scale) : xv;
            const std::size_t row_y = p * m;
            const std::size_t row_acc = i * m;
            for (std::size_t j = 0; j < m; ++j) {
                const mpz_class& yv = y[row_y + j];
                if (sgn(yv) == 0) continue;
                mpz_addmul(acc[row_acc + j].get_mpz_t(), factor.get_mpz_t(), yv.get_mpz_t());
            }
        }
}

} // namespace

QuadMatrix QuadMatrix::operator+(const QuadMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix addition shape mismatch");
    QuadMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] + o.d_[i];
    return r;
}

QuadMatrix QuadMatrix::operator-(const QuadMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix subtraction shape mismatch");
    QuadMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] - o.d_[i];
    return r;
}

QuadMatrix QuadMatrix::operator*(const QuadraticNumber& s) const {
    QuadMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] * s;
    return r;
}

long QuadMatrix::radicand() const {
    long rad = 0;
    for (const auto& e : d_)
        if (e.radicand() != 0) {
            if (rad == 0)
                rad = e.radicand();
            else if (rad != e.radicand())
                throw Error(ErrorKind::MixedRadicands, "matrix mixes radicands " +
                                                            std::to_string(rad) + " and " +
                                                            std::to_string(e.radicand()));
        }
    return rad;
}

QuadMatrix QuadMatrix::operator*(const QuadMatrix& o) const {
    if (cols_ != o.rows_)
        throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    long rad = radicand();
    long orad = o.radicand();
    if (rad == 0) rad = orad;
    else if (orad != 0 && orad != rad)
        throw Error(ErrorKind::MixedRadicands, "matrix product mixes radicands");

    const ScaledParts x = scale_to_integers(*this);
    const ScaledParts y = scale_to_integers(o);
    const std::size_t n = rows_, k = cols_, m = o.cols_;

    std::vector<mpz_class> ra(n * m), rb;
    accumulate_product(ra, x.a, y.a, n, k, m);
    if (x.has_radical && y.has_radical) {
        const mpz_class radical(rad);
        accumulate_product(ra, x.b, y.b, n, k, m, &radical);
    }
    if (x.has_radical || y.has_radical) {
        rb.resize(n * m);
        if (y.has_radical) accumulate_product(rb, x.a, y.b, n, k, m);
        if (x.has_radical) accumulate_product(rb, x.b, y.a, n, k, m);
    }

    const mpz_class den = x.den * y.den;
    QuadMatrix result(n, m);
    for (std::size_t idx = 0; idx < ra.size(); ++idx) {
        Rational av(ra[idx], den);
        Rational bv = rb.empty() ? Rational(0) : Rational(rb[idx], den);
        result.d_[idx] = bv.is_zero() ? QuadraticNumber(av) : QuadraticNumber(av, bv, rad);
    }
    return result;
}

bool QuadMatrix::operator==(const QuadMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < d_.size(); ++i)
        if (d_[i] != o.d_[i]) return false;
    return true;
}

QuadraticNumber QuadMatrix::trace() const {
    QuadraticNumber t;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

std::size_t QuadMatrix::rank() const {
    std::vector<QuadraticNumber> w(d_);
    auto entry = [&](std::size_t i, std::size_t j) -> QuadraticNumber& {
        return w[i * cols_ + j];
    };

    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t pivot = r;
        while (pivot < rows_ && entry(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r)
            for (std::size_t j = col; j < cols_; ++j) std::swap(entry(pivot, j), entry(r, j));

        const QuadraticNumber inv_pivot = QuadraticNumber(Rational(1)) / entry(r, col);
        for (std::size_t j = col; j < cols_; ++j) entry(r, j) *= inv_pivot;
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (entry(i, col).is_zero()) continue;
            const QuadraticNumber factor = entry(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                entry(i, j) -= factor * entry(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace tdesign
